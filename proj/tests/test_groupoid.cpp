#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge/envelope.hpp"
#include "gauge/errors.hpp"
#include "gauge/groupoid.hpp"
#include "support.hpp"

using namespace gauge;
using testing::base_names;

TEST_CASE("groupoids from groups and codiscrete sets") {
  auto s3 = FiniteGroup::symmetric3();
  auto g = FiniteGroupoid::from_group(s3);
  CHECK(validate_groupoid(g).empty());
  CHECK(is_transitive(g));
  CHECK(g.arrows().size() == 6);
  const auto f = g.arrows().at("(13)");
  const auto h = g.arrows().at("(12)");
  CHECK(g.arrows().name(conjugate(g, f, h)) == "(23)");

  auto c = FiniteGroupoid::codiscrete({"a", "b", "c"});
  CHECK(validate_groupoid(c).empty());
  CHECK(is_transitive(c));
  CHECK(c.arrows().size() == 9);
  CHECK(c.arrows().name(c.compose(c.arrows().at("b>c"), c.arrows().at("a>b"))) == "a>c");
  CHECK_THROWS_AS(c.compose(c.arrows().at("a>b"), c.arrows().at("a>b")), BookkeepingError);
  CHECK(c.hom(c.objects().at("a"), c.objects().at("b")).size() == 1);
}

TEST_CASE("disjoint union is not transitive") {
  auto u = FiniteGroupoid::disjoint_union(FiniteGroupoid::codiscrete({"a", "b"}),
                                          FiniteGroupoid::from_group(FiniteGroup::cyclic(2), "*"));
  CHECK(validate_groupoid(u).empty());
  CHECK_FALSE(is_transitive(u));
  auto gb = gauge_bundle(u);
  CHECK(gb.fibre[gb.base.at("*")].size() == 2);
  CHECK(gb.fibre[gb.base.at("a")].size() == 1);
}

TEST_CASE("validator witnesses") {
  auto table = FiniteGroupoid::codiscrete({"a", "b"}).to_table();
  SUBCASE("composition domain mismatch") {
    table.compose.push_back({"a>b", "a>b", "a>b"});
    CHECK(has_axiom(validate_groupoid(FiniteGroupoid(table)), "composition domain mismatch"));
  }
  SUBCASE("composition missing") {
    table.compose.erase(table.compose.begin());
    CHECK(has_axiom(validate_groupoid(FiniteGroupoid(table)), "composition missing"));
  }
  SUBCASE("wrong composite") {
    for (auto& c : table.compose) {
      if (c[0] == "b>a" && c[1] == "a>b") c[2] = "b>b";
    }
    auto r = validate_groupoid(FiniteGroupoid(table));
    CHECK(has_axiom(r, "composite endpoints"));
  }
  SUBCASE("wrong inverse") {
    table.inverses["a>b"] = "a>b";
    auto r = validate_groupoid(FiniteGroupoid(table));
    CHECK(has_axiom(r, "inverse endpoints"));
  }
  SUBCASE("duplicate entries are input errors") {
    table.compose.push_back(table.compose.front());
    CHECK_THROWS_AS(FiniteGroupoid{table}, InputError);
  }
  SUBCASE("missing identity is an input error") {
    table.identities.erase("a");
    CHECK_THROWS_AS(FiniteGroupoid{table}, InputError);
  }
}

TEST_CASE("associativity failure") {
  // Z3 as a one-object groupoid with one product changed
  auto table = FiniteGroupoid::from_group(FiniteGroup::cyclic(3)).to_table();
  for (auto& c : table.compose) {
    if (c[0] == "1" && c[1] == "1") c[2] = "0";
  }
  auto r = validate_groupoid(FiniteGroupoid(table));
  CHECK(has_axiom(r, "associativity"));
}

TEST_CASE("envelope") {
  auto b = PrincipalBundle::trivial(base_names(2), FiniteGroup::cyclic(2));
  auto env = envelope(b);
  CHECK(validate_groupoid(env).empty());
  CHECK(is_transitive(env));
  CHECK(env.objects().size() == 3);
  CHECK(env.arrows().size() == 18);
  CHECK(env.arrows().find("<1>").has_value());
  CHECK(env.arrows().find("[(a,1),*]").has_value());
  CHECK(env.arrows().find("[*,(b,0)]").has_value());

  auto back = extract_bundle(env, kEnvelopeBasepoint, {"a", "b"});
  CHECK(validate_bundle(back).empty());
  CHECK(find_isomorphism(b, back).has_value());
}

TEST_CASE("envelope of a nonabelian bundle round trips") {
  auto b = PrincipalBundle::trivial(base_names(3), FiniteGroup::symmetric3());
  auto env = envelope(b);
  CHECK(validate_groupoid(env).empty());
  CHECK(env.arrows().size() == 16 * 6);
  auto back = extract_bundle(env, "*", {"a", "b", "c"});
  CHECK(find_isomorphism(b, back).has_value());
}

TEST_CASE("extraction from a codiscrete groupoid") {
  auto g = FiniteGroupoid::codiscrete({"*", "a", "b"});
  auto b = extract_bundle(g, "*", {"a", "b"});
  CHECK(validate_bundle(b).empty());
  CHECK(b.group().size() == 1);
  CHECK(b.total().size() == 2);
}

TEST_CASE("extraction needs arrows into every fibre") {
  auto u = FiniteGroupoid::disjoint_union(FiniteGroupoid::codiscrete({"a", "b"}),
                                          FiniteGroupoid::from_group(FiniteGroup::cyclic(2), "*"));
  CHECK_THROWS_WITH_AS(extract_bundle(u, "*", {"a"}), doctest::Contains("empty fibre"), InputError);
  CHECK_THROWS_AS(extract_bundle(u, "*", {"*"}), InputError);
}
