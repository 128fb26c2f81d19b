#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge/errors.hpp"
#include "support.hpp"

using namespace gauge;
using testing::base_names;

namespace {

PrincipalBundle trivial(std::size_t n, const std::string& g) {
  return PrincipalBundle::trivial(base_names(n), FiniteGroup::by_name(g));
}

Point p(const PrincipalBundle& b, const std::string& a, const std::string& g) {
  return b.total().at(trivial_point_name(a, g));
}

}  // namespace

TEST_CASE("trivial bundle") {
  auto b = trivial(2, "Z3");
  CHECK(validate_bundle(b).empty());
  CHECK(b.total().size() == 6);
  CHECK(b.fibre(b.base().at("a")).size() == 3);
  CHECK(b.least_in_fibre(b.base().at("b")) == p(b, "b", "0"));
  CHECK(b.act(p(b, "a", "1"), b.group().at("2")) == p(b, "a", "0"));
  CHECK(b.div(p(b, "a", "1"), p(b, "a", "0")) == b.group().at("2"));
  CHECK_THROWS_AS(b.div(p(b, "a", "1"), p(b, "b", "1")), BookkeepingError);
  CHECK(b.tern(p(b, "b", "0"), p(b, "a", "1"), p(b, "a", "2")) == p(b, "b", "1"));
}

TEST_CASE("division laws") {
  auto b = trivial(2, "S3");
  const auto& G = b.group();
  for (Point x = 0; x < b.total().size(); ++x) {
    for (Point z : b.fibre(b.proj(x))) {
      CHECK(b.act(x, b.div(x, z)) == z);
      CHECK(b.div(z, x) == G.inv(b.div(x, z)));
      for (Elem g = 0; g < G.size(); ++g) {
        // the conjugation law behind the failure of the naive gauge map
        CHECK(b.div(b.act(x, g), b.act(z, g)) == G.conj(g, b.div(x, z)));
      }
    }
  }
}

TEST_CASE("ternary operation laws") {
  auto b = trivial(2, "S3");
  const std::size_t n = b.total().size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (b.proj(x) != b.proj(y)) continue;
      CHECK(b.tern(x, y, y) == x);
      CHECK(b.tern(y, y, x) == x);
      for (Point z = 0; z < n; ++z) {
        for (Point u = 0; u < n; ++u) {
          for (Point v : b.fibre(b.proj(u))) {
            if (b.proj(z) != b.proj(y)) continue;
            CHECK(b.tern(b.tern(x, y, z), u, v) == b.tern(x, y, b.tern(z, u, v)));
          }
        }
      }
    }
  }
}

TEST_CASE("validator witnesses") {
  auto z2 = FiniteGroup::cyclic(2);
  SUBCASE("freeness") {
    PrincipalBundle b({"a"}, {"p", "q"}, {{"p", "a"}, {"q", "a"}}, z2,
                      {{{"p", "0"}, "p"}, {{"p", "1"}, "p"}, {{"q", "0"}, "q"}, {{"q", "1"}, "q"}});
    auto r = validate_bundle(b);
    CHECK(has_axiom(r, "freeness"));
    CHECK(has_axiom(r, "fibre-transitivity"));
  }
  SUBCASE("fibre sizes") {
    // q is alone over b, so the action cannot stay in its fibre freely
    PrincipalBundle b({"a", "b"}, {"p", "q", "r"}, {{"p", "a"}, {"q", "b"}, {"r", "a"}}, z2,
                      {{{"p", "0"}, "p"}, {{"p", "1"}, "r"}, {{"r", "0"}, "r"}, {{"r", "1"}, "p"},
                       {{"q", "0"}, "q"}, {{"q", "1"}, "q"}});
    auto r = validate_bundle(b);
    CHECK(has_axiom(r, "freeness"));
    CHECK_FALSE(has_axiom(r, "fibrewise action"));
  }
  SUBCASE("surjectivity and fibrewise action") {
    PrincipalBundle b({"a", "b", "c"}, {"p", "q"}, {{"p", "a"}, {"q", "b"}}, z2,
                      {{{"p", "0"}, "p"}, {{"p", "1"}, "q"}, {{"q", "0"}, "q"}, {{"q", "1"}, "p"}});
    auto r = validate_bundle(b);
    CHECK(has_axiom(r, "surjectivity"));
    CHECK(has_axiom(r, "fibrewise action"));
  }
  SUBCASE("action compatibility") {
    auto z3 = FiniteGroup::cyclic(3);
    // x*1 = y, y*1 = x: then x*(1+1) should be x but x*2 = z
    PrincipalBundle b({"a"}, {"x", "y", "z"}, {{"x", "a"}, {"y", "a"}, {"z", "a"}}, z3,
                      {{{"x", "0"}, "x"}, {{"x", "1"}, "y"}, {{"x", "2"}, "z"},
                       {{"y", "0"}, "y"}, {{"y", "1"}, "x"}, {{"y", "2"}, "z"},
                       {{"z", "0"}, "z"}, {{"z", "1"}, "z"}, {{"z", "2"}, "x"}});
    CHECK(has_axiom(validate_bundle(b), "action compatibility"));
  }
  SUBCASE("missing entries are input errors") {
    CHECK_THROWS_AS(PrincipalBundle({"a"}, {"p"}, {{"p", "a"}}, z2, {{{"p", "0"}, "p"}}), InputError);
    CHECK_THROWS_AS(PrincipalBundle({"a"}, {"p"}, {}, z2, {{{"p", "0"}, "p"}, {{"p", "1"}, "p"}}), InputError);
  }
}

TEST_CASE("fraction arrows") {
  auto b = trivial(3, "S3");
  const auto& G = b.group();
  const Point a0 = p(b, "a", "e");
  const Point b12 = p(b, "b", "(12)");
  const FractionArrow f = make_arrow(b, b12, a0);
  CHECK(arrow_dom(b, f) == b.base().at("a"));
  CHECK(arrow_cod(b, f) == b.base().at("b"));
  CHECK(act_left(b, f, a0) == b12);
  for (Elem g = 0; g < G.size(); ++g) CHECK(make_arrow(b, b.act(b12, g), b.act(a0, g)) == f);
  CHECK(b.proj(f.den) == b.base().at("a"));
  CHECK(f.den == b.least_in_fibre(b.base().at("a")));

  const FractionArrow h = make_arrow(b, p(b, "c", "(123)"), p(b, "b", "(13)"));
  CHECK(act_left(b, arrow_compose(b, h, f), a0) == act_left(b, h, act_left(b, f, a0)));
  CHECK(arrow_compose(b, arrow_inverse(b, f), f) == identity_arrow(b, b.base().at("a")));
  CHECK(arrow_compose(b, f, identity_arrow(b, b.base().at("a"))) == f);
  CHECK_THROWS_AS(arrow_compose(b, f, h), BookkeepingError);
  CHECK(arrows_between(b, b.base().at("a"), b.base().at("c")).size() == 6);
  CHECK(arrow_name(b, identity_arrow(b, b.base().at("a"))) == "[(a,(12)),(a,(12))]");
}

TEST_CASE("gauge group and the commutative identification") {
  auto z3 = trivial(2, "Z3");
  auto gauge = gauge_of_bundle(z3);
  CHECK(gauge.size() == 2);
  CHECK(gauge[0].size() == 3);
  for (Base a = 0; a < 2; ++a)
    for (Elem g = 0; g < 3; ++g) CHECK(gauge_to_group(z3, group_to_gauge(z3, a, g)) == g);
  CHECK_FALSE(find_gauge_ambiguity(z3).has_value());

  auto s3 = trivial(1, "S3");
  CHECK_THROWS_AS(gauge_to_group(s3, identity_arrow(s3, 0)), Refused);
  auto amb = find_gauge_ambiguity(s3);
  REQUIRE(amb.has_value());
  CHECK(amb->first != amb->second);
  CHECK(make_arrow(s3, amb->y, amb->x) == make_arrow(s3, s3.act(amb->y, amb->g), s3.act(amb->x, amb->g)));
  CHECK(s3.div(amb->x, amb->y) == amb->first);
}

TEST_CASE("bundle isomorphism") {
  auto b = trivial(2, "Z2");
  PrincipalBundle other({"a", "b"}, {"u", "v", "w", "x"}, {{"u", "a"}, {"v", "a"}, {"w", "b"}, {"x", "b"}},
                        FiniteGroup::from_table({"i", "s"}, {{"i", "s"}, {"s", "i"}}),
                        {{{"u", "i"}, "u"}, {{"u", "s"}, "v"}, {{"v", "i"}, "v"}, {{"v", "s"}, "u"},
                         {{"w", "i"}, "w"}, {{"w", "s"}, "x"}, {{"x", "i"}, "x"}, {{"x", "s"}, "w"}});
  REQUIRE(validate_bundle(other).empty());
  CHECK(find_isomorphism(b, other).has_value());
  CHECK_FALSE(find_isomorphism(b, trivial(2, "Z3")).has_value());
  CHECK_FALSE(find_isomorphism(b, trivial(3, "Z2")).has_value());
}
