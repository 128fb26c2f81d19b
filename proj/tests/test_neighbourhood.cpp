#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge/errors.hpp"
#include "gauge/neighbourhood.hpp"
#include "support.hpp"

using namespace gauge;
using namespace testing;

TEST_CASE("closure and validation") {
  auto n = Neighbourhood::from_pairs(3, {{0, 1}});
  CHECK(n.related(1, 0));
  CHECK(n.related(2, 2));
  CHECK_FALSE(n.related(0, 2));
  CHECK(n.off_diagonal_pairs() == std::vector<std::pair<Index, Index>>{{0, 1}});
  Labels names({"x", "y", "z"});
  CHECK(validate_neighbourhood(n, names).empty());

  auto broken = Neighbourhood::raw(3, {{0, 0}, {1, 1}, {0, 1}});
  auto r = validate_neighbourhood(broken, names);
  CHECK(has_axiom(r, "reflexivity"));
  CHECK(has_axiom(r, "symmetry"));
}

TEST_CASE("simplex tables") {
  auto path = Neighbourhood::from_pairs(3, {{0, 1}, {1, 2}});
  SimplexTable one(path, 1);
  CHECK(one.size() == 7);  // 3 diagonal + 4 directed edges
  SimplexTable two(path, 2);
  // no triangle: only simplices inside an edge, 2^3 per edge minus the shared vertex tuples
  CHECK(two.size() == 8 + 8 - 1);
  CHECK(two.find(std::vector<Index>{0, 1, 0}).has_value());
  CHECK_FALSE(two.find(std::vector<Index>{0, 1, 2}).has_value());
  CHECK(std::is_sorted(two.begin(), two.end()));
  for (std::size_t r = 0; r < two.size(); ++r) CHECK(*two.find(two[r]) == r);
  CHECK(enumerate_simplices(Neighbourhood::codiscrete(3), 2).size() == 27);
  CHECK(SimplexTable(Neighbourhood::discrete(4), 3).size() == 4);
}

TEST_CASE("infinitesimal simplices of the trivial K2 x Z2 model") {
  auto bn = trivial_k(2, "Z2");
  CHECK(bn.total_simplices(1)->size() == 16);
  CHECK(bn.base_simplices(1)->size() == 4);
  CHECK(bn.total_simplices(2)->size() == 64);
}

TEST_CASE("model validation") {
  CHECK(validate_neighbour_bundle(trivial_k(3, "S3")).empty());
  CHECK(validate_neighbour_bundle(flat_k(3, "S3")).empty());

  SUBCASE("submersion") {
    auto bundle = PrincipalBundle::trivial(base_names(2), FiniteGroup::cyclic(2));
    BundleWithNeighbours bn(bundle, Neighbourhood::codiscrete(2), Neighbourhood::discrete(4));
    auto r = validate_neighbour_bundle(bn);
    CHECK(has_axiom(r, "submersion"));
    CHECK_FALSE(has_axiom(r, "projection preserves ~"));
  }
  SUBCASE("projection preserves ~") {
    auto bundle = PrincipalBundle::trivial(base_names(2), FiniteGroup::cyclic(2));
    BundleWithNeighbours bn(bundle, Neighbourhood::discrete(2), Neighbourhood::codiscrete(4));
    CHECK(has_axiom(validate_neighbour_bundle(bn), "projection preserves ~"));
  }
  SUBCASE("lifting fails at k=2 only") {
    const auto rel = Neighbourhood::codiscrete(3);
    const auto z2 = FiniteGroup::cyclic(2);
    auto sets = flat_twist(rel, z2);
    sets[{0, 2}] = {z2.at("1")};
    sets[{2, 0}] = {z2.at("1")};
    auto tm = twisted_model(base_names(3), rel, z2, sets);
    CHECK(has_axiom(tm.report, "lifting k=2"));
    CHECK_FALSE(has_axiom(tm.report, "lifting k=1"));
    CHECK_FALSE(has_axiom(tm.report, "submersion"));
    CHECK_FALSE(find_lift(tm.model, std::vector<Index>{0, 1, 2}, pt(tm.model, "a", "0")).has_value());
    CHECK(find_lift(tm.model, std::vector<Index>{0, 2}, pt(tm.model, "a", "0")).has_value());
  }
  SUBCASE("bad twist sets") {
    const auto rel = Neighbourhood::codiscrete(2);
    const auto z3 = FiniteGroup::cyclic(3);
    auto sets = flat_twist(rel, z3);
    sets[{0, 1}] = {z3.at("1")};  // (b,a) still {0}, not the inverse
    CHECK_THROWS_WITH_AS(twisted_model(base_names(2), rel, z3, sets), doctest::Contains("(a,b)"), InputError);
  }
}

TEST_CASE("full twist is the trivial model") {
  const auto rel = Neighbourhood::from_pairs(3, {{0, 1}, {1, 2}});
  const auto g = FiniteGroup::cyclic(3);
  auto tm = twisted_model(base_names(3), rel, g, full_twist(rel, g));
  auto triv = trivial_model(base_names(3), rel, g);
  CHECK(tm.report.empty());
  CHECK(tm.model.total_relation() == triv.total_relation());
}
