#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge/errors.hpp"
#include "gauge/group.hpp"

using namespace gauge;

TEST_CASE("cyclic groups") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.size() == 4);
  CHECK(z4.is_commutative());
  CHECK(z4.name(z4.unit()) == "0");
  CHECK(z4.mul(z4.at("3"), z4.at("2")) == z4.at("1"));
  CHECK(z4.inv(z4.at("1")) == z4.at("3"));
}

TEST_CASE("S3 composes right to left") {
  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3.size() == 6);
  CHECK_FALSE(s3.is_commutative());
  // apply (13) first, then (12)
  CHECK(s3.mul(s3.at("(12)"), s3.at("(13)")) == s3.at("(132)"));
  CHECK(s3.mul(s3.at("(13)"), s3.at("(12)")) == s3.at("(123)"));
  CHECK(s3.inv(s3.at("(123)")) == s3.at("(132)"));
  CHECK(s3.conj(s3.at("(13)"), s3.at("(12)")) == s3.at("(23)"));
}

TEST_CASE("conjugation is an action") {
  auto s3 = FiniteGroup::symmetric3();
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 6; ++h)
      for (Elem x = 0; x < 6; ++x) CHECK(s3.conj(s3.mul(g, h), x) == s3.conj(h, s3.conj(g, x)));
}

TEST_CASE("by_name") {
  CHECK(FiniteGroup::by_name("Z5").size() == 5);
  CHECK(FiniteGroup::by_name("S3") == FiniteGroup::symmetric3());
  CHECK(FiniteGroup::by_name("1").size() == 1);
  CHECK_THROWS_AS(FiniteGroup::by_name("D4"), InputError);
  CHECK_THROWS_AS(FiniteGroup::by_name("Z0"), InputError);
}

TEST_CASE("from_table rejects non-groups") {
  // b has no inverse
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{"a", "b"}, {"b", "b"}}), InputError);
  // ragged table
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{"a", "b"}, {"b"}}), InputError);
  // unknown result
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{"a", "b"}, {"b", "c"}}), InputError);
  // not associative: a Latin square with unit e but x*(x*y) != (x*x)*y
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "x", "y", "z", "w"}, {{"e", "x", "y", "z", "w"},
                                                                      {"x", "e", "z", "w", "y"},
                                                                      {"y", "w", "e", "x", "z"},
                                                                      {"z", "y", "w", "e", "x"},
                                                                      {"w", "z", "x", "y", "e"}}),
                  InputError);
}

TEST_CASE("rows follow the given order") {
  auto g = FiniteGroup::from_table({"u", "t"}, {{"u", "t"}, {"t", "u"}});
  CHECK(g.name(g.unit()) == "u");
  CHECK(g.mul(g.at("t"), g.at("t")) == g.at("u"));
}

TEST_CASE("isomorphism search") {
  auto klein = FiniteGroup::from_table({"e", "a", "b", "c"}, {{"e", "a", "b", "c"},
                                                              {"a", "e", "c", "b"},
                                                              {"b", "c", "e", "a"},
                                                              {"c", "b", "a", "e"}});
  auto z4 = FiniteGroup::cyclic(4);
  CHECK_FALSE(find_group_isomorphism(z4, klein).has_value());
  auto relabel = FiniteGroup::from_table({"p", "q", "r"}, {{"r", "p", "q"}, {"p", "q", "r"}, {"q", "r", "p"}});
  auto phi = find_group_isomorphism(FiniteGroup::cyclic(3), relabel);
  REQUIRE(phi.has_value());
  CHECK((*phi)[0] == relabel.unit());
  CHECK(find_group_isomorphism(FiniteGroup::symmetric3(), FiniteGroup::symmetric3()).has_value());
  CHECK_FALSE(find_group_isomorphism(FiniteGroup::symmetric3(), FiniteGroup::cyclic(6)).has_value());
}
