#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge/verify.hpp"
#include "support.hpp"

using namespace gauge;
using namespace testing;

TEST_CASE("theorem names") {
  for (Theorem t : all_theorems()) CHECK(parse_theorem(theorem_name(t)) == t);
  CHECK(parse_theorem("eq1-failure") == Theorem::eq1_failure);
  CHECK_FALSE(parse_theorem("prop5").has_value());
  CHECK(all_theorems().size() == 7);
}

TEST_CASE("admissible forms match connections") {
  auto k2 = trivial_k(2, "Z2");
  auto forms = admissible_forms(k2, 1000);
  REQUIRE(forms.has_value());
  CHECK(forms->size() == 2);
  for (const auto& f : *forms) CHECK(check_vertical_shift(k2, f));

  auto s3 = trivial_k(3, "S3");
  auto many = admissible_forms(s3, 10'000);
  REQUIRE(many.has_value());
  CHECK(many->size() == 216);
  CHECK_FALSE(admissible_forms(s3, 100).has_value());

  auto flat = flat_k(3, "Z3");
  auto ff = admissible_forms(flat, 10'000);
  REQUIRE(ff.has_value());
  CHECK(ff->size() == connection_count(flat));
}

TEST_CASE("every statement holds on small models") {
  for (const char* g : {"Z2", "S3"}) {
    for (auto bn : {trivial_k(2, g), flat_k(2, g)}) {
      for (Theorem t : all_theorems()) {
        CAPTURE(theorem_name(t));
        auto rep = verify(bn, t);
        CHECK(rep.holds);
        CHECK(rep.failures() == 0);
        const bool needs_commutative = t == Theorem::prop2 || t == Theorem::corollary;
        CHECK(rep.applicable == (!needs_commutative || bn.group().is_commutative()));
      }
    }
  }
}

TEST_CASE("the naive gauge map fails exactly on noncommutative groups") {
  auto rep = verify(trivial_k(2, "S3"), Theorem::eq1_failure);
  CHECK(rep.holds);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].detail.find("fraction") != std::string::npos);
  CHECK(verify(trivial_k(2, "Z4"), Theorem::eq1_failure).holds);
}

TEST_CASE("named connections are tested first") {
  auto bn = trivial_k(3, "Z2");
  VerifyOptions opts;
  opts.named.emplace("holonomy", holonomy_connection(bn));
  auto list = connections_under_test(bn, opts);
  CHECK(list.size() == 9);
  CHECK(list.front().first == "named 'holonomy'");
  auto rep = verify(bn, Theorem::curvature, opts);
  CHECK(rep.holds);
  CHECK(rep.records.front().instance == "named 'holonomy'");
}

TEST_CASE("sampling beyond the limit") {
  auto bn = trivial_k(3, "S3");
  VerifyOptions opts;
  opts.exhaustive_limit = 10;
  opts.samples = 5;
  auto list = connections_under_test(bn, opts);
  CHECK(list.size() == 5);
  auto again = connections_under_test(bn, opts);
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(list[i].second == again[i].second);
  auto rep = verify(bn, Theorem::prop1, opts);
  CHECK(rep.holds);
  CHECK_FALSE(rep.note.empty());
}
