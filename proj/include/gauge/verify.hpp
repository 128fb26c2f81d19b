#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauge/connection.hpp"
#include "gauge/forms.hpp"
#include "gauge/model.hpp"

namespace gauge {

enum class Theorem { prop1, prop2, prop3, prop4, curvature, corollary, eq1_failure };

/// "prop1", ..., "eq1-failure".
std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);
const std::vector<Theorem>& all_theorems();

/// One checked instance.
struct Record {
  std::string instance;
  bool holds = true;
  std::string detail;
};

struct TheoremReport {
  Theorem theorem{};
  bool holds = true;
  /// False when the statement has no content on this model (for example
  /// descent on a noncommutative group); holds stays true then.
  bool applicable = true;
  std::string note;
  std::vector<Record> records;

  std::size_t failures() const;
  void add(std::string instance, bool ok, std::string detail = {});
};

struct VerifyOptions {
  /// Exhaustive enumeration up to this many items, seeded sampling beyond.
  std::uint64_t exhaustive_limit = 10'000;
  std::size_t samples = 100;
  std::size_t pair_samples = 50;
  std::uint64_t seed = 1;
  /// Connections tested in addition to the enumerated or sampled ones.
  std::map<std::string, Connection> named;
};

/// Every connection when there are at most exhaustive_limit, otherwise
/// `samples` seeded random ones; named connections come first.
std::vector<std::pair<std::string, Connection>> connections_under_test(const BundleWithNeighbours& bn,
                                                                       const VerifyOptions& opts);

/// Every 1-form satisfying normalization and both shift laws, found by
/// propagating the laws from one free value per constraint class. nullopt
/// when there would be more than `limit`.
std::optional<std::vector<GroupForm>> admissible_forms(const BundleWithNeighbours& bn, std::uint64_t limit);

/// Runs one statement on a model. The model must pass
/// validate_neighbour_bundle.
TheoremReport verify(const BundleWithNeighbours& bn, Theorem t, const VerifyOptions& opts = {});

}  // namespace gauge
