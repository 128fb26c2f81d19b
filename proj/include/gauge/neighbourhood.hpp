#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gauge/labels.hpp"
#include "gauge/report.hpp"

namespace gauge {

/// A relation on {0, ..., n-1}, normally reflexive and symmetric.
class Neighbourhood {
 public:
  /// Reflexive symmetric closure of the given unordered pairs.
  static Neighbourhood from_pairs(std::size_t n, const std::vector<std::pair<Index, Index>>& pairs);
  /// Exactly the given ordered pairs, for exercising the validator.
  static Neighbourhood raw(std::size_t n, const std::vector<std::pair<Index, Index>>& ordered);
  static Neighbourhood discrete(std::size_t n);
  static Neighbourhood codiscrete(std::size_t n);

  std::size_t size() const { return n_; }
  bool related(Index x, Index y) const { return rel_[x * n_ + y]; }
  /// y with x ~ y, ascending.
  std::span<const Index> neighbours(Index x) const { return adj_[x]; }
  /// Unordered pairs x < y with x ~ y.
  std::vector<std::pair<Index, Index>> off_diagonal_pairs() const;

  friend bool operator==(const Neighbourhood& a, const Neighbourhood& b) {
    return a.n_ == b.n_ && a.rel_ == b.rel_;
  }

 private:
  explicit Neighbourhood(std::size_t n) : n_(n), rel_(n * n, false), adj_(n) {}
  void index();

  std::size_t n_;
  std::vector<bool> rel_;
  std::vector<std::vector<Index>> adj_;
};

/// Reflexivity and symmetry, with witnesses named through `names`.
Report validate_neighbourhood(const Neighbourhood& n, const Labels& names);

using Simplex = std::vector<Index>;

/// All infinitesimal k-simplices (k+1 mutual neighbours, repeats allowed) in
/// lexicographic order, with constant-time lookup of a tuple's row.
class SimplexTable {
 public:
  SimplexTable(const Neighbourhood& n, unsigned degree);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return rows_.size(); }
  const Simplex& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<Simplex>& rows() const { return rows_; }
  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  std::optional<std::size_t> find(std::span<const Index> tuple) const;

 private:
  std::uint64_t code(std::span<const Index> tuple) const;

  std::size_t carrier_size_;
  unsigned degree_;
  std::vector<Simplex> rows_;
  std::vector<std::int32_t> dense_;  // code -> row, when the code space is small
  std::unordered_map<std::uint64_t, std::size_t> sparse_;
};

std::vector<Simplex> enumerate_simplices(const Neighbourhood& n, unsigned k);

}  // namespace gauge
