#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauge/labels.hpp"

namespace gauge {

using Elem = Index;

/// A finite group given by its full multiplication table. Construction
/// checks the group axioms exhaustively, so every FiniteGroup is a group.
class FiniteGroup {
 public:
  /// `mul[i][j]` is the name of `names[i] * names[j]`; rows follow the
  /// order of `names` as given (not necessarily sorted).
  static FiniteGroup from_table(std::vector<std::string> names,
                                const std::vector<std::vector<std::string>>& mul);

  /// Z/n with elements "0".."n-1".
  static FiniteGroup cyclic(unsigned n);
  /// Permutations of {1,2,3} in cycle notation, composed right to left:
  /// (s*t)(i) = s(t(i)). Elements: e (12) (13) (23) (123) (132).
  static FiniteGroup symmetric3();
  /// Parses "Z<n>", "S3" or "1".
  static FiniteGroup by_name(std::string_view name);

  const Labels& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& name(Elem g) const { return labels_.name(g); }
  Elem at(std::string_view name) const { return labels_.at(name, "group element"); }

  Elem mul(Elem a, Elem b) const { return table_[a * size() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem unit() const { return unit_; }
  /// g^-1 h g
  Elem conj(Elem g, Elem h) const { return mul(inv(g), mul(h, g)); }
  bool is_commutative() const { return commutative_; }

  /// Row-major table in canonical element order, as names.
  std::vector<std::vector<std::string>> table_names() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup(Labels labels, std::vector<Elem> table);

  Labels labels_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem unit_ = 0;
  bool commutative_ = true;
};

/// First isomorphism a -> b in lexicographic order of image vectors, found by
/// backtracking.
std::optional<std::vector<Elem>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace gauge
