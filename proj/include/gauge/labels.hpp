#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gauge {

/// Dense index of a named thing (object, arrow, point, group element).
/// Indices follow the lexicographic order of the names.
using Index = std::uint32_t;

/// A finite set of distinct names, kept sorted so that index order is the
/// canonical (lexicographic) order used for every "least" choice.
class Labels {
 public:
  Labels() = default;
  /// Throws InputError on duplicates.
  explicit Labels(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Index i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Index> find(std::string_view name) const;
  /// Like find, but throws InputError naming `what` when absent.
  Index at(std::string_view name, std::string_view what = "name") const;

  friend bool operator==(const Labels&, const Labels&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace gauge
