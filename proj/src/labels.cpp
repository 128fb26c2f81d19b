#include "gauge/labels.hpp"

#include <algorithm>

#include "gauge/errors.hpp"
#include "gauge/report.hpp"

namespace gauge {

Labels::Labels(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  auto dup = std::adjacent_find(names_.begin(), names_.end());
  if (dup != names_.end()) {
    throw InputError("duplicate name '" + *dup + "'");
  }
}

std::optional<Index> Labels::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

Index Labels::at(std::string_view name, std::string_view what) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  return os << v.axiom << ": " << v.witness;
}

}  // namespace gauge
