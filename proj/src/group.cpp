#include "gauge/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    const std::vector<std::vector<std::string>>& mul) {
  const std::size_t n = names.size();
  if (n == 0) throw InputError("group must have at least one element");
  if (mul.size() != n) throw InputError("multiplication table has wrong number of rows");
  Labels labels(names);
  std::vector<Elem> table(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (mul[r].size() != n) {
      throw InputError("multiplication table row '" + names[r] + "' has wrong length");
    }
    const Elem a = labels.at(names[r], "group element");
    for (std::size_t c = 0; c < n; ++c) {
      const Elem b = labels.at(names[c], "group element");
      table[a * n + b] = labels.at(mul[r][c], "group element");
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup::FiniteGroup(Labels labels, std::vector<Elem> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  auto m = [&](Elem a, Elem b) { return table_[a * n + b]; };
  auto nm = [&](Elem a) { return labels_.name(a); };

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) {
          throw InputError("group table not associative at (" + nm(a) + ", " + nm(b) + ", " +
                           nm(c) + ")");
        }

  std::optional<Elem> unit;
  for (Elem e = 0; e < n && !unit; ++e) {
    bool two_sided = true;
    for (Elem a = 0; a < n && two_sided; ++a) two_sided = m(e, a) == a && m(a, e) == a;
    if (two_sided) unit = e;
  }
  if (!unit) throw InputError("group table has no unit");
  unit_ = *unit;

  inverse_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    std::optional<Elem> found;
    for (Elem b = 0; b < n && !found; ++b) {
      if (m(a, b) == unit_ && m(b, a) == unit_) found = b;
    }
    if (!found) throw InputError("group element '" + nm(a) + "' has no inverse");
    inverse_[a] = *found;
  }

  for (Elem a = 0; a < n && commutative_; ++a)
    for (Elem b = 0; b < n && commutative_; ++b) commutative_ = m(a, b) == m(b, a);
}

FiniteGroup FiniteGroup::cyclic(unsigned n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> mul(n, std::vector<std::string>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) mul[i][j] = std::to_string((i + j) % n);
  return from_table(std::move(names), mul);
}

FiniteGroup FiniteGroup::symmetric3() {
  using Perm = std::array<int, 3>;  // images of 1,2,3 (zero based)
  const std::vector<std::pair<std::string, Perm>> perms = {
      {"e", {0, 1, 2}},    {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
      {"(23)", {0, 2, 1}}, {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
  };
  auto name_of = [&](const Perm& p) {
    for (const auto& [name, q] : perms)
      if (q == p) return name;
    throw std::logic_error("S3 closure");
  };
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> mul;
  for (const auto& [sn, s] : perms) {
    names.push_back(sn);
    auto& row = mul.emplace_back();
    for (const auto& [tn, t] : perms) {
      Perm st{s[t[0]], s[t[1]], s[t[2]]};
      row.push_back(name_of(st));
    }
  }
  return from_table(std::move(names), mul);
}

FiniteGroup FiniteGroup::by_name(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "1") return cyclic(1);
  if (name.size() >= 2 && name.front() == 'Z') {
    unsigned n = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw InputError("unknown group '" + std::string(name) + "'");
      n = n * 10 + static_cast<unsigned>(ch - '0');
    }
    return cyclic(n);
  }
  throw InputError("unknown group '" + std::string(name) + "'");
}

std::vector<std::vector<std::string>> FiniteGroup::table_names() const {
  std::vector<std::vector<std::string>> rows(size());
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b) rows[a].push_back(name(mul(a, b)));
  return rows;
}

std::optional<std::vector<Elem>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.is_commutative() != b.is_commutative()) return std::nullopt;
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> image(n, kUnset);
  std::vector<bool> used(n, false);

  // Every triple (p, q, pq) with all three assigned and involving x.
  auto consistent = [&](Elem x) {
    for (Elem p = 0; p < n; ++p) {
      if (image[p] == kUnset) continue;
      for (Elem q = 0; q < n; ++q) {
        if (image[q] == kUnset) continue;
        const Elem pq = a.mul(p, q);
        if (image[pq] == kUnset || (p != x && q != x && pq != x)) continue;
        if (image[pq] != b.mul(image[p], image[q])) return false;
      }
    }
    return true;
  };

  std::function<bool(Elem)> assign = [&](Elem x) -> bool {
    if (x == n) return true;
    for (Elem t = 0; t < n; ++t) {
      if (used[t]) continue;
      image[x] = t;
      used[t] = true;
      if (consistent(x) && assign(x + 1)) return true;
      used[t] = false;
      image[x] = kUnset;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  return image;
}

}  // namespace gauge
