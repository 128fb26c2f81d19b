#include "gauge/neighbourhood.hpp"

#include "gauge/errors.hpp"

namespace gauge {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

void check_index(std::size_t n, Index x) {
  if (x >= n) throw InputError("relation mentions element " + std::to_string(x) + " outside a carrier of size " + std::to_string(n));
}

}  // namespace

Neighbourhood Neighbourhood::from_pairs(std::size_t n, const std::vector<std::pair<Index, Index>>& pairs) {
  Neighbourhood r(n);
  for (Index x = 0; x < n; ++x) r.rel_[x * n + x] = true;
  for (auto [x, y] : pairs) {
    check_index(n, x);
    check_index(n, y);
    r.rel_[x * n + y] = true;
    r.rel_[y * n + x] = true;
  }
  r.index();
  return r;
}

Neighbourhood Neighbourhood::raw(std::size_t n, const std::vector<std::pair<Index, Index>>& ordered) {
  Neighbourhood r(n);
  for (auto [x, y] : ordered) {
    check_index(n, x);
    check_index(n, y);
    r.rel_[x * n + y] = true;
  }
  r.index();
  return r;
}

Neighbourhood Neighbourhood::discrete(std::size_t n) { return from_pairs(n, {}); }

Neighbourhood Neighbourhood::codiscrete(std::size_t n) {
  Neighbourhood r(n);
  r.rel_.assign(n * n, true);
  r.index();
  return r;
}

void Neighbourhood::index() {
  for (Index x = 0; x < n_; ++x) {
    adj_[x].clear();
    for (Index y = 0; y < n_; ++y)
      if (related(x, y)) adj_[x].push_back(y);
  }
}

std::vector<std::pair<Index, Index>> Neighbourhood::off_diagonal_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < n_; ++x)
    for (Index y = x + 1; y < n_; ++y)
      if (related(x, y)) out.emplace_back(x, y);
  return out;
}

Report validate_neighbourhood(const Neighbourhood& n, const Labels& names) {
  Report report;
  for (Index x = 0; x < n.size(); ++x) {
    if (!n.related(x, x)) report.push_back({"reflexivity", names.name(x) + " !~ " + names.name(x)});
    for (Index y = 0; y < n.size(); ++y) {
      if (n.related(x, y) && !n.related(y, x)) {
        report.push_back({"symmetry", names.name(x) + " ~ " + names.name(y) + " but not conversely"});
      }
    }
  }
  return report;
}

SimplexTable::SimplexTable(const Neighbourhood& n, unsigned degree)
    : carrier_size_(n.size()), degree_(degree) {
  // Depth-first extension keeps lexicographic order: candidates for the next
  // vertex are the neighbours of vertex 0 in ascending order, filtered by
  // adjacency to the others.
  Simplex current;
  auto extend = [&](auto&& self) -> void {
    if (current.size() == degree_ + 1) {
      rows_.push_back(current);
      return;
    }
    if (current.empty()) {
      for (Index x = 0; x < n.size(); ++x) {
        current.push_back(x);
        self(self);
        current.pop_back();
      }
      return;
    }
    for (Index y : n.neighbours(current.front())) {
      bool mutual = true;
      for (Index v : current) mutual = mutual && n.related(v, y) && n.related(y, v);
      if (!mutual) continue;
      current.push_back(y);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);

  std::uint64_t space = 1;
  bool small = true;
  for (unsigned i = 0; i <= degree_ && small; ++i) {
    space *= std::max<std::uint64_t>(carrier_size_, 1);
    small = space <= kDenseLimit;
  }
  if (small) {
    dense_.assign(space, -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) dense_[code(rows_[r])] = static_cast<std::int32_t>(r);
  } else {
    for (std::size_t r = 0; r < rows_.size(); ++r) sparse_.emplace(code(rows_[r]), r);
  }
}

std::uint64_t SimplexTable::code(std::span<const Index> tuple) const {
  std::uint64_t c = 0;
  for (Index v : tuple) c = c * carrier_size_ + v;
  return c;
}

std::optional<std::size_t> SimplexTable::find(std::span<const Index> tuple) const {
  if (tuple.size() != degree_ + 1) return std::nullopt;
  for (Index v : tuple)
    if (v >= carrier_size_) return std::nullopt;
  const auto c = code(tuple);
  if (!dense_.empty()) {
    const auto r = dense_[c];
    if (r < 0) return std::nullopt;
    return static_cast<std::size_t>(r);
  }
  auto it = sparse_.find(c);
  if (it == sparse_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> enumerate_simplices(const Neighbourhood& n, unsigned k) { return SimplexTable(n, k).rows(); }

}  // namespace gauge
