#include "gauge/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 7> kNames{{
    {Theorem::prop1, "prop1"},
    {Theorem::prop2, "prop2"},
    {Theorem::prop3, "prop3"},
    {Theorem::prop4, "prop4"},
    {Theorem::curvature, "curvature"},
    {Theorem::corollary, "corollary"},
    {Theorem::eq1_failure, "eq1-failure"},
}};

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

// Counts the instances of one family of checks and keeps the first few
// failures, so that exhaustive families do not flood the report.
class Batch {
 public:
  explicit Batch(std::string label) : label_(std::move(label)) {}

  void check(bool ok, const std::function<std::string()>& witness) {
    ++checked_;
    if (ok) return;
    if (failures_++ < kKept) witnesses_.push_back(witness());
  }

  void close(TheoremReport& report) const {
    std::string detail;
    for (const auto& w : witnesses_) detail += (detail.empty() ? "" : "; ") + w;
    if (failures_ > witnesses_.size()) detail += "; and " + std::to_string(failures_ - witnesses_.size()) + " more";
    report.add(label_ + " (" + std::to_string(checked_) + " checked)", failures_ == 0, detail);
  }

 private:
  static constexpr std::size_t kKept = 3;
  std::string label_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> witnesses_;
};

std::string total_simplex(const BundleWithNeighbours& bn, std::span<const Index> s) {
  return simplex_name(bn.bundle().total(), s);
}

std::string base_simplex(const BundleWithNeighbours& bn, std::span<const Index> s) {
  return simplex_name(bn.bundle().base(), s);
}

// First simplex where two forms on the same table differ.
template <class F>
std::optional<std::size_t> first_difference(const F& a, const F& b) {
  for (std::size_t r = 0; r < a.domain().size(); ++r) {
    if (!(a.at_row(r) == b.at_row(r))) return r;
  }
  return std::nullopt;
}

std::string group_mismatch(const BundleWithNeighbours& bn, const GroupForm& lhs, const GroupForm& rhs) {
  auto r = first_difference(lhs, rhs);
  if (!r) return {};
  const auto& G = bn.group();
  return "at " + total_simplex(bn, lhs.domain()[*r]) + ": " + G.name(lhs.at_row(*r)) + " vs " + G.name(rhs.at_row(*r));
}

template <class Fn>
std::string refusal_of(Fn&& fn) {
  try {
    fn();
    return {};
  } catch (const Error& e) {
    return e.what();
  }
}

// Every base k-form when there are few enough, otherwise seeded random ones.
void for_each_base_form(const BundleWithNeighbours& bn, unsigned k, const VerifyOptions& opts, std::mt19937_64& rng,
                        bool& exhaustive, const std::function<void(const BaseForm&)>& fn) {
  auto table = bn.base_simplices(k);
  const std::size_t n = bn.group().size();
  const std::uint64_t count = saturating_pow(n, table->size());
  exhaustive = count <= opts.exhaustive_limit;
  std::vector<Elem> values(table->size(), 0);
  if (exhaustive) {
    for (std::uint64_t i = 0; i < count; ++i) {
      fn(BaseForm(table, values));
      for (std::size_t pos = values.size(); pos-- > 0;) {
        if (++values[pos] < n) break;
        values[pos] = 0;
      }
    }
    return;
  }
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < opts.samples; ++i) {
    for (auto& v : values) v = pick(rng);
    fn(BaseForm(table, values));
  }
}

GaugeForm random_gauge_form(const BundleWithNeighbours& bn, unsigned k, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(bn.group().size() - 1));
  return tabulate_gauge_form(bn, k, [&](const Simplex& s) { return group_to_gauge(bn.bundle(), s[0], pick(rng)); });
}

std::string connection_label(std::size_t i) { return "connection #" + std::to_string(i); }

// ---------------------------------------------------------------------------

// Round trip of a group form through check and hat when it is horizontal and
// equivariant; a refusal from check_transform otherwise.
void hat_check_round_trip(const BundleWithNeighbours& bn, const GroupForm& theta, Batch& batch) {
  const bool he = is_horizontal(bn, theta).holds && is_equivariant(bn, theta).holds;
  if (!he) {
    bool refused = false;
    try {
      check_transform(bn, theta);
    } catch (const Refused&) {
      refused = true;
    }
    batch.check(refused, [] { return std::string("check_transform accepted a form that is not horizontal and equivariant"); });
    return;
  }
  std::string witness;
  try {
    const GaugeForm alpha = check_transform(bn, theta);
    const GroupForm back = hat_transform(bn, alpha);
    witness = group_mismatch(bn, back, theta);
    if (witness.empty()) {
      auto rel = check_hat_relation(bn, alpha, back);
      if (!rel.holds) witness = "hat relation: " + rel.counterexample;
    }
  } catch (const Error& e) {
    witness = e.what();
  }
  batch.check(witness.empty(), [&] { return witness; });
}

TheoremReport run_prop1(const BundleWithNeighbours& bn, const VerifyOptions& opts) {
  TheoremReport report;
  report.theorem = Theorem::prop1;
  const auto connections = connections_under_test(bn, opts);
  for (const auto& [name, nabla] : connections) {
    const GroupForm omega = connection_to_form(bn, nabla);
    std::string detail;
    auto vertical = check_vertical_shift(bn, omega);
    auto diagonal = check_diagonal_shift(bn, omega);
    if (!vertical.holds) detail = "vertical shift law: " + vertical.counterexample;
    else if (!diagonal.holds) detail = "diagonal shift law: " + diagonal.counterexample;
    else {
      detail = refusal_of([&] {
        if (!(form_to_connection(bn, omega) == nabla)) throw ConsistencyError("round trip changed the connection");
      });
    }
    report.add(name, detail.empty(), detail);
  }

  auto forms = admissible_forms(bn, opts.exhaustive_limit);
  if (!forms) {
    report.note = "more than " + std::to_string(opts.exhaustive_limit) +
                  " admissible forms; the converse was checked on the sampled connections only";
    return report;
  }
  Batch converse("admissible forms round trip");
  std::set<std::vector<FractionArrow>> seen;
  for (const auto& omega : *forms) {
    std::string witness = refusal_of([&] {
      const Connection nabla = form_to_connection(bn, omega);
      seen.insert(nabla.values());
      const GroupForm back = connection_to_form(bn, nabla);
      if (!(back == omega)) throw ConsistencyError("form changed: " + group_mismatch(bn, back, omega));
    });
    converse.check(witness.empty(), [&] { return witness; });
  }
  converse.close(report);
  const std::uint64_t count = connection_count(bn);
  report.add("admissible forms vs connections", forms->size() == count && seen.size() == count,
             std::to_string(forms->size()) + " admissible forms, " + std::to_string(seen.size()) +
                 " distinct connections from them, " + std::to_string(count) + " connections");
  return report;
}

// On a commutative group the horizontal invariant forms are exactly
// the pullbacks. Horizontality and invariance say a form is constant along
// two kinds of moves between lifts; the forms constant along those moves are
// the pullbacks iff the moves connect all lifts of each base simplex.
void prop2_classes(const BundleWithNeighbours& bn, unsigned k, TheoremReport& report) {
  auto table = bn.total_simplices(k);
  const auto& b = bn.bundle();
  std::vector<std::size_t> parent(table->size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

  std::map<std::pair<Point, Simplex>, std::size_t> horizontal;
  for (std::size_t r = 0; r < table->size(); ++r) {
    const Simplex& s = (*table)[r];
    Simplex shadow = bn.project(std::span(s).subspan(1));
    auto [it, inserted] = horizontal.emplace(std::pair{s[0], shadow}, r);
    if (!inserted) unite(r, it->second);
    for (Elem g = 0; g < bn.group().size(); ++g) {
      Simplex moved(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) moved[i] = b.act(s[i], g);
      if (auto row = table->find(moved)) unite(r, *row);
    }
  }

  auto base = bn.base_simplices(k);
  std::vector<std::optional<std::size_t>> class_of(base->size());
  std::string witness;
  for (std::size_t r = 0; r < table->size() && witness.empty(); ++r) {
    auto shadow = base->find(bn.project((*table)[r]));
    if (!shadow) {
      witness = "projection of " + total_simplex(bn, (*table)[r]) + " is not a simplex";
      break;
    }
    auto& c = class_of[*shadow];
    if (!c) c = find(r);
    else if (*c != find(r)) witness = "lifts of " + base_simplex(bn, (*base)[*shadow]) + " are not connected by moves";
  }
  for (std::size_t r = 0; r < base->size() && witness.empty(); ++r) {
    if (!class_of[r]) witness = base_simplex(bn, (*base)[r]) + " has no lift";
  }
  report.add("degree " + std::to_string(k) + " horizontal invariant forms are pullbacks", witness.empty(), witness);
}

TheoremReport run_prop2(const BundleWithNeighbours& bn, const VerifyOptions& opts) {
  TheoremReport report;
  report.theorem = Theorem::prop2;
  if (!bn.group().is_commutative()) {
    report.applicable = false;
    report.note = "descent of horizontal equivariant forms is only claimed for commutative groups";
    return report;
  }
  std::mt19937_64 rng(opts.seed);
  for (unsigned k = 0; k <= 2; ++k) {
    prop2_classes(bn, k, report);
    bool exhaustive = false;
    Batch batch("degree " + std::to_string(k) + " pullbacks descend");
    for_each_base_form(bn, k, opts, rng, exhaustive, [&](const BaseForm& big_theta) {
      const GroupForm theta = pullback(bn, big_theta);
      std::string witness;
      auto h = is_horizontal(bn, theta);
      auto e = is_equivariant(bn, theta);
      if (!h.holds) witness = "not horizontal: " + h.counterexample;
      else if (!e.holds) witness = "not equivariant: " + e.counterexample;
      else {
        witness = refusal_of([&] {
          if (!(descend_invariant(bn, theta) == big_theta)) throw ConsistencyError("descent changed the form");
        });
      }
      batch.check(witness.empty(), [&] { return witness; });
    });
    batch.close(report);
    if (!exhaustive) report.note = "some pullback families were sampled";
  }
  return report;
}

TheoremReport run_prop3(const BundleWithNeighbours& bn, const VerifyOptions& opts) {
  TheoremReport report;
  report.theorem = Theorem::prop3;
  std::mt19937_64 rng(opts.seed);
  for (unsigned k = 1; k <= 2; ++k) {
    const std::string deg = "degree " + std::to_string(k) + " ";
    bool exhaustive = false;
    Batch pullbacks(deg + "pullbacks");
    for_each_base_form(bn, k, opts, rng, exhaustive,
                       [&](const BaseForm& f) { hat_check_round_trip(bn, pullback(bn, f), pullbacks); });
    pullbacks.close(report);
    if (!exhaustive) report.note = "some pullback families were sampled";

    Batch gauge(deg + "random gauge forms");
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const GaugeForm alpha = random_gauge_form(bn, k, rng);
      std::string witness;
      try {
        const GroupForm hat = hat_transform(bn, alpha);
        auto h = is_horizontal(bn, hat);
        auto e = is_equivariant(bn, hat);
        auto rel = check_hat_relation(bn, alpha, hat);
        if (!h.holds) witness = "hat not horizontal: " + h.counterexample;
        else if (!e.holds) witness = "hat not equivariant: " + e.counterexample;
        else if (!rel.holds) witness = "hat relation: " + rel.counterexample;
        else if (!(check_transform(bn, hat) == alpha)) witness = "check of hat differs from the gauge form";
      } catch (const Error& err) {
        witness = err.what();
      }
      gauge.check(witness.empty(), [&] { return witness; });
    }
    gauge.close(report);
  }

  Batch forms("connection forms and their coboundaries");
  for (const auto& [name, nabla] : connections_under_test(bn, opts)) {
    const GroupForm omega = connection_to_form(bn, nabla);
    hat_check_round_trip(bn, omega, forms);
    hat_check_round_trip(bn, coboundary1(bn, omega), forms);
  }
  forms.close(report);
  return report;
}

TheoremReport run_prop4(const BundleWithNeighbours& bn, const VerifyOptions& opts) {
  TheoremReport report;
  report.theorem = Theorem::prop4;
  std::mt19937_64 rng(opts.seed);
  std::vector<std::pair<std::string, Connection>> pool;
  const std::uint64_t count = connection_count(bn);
  const bool exhaustive = count <= opts.exhaustive_limit && count * count <= opts.exhaustive_limit;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    auto all = enumerate_connections(bn, opts.exhaustive_limit);
    for (std::size_t i = 0; i < all.size(); ++i) pool.emplace_back(connection_label(i), std::move(all[i]));
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j) pairs.emplace_back(i, j);
  } else {
    for (std::size_t i = 0; i < opts.pair_samples; ++i) {
      pool.emplace_back("random #" + std::to_string(2 * i), random_connection(bn, rng));
      pool.emplace_back("random #" + std::to_string(2 * i + 1), random_connection(bn, rng));
      pairs.emplace_back(2 * i, 2 * i + 1);
    }
    report.note = "pairs sampled";
  }
  for (const auto& [name, nabla] : opts.named) {
    pool.emplace_back("named '" + name + "'", nabla);
  }
  // named connections against each other and against the first pool entry
  const std::size_t first_named = pool.size() - opts.named.size();
  for (std::size_t i = first_named; i < pool.size(); ++i) {
    for (std::size_t j = first_named; j < pool.size(); ++j) pairs.emplace_back(i, j);
    if (first_named > 0) {
      pairs.emplace_back(i, 0);
      pairs.emplace_back(0, i);
    }
  }

  std::vector<std::optional<GroupForm>> omegas(pool.size());
  auto omega_of = [&](std::size_t i) -> const GroupForm& {
    if (!omegas[i]) omegas[i] = connection_to_form(bn, pool[i].second);
    return *omegas[i];
  };
  Batch batch("difference of connections");
  for (auto [i, j] : pairs) {
    const GroupForm lhs = hat_transform(bn, connection_difference(bn, pool[i].second, pool[j].second));
    const GroupForm rhs = product_form(bn, omega_of(i), inverse_form(bn, omega_of(j)));
    batch.check(lhs == rhs, [&, i = i, j = j] {
      return pool[i].first + " over " + pool[j].first + " " + group_mismatch(bn, lhs, rhs);
    });
  }
  batch.close(report);
  return report;
}

TheoremReport run_curvature(const BundleWithNeighbours& bn, const VerifyOptions& opts) {
  TheoremReport report;
  report.theorem = Theorem::curvature;
  for (const auto& [name, nabla] : connections_under_test(bn, opts)) {
    auto id = verify_curvature_identity(bn, nabla);
    auto rotation = check_curvature_rotation(bn, nabla);
    std::string detail;
    if (!id.mismatches.empty()) detail = id.mismatches.front();
    else if (!id.horizontal.holds) detail = "d omega not horizontal: " + id.horizontal.counterexample;
    else if (!id.equivariant.holds) detail = "d omega not equivariant: " + id.equivariant.counterexample;
    else if (!rotation.holds) detail = "rotation: " + rotation.counterexample;
    report.add(name + (is_flat(bn, nabla) ? " (flat)" : ""), detail.empty(), detail);
  }
  return report;
}

TheoremReport run_corollary(const BundleWithNeighbours& bn, const VerifyOptions& opts) {
  TheoremReport report;
  report.theorem = Theorem::corollary;
  if (!bn.group().is_commutative()) {
    report.applicable = false;
    report.note = "curvature only descends to a group-valued form for commutative groups";
    return report;
  }
  for (const auto& [name, nabla] : connections_under_test(bn, opts)) {
    std::string detail = refusal_of([&] {
      const BaseForm omega_base = descend_curvature(bn, nabla);
      if (!(omega_base == gauge_to_base_form(bn, curvature(bn, nabla)))) {
        throw ConsistencyError("descended curvature differs from the curvature read as group elements");
      }
      if (!(pullback(bn, omega_base) == coboundary1(bn, connection_to_form(bn, nabla)))) {
        throw ConsistencyError("pullback of the descended curvature differs from d omega");
      }
    });
    report.add(name, detail.empty(), detail);
  }
  std::mt19937_64 rng(opts.seed);
  bool exhaustive = false;
  Batch plumbing("d commutes with pullback");
  for_each_base_form(bn, 1, opts, rng, exhaustive, [&](const BaseForm& f) {
    const GroupForm lhs = coboundary1(bn, pullback(bn, f));
    const GroupForm rhs = pullback(bn, coboundary1(bn, f));
    plumbing.check(lhs == rhs, [&] { return group_mismatch(bn, lhs, rhs); });
  });
  plumbing.close(report);
  return report;
}

TheoremReport run_eq1(const BundleWithNeighbours& bn) {
  TheoremReport report;
  report.theorem = Theorem::eq1_failure;
  const auto& b = bn.bundle();
  const auto& G = b.group();
  const bool commutative = G.is_commutative();
  auto amb = find_gauge_ambiguity(b);
  std::string detail;
  if (amb) {
    const FractionArrow h = make_arrow(b, amb->y, amb->x);
    detail = arrow_name(b, h) + " has representatives (" + b.point_name(amb->y) + ", " + b.point_name(amb->x) +
             ") with fraction " + G.name(amb->first) + " and (" + b.point_name(b.act(amb->y, amb->g)) + ", " +
             b.point_name(b.act(amb->x, amb->g)) + ") with fraction " + G.name(amb->second);
  } else {
    detail = "every endo-arrow has a single fraction value";
  }
  report.note = commutative ? "commutative group: no counterexample expected"
                            : "noncommutative group: a counterexample is expected";
  report.add(commutative ? "no ambiguous endo-arrow" : "ambiguous endo-arrow", commutative != amb.has_value(),
             detail);
  return report;
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  for (const auto& [th, name] : kNames) {
    if (th == t) return name;
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (const auto& [th, n] : kNames) {
    if (n == name) return th;
  }
  return std::nullopt;
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return all;
}

std::size_t TheoremReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.holds; }));
}

void TheoremReport::add(std::string instance, bool ok, std::string detail) {
  records.push_back({std::move(instance), ok, std::move(detail)});
  if (!ok) holds = false;
}

std::vector<std::pair<std::string, Connection>> connections_under_test(const BundleWithNeighbours& bn,
                                                                       const VerifyOptions& opts) {
  std::vector<std::pair<std::string, Connection>> out;
  for (const auto& [name, nabla] : opts.named) out.emplace_back("named '" + name + "'", nabla);
  if (connection_count(bn) <= opts.exhaustive_limit) {
    auto all = enumerate_connections(bn, opts.exhaustive_limit);
    for (std::size_t i = 0; i < all.size(); ++i) out.emplace_back(connection_label(i), std::move(all[i]));
  } else {
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < opts.samples; ++i) {
      out.emplace_back("random #" + std::to_string(i), random_connection(bn, rng));
    }
  }
  return out;
}

std::optional<std::vector<GroupForm>> admissible_forms(const BundleWithNeighbours& bn, std::uint64_t limit) {
  auto table = bn.total_simplices(1);
  const auto& b = bn.bundle();
  const auto& G = bn.group();
  const std::size_t n = table->size();

  // Values forced on neighbours of (x, y) by normalization and the shift laws.
  auto implied = [&](std::size_t row, Elem v, const std::function<void(std::size_t, Elem)>& emit) {
    const Point x = (*table)[row][0];
    const Point y = (*table)[row][1];
    emit(*table->find(std::array{y, x}), G.inv(v));
    for (Elem g = 0; g < G.size(); ++g) {
      if (auto r = table->find(std::array{b.act(x, g), y})) emit(*r, G.mul(G.inv(g), v));
      if (auto r = table->find(std::array{b.act(x, g), b.act(y, g)})) emit(*r, G.conj(g, v));
    }
  };

  std::vector<int> component(n, -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::deque<std::size_t> queue{start};
    component[start] = id;
    while (!queue.empty()) {
      const std::size_t r = queue.front();
      queue.pop_front();
      members.back().push_back(r);
      implied(r, G.unit(), [&](std::size_t next, Elem) {
        if (component[next] < 0) {
          component[next] = id;
          queue.push_back(next);
        }
      });
    }
  }

  // consistent assignments of each class, one per admissible root value
  std::vector<std::vector<std::vector<Elem>>> options(members.size());
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (Elem root = 0; root < G.size(); ++root) {
      std::vector<std::optional<Elem>> value(n);
      bool ok = true;
      std::deque<std::size_t> queue{members[c].front()};
      value[members[c].front()] = root;
      while (!queue.empty() && ok) {
        const std::size_t r = queue.front();
        queue.pop_front();
        if ((*table)[r][0] == (*table)[r][1] && *value[r] != G.unit()) ok = false;
        implied(r, *value[r], [&](std::size_t next, Elem v) {
          if (!value[next]) {
            value[next] = v;
            queue.push_back(next);
          } else if (*value[next] != v) {
            ok = false;
          }
        });
      }
      if (!ok) continue;
      std::vector<Elem> assignment;
      for (std::size_t r : members[c]) assignment.push_back(*value[r]);
      options[c].push_back(std::move(assignment));
    }
    if (options[c].empty()) return std::vector<GroupForm>{};
    if (total > limit / options[c].size()) return std::nullopt;
    total *= options[c].size();
  }

  std::vector<GroupForm> out;
  std::vector<std::size_t> choice(members.size(), 0);
  std::vector<Elem> values(n, G.unit());
  for (std::uint64_t i = 0; i < total; ++i) {
    for (std::size_t c = 0; c < members.size(); ++c) {
      for (std::size_t m = 0; m < members[c].size(); ++m) values[members[c][m]] = options[c][choice[c]][m];
    }
    out.emplace_back(table, values);
    for (std::size_t c = members.size(); c-- > 0;) {
      if (++choice[c] < options[c].size()) break;
      choice[c] = 0;
    }
  }
  return out;
}

TheoremReport verify(const BundleWithNeighbours& bn, Theorem t, const VerifyOptions& opts) {
  switch (t) {
    case Theorem::prop1: return run_prop1(bn, opts);
    case Theorem::prop2: return run_prop2(bn, opts);
    case Theorem::prop3: return run_prop3(bn, opts);
    case Theorem::prop4: return run_prop4(bn, opts);
    case Theorem::curvature: return run_curvature(bn, opts);
    case Theorem::corollary: return run_corollary(bn, opts);
    case Theorem::eq1_failure: return run_eq1(bn);
  }
  throw InputError("unknown theorem");
}

}  // namespace gauge
