#include "gauge/model.hpp"

#include <algorithm>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

std::string tuple_name(const Labels& names, std::span<const Index> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + names.name(t[i]);
  return s + ")";
}

}  // namespace

BundleWithNeighbours::BundleWithNeighbours(PrincipalBundle bundle, Neighbourhood base_relation,
                                           Neighbourhood total_relation, unsigned max_lift)
    : bundle_(std::move(bundle)),
      base_rel_(std::move(base_relation)),
      total_rel_(std::move(total_relation)),
      max_lift_(max_lift) {
  if (base_rel_.size() != bundle_.base().size() || total_rel_.size() != bundle_.total().size()) {
    throw InputError("neighbour relations do not match the bundle's carriers");
  }
  if (max_lift_ == 0) throw InputError("max_lift must be positive");
  for (unsigned k = 0; k < kCached; ++k) {
    base_tables_.push_back(std::make_shared<const SimplexTable>(base_rel_, k));
    total_tables_.push_back(std::make_shared<const SimplexTable>(total_rel_, k));
  }
}

std::shared_ptr<const SimplexTable> BundleWithNeighbours::base_simplices(unsigned k) const {
  if (k < kCached) return base_tables_[k];
  return std::make_shared<const SimplexTable>(base_rel_, k);
}

std::shared_ptr<const SimplexTable> BundleWithNeighbours::total_simplices(unsigned k) const {
  if (k < kCached) return total_tables_[k];
  return std::make_shared<const SimplexTable>(total_rel_, k);
}

Simplex BundleWithNeighbours::project(std::span<const Index> simplex) const {
  Simplex out;
  out.reserve(simplex.size());
  for (Index x : simplex) out.push_back(bundle_.proj(x));
  return out;
}

std::optional<Simplex> find_lift(const BundleWithNeighbours& bn, std::span<const Index> base_simplex, Point x0) {
  const auto& b = bn.bundle();
  const auto& rel = bn.total_relation();
  if (base_simplex.empty() || b.proj(x0) != base_simplex[0]) return std::nullopt;
  Simplex lift{x0};
  auto extend = [&](auto&& self) -> bool {
    if (lift.size() == base_simplex.size()) return true;
    for (Point y : b.fibre(base_simplex[lift.size()])) {
      bool mutual = true;
      for (Point v : lift) mutual = mutual && rel.related(v, y) && rel.related(y, v);
      if (!mutual) continue;
      lift.push_back(y);
      if (self(self)) return true;
      lift.pop_back();
    }
    return false;
  };
  if (extend(extend)) return lift;
  return std::nullopt;
}

Report validate_neighbour_bundle(const BundleWithNeighbours& bn) {
  const auto& b = bn.bundle();
  Report report = validate_bundle(b);
  for (auto& v : validate_neighbourhood(bn.base_relation(), b.base())) {
    report.push_back({"base " + v.axiom, v.witness});
  }
  for (auto& v : validate_neighbourhood(bn.total_relation(), b.total())) {
    report.push_back({"total " + v.axiom, v.witness});
  }
  if (!report.empty()) return report;  // the remaining checks need a principal bundle

  const auto& G = b.group();
  const auto& P = b.total();
  const auto& M = b.base();
  const auto& tot = bn.total_relation();
  const auto& bas = bn.base_relation();

  for (Point x = 0; x < P.size(); ++x) {
    for (Point y : tot.neighbours(x)) {
      if (!bas.related(b.proj(x), b.proj(y))) {
        report.push_back({"projection preserves ~", P.name(x) + " ~ " + P.name(y) + " but " + M.name(b.proj(x)) +
                                                        " !~ " + M.name(b.proj(y))});
      }
      for (Elem g = 0; g < G.size(); ++g) {
        if (!tot.related(b.act(x, g), b.act(y, g))) {
          report.push_back({"group preserves ~", P.name(x) + " ~ " + P.name(y) + " but not after acting by " +
                                                     G.name(g)});
        }
      }
    }
  }

  for (unsigned k = 1; k <= bn.max_lift(); ++k) {
    const std::string axiom = k == 1 ? "submersion" : "lifting k=" + std::to_string(k);
    for (const auto& s : *bn.base_simplices(k)) {
      for (Point x0 : b.fibre(s[0])) {
        if (!find_lift(bn, s, x0)) {
          report.push_back({axiom, "no lift of " + tuple_name(M, s) + " starting at " + P.name(x0)});
        }
      }
    }
  }
  return report;
}

BundleWithNeighbours trivial_model(const std::vector<std::string>& base, const Neighbourhood& base_relation,
                                   const FiniteGroup& group, unsigned max_lift) {
  return twisted_model(base, base_relation, group, full_twist(base_relation, group), max_lift).model;
}

TwistedModel twisted_model(const std::vector<std::string>& base, const Neighbourhood& base_relation,
                           const FiniteGroup& group, const TwistSets& twist, unsigned max_lift) {
  PrincipalBundle bundle = PrincipalBundle::trivial(base, group);
  const auto& M = bundle.base();
  if (base_relation.size() != M.size()) throw InputError("base relation does not match the base");
  auto pair_name = [&](Base a, Base c) { return "(" + M.name(a) + "," + M.name(c) + ")"; };

  std::map<std::pair<Base, Base>, std::vector<bool>> allowed;
  for (Base a = 0; a < M.size(); ++a) {
    for (Base c : base_relation.neighbours(a)) {
      auto it = twist.find({a, c});
      if (it == twist.end() || it->second.empty()) throw InputError("empty twist set at " + pair_name(a, c));
      auto& mask = allowed[{a, c}];
      mask.assign(group.size(), false);
      for (Elem g : it->second) {
        if (g >= group.size()) throw InputError("twist set at " + pair_name(a, c) + " names no group element");
        mask[g] = true;
      }
    }
  }
  for (const auto& [key, elems] : twist) {
    if (!allowed.count(key)) throw InputError("twist set given for non-neighbours " + pair_name(key.first, key.second));
  }
  for (const auto& [key, mask] : allowed) {
    const auto [a, c] = key;
    if (a == c && !mask[group.unit()]) throw InputError("twist set at " + pair_name(a, a) + " lacks the unit");
    const auto& back = allowed.at({c, a});
    for (Elem g = 0; g < group.size(); ++g) {
      if (mask[g] != back[group.inv(g)]) {
        throw InputError("twist sets at " + pair_name(a, c) + " and " + pair_name(c, a) + " are not mutually inverse");
      }
    }
  }

  // second factor of each point (a, g)
  const auto& P = bundle.total();
  std::vector<Elem> coord(P.size());
  for (Base a = 0; a < M.size(); ++a)
    for (Elem g = 0; g < group.size(); ++g) coord[P.at(trivial_point_name(M.name(a), group.name(g)))] = g;

  std::vector<std::pair<Index, Index>> pairs;
  for (Point x = 0; x < P.size(); ++x) {
    for (Point y = x; y < P.size(); ++y) {
      const Base a = bundle.proj(x);
      const Base c = bundle.proj(y);
      if (!base_relation.related(a, c)) continue;
      if (allowed.at({a, c})[group.mul(coord[y], group.inv(coord[x]))]) pairs.emplace_back(x, y);
    }
  }
  Neighbourhood total_relation = Neighbourhood::from_pairs(P.size(), pairs);
  BundleWithNeighbours model(std::move(bundle), base_relation, std::move(total_relation), max_lift);
  Report report = validate_neighbour_bundle(model);
  return {std::move(model), std::move(report)};
}

TwistSets flat_twist(const Neighbourhood& base_relation, const FiniteGroup& group) {
  TwistSets s;
  for (Base a = 0; a < base_relation.size(); ++a)
    for (Base c : base_relation.neighbours(a)) s[{a, c}] = {group.unit()};
  return s;
}

TwistSets full_twist(const Neighbourhood& base_relation, const FiniteGroup& group) {
  TwistSets s;
  for (Base a = 0; a < base_relation.size(); ++a)
    for (Base c : base_relation.neighbours(a)) {
      auto& all = s[{a, c}];
      for (Elem g = 0; g < group.size(); ++g) all.push_back(g);
    }
  return s;
}

}  // namespace gauge
