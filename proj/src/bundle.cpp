#include "gauge/bundle.hpp"

#include <algorithm>

#include "gauge/errors.hpp"

namespace gauge {

PrincipalBundle::PrincipalBundle(std::vector<std::string> base, std::vector<std::string> total,
                                 const std::map<std::string, std::string>& proj, FiniteGroup group,
                                 const Action& action)
    : base_(std::move(base)), total_(std::move(total)), group_(std::move(group)) {
  const std::size_t np = total_.size();
  const std::size_t ng = group_.size();

  for (const auto& [x, a] : proj) {
    total_.at(x, "point");
    base_.at(a, "base point");
  }
  proj_.resize(np);
  for (Point x = 0; x < np; ++x) {
    auto it = proj.find(total_.name(x));
    if (it == proj.end()) throw InputError("no projection given for point '" + total_.name(x) + "'");
    proj_[x] = base_.at(it->second, "base point");
  }

  for (const auto& [key, y] : action) {
    total_.at(key.first, "point");
    group_.at(key.second);
    total_.at(y, "point");
  }
  act_.resize(np * ng);
  for (Point x = 0; x < np; ++x) {
    for (Elem g = 0; g < ng; ++g) {
      auto it = action.find({total_.name(x), group_.name(g)});
      if (it == action.end()) {
        throw InputError("action table has no entry for ('" + total_.name(x) + "', '" +
                         group_.name(g) + "')");
      }
      act_[x * ng + g] = total_.at(it->second, "point");
    }
  }

  fibres_.resize(base_.size());
  for (Point x = 0; x < np; ++x) fibres_[proj_[x]].push_back(x);

  div_.assign(np * np, -1);
  for (Point x = 0; x < np; ++x) {
    for (Elem g = 0; g < ng; ++g) {
      const Point z = act(x, g);
      if (proj_[z] == proj_[x] && div_[x * np + z] < 0) div_[x * np + z] = static_cast<std::int32_t>(g);
    }
  }
}

std::string trivial_point_name(const std::string& a, const std::string& g) { return "(" + a + "," + g + ")"; }

PrincipalBundle PrincipalBundle::trivial(std::vector<std::string> base, FiniteGroup group) {
  auto point = [&](const std::string& a, Elem g) { return trivial_point_name(a, group.name(g)); };
  std::vector<std::string> total;
  std::map<std::string, std::string> proj;
  Action action;
  for (const auto& a : base) {
    for (Elem g = 0; g < group.size(); ++g) {
      total.push_back(point(a, g));
      proj[point(a, g)] = a;
      for (Elem h = 0; h < group.size(); ++h) action[{point(a, g), group.name(h)}] = point(a, group.mul(g, h));
    }
  }
  return PrincipalBundle(std::move(base), std::move(total), proj, std::move(group), action);
}

Point PrincipalBundle::least_in_fibre(Base a) const {
  if (fibres_.at(a).empty()) throw InputError("empty fibre over '" + base_.name(a) + "'");
  return fibres_[a].front();
}

Elem PrincipalBundle::div(Point x, Point z) const {
  if (proj_[x] != proj_[z]) {
    throw BookkeepingError("division of '" + total_.name(x) + "' by '" + total_.name(z) +
                           "' across fibres");
  }
  const std::int32_t g = div_[x * total_.size() + z];
  if (g < 0) {
    throw InputError("no group element carries '" + total_.name(x) + "' to '" + total_.name(z) +
                     "' (action not fibre-transitive)");
  }
  return static_cast<Elem>(g);
}

Point PrincipalBundle::tern(Point y, Point x, Point z) const { return act(y, div(x, z)); }

Report validate_bundle(const PrincipalBundle& b) {
  Report report;
  const auto& G = b.group();
  auto pn = [&](Point x) { return b.point_name(x); };
  auto gn = [&](Elem g) { return G.name(g); };

  for (Base a = 0; a < b.base().size(); ++a) {
    if (b.fibre(a).empty()) report.push_back({"surjectivity", "no point over '" + b.base_name(a) + "'"});
  }
  for (Point x = 0; x < b.total().size(); ++x) {
    if (b.act(x, G.unit()) != x) {
      report.push_back({"action unit", pn(x) + "*" + gn(G.unit()) + " = " + pn(b.act(x, G.unit()))});
    }
    for (Elem g = 0; g < G.size(); ++g) {
      const Point xg = b.act(x, g);
      if (b.proj(xg) != b.proj(x)) {
        report.push_back({"fibrewise action", pn(x) + "*" + gn(g) + " = " + pn(xg) + " leaves the fibre"});
      }
      if (g != G.unit() && xg == x) {
        report.push_back({"freeness", pn(x) + "*" + gn(g) + " = " + pn(x)});
      }
      for (Elem h = 0; h < G.size(); ++h) {
        if (b.act(xg, h) != b.act(x, G.mul(g, h))) {
          report.push_back({"action compatibility",
                            "(" + pn(x) + "*" + gn(g) + ")*" + gn(h) + " != " + pn(x) + "*(" + gn(g) + gn(h) + ")"});
        }
      }
    }
  }
  for (Base a = 0; a < b.base().size(); ++a) {
    for (Point x : b.fibre(a)) {
      for (Point z : b.fibre(a)) {
        bool reached = false;
        for (Elem g = 0; g < G.size() && !reached; ++g) reached = b.act(x, g) == z;
        if (!reached) {
          report.push_back({"fibre-transitivity", "no g with " + pn(x) + "*g = " + pn(z)});
        }
      }
    }
  }
  return report;
}

FractionArrow make_arrow(const PrincipalBundle& b, Point y, Point x) {
  const Point x0 = b.least_in_fibre(b.proj(x));
  const Elem g = b.div(x0, x);  // x = x0 * g
  const Elem gi = b.group().inv(g);
  return {b.act(y, gi), x0};
}

FractionArrow arrow_compose(const PrincipalBundle& b, FractionArrow f2, FractionArrow f1) {
  if (b.proj(f1.num) != b.proj(f2.den)) {
    throw BookkeepingError("cannot compose " + arrow_name(b, f2) + " after " + arrow_name(b, f1));
  }
  return make_arrow(b, b.act(f2.num, b.div(f2.den, f1.num)), f1.den);
}

FractionArrow arrow_inverse(const PrincipalBundle& b, FractionArrow f) { return make_arrow(b, f.den, f.num); }

FractionArrow identity_arrow(const PrincipalBundle& b, Base a) {
  const Point x0 = b.least_in_fibre(a);
  return {x0, x0};
}

Point act_left(const PrincipalBundle& b, FractionArrow f, Point u) {
  if (b.proj(u) != b.proj(f.den)) {
    throw BookkeepingError("arrow " + arrow_name(b, f) + " cannot act on '" + b.point_name(u) + "'");
  }
  return b.act(f.num, b.div(f.den, u));
}

FractionArrow arrow_conjugate(const PrincipalBundle& b, FractionArrow f, FractionArrow h) {
  if (arrow_dom(b, h) != arrow_cod(b, h) || arrow_dom(b, h) != arrow_dom(b, f)) {
    throw BookkeepingError("cannot conjugate " + arrow_name(b, h) + " by " + arrow_name(b, f));
  }
  return arrow_compose(b, f, arrow_compose(b, h, arrow_inverse(b, f)));
}

std::vector<FractionArrow> arrows_between(const PrincipalBundle& b, Base a, Base c) {
  const Point x0 = b.least_in_fibre(a);
  std::vector<FractionArrow> out;
  for (Point y : b.fibre(c)) out.push_back({y, x0});
  return out;
}

std::string arrow_name(const PrincipalBundle& b, FractionArrow f) {
  return "[" + b.point_name(f.num) + "," + b.point_name(f.den) + "]";
}

std::vector<std::vector<FractionArrow>> gauge_of_bundle(const PrincipalBundle& b) {
  std::vector<std::vector<FractionArrow>> fibres;
  for (Base a = 0; a < b.base().size(); ++a) fibres.push_back(arrows_between(b, a, a));
  return fibres;
}

Elem gauge_to_group(const PrincipalBundle& b, FractionArrow h) {
  if (!b.group().is_commutative()) {
    throw Refused("identifying gauge arrows with group elements requires a commutative group");
  }
  if (arrow_dom(b, h) != arrow_cod(b, h)) {
    throw BookkeepingError(arrow_name(b, h) + " is not an endo-arrow");
  }
  return b.div(h.den, h.num);
}

FractionArrow group_to_gauge(const PrincipalBundle& b, Base a, Elem g) {
  const Point x0 = b.least_in_fibre(a);
  return {b.act(x0, g), x0};
}

std::optional<GaugeAmbiguity> find_gauge_ambiguity(const PrincipalBundle& b) {
  const auto& G = b.group();
  for (Base a = 0; a < b.base().size(); ++a) {
    for (Point y : b.fibre(a)) {
      for (Point x : b.fibre(a)) {
        const Elem first = b.div(x, y);
        for (Elem g = 0; g < G.size(); ++g) {
          const Elem second = b.div(b.act(x, g), b.act(y, g));
          if (second != first) return GaugeAmbiguity{y, x, g, first, second};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<BundleIsomorphism> find_isomorphism(const PrincipalBundle& first,
                                                  const PrincipalBundle& second) {
  if (!validate_bundle(first).empty() || !validate_bundle(second).empty()) return std::nullopt;
  if (first.base() != second.base() || first.total().size() != second.total().size()) return std::nullopt;
  auto phi = find_group_isomorphism(first.group(), second.group());
  if (!phi) return std::nullopt;

  BundleIsomorphism iso{*phi, std::vector<Point>(first.total().size())};
  for (Base a = 0; a < first.base().size(); ++a) {
    if (first.fibre(a).size() != second.fibre(a).size()) return std::nullopt;
    const Point x0 = first.least_in_fibre(a);
    const Point y0 = second.least_in_fibre(a);
    for (Point x : first.fibre(a)) iso.point_map[x] = second.act(y0, (*phi)[first.div(x0, x)]);
  }

  std::vector<bool> hit(second.total().size(), false);
  for (Point x = 0; x < first.total().size(); ++x) {
    const Point y = iso.point_map[x];
    if (hit[y] || second.proj(y) != first.proj(x)) return std::nullopt;
    hit[y] = true;
    for (Elem g = 0; g < first.group().size(); ++g) {
      if (iso.point_map[first.act(x, g)] != second.act(y, (*phi)[g])) return std::nullopt;
    }
  }
  return iso;
}

}  // namespace gauge
