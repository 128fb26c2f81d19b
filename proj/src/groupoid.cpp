#include "gauge/groupoid.hpp"

#include <algorithm>
#include <set>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

std::vector<std::string> arrow_names(const GroupoidTable& t) {
  std::vector<std::string> names;
  for (const auto& a : t.arrows) names.push_back(a.name);
  return names;
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(const GroupoidTable& t) : objects_(t.objects), arrows_(arrow_names(t)) {
  const std::size_t na = arrows_.size();
  dom_.resize(na);
  cod_.resize(na);
  for (const auto& decl : t.arrows) {
    const Arrow f = arrows_.at(decl.name, "arrow");
    dom_[f] = objects_.at(decl.dom, "object");
    cod_[f] = objects_.at(decl.cod, "object");
  }

  compose_.assign(na * na, -1);
  for (const auto& [left, right, result] : t.compose) {
    const Arrow f = arrows_.at(left, "arrow");
    const Arrow g = arrows_.at(right, "arrow");
    auto& slot = compose_[f * na + g];
    if (slot >= 0) throw InputError("composition (" + left + ", " + right + ") given twice");
    slot = static_cast<std::int32_t>(arrows_.at(result, "arrow"));
  }

  for (const auto& [obj, arrow] : t.identities) objects_.at(obj, "object");
  identity_.resize(objects_.size());
  for (Object o = 0; o < objects_.size(); ++o) {
    auto it = t.identities.find(objects_.name(o));
    if (it == t.identities.end()) throw InputError("no identity given for object '" + objects_.name(o) + "'");
    identity_[o] = arrows_.at(it->second, "arrow");
  }

  for (const auto& [f, fi] : t.inverses) arrows_.at(f, "arrow");
  inverse_.resize(na);
  for (Arrow f = 0; f < na; ++f) {
    auto it = t.inverses.find(arrows_.name(f));
    if (it == t.inverses.end()) throw InputError("no inverse given for arrow '" + arrows_.name(f) + "'");
    inverse_[f] = arrows_.at(it->second, "arrow");
  }
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g, const std::string& object) {
  GroupoidTable t;
  t.objects = {object};
  for (Elem a = 0; a < g.size(); ++a) {
    t.arrows.push_back({g.name(a), object, object});
    t.inverses[g.name(a)] = g.name(g.inv(a));
    for (Elem b = 0; b < g.size(); ++b) t.compose.push_back({g.name(a), g.name(b), g.name(g.mul(a, b))});
  }
  t.identities[object] = g.name(g.unit());
  return FiniteGroupoid(t);
}

FiniteGroupoid FiniteGroupoid::codiscrete(const std::vector<std::string>& objects) {
  auto name = [](const std::string& a, const std::string& b) { return a + ">" + b; };
  GroupoidTable t;
  t.objects = objects;
  for (const auto& a : objects) {
    t.identities[a] = name(a, a);
    for (const auto& b : objects) {
      t.arrows.push_back({name(a, b), a, b});
      t.inverses[name(a, b)] = name(b, a);
      // (b>c) after (a>b) is a>c
      for (const auto& c : objects) t.compose.push_back({name(b, c), name(a, b), name(a, c)});
    }
  }
  return FiniteGroupoid(t);
}

FiniteGroupoid FiniteGroupoid::disjoint_union(const FiniteGroupoid& left, const FiniteGroupoid& right) {
  GroupoidTable t = left.to_table();
  GroupoidTable r = right.to_table();
  t.objects.insert(t.objects.end(), r.objects.begin(), r.objects.end());
  t.arrows.insert(t.arrows.end(), r.arrows.begin(), r.arrows.end());
  t.compose.insert(t.compose.end(), r.compose.begin(), r.compose.end());
  for (const auto& [k, v] : r.identities) t.identities[k] = v;
  for (const auto& [k, v] : r.inverses) t.inverses[k] = v;
  return FiniteGroupoid(t);
}

GroupoidTable FiniteGroupoid::to_table() const {
  GroupoidTable t;
  t.objects = objects_.names();
  const std::size_t na = arrows_.size();
  for (Arrow f = 0; f < na; ++f) {
    t.arrows.push_back({arrows_.name(f), objects_.name(dom_[f]), objects_.name(cod_[f])});
    t.inverses[arrows_.name(f)] = arrows_.name(inverse_[f]);
    for (Arrow g = 0; g < na; ++g) {
      if (auto h = try_compose(f, g)) t.compose.push_back({arrows_.name(f), arrows_.name(g), arrows_.name(*h)});
    }
  }
  for (Object o = 0; o < objects_.size(); ++o) t.identities[objects_.name(o)] = arrows_.name(identity_[o]);
  return t;
}

std::optional<FiniteGroupoid::Arrow> FiniteGroupoid::try_compose(Arrow f, Arrow g) const {
  const std::int32_t h = compose_[f * arrows_.size() + g];
  if (h < 0) return std::nullopt;
  return static_cast<Arrow>(h);
}

FiniteGroupoid::Arrow FiniteGroupoid::compose(Arrow f, Arrow g) const {
  if (auto h = try_compose(f, g)) return *h;
  throw BookkeepingError("composition of '" + arrows_.name(f) + "' after '" + arrows_.name(g) +
                         "' is undefined");
}

std::vector<FiniteGroupoid::Arrow> FiniteGroupoid::hom(Object a, Object b) const {
  std::vector<Arrow> out;
  for (Arrow f = 0; f < arrows_.size(); ++f)
    if (dom_[f] == a && cod_[f] == b) out.push_back(f);
  return out;
}

Report validate_groupoid(const FiniteGroupoid& g) {
  Report report;
  const std::size_t na = g.arrows().size();
  auto an = [&](FiniteGroupoid::Arrow f) { return g.arrows().name(f); };

  for (FiniteGroupoid::Arrow f = 0; f < na; ++f) {
    for (FiniteGroupoid::Arrow h = 0; h < na; ++h) {
      const auto fh = g.try_compose(f, h);
      const bool composable = g.cod(h) == g.dom(f);
      if (fh && !composable) {
        report.push_back({"composition domain mismatch",
                          an(f) + " after " + an(h) + " is defined but dom " + an(f) + " != cod " + an(h)});
      } else if (!fh && composable) {
        report.push_back({"composition missing", an(f) + " after " + an(h)});
      } else if (fh && (g.dom(*fh) != g.dom(h) || g.cod(*fh) != g.cod(f))) {
        report.push_back({"composite endpoints", an(f) + " after " + an(h) + " = " + an(*fh)});
      }
    }
  }
  if (!report.empty()) return report;  // later checks assume a total table on composable pairs

  for (FiniteGroupoid::Arrow f = 0; f < na; ++f)
    for (FiniteGroupoid::Arrow h = 0; h < na; ++h) {
      if (g.cod(h) != g.dom(f)) continue;
      for (FiniteGroupoid::Arrow k = 0; k < na; ++k) {
        if (g.cod(k) != g.dom(h)) continue;
        if (g.compose(g.compose(f, h), k) != g.compose(f, g.compose(h, k))) {
          report.push_back({"associativity", "(" + an(f) + ", " + an(h) + ", " + an(k) + ")"});
        }
      }
    }

  for (FiniteGroupoid::Object o = 0; o < g.objects().size(); ++o) {
    const auto id = g.identity(o);
    if (g.dom(id) != o || g.cod(id) != o) {
      report.push_back({"identity endpoints", an(id) + " is not an endo-arrow at " + g.objects().name(o)});
      continue;
    }
    for (FiniteGroupoid::Arrow f = 0; f < na; ++f) {
      if (g.dom(f) == o && g.compose(f, id) != f) report.push_back({"identity unit law", an(f) + " after " + an(id)});
      if (g.cod(f) == o && g.compose(id, f) != f) report.push_back({"identity unit law", an(id) + " after " + an(f)});
    }
  }

  for (FiniteGroupoid::Arrow f = 0; f < na; ++f) {
    const auto fi = g.inverse(f);
    if (g.dom(fi) != g.cod(f) || g.cod(fi) != g.dom(f)) {
      report.push_back({"inverse endpoints", an(fi) + " as inverse of " + an(f)});
      continue;
    }
    if (g.compose(fi, f) != g.identity(g.dom(f)) || g.compose(f, fi) != g.identity(g.cod(f))) {
      report.push_back({"inverse law", an(fi) + " as inverse of " + an(f)});
    }
  }
  return report;
}

bool is_transitive(const FiniteGroupoid& g) {
  const std::size_t no = g.objects().size();
  std::vector<bool> joined(no * no, false);
  for (FiniteGroupoid::Arrow f = 0; f < g.arrows().size(); ++f) joined[g.dom(f) * no + g.cod(f)] = true;
  return std::all_of(joined.begin(), joined.end(), [](bool b) { return b; });
}

GaugeBundle gauge_bundle(const FiniteGroupoid& g) {
  GaugeBundle gb{g.objects(), {}};
  for (FiniteGroupoid::Object o = 0; o < g.objects().size(); ++o) gb.fibre.push_back(g.hom(o, o));
  return gb;
}

FiniteGroupoid::Arrow conjugate(const FiniteGroupoid& g, FiniteGroupoid::Arrow f, FiniteGroupoid::Arrow h) {
  if (g.dom(h) != g.cod(h) || g.dom(f) != g.dom(h)) {
    throw BookkeepingError("cannot conjugate '" + g.arrows().name(h) + "' by '" + g.arrows().name(f) + "'");
  }
  return g.compose(f, g.compose(h, g.inverse(f)));
}

PrincipalBundle extract_bundle(const FiniteGroupoid& g, std::string_view basepoint,
                               const std::vector<std::string>& base) {
  if (auto report = validate_groupoid(g); !report.empty()) {
    throw InputError("cannot extract a bundle from an invalid groupoid: " + report.front().axiom + ": " +
                     report.front().witness);
  }
  const auto star = g.objects().at(basepoint, "object");
  std::set<FiniteGroupoid::Object> base_objects;
  for (const auto& name : base) {
    const auto o = g.objects().at(name, "object");
    if (o == star) throw InputError("basepoint '" + std::string(basepoint) + "' lies in the base");
    base_objects.insert(o);
  }
  for (auto o : base_objects) {
    if (g.hom(star, o).empty()) throw InputError("empty fibre over '" + g.objects().name(o) + "'");
  }

  const auto vertex = g.hom(star, star);
  std::vector<std::string> group_names;
  std::vector<std::vector<std::string>> mul;
  for (auto a : vertex) {
    group_names.push_back(g.arrows().name(a));
    auto& row = mul.emplace_back();
    for (auto b : vertex) row.push_back(g.arrows().name(g.compose(a, b)));
  }
  FiniteGroup group = FiniteGroup::from_table(group_names, mul);

  std::vector<std::string> total;
  std::map<std::string, std::string> proj;
  PrincipalBundle::Action action;
  for (FiniteGroupoid::Arrow x = 0; x < g.arrows().size(); ++x) {
    if (g.dom(x) != star || !base_objects.count(g.cod(x))) continue;
    const auto& xn = g.arrows().name(x);
    total.push_back(xn);
    proj[xn] = g.objects().name(g.cod(x));
    for (auto e : vertex) action[{xn, g.arrows().name(e)}] = g.arrows().name(g.compose(x, e));
  }
  return PrincipalBundle(base, std::move(total), proj, std::move(group), action);
}

}  // namespace gauge
