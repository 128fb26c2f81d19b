#include "gauge/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge::io {

namespace {

void check_fields(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) throw SchemaError(path, std::string("missing field '") + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw SchemaError(path, "unknown field '" + key + "'");
  }
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::vector<std::string> as_strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& item : as_array(j, path)) out.push_back(as_string(item, path + "[" + std::to_string(i++) + "]"));
  return out;
}

std::map<std::string, std::string> as_string_map(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) out[key] = as_string(value, path + "." + key);
  return out;
}

std::pair<std::string, std::string> as_string_pair(const Json& j, const std::string& path) {
  const auto items = as_strings(j, path);
  if (items.size() != 2) throw SchemaError(path, "expected a pair");
  return {items[0], items[1]};
}

// Re-throws name-resolution failures with the document path attached.
template <class Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

Json simplex_to_json(const Labels& names, const Simplex& s) {
  Json arr = Json::array();
  for (Index v : s) arr.push_back(names.name(v));
  return arr;
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError("malformed JSON: " + what, line, column);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// group

Json group_to_json(const FiniteGroup& g) {
  return Json{{"elements", g.labels().names()}, {"mul", g.table_names()}};
}

FiniteGroup group_from_json(const Json& j, const std::string& path) {
  check_fields(j, path, {"elements", "mul"});
  auto elements = as_strings(j["elements"], path + ".elements");
  std::vector<std::vector<std::string>> mul;
  std::size_t i = 0;
  for (const auto& row : as_array(j["mul"], path + ".mul")) {
    mul.push_back(as_strings(row, path + ".mul[" + std::to_string(i++) + "]"));
  }
  return at_path(path, [&] { return FiniteGroup::from_table(elements, mul); });
}

// ---------------------------------------------------------------------------
// groupoid

Json groupoid_to_json(const FiniteGroupoid& g) {
  GroupoidTable t = g.to_table();
  Json arrows = Json::array();
  for (const auto& a : t.arrows) arrows.push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}});
  std::sort(t.compose.begin(), t.compose.end());
  Json compose = Json::array();
  for (const auto& c : t.compose) compose.push_back({c[0], c[1], c[2]});
  return Json{{"objects", t.objects},
              {"arrows", arrows},
              {"compose", compose},
              {"identities", t.identities},
              {"inverses", t.inverses}};
}

FiniteGroupoid groupoid_from_json(const Json& j, const std::string& path) {
  check_fields(j, path, {"objects", "arrows", "compose", "identities", "inverses"});
  GroupoidTable t;
  t.objects = as_strings(j["objects"], path + ".objects");
  std::size_t i = 0;
  for (const auto& a : as_array(j["arrows"], path + ".arrows")) {
    const std::string p = path + ".arrows[" + std::to_string(i++) + "]";
    check_fields(a, p, {"name", "dom", "cod"});
    t.arrows.push_back({as_string(a["name"], p + ".name"), as_string(a["dom"], p + ".dom"),
                        as_string(a["cod"], p + ".cod")});
  }
  i = 0;
  for (const auto& c : as_array(j["compose"], path + ".compose")) {
    const std::string p = path + ".compose[" + std::to_string(i++) + "]";
    auto triple = as_strings(c, p);
    if (triple.size() != 3) throw SchemaError(p, "expected [left, right, result]");
    t.compose.push_back({triple[0], triple[1], triple[2]});
  }
  t.identities = as_string_map(j["identities"], path + ".identities");
  t.inverses = as_string_map(j["inverses"], path + ".inverses");
  return at_path(path, [&] { return FiniteGroupoid(t); });
}

// ---------------------------------------------------------------------------
// bundle

Json bundle_to_json(const PrincipalBundle& b) {
  Json proj = Json::object();
  Json action = Json::object();
  const auto& G = b.group();
  for (Point x = 0; x < b.total().size(); ++x) {
    proj[b.point_name(x)] = b.base_name(b.proj(x));
    Json row = Json::object();
    for (Elem g = 0; g < G.size(); ++g) row[G.name(g)] = b.point_name(b.act(x, g));
    action[b.point_name(x)] = row;
  }
  return Json{{"base", b.base().names()},
              {"group", group_to_json(G)},
              {"total", b.total().names()},
              {"proj", proj},
              {"action", action}};
}

PrincipalBundle bundle_from_json(const Json& j, const std::string& path) {
  check_fields(j, path, {"base", "group", "total", "proj", "action"});
  auto base = as_strings(j["base"], path + ".base");
  auto total = as_strings(j["total"], path + ".total");
  FiniteGroup group = group_from_json(j["group"], path + ".group");
  auto proj = as_string_map(j["proj"], path + ".proj");
  if (!j["action"].is_object()) throw SchemaError(path + ".action", "expected an object");
  PrincipalBundle::Action action;
  for (const auto& [x, row] : j["action"].items()) {
    for (const auto& [g, y] : as_string_map(row, path + ".action." + x)) action[{x, g}] = y;
  }
  return at_path(path, [&] { return PrincipalBundle(base, total, proj, group, action); });
}

// ---------------------------------------------------------------------------
// relations

Json relation_to_json(const Neighbourhood& n, const Labels& carrier) {
  Json pairs = Json::array();
  for (auto [x, y] : n.off_diagonal_pairs()) pairs.push_back({carrier.name(x), carrier.name(y)});
  return Json{{"carrier", carrier.names()}, {"pairs", pairs}};
}

Neighbourhood relation_from_json(const Json& j, const Labels& carrier, const std::string& path) {
  check_fields(j, path, {"carrier", "pairs"});
  auto names = as_strings(j["carrier"], path + ".carrier");
  Labels listed = at_path(path + ".carrier", [&] { return Labels(names); });
  if (listed != carrier) throw SchemaError(path + ".carrier", "carrier does not match the bundle");
  std::vector<std::pair<Index, Index>> pairs;
  std::size_t i = 0;
  for (const auto& p : as_array(j["pairs"], path + ".pairs")) {
    const std::string pp = path + ".pairs[" + std::to_string(i++) + "]";
    auto [x, y] = as_string_pair(p, pp);
    pairs.emplace_back(at_path(pp, [&] { return carrier.at(x); }), at_path(pp, [&] { return carrier.at(y); }));
  }
  return Neighbourhood::from_pairs(carrier.size(), pairs);
}

// ---------------------------------------------------------------------------
// connections

Json connection_to_json(const BundleWithNeighbours& bn, const Connection& nabla) {
  const auto& b = bn.bundle();
  Json records = Json::array();
  for (const auto& [edge, f] : nabla.edges()) {
    records.push_back({{"edge", {b.base_name(edge.first), b.base_name(edge.second)}},
                       {"arrow", {b.point_name(f.num), b.point_name(f.den)}}});
  }
  return records;
}

Connection connection_from_json(const BundleWithNeighbours& bn, const Json& j, const std::string& path) {
  const auto& b = bn.bundle();
  std::map<std::pair<Base, Base>, FractionArrow> edges;
  std::size_t i = 0;
  for (const auto& rec : as_array(j, path)) {
    const std::string p = path + "[" + std::to_string(i++) + "]";
    check_fields(rec, p, {"edge", "arrow"});
    auto [a, c] = as_string_pair(rec["edge"], p + ".edge");
    auto [num, den] = as_string_pair(rec["arrow"], p + ".arrow");
    at_path(p, [&] {
      const Base ia = b.base().at(a, "base point");
      const Base ic = b.base().at(c, "base point");
      const FractionArrow f{b.total().at(num, "point"), b.total().at(den, "point")};
      if (ia == ic) throw InputError("diagonal edges are implicit");
      // store the orientation a < c; a reversed record carries nabla(c, a)
      const auto key = std::pair{std::min(ia, ic), std::max(ia, ic)};
      if (edges.count(key)) throw InputError("edge given twice");
      edges[key] = ia < ic ? f : FractionArrow{f.den, f.num};
      return 0;
    });
  }
  return at_path(path, [&] { return Connection::from_edges(bn, edges); });
}

// ---------------------------------------------------------------------------
// forms

namespace {

template <class F, class ValueFn>
Json form_json(const char* kind, const Labels& names, const F& form, const ValueFn& value) {
  Json values = Json::array();
  for (std::size_t r = 0; r < form.domain().size(); ++r) {
    values.push_back({{"simplex", simplex_to_json(names, form.domain()[r])}, {"value", value(form.at_row(r))}});
  }
  return Json{{"kind", kind}, {"degree", form.degree()}, {"values", values}};
}

}  // namespace

Json form_to_json(const BundleWithNeighbours& bn, const GroupForm& f) {
  return form_json("total", bn.bundle().total(), f, [&](Elem g) { return Json(bn.group().name(g)); });
}

Json form_to_json(const BundleWithNeighbours& bn, const BaseForm& f) {
  return form_json("base", bn.bundle().base(), f, [&](Elem g) { return Json(bn.group().name(g)); });
}

Json form_to_json(const BundleWithNeighbours& bn, const GaugeForm& f) {
  const auto& b = bn.bundle();
  return form_json("gauge", b.base(), f, [&](FractionArrow a) {
    return Json::array({b.point_name(a.num), b.point_name(a.den)});
  });
}

Json form_to_json(const BundleWithNeighbours& bn, const AnyForm& f) {
  return std::visit([&](const auto& form) { return form_to_json(bn, form); }, f);
}

AnyForm form_from_json(const BundleWithNeighbours& bn, const Json& j, const std::string& path) {
  check_fields(j, path, {"kind", "degree", "values"});
  const std::string kind = as_string(j["kind"], path + ".kind");
  if (kind != "total" && kind != "base" && kind != "gauge") {
    throw SchemaError(path + ".kind", "expected one of total, base, gauge");
  }
  if (!j["degree"].is_number_unsigned()) throw SchemaError(path + ".degree", "expected a non-negative integer");
  const unsigned degree = j["degree"].get<unsigned>();
  const auto& b = bn.bundle();
  const Labels& names = kind == "total" ? b.total() : b.base();
  auto table = kind == "total" ? bn.total_simplices(degree) : bn.base_simplices(degree);

  std::vector<std::optional<Json>> raw(table->size());
  std::size_t i = 0;
  for (const auto& rec : as_array(j["values"], path + ".values")) {
    const std::string p = path + ".values[" + std::to_string(i++) + "]";
    check_fields(rec, p, {"simplex", "value"});
    Simplex s;
    for (const auto& name : as_strings(rec["simplex"], p + ".simplex")) s.push_back(at_path(p, [&] { return names.at(name); }));
    auto row = table->find(s);
    if (!row) throw SchemaError(p + ".simplex", "not an infinitesimal simplex of degree " + std::to_string(degree));
    if (raw[*row]) throw SchemaError(p + ".simplex", "simplex listed twice");
    raw[*row] = rec["value"];
  }
  for (std::size_t r = 0; r < raw.size(); ++r) {
    if (!raw[r]) throw SchemaError(path + ".values", "no value for simplex " + simplex_name(names, (*table)[r]));
  }

  auto elem = [&](const Json& v, const std::string& p) {
    return at_path(p, [&] { return bn.group().at(as_string(v, p)); });
  };
  if (kind == "gauge") {
    std::vector<FractionArrow> values;
    for (std::size_t r = 0; r < raw.size(); ++r) {
      const std::string p = path + ".values";
      auto [num, den] = as_string_pair(*raw[r], p);
      values.push_back(at_path(p, [&] {
        const FractionArrow f = make_arrow(b, b.total().at(num, "point"), b.total().at(den, "point"));
        if (arrow_dom(b, f) != (*table)[r][0] || arrow_cod(b, f) != (*table)[r][0]) {
          throw InputError("gauge value at " + simplex_name(names, (*table)[r]) + " is not an endo-arrow there");
        }
        return f;
      }));
    }
    return GaugeForm(table, std::move(values));
  }
  std::vector<Elem> values;
  for (std::size_t r = 0; r < raw.size(); ++r) values.push_back(elem(*raw[r], path + ".values"));
  if (kind == "total") return GroupForm(table, std::move(values));
  return BaseForm(table, std::move(values));
}

// ---------------------------------------------------------------------------
// models

Connection ModelDocument::connection(const std::string& name) const {
  auto it = connections.find(name);
  if (it == connections.end()) throw InputError("no connection named '" + name + "'");
  return connection_from_json(model, it->second, "connections." + name);
}

AnyForm ModelDocument::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw InputError("no form named '" + name + "'");
  return form_from_json(model, it->second, "forms." + name);
}

Json model_to_json(const BundleWithNeighbours& bn, const std::map<std::string, Connection>& connections,
                   const std::map<std::string, AnyForm>& forms) {
  const auto& b = bn.bundle();
  Json j{{"bundle", bundle_to_json(b)},
         {"base_relation", relation_to_json(bn.base_relation(), b.base())},
         {"total_relation", relation_to_json(bn.total_relation(), b.total())},
         {"max_lift", bn.max_lift()}};
  if (!connections.empty()) {
    Json c = Json::object();
    for (const auto& [name, nabla] : connections) c[name] = connection_to_json(bn, nabla);
    j["connections"] = c;
  }
  if (!forms.empty()) {
    Json f = Json::object();
    for (const auto& [name, form] : forms) f[name] = form_to_json(bn, form);
    j["forms"] = f;
  }
  return j;
}

ModelDocument model_from_json(const Json& j) {
  check_fields(j, "model", {"bundle", "base_relation", "total_relation"}, {"max_lift", "connections", "forms"});
  PrincipalBundle bundle = bundle_from_json(j["bundle"], "bundle");
  Neighbourhood base_rel = relation_from_json(j["base_relation"], bundle.base(), "base_relation");
  Neighbourhood total_rel = relation_from_json(j["total_relation"], bundle.total(), "total_relation");
  unsigned max_lift = BundleWithNeighbours::kDefaultMaxLift;
  if (j.contains("max_lift")) {
    if (!j["max_lift"].is_number_unsigned() || j["max_lift"].get<unsigned>() == 0) {
      throw SchemaError("max_lift", "expected a positive integer");
    }
    max_lift = j["max_lift"].get<unsigned>();
  }
  ModelDocument doc{BundleWithNeighbours(std::move(bundle), std::move(base_rel), std::move(total_rel), max_lift), {}, {}};
  for (const char* key : {"connections", "forms"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_object()) throw SchemaError(key, "expected an object of named entries");
    auto& target = std::string(key) == "connections" ? doc.connections : doc.forms;
    for (const auto& [name, value] : j[key].items()) target[name] = value;
  }
  return doc;
}

ModelDocument load_model(const std::string& path) { return model_from_json(read_file(path)); }

}  // namespace gauge::io
