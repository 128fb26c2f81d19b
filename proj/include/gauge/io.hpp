#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "gauge/bundle.hpp"
#include "gauge/connection.hpp"
#include "gauge/forms.hpp"
#include "gauge/group.hpp"
#include "gauge/groupoid.hpp"
#include "gauge/model.hpp"

/// JSON documents for groups, groupoids, bundles, relations, models,
/// connections and forms. The layout is described in docs/formats.md.
/// Readers reject unknown fields; writers emit canonical documents (sorted
/// keys, lists in canonical order, two-space indent, trailing newline), so a
/// canonical document round-trips byte for byte.
namespace gauge::io {

using Json = nlohmann::json;

/// Throws ParseError with the line and column of the first syntax error.
Json parse_text(std::string_view text);
Json read_file(const std::string& path);
std::string to_text(const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j, const std::string& path = "group");

Json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const Json& j, const std::string& path = "groupoid");

Json bundle_to_json(const PrincipalBundle& b);
PrincipalBundle bundle_from_json(const Json& j, const std::string& path = "bundle");

/// {"carrier": [...], "pairs": [[x, y], ...]}; the diagonal and the reversed
/// pairs are implicit.
Json relation_to_json(const Neighbourhood& n, const Labels& carrier);
Neighbourhood relation_from_json(const Json& j, const Labels& carrier, const std::string& path = "relation");

/// One record per unordered edge a < b: {"edge": [a, b], "arrow": [num, den]}.
Json connection_to_json(const BundleWithNeighbours& bn, const Connection& nabla);
Connection connection_from_json(const BundleWithNeighbours& bn, const Json& j, const std::string& path = "connection");

using AnyForm = std::variant<GroupForm, BaseForm, GaugeForm>;

Json form_to_json(const BundleWithNeighbours& bn, const GroupForm& f);
Json form_to_json(const BundleWithNeighbours& bn, const BaseForm& f);
Json form_to_json(const BundleWithNeighbours& bn, const GaugeForm& f);
Json form_to_json(const BundleWithNeighbours& bn, const AnyForm& f);
AnyForm form_from_json(const BundleWithNeighbours& bn, const Json& j, const std::string& path = "form");

/// A model file: bundle, both relations, max_lift, and optional named
/// connections and forms. Connections and forms are kept as JSON until the
/// model has been validated, since reading them needs a principal bundle.
struct ModelDocument {
  BundleWithNeighbours model;
  std::map<std::string, Json> connections;
  std::map<std::string, Json> forms;

  Connection connection(const std::string& name) const;
  AnyForm form(const std::string& name) const;
};

Json model_to_json(const BundleWithNeighbours& bn, const std::map<std::string, Connection>& connections = {},
                   const std::map<std::string, AnyForm>& forms = {});
ModelDocument model_from_json(const Json& j);
ModelDocument load_model(const std::string& path);

}  // namespace gauge::io
