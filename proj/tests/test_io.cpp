#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gauge/envelope.hpp"
#include "gauge/errors.hpp"
#include "gauge/io.hpp"
#include "support.hpp"

using namespace gauge;
using namespace testing;
using io::Json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("shipped models round trip byte for byte") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(GAUGE_MODELS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    CAPTURE(entry.path().string());
    const std::string text = slurp(entry.path());
    auto doc = io::model_from_json(io::parse_text(text));
    std::map<std::string, Connection> connections;
    for (const auto& [name, raw] : doc.connections) connections.emplace(name, doc.connection(name));
    std::map<std::string, io::AnyForm> forms;
    for (const auto& [name, raw] : doc.forms) forms.emplace(name, doc.form(name));
    CHECK(io::to_text(io::model_to_json(doc.model, connections, forms)) == text);
  }
  CHECK(seen >= 3);
}

TEST_CASE("generated models round trip") {
  for (const char* g : {"Z2", "S3"}) {
    auto bn = flat_k(3, g);
    std::mt19937_64 rng(4);
    std::map<std::string, Connection> cs{{"r", random_connection(bn, rng)}};
    std::map<std::string, io::AnyForm> fs{{"curv", curvature(bn, cs.at("r"))},
                                          {"omega", connection_to_form(bn, cs.at("r"))},
                                          {"unit", unit_base_form(bn, 1)}};
    const std::string text = io::to_text(io::model_to_json(bn, cs, fs));
    auto doc = io::model_from_json(io::parse_text(text));
    CHECK(doc.connection("r") == cs.at("r"));
    CHECK(std::get<GaugeForm>(doc.form("curv")) == std::get<GaugeForm>(fs.at("curv")));
    CHECK(std::get<GroupForm>(doc.form("omega")) == std::get<GroupForm>(fs.at("omega")));
    CHECK(std::get<BaseForm>(doc.form("unit")) == std::get<BaseForm>(fs.at("unit")));
    CHECK(doc.model.total_relation() == bn.total_relation());
    CHECK_THROWS_AS(doc.connection("missing"), InputError);
  }
}

TEST_CASE("groupoids and bundles round trip") {
  auto b = PrincipalBundle::trivial(base_names(2), FiniteGroup::symmetric3());
  auto env = envelope(b);
  const Json gj = io::groupoid_to_json(env);
  CHECK(io::groupoid_to_json(io::groupoid_from_json(gj)) == gj);
  const Json bj = io::bundle_to_json(b);
  auto back = io::bundle_from_json(bj);
  CHECK(io::bundle_to_json(back) == bj);
  CHECK(io::group_from_json(io::group_to_json(b.group())) == b.group());
}

TEST_CASE("parse errors carry a position") {
  try {
    io::parse_text("{\n  \"a\": [1,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(io::read_file("/nonexistent/model.json"), InputError);
}

TEST_CASE("schema errors") {
  auto bn = trivial_k(2, "Z2");
  Json j = io::model_to_json(bn);
  SUBCASE("unknown field") {
    j["colour"] = "red";
    CHECK_THROWS_WITH_AS(io::model_from_json(j), doctest::Contains("unknown field 'colour'"), SchemaError);
  }
  SUBCASE("unknown nested field") {
    j["bundle"]["group"]["order"] = 2;
    CHECK_THROWS_WITH_AS(io::model_from_json(j), doctest::Contains("bundle.group"), SchemaError);
  }
  SUBCASE("missing field") {
    j.erase("total_relation");
    CHECK_THROWS_AS(io::model_from_json(j), SchemaError);
  }
  SUBCASE("unknown point") {
    j["total_relation"]["pairs"].push_back({"(a,0)", "(z,9)"});
    CHECK_THROWS_WITH_AS(io::model_from_json(j), doctest::Contains("(z,9)"), SchemaError);
  }
  SUBCASE("wrong type") {
    j["max_lift"] = "two";
    CHECK_THROWS_AS(io::model_from_json(j), SchemaError);
  }
}

TEST_CASE("connection records") {
  auto bn = trivial_k(3, "Z2");
  auto holo = holonomy_connection(bn);
  // the reversed orientation of an edge is accepted and canonicalized
  Json records = Json::array({
      {{"edge", {"a", "b"}}, {"arrow", {"(a,0)", "(b,0)"}}},
      {{"edge", {"c", "a"}}, {"arrow", {"(c,1)", "(a,0)"}}},
      {{"edge", {"b", "c"}}, {"arrow", {"(b,1)", "(c,1)"}}},
  });
  CHECK(io::connection_from_json(bn, records) == holo);
  CHECK(io::connection_to_json(bn, holo)[1]["edge"] == Json::array({"a", "c"}));

  Json twice = records;
  twice.push_back({{"edge", {"a", "c"}}, {"arrow", {"(a,0)", "(c,0)"}}});
  CHECK_THROWS_AS(io::connection_from_json(bn, twice), SchemaError);
  Json missing = records;
  missing.erase(2);
  CHECK_THROWS_AS(io::connection_from_json(bn, missing), InputError);
  Json misdirected = records;
  misdirected[0]["arrow"] = {"(b,0)", "(a,0)"};
  CHECK_THROWS_AS(io::connection_from_json(bn, misdirected), InputError);
}

TEST_CASE("form documents") {
  auto bn = trivial_k(2, "Z2");
  Json f = io::form_to_json(bn, unit_form(bn, 1));
  CHECK(f["kind"] == "total");
  CHECK(f["values"].size() == 16);
  SUBCASE("every simplex exactly once") {
    f["values"].erase(0);
    CHECK_THROWS_WITH_AS(io::form_from_json(bn, f), doctest::Contains("no value"), SchemaError);
  }
  SUBCASE("duplicate simplex") {
    f["values"][1] = f["values"][0];
    CHECK_THROWS_WITH_AS(io::form_from_json(bn, f), doctest::Contains("twice"), SchemaError);
  }
  SUBCASE("gauge values must be endo-arrows") {
    Json g = io::form_to_json(bn, identity_gauge_form(bn, 1));
    g["values"][0]["value"] = {"(b,0)", "(a,0)"};
    CHECK_THROWS_AS(io::form_from_json(bn, g), SchemaError);
  }
  SUBCASE("unknown kind") {
    f["kind"] = "fibre";
    CHECK_THROWS_AS(io::form_from_json(bn, f), SchemaError);
  }
}
