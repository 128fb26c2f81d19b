#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gauge/connection.hpp"
#include "gauge/errors.hpp"
#include "gauge/io.hpp"
#include "gauge/model.hpp"
#include "gauge/verify.hpp"

using namespace gauge;
using io::Json;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kCeiling = 2, kUsage = 64, kData = 65 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t ceiling_from_env() {
  const char* raw = std::getenv("GAUGE_CEILING");
  if (!raw || !*raw) return kDefaultCeiling;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used == std::string(raw).size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("GAUGE_CEILING must be a non-negative integer, got '") + raw + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json report_json(const Report& r) {
  Json out = Json::array();
  for (const auto& v : r) out.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

void print_violations(const Report& r) {
  for (const auto& v : r) std::cout << "violation: " << v.axiom << ": " << v.witness << "\n";
}

// Loads a model and refuses to go on when it fails its axioms.
io::ModelDocument load_valid(const std::string& path, bool as_json) {
  auto doc = io::load_model(path);
  const Report r = validate_neighbour_bundle(doc.model);
  if (!r.empty()) {
    if (as_json) std::cout << io::to_text(Json{{"model", path}, {"valid", false}, {"violations", report_json(r)}});
    else print_violations(r);
    throw Refused("model '" + path + "' does not satisfy the axioms");
  }
  return doc;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path, bool as_json) {
  const Json j = io::read_file(path);
  Report r;
  std::string kind;
  if (j.is_object() && j.contains("objects")) {
    kind = "groupoid";
    r = validate_groupoid(io::groupoid_from_json(j));
  } else if (j.is_object() && j.contains("action")) {
    kind = "bundle";
    r = validate_bundle(io::bundle_from_json(j));
  } else {
    kind = "model";
    auto doc = io::model_from_json(j);
    r = validate_neighbour_bundle(doc.model);
    if (r.empty()) {
      for (const auto& [name, raw] : doc.connections) {
        try {
          doc.connection(name);
        } catch (const InputError& e) {
          r.push_back({"connection", e.what()});
        }
      }
      for (const auto& [name, raw] : doc.forms) {
        try {
          doc.form(name);
        } catch (const Error& e) {
          r.push_back({"form", e.what()});
        }
      }
    }
  }
  if (as_json) {
    std::cout << io::to_text(Json{{"file", path}, {"kind", kind}, {"valid", r.empty()}, {"violations", report_json(r)}});
  } else {
    print_violations(r);
    std::cout << kind << " " << (r.empty() ? "valid" : "invalid") << " (" << r.size() << " violations)\n";
  }
  return r.empty() ? kOk : kFailed;
}

struct VerifyArgs {
  std::string path;
  std::string theorem;
  VerifyOptions opts;
  bool as_json = false;
};

int cmd_verify(VerifyArgs& args) {
  std::vector<Theorem> theorems;
  if (args.theorem == "all") {
    theorems = all_theorems();
  } else if (auto t = parse_theorem(args.theorem)) {
    theorems.push_back(*t);
  } else {
    throw UsageError("unknown theorem '" + args.theorem + "'");
  }
  auto doc = load_valid(args.path, args.as_json);
  for (const auto& [name, raw] : doc.connections) args.opts.named.emplace(name, doc.connection(name));

  bool ok = true;
  Json out = Json::array();
  for (Theorem t : theorems) {
    const TheoremReport rep = verify(doc.model, t, args.opts);
    ok = ok && rep.holds;
    if (args.as_json) {
      Json records = Json::array();
      for (const auto& r : rep.records) {
        records.push_back({{"instance", r.instance}, {"holds", r.holds}, {"detail", r.detail}});
      }
      out.push_back({{"theorem", theorem_name(t)},
                     {"holds", rep.holds},
                     {"applicable", rep.applicable},
                     {"note", rep.note},
                     {"records", records}});
      continue;
    }
    std::cout << theorem_name(t) << ": "
              << (!rep.applicable ? "not applicable" : rep.holds ? "holds" : "FAILS")
              << " (" << rep.records.size() << " records, " << rep.failures() << " failing)\n";
    if (!rep.note.empty()) std::cout << "  note: " << rep.note << "\n";
    for (const auto& r : rep.records) {
      std::cout << "  " << (r.holds ? "ok   " : "FAIL ") << r.instance;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  if (args.as_json) std::cout << io::to_text(Json{{"model", args.path}, {"holds", ok}, {"theorems", out}});
  return ok ? kOk : kFailed;
}

int cmd_curvature(const std::string& path, const std::string& name, const std::string& format,
                  const std::string& output) {
  auto doc = load_valid(path, false);
  const auto& bn = doc.model;
  const auto& b = bn.bundle();
  const GaugeForm r = curvature(bn, doc.connection(name));
  if (format == "file") {
    emit(io::to_text(io::form_to_json(bn, r)), output);
    return kOk;
  }
  const bool commutative = bn.group().is_commutative();
  std::ostringstream out;
  for (std::size_t row = 0; row < r.domain().size(); ++row) {
    const FractionArrow h = r.at_row(row);
    out << simplex_name(b.base(), r.domain()[row]) << "\t" << arrow_name(b, h);
    if (commutative) out << "\t" << bn.group().name(gauge_to_group(b, h));
    out << "\n";
  }
  out << (is_flat(bn, doc.connection(name)) ? "flat" : "not flat") << "\n";
  emit(out.str(), output);
  return kOk;
}

struct GenerateArgs {
  std::string model = "trivial";
  std::string base = "a,b";
  std::vector<std::string> edges;
  std::string group = "Z2";
  std::string twist = "flat";
  std::vector<std::string> twist_sets;
  unsigned max_lift = BundleWithNeighbours::kDefaultMaxLift;
  bool canonical = false;
  std::string output;
};

int cmd_generate(const GenerateArgs& args) {
  const FiniteGroup group = FiniteGroup::by_name(args.group);
  const auto names = split(args.base, ',');
  if (names.empty()) throw UsageError("--base needs at least one name");
  const Labels base(names);
  Neighbourhood rel = Neighbourhood::codiscrete(base.size());
  if (!args.edges.empty()) {
    std::vector<std::pair<Index, Index>> pairs;
    for (const auto& e : args.edges) {
      const auto ends = split(e, '-');
      if (ends.size() != 2) throw UsageError("edge '" + e + "' is not of the form a-b");
      pairs.emplace_back(base.at(ends[0], "base point"), base.at(ends[1], "base point"));
    }
    rel = Neighbourhood::from_pairs(base.size(), pairs);
  }

  Report report;
  std::optional<BundleWithNeighbours> bn;
  if (args.model == "trivial") {
    bn = trivial_model(names, rel, group, args.max_lift);
    report = validate_neighbour_bundle(*bn);
  } else if (args.model == "twisted") {
    TwistSets sets = args.twist == "full" ? full_twist(rel, group) : flat_twist(rel, group);
    // a:b=g1/g2 replaces S(a,b) and S(b,a)
    for (const auto& spec : args.twist_sets) {
      const auto sides = split(spec, '=');
      const auto ends = sides.empty() ? std::vector<std::string>{} : split(sides[0], ':');
      if (sides.size() != 2 || ends.size() != 2) throw UsageError("twist set '" + spec + "' is not of the form a:b=g1/g2");
      const Base a = base.at(ends[0], "base point");
      const Base c = base.at(ends[1], "base point");
      std::vector<Elem> fwd, back;
      for (const auto& g : split(sides[1], '/')) {
        fwd.push_back(group.at(g));
        back.push_back(group.inv(group.at(g)));
      }
      sets[{a, c}] = fwd;
      sets[{c, a}] = back;
    }
    auto tm = twisted_model(names, rel, group, sets, args.max_lift);
    bn = std::move(tm.model);
    report = std::move(tm.report);
  } else {
    throw UsageError("--model must be trivial or twisted");
  }

  std::map<std::string, Connection> connections;
  if (args.canonical) connections.emplace("canonical", Connection::canonical(*bn));
  emit(io::to_text(io::model_to_json(*bn, connections)), args.output);
  if (!report.empty()) {
    for (const auto& v : report) std::cerr << "violation: " << v.axiom << ": " << v.witness << "\n";
    return kFailed;
  }
  return kOk;
}

std::string connection_line(const BundleWithNeighbours& bn, const Connection& nabla) {
  const auto& b = bn.bundle();
  std::string line;
  for (const auto& [edge, f] : nabla.edges()) {
    if (!line.empty()) line += "  ";
    line += b.base_name(edge.first) + "-" + b.base_name(edge.second) + ":" + arrow_name(b, f);
  }
  return line.empty() ? "(no edges)" : line;
}

int cmd_enumerate(const std::string& path, const std::string& what, const std::string& side, unsigned degree,
                  bool as_json) {
  auto doc = load_valid(path, as_json);
  const auto& bn = doc.model;
  const std::uint64_t ceiling = ceiling_from_env();
  Json items = Json::array();
  std::ostringstream out;
  std::string summary;

  if (what == "simplices") {
    const bool total = side == "total";
    const Labels& names = total ? bn.bundle().total() : bn.bundle().base();
    const Neighbourhood& rel = total ? bn.total_relation() : bn.base_relation();
    // |carrier|^(degree+1) bounds the table; refuse before building it
    std::uint64_t bound = 1;
    for (unsigned i = 0; i <= degree && bound <= ceiling; ++i) bound *= rel.size();
    if (bound > ceiling) throw CeilingExceeded(bound, ceiling);
    const auto table = degree <= 2 ? (total ? bn.total_simplices(degree) : bn.base_simplices(degree))
                                   : std::make_shared<const SimplexTable>(rel, degree);
    for (const auto& s : *table) {
      items.push_back(simplex_name(names, s));
      out << simplex_name(names, s) << "\n";
    }
    summary = std::to_string(table->size()) + " " + side + " " + std::to_string(degree) + "-simplices";
  } else if (what == "connections" || what == "flat") {
    const auto all = enumerate_connections(bn, ceiling);
    std::size_t listed = 0;
    for (const auto& nabla : all) {
      if (what == "flat" && !is_flat(bn, nabla)) continue;
      ++listed;
      items.push_back(io::connection_to_json(bn, nabla));
      out << connection_line(bn, nabla) << "\n";
    }
    summary = what == "flat" ? std::to_string(listed) + " of " + std::to_string(all.size()) + " connections flat"
                             : std::to_string(all.size()) + " connections";
  } else {
    throw UsageError("--what must be simplices, connections or flat");
  }

  if (as_json) {
    std::cout << io::to_text(Json{{"model", path}, {"what", what}, {"count", items.size()}, {"items", items}});
  } else {
    std::cout << out.str() << summary << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite principal bundles, connections and curvature"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--report", as_json, "Emit a JSON report instead of text");

  std::string path;

  auto* validate = app.add_subcommand("validate", "Check a model, bundle or groupoid file against its axioms");
  validate->add_option("file", path, "Input file")->required();
  validate->add_flag("--report", as_json, "Emit a JSON report");

  VerifyArgs vargs;
  auto* verify_cmd = app.add_subcommand("verify", "Check a statement exhaustively (or by seeded sampling) on a model");
  verify_cmd->add_option("file", vargs.path, "Model file")->required();
  verify_cmd->add_option("--theorem", vargs.theorem,
                         "prop1, prop2, prop3, prop4, curvature, corollary, eq1-failure or all")
      ->required();
  verify_cmd->add_option("--seed", vargs.opts.seed, "Seed for sampled checks")->capture_default_str();
  verify_cmd->add_option("--samples", vargs.opts.samples, "Samples per sampled family")->capture_default_str();
  verify_cmd->add_option("--pairs", vargs.opts.pair_samples, "Sampled pairs of connections")->capture_default_str();
  verify_cmd->add_option("--limit", vargs.opts.exhaustive_limit, "Largest family checked exhaustively")
      ->capture_default_str();
  verify_cmd->add_flag("--report", vargs.as_json, "Emit a JSON report");

  std::string connection, format = "table", output;
  auto* curv = app.add_subcommand("curvature", "Curvature of a named connection");
  curv->add_option("file", path, "Model file")->required();
  curv->add_option("--connection", connection, "Connection name")->required();
  curv->add_option("--format", format, "table or file")
      ->check(CLI::IsMember({"table", "file"}))
      ->capture_default_str();
  curv->add_option("-o,--output", output, "Output file (default stdout)");

  GenerateArgs gargs;
  auto* gen = app.add_subcommand("generate", "Write a trivial or twisted model");
  gen->add_option("--model", gargs.model, "trivial or twisted")
      ->check(CLI::IsMember({"trivial", "twisted"}))
      ->capture_default_str();
  gen->add_option("--base", gargs.base, "Comma separated base points")->capture_default_str();
  gen->add_option("--edges", gargs.edges, "Neighbour pairs a-b (default: all pairs)");
  gen->add_option("--group", gargs.group, "Z<n>, S3 or 1")->capture_default_str();
  gen->add_option("--twist", gargs.twist, "Default twist sets: flat or full")
      ->check(CLI::IsMember({"flat", "full"}))
      ->capture_default_str();
  gen->add_option("--twist-set", gargs.twist_sets, "Override S(a,b), as a:b=g1/g2");
  gen->add_option("--max-lift", gargs.max_lift, "Largest simplex degree with the lifting property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_flag("--with-canonical-connection", gargs.canonical, "Include the connection [x0(a), x0(b)]");
  gen->add_option("-o,--output", gargs.output, "Output file (default stdout)");

  std::string what, side = "base";
  unsigned degree = 1;
  auto* en = app.add_subcommand("enumerate", "List simplices, connections or flat connections");
  en->add_option("file", path, "Model file")->required();
  en->add_option("--what", what, "simplices, connections or flat")
      ->required()
      ->check(CLI::IsMember({"simplices", "connections", "flat"}));
  en->add_option("--side", side, "base or total (simplices only)")
      ->check(CLI::IsMember({"base", "total"}))
      ->capture_default_str();
  en->add_option("--degree", degree, "Simplex degree")->capture_default_str();
  en->add_flag("--report", as_json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(path, as_json);
    if (*verify_cmd) {
      vargs.as_json = vargs.as_json || as_json;
      return cmd_verify(vargs);
    }
    if (*curv) return cmd_curvature(path, connection, format, output);
    if (*gen) return cmd_generate(gargs);
    if (*en) return cmd_enumerate(path, what, side, degree, as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CeilingExceeded& e) {
    std::cerr << "ceiling: " << e.what() << "\n";
    return kCeiling;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kData;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kData;
  } catch (const Refused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
