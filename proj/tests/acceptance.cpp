// Acceptance run over the golden set: trivial and flat twisted models over
// the codiscrete bases on two and three points, for Z2, Z3, Z4 and S3.
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gauge/connection.hpp"
#include "gauge/envelope.hpp"
#include "gauge/errors.hpp"
#include "gauge/groupoid.hpp"
#include "gauge/verify.hpp"
#include "support.hpp"

using namespace gauge;
using namespace testing;

namespace {

struct Golden {
  std::string name;
  BundleWithNeighbours model;
};

std::vector<Golden> golden_set() {
  std::vector<Golden> out;
  for (std::size_t n : {2, 3}) {
    for (const char* g : {"Z2", "Z3", "Z4", "S3"}) {
      const std::string suffix = "K" + std::to_string(n) + " " + g;
      out.push_back({"trivial " + suffix, trivial_k(n, g)});
      out.push_back({"flat twisted " + suffix, flat_k(n, g)});
    }
  }
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checked = 0;

  void fail(const std::string& model, const std::string& what) {
    if (pass) detail = model + ": " + what;
    pass = false;
  }
};

// First failing record of a theorem report, or empty.
std::string first_failure(const TheoremReport& rep) {
  for (const auto& r : rep.records) {
    if (!r.holds) return r.instance + (r.detail.empty() ? "" : ": " + r.detail);
  }
  return {};
}

Outcome run_theorem(const std::vector<Golden>& models, Theorem t,
                    const std::function<bool(const Golden&)>& applies = {}) {
  Outcome out;
  for (const auto& g : models) {
    if (applies && !applies(g)) continue;
    const auto rep = verify(g.model, t);
    out.checked += rep.records.size();
    if (!rep.holds) out.fail(g.name, first_failure(rep));
  }
  return out;
}

Outcome criterion1(const std::vector<Golden>& models) {
  Outcome out;
  for (const auto& g : models) {
    if (connection_count(g.model) > VerifyOptions{}.exhaustive_limit) {
      out.fail(g.name, "connections not enumerable");
      continue;
    }
    const auto rep = verify(g.model, Theorem::prop1);
    out.checked += rep.records.size();
    if (!rep.holds) out.fail(g.name, first_failure(rep));
    // the converse must have been exhaustive
    if (!rep.note.empty()) out.fail(g.name, rep.note);
  }
  return out;
}

Outcome criterion2(const std::vector<Golden>& models) {
  Outcome out;
  for (const auto& g : models) {
    for (const auto& nabla : enumerate_connections(g.model)) {
      const auto omega = connection_to_form(g.model, nabla);
      const auto vertical = check_vertical_shift(g.model, omega);
      const auto diagonal = check_diagonal_shift(g.model, omega);
      ++out.checked;
      if (!vertical.holds) out.fail(g.name, "vertical shift: " + vertical.counterexample);
      if (!diagonal.holds) out.fail(g.name, "diagonal shift: " + diagonal.counterexample);
    }
  }
  return out;
}

Outcome criterion5(const std::vector<Golden>& models) {
  Outcome out = run_theorem(models, Theorem::corollary, [](const Golden& g) { return g.model.group().is_commutative(); });
  auto tri = trivial_k(3, "Z2");
  const auto omega = descend_curvature(tri, holonomy_connection(tri));
  const bool example = tri.group().name(omega({base(tri, "a"), base(tri, "b"), base(tri, "c")})) == "1";
  if (!example) out.fail("triangle Z2", "Omega(a,b,c) is not 1");
  out.detail = out.pass ? "triangle Z2 example: Omega(a,b,c) = 1" : out.detail;
  return out;
}

Outcome criterion6(const std::vector<Golden>& models) {
  Outcome out;
  for (const auto& g : models) {
    const auto amb = find_gauge_ambiguity(g.model.bundle());
    ++out.checked;
    if (g.model.group().is_commutative() && amb) out.fail(g.name, "ambiguity on a commutative group");
    if (!g.model.group().is_commutative() && !amb) out.fail(g.name, "no counterexample on a noncommutative group");
  }
  return out;
}

Outcome criterion8(const std::vector<Golden>& models) {
  Outcome out;
  for (const auto& g : models) {
    const auto& b = g.model.bundle();
    const auto env = envelope(b);
    ++out.checked;
    if (!validate_groupoid(env).empty()) out.fail(g.name, "envelope fails the groupoid axioms");
    if (!is_transitive(env)) out.fail(g.name, "envelope not transitive");
    const auto back = extract_bundle(env, kEnvelopeBasepoint, b.base().names());
    if (!find_isomorphism(b, back)) out.fail(g.name, "extracted bundle not isomorphic");
  }
  return out;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto models = golden_set();
  for (const auto& g : models) {
    if (!validate_neighbour_bundle(g.model).empty()) {
      std::printf("FAIL golden model %s does not validate\n", g.name.c_str());
      return 1;
    }
  }

  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "connection/form bijection, both directions", [&] { return criterion1(models); }},
      {2, "shift laws on every connection form", [&] { return criterion2(models); }},
      {3, "hat/check transforms inverse (|P| <= 12)",
       [&] { return run_theorem(models, Theorem::prop3, [](const Golden& g) { return g.model.bundle().total().size() <= 12; }); }},
      {4, "hat(R) = d omega, d omega horizontal and equivariant", [&] { return run_theorem(models, Theorem::curvature); }},
      {5, "curvature descends on commutative models", [&] { return criterion5(models); }},
      {6, "naive gauge map ambiguous iff noncommutative", [&] { return criterion6(models); }},
      {7, "difference of connections vs product of forms", [&] { return run_theorem(models, Theorem::prop4); }},
      {8, "envelope round trip", [&] { return criterion8(models); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.fail("exception", e.what());
    }
    all = all && o.pass;
    std::printf("%s criterion %d: %s [%zu checks]%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title, o.checked,
                o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu golden models, %.1f s\n", models.size(), secs);
  return all ? 0 : 1;
}
