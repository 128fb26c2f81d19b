#pragma once

#include <string>
#include <vector>

#include "gauge/bundle.hpp"
#include "gauge/connection.hpp"
#include "gauge/model.hpp"

namespace testing {

using namespace gauge;

inline std::vector<std::string> base_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Trivial model over the codiscrete base {a, b, ...}.
inline BundleWithNeighbours trivial_k(std::size_t n, const std::string& group) {
  return trivial_model(base_names(n), Neighbourhood::codiscrete(n), FiniteGroup::by_name(group));
}

/// Flat twisted model over the codiscrete base: (a,g) ~ (b,h) iff g = h.
inline BundleWithNeighbours flat_k(std::size_t n, const std::string& group) {
  const auto rel = Neighbourhood::codiscrete(n);
  const auto g = FiniteGroup::by_name(group);
  return twisted_model(base_names(n), rel, g, flat_twist(rel, g)).model;
}

/// The point "(a,g)" of a trivial or twisted model.
inline Point pt(const BundleWithNeighbours& bn, const std::string& a, const std::string& g) {
  return bn.bundle().total().at(trivial_point_name(a, g));
}

inline Base base(const BundleWithNeighbours& bn, const std::string& a) { return bn.bundle().base().at(a); }

/// Triangle over Z2, flat except nabla(c, a) = [(c,1), (a,0)].
inline Connection holonomy_connection(const BundleWithNeighbours& bn) {
  const auto& b = bn.bundle();
  auto edges = Connection::canonical(bn).edges();
  edges[{base(bn, "a"), base(bn, "c")}] = arrow_inverse(b, make_arrow(b, pt(bn, "c", "1"), pt(bn, "a", "0")));
  return Connection::from_edges(bn, edges);
}

}  // namespace testing
