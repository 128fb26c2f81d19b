#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "gauge/bundle.hpp"
#include "gauge/forms.hpp"
#include "gauge/model.hpp"
#include "gauge/report.hpp"

namespace gauge {

/// A morphism of reflexive symmetric graphs from the base neighbour graph to
/// PP^-1. The arrow at (a, b) goes from the fibre over b to the fibre over a,
/// so that u * omega(u, v) = nabla(a, b) . v.
class Connection {
 public:
  /// One arrow per unordered neighbour pair a < b, oriented as nabla(a, b).
  /// The diagonal is the identity and (b, a) the inverse. Throws InputError
  /// when an edge is missing, unknown, or carries a misdirected arrow.
  static Connection from_edges(const BundleWithNeighbours& bn,
                               const std::map<std::pair<Base, Base>, FractionArrow>& edges);
  /// Every value along the neighbour table; checks reflexivity and symmetry.
  static Connection from_values(const BundleWithNeighbours& bn, std::vector<FractionArrow> values);
  /// nabla(a, b) = [x0(a), x0(b)]; the flat connection of a trivial model.
  static Connection canonical(const BundleWithNeighbours& bn);

  const FractionArrow& operator()(Base a, Base b) const;
  const std::vector<FractionArrow>& values() const { return values_; }
  const SimplexTable& domain() const { return *domain_; }
  /// nabla(a, b) for a < b, in canonical order.
  std::map<std::pair<Base, Base>, FractionArrow> edges() const;

  friend bool operator==(const Connection& a, const Connection& b) { return a.values_ == b.values_; }

 private:
  Connection(std::shared_ptr<const SimplexTable> domain, std::vector<FractionArrow> values)
      : domain_(std::move(domain)), values_(std::move(values)) {}

  std::shared_ptr<const SimplexTable> domain_;  // base 1-simplices
  std::vector<FractionArrow> values_;
};

/// omega(u, v) = u^-1 (nabla(pi u, pi v) . v).
GroupForm connection_to_form(const BundleWithNeighbours& bn, const Connection& nabla);

/// omega(x g, y) = g^-1 omega(x, y) whenever x g ~ y.
PropertyCheck check_vertical_shift(const BundleWithNeighbours& bn, const GroupForm& omega);
/// omega(x g, y g) = g^-1 omega(x, y) g for all g.
PropertyCheck check_diagonal_shift(const BundleWithNeighbours& bn, const GroupForm& omega);

/// nabla(a, b) = [u, v omega(v, u)] over any lift u ~ v, after verifying both
/// shift laws, normalization, and that every lift yields the same arrow.
/// Refuses with the failing instance otherwise.
Connection form_to_connection(const BundleWithNeighbours& bn, const GroupForm& omega);

/// (a, b) |-> nabla1(a, b) nabla(b, a).
GaugeForm connection_difference(const BundleWithNeighbours& bn, const Connection& nabla1, const Connection& nabla);

/// R(a0, a1, a2) = nabla(a0, a1) nabla(a1, a2) nabla(a2, a0), an endo-arrow at a0.
GaugeForm curvature(const BundleWithNeighbours& bn, const Connection& nabla);

bool is_flat(const BundleWithNeighbours& bn, const Connection& nabla);

struct CurvatureIdentityReport {
  std::size_t simplices_checked = 0;
  std::vector<std::string> mismatches;  // one line per failing 2-simplex of P
  PropertyCheck horizontal;
  PropertyCheck equivariant;

  bool holds() const { return mismatches.empty() && horizontal.holds && equivariant.holds; }
};

/// Compares hat(curvature) with d omega simplex by simplex, and checks that
/// d omega is horizontal and equivariant.
CurvatureIdentityReport verify_curvature_identity(const BundleWithNeighbours& bn, const Connection& nabla);

/// The base 2-form Omega with pullback d omega (commutative groups only).
/// Verifies pullback(Omega) = d omega and that Omega is the curvature read
/// through gauge_to_group; throws ConsistencyError otherwise.
BaseForm descend_curvature(const BundleWithNeighbours& bn, const Connection& nabla);

/// R(a1, a2, a0) = nabla(a1, a0) R(a0, a1, a2) nabla(a1, a0)^-1 on every
/// 2-simplex.
PropertyCheck check_curvature_rotation(const BundleWithNeighbours& bn, const Connection& nabla);

inline constexpr std::uint64_t kDefaultCeiling = 1'000'000;

/// |G| raised to the number of unordered off-diagonal base edges, saturating.
std::uint64_t connection_count(const BundleWithNeighbours& bn);

/// All connections in canonical order (first edge most significant, arrows
/// ordered by numerator). Throws CeilingExceeded when there are more than
/// `ceiling`.
std::vector<Connection> enumerate_connections(const BundleWithNeighbours& bn, std::uint64_t ceiling = kDefaultCeiling);
std::vector<Connection> find_flat(const BundleWithNeighbours& bn, std::uint64_t ceiling = kDefaultCeiling);

/// A connection with independently uniform edge arrows.
Connection random_connection(const BundleWithNeighbours& bn, std::mt19937_64& rng);

}  // namespace gauge
