#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gauge/bundle.hpp"
#include "gauge/neighbourhood.hpp"
#include "gauge/report.hpp"

namespace gauge {

/// A principal bundle with neighbour relations on its base and total set.
///
/// The axioms tying them together (projection and group action preserve ~,
/// open submersion, simplex lifting up to max_lift) are checked by
/// validate_neighbour_bundle, not on construction.
class BundleWithNeighbours {
 public:
  static constexpr unsigned kDefaultMaxLift = 2;

  BundleWithNeighbours(PrincipalBundle bundle, Neighbourhood base_relation, Neighbourhood total_relation,
                       unsigned max_lift = kDefaultMaxLift);

  const PrincipalBundle& bundle() const { return bundle_; }
  const FiniteGroup& group() const { return bundle_.group(); }
  const Neighbourhood& base_relation() const { return base_rel_; }
  const Neighbourhood& total_relation() const { return total_rel_; }
  unsigned max_lift() const { return max_lift_; }

  /// Simplex tables are shared by every form built on this model.
  std::shared_ptr<const SimplexTable> base_simplices(unsigned k) const;
  std::shared_ptr<const SimplexTable> total_simplices(unsigned k) const;

  /// Images of a total simplex under the projection.
  Simplex project(std::span<const Index> simplex) const;

 private:
  static constexpr unsigned kCached = 3;  // degrees 0, 1, 2

  PrincipalBundle bundle_;
  Neighbourhood base_rel_;
  Neighbourhood total_rel_;
  unsigned max_lift_;
  std::vector<std::shared_ptr<const SimplexTable>> base_tables_;
  std::vector<std::shared_ptr<const SimplexTable>> total_tables_;
};

/// A simplex over `base_simplex` whose first vertex is `x0`, if one exists.
std::optional<Simplex> find_lift(const BundleWithNeighbours& bn, std::span<const Index> base_simplex, Point x0);

/// Bundle axioms, both relations, and the compatibility axioms, each checked
/// exhaustively. Lifting is checked for every degree 1..max_lift.
Report validate_neighbour_bundle(const BundleWithNeighbours& bn);

/// M x G with (a,g) ~ (b,h) iff a ~ b.
BundleWithNeighbours trivial_model(const std::vector<std::string>& base, const Neighbourhood& base_relation,
                                   const FiniteGroup& group, unsigned max_lift = BundleWithNeighbours::kDefaultMaxLift);

/// Allowed jumps h g^-1 per ordered neighbour pair (a, b) of the base.
using TwistSets = std::map<std::pair<Base, Base>, std::vector<Elem>>;

struct TwistedModel {
  BundleWithNeighbours model;
  /// validate_neighbour_bundle of the result; lifting is not guaranteed.
  Report report;
};

/// M x G with (a,g) ~ (b,h) iff a ~ b and h g^-1 in S(a,b). Requires
/// unit in S(a,a), S(b,a) = S(a,b)^-1 and every S(a,b) nonempty; throws
/// InputError naming the offending pair otherwise.
TwistedModel twisted_model(const std::vector<std::string>& base, const Neighbourhood& base_relation,
                           const FiniteGroup& group, const TwistSets& twist,
                           unsigned max_lift = BundleWithNeighbours::kDefaultMaxLift);

/// S(a,b) = {unit} on every neighbour pair.
TwistSets flat_twist(const Neighbourhood& base_relation, const FiniteGroup& group);
/// S(a,b) = G on every neighbour pair (reproduces trivial_model).
TwistSets full_twist(const Neighbourhood& base_relation, const FiniteGroup& group);

}  // namespace gauge
