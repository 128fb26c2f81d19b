#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gauge/group.hpp"
#include "gauge/labels.hpp"
#include "gauge/report.hpp"

namespace gauge {

using Point = Index;  // element of the total set P
using Base = Index;   // element of the base M

/// A finite set P over M with a right action of a finite group G.
///
/// Construction only resolves names; the principal-bundle axioms (free,
/// fibre-transitive, fibrewise, surjective projection) are checked by
/// validate_bundle. Every other operation assumes a valid bundle.
class PrincipalBundle {
 public:
  using Action = std::map<std::pair<std::string, std::string>, std::string>;

  /// `action[{x, g}]` names x*g. Throws InputError on unknown names or a
  /// missing projection/action entry.
  PrincipalBundle(std::vector<std::string> base, std::vector<std::string> total,
                  const std::map<std::string, std::string>& proj, FiniteGroup group,
                  const Action& action);

  /// M x G with points named "(a,g)", projection to the first factor and G
  /// acting by right multiplication on the second.
  static PrincipalBundle trivial(std::vector<std::string> base, FiniteGroup group);

  const Labels& base() const { return base_; }
  const Labels& total() const { return total_; }
  const FiniteGroup& group() const { return group_; }

  Base proj(Point x) const { return proj_[x]; }
  Point act(Point x, Elem g) const { return act_[x * group_.size() + g]; }
  /// Points over `a`, in canonical order.
  std::span<const Point> fibre(Base a) const { return fibres_[a]; }
  /// Least point of the fibre over `a`. Throws InputError on an empty fibre.
  Point least_in_fibre(Base a) const;

  /// The unique g with x*g = z (the fraction x^-1 z). Throws
  /// BookkeepingError when x and z lie in different fibres.
  Elem div(Point x, Point z) const;
  /// y * div(x, z), defined when x and z share a fibre.
  Point tern(Point y, Point x, Point z) const;

  const std::string& point_name(Point x) const { return total_.name(x); }
  const std::string& base_name(Base a) const { return base_.name(a); }

 private:
  Labels base_;
  Labels total_;
  FiniteGroup group_;
  std::vector<Base> proj_;
  std::vector<Point> act_;
  std::vector<std::vector<Point>> fibres_;
  // div_[x * |P| + z], or -1 when no element carries x to z
  std::vector<std::int32_t> div_;
};

Report validate_bundle(const PrincipalBundle& b);

/// "(a,g)", the point naming used by PrincipalBundle::trivial.
std::string trivial_point_name(const std::string& a, const std::string& g);

/// An arrow y x^-1 of the gauge groupoid PP^-1, stored as the representative
/// (num, den) whose den is least in its fibre. Goes from proj(den) to
/// proj(num).
struct FractionArrow {
  Point num = 0;
  Point den = 0;

  friend auto operator<=>(const FractionArrow&, const FractionArrow&) = default;
};

FractionArrow make_arrow(const PrincipalBundle& b, Point y, Point x);
inline Base arrow_dom(const PrincipalBundle& b, FractionArrow f) { return b.proj(f.den); }
inline Base arrow_cod(const PrincipalBundle& b, FractionArrow f) { return b.proj(f.num); }
/// f2 after f1; requires cod f1 = dom f2.
FractionArrow arrow_compose(const PrincipalBundle& b, FractionArrow f2, FractionArrow f1);
FractionArrow arrow_inverse(const PrincipalBundle& b, FractionArrow f);
FractionArrow identity_arrow(const PrincipalBundle& b, Base a);
/// f . u, the left action of PP^-1 on P; requires proj(u) = dom f.
Point act_left(const PrincipalBundle& b, FractionArrow f, Point u);
/// f h f^-1 for an endo-arrow h at dom f.
FractionArrow arrow_conjugate(const PrincipalBundle& b, FractionArrow f, FractionArrow h);
/// All arrows a -> c in canonical order.
std::vector<FractionArrow> arrows_between(const PrincipalBundle& b, Base a, Base c);
std::string arrow_name(const PrincipalBundle& b, FractionArrow f);

/// Vertex groups of PP^-1 over each base point: fibre[a] lists the endo-arrow
/// classes [y, x] with y, x over a.
std::vector<std::vector<FractionArrow>> gauge_of_bundle(const PrincipalBundle& b);

/// [y, x] |-> x^-1 y. Only well defined for commutative G; throws Refused
/// otherwise, and BookkeepingError when h is not an endo-arrow.
Elem gauge_to_group(const PrincipalBundle& b, FractionArrow h);
/// [x0 * g, x0] with x0 least over a.
FractionArrow group_to_gauge(const PrincipalBundle& b, Base a, Elem g);

/// Two representatives of one endo-arrow whose naive fractions x^-1 y
/// disagree: (y, x) and (y*g, x*g).
struct GaugeAmbiguity {
  Point y;
  Point x;
  Elem g;
  Elem first;   // div(x, y)
  Elem second;  // div(x*g, y*g)
};

/// Exhaustive search for representatives on which gauge_to_group would be
/// ill-defined. Returns nullopt exactly when every endo-arrow has a single
/// fraction value.
std::optional<GaugeAmbiguity> find_gauge_ambiguity(const PrincipalBundle& b);

struct BundleIsomorphism {
  std::vector<Elem> group_map;   // G of the first bundle -> G of the second
  std::vector<Point> point_map;  // P of the first -> P of the second
};

/// Searches for an isomorphism identifying the bases by name: a group
/// isomorphism phi and a fibre-preserving bijection psi with
/// psi(x*g) = psi(x)*phi(g). The returned maps are re-checked in full.
std::optional<BundleIsomorphism> find_isomorphism(const PrincipalBundle& first,
                                                  const PrincipalBundle& second);

}  // namespace gauge
