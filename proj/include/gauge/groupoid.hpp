#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauge/bundle.hpp"
#include "gauge/group.hpp"
#include "gauge/labels.hpp"
#include "gauge/report.hpp"

namespace gauge {

/// Name-level description of a groupoid; mirrors the groupoid file format.
struct GroupoidTable {
  struct ArrowDecl {
    std::string name;
    std::string dom;
    std::string cod;
  };

  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  /// {left, right, result}: left after right.
  std::vector<std::array<std::string, 3>> compose;
  std::map<std::string, std::string> identities;  // object -> arrow
  std::map<std::string, std::string> inverses;    // arrow -> arrow
};

/// A finite groupoid as an explicit composition table, read right to left:
/// compose(f, g) is "f after g" and exists when cod g = dom f.
///
/// The table may violate the groupoid axioms; validate_groupoid reports
/// that. Absent entries are never filled in silently.
class FiniteGroupoid {
 public:
  using Object = Index;
  using Arrow = Index;

  /// Throws InputError on unknown names, duplicate compose entries, or a
  /// missing identity/inverse entry.
  explicit FiniteGroupoid(const GroupoidTable& table);

  /// One object, one arrow per group element.
  static FiniteGroupoid from_group(const FiniteGroup& g, const std::string& object = "*");
  /// Exactly one arrow "a>b" for each ordered pair of objects.
  static FiniteGroupoid codiscrete(const std::vector<std::string>& objects);
  /// Requires disjoint object and arrow names.
  static FiniteGroupoid disjoint_union(const FiniteGroupoid& left, const FiniteGroupoid& right);

  GroupoidTable to_table() const;

  const Labels& objects() const { return objects_; }
  const Labels& arrows() const { return arrows_; }
  Object dom(Arrow f) const { return dom_[f]; }
  Object cod(Arrow f) const { return cod_[f]; }
  Arrow identity(Object o) const { return identity_[o]; }
  Arrow inverse(Arrow f) const { return inverse_[f]; }

  std::optional<Arrow> try_compose(Arrow f, Arrow g) const;
  /// Throws BookkeepingError when the table has no entry for (f, g).
  Arrow compose(Arrow f, Arrow g) const;
  /// Arrows a -> b in canonical order.
  std::vector<Arrow> hom(Object a, Object b) const;

 private:
  FiniteGroupoid() = default;

  Labels objects_;
  Labels arrows_;
  std::vector<Object> dom_;
  std::vector<Object> cod_;
  std::vector<std::int32_t> compose_;  // [f * |arrows| + g], -1 when absent
  std::vector<Arrow> identity_;
  std::vector<Arrow> inverse_;
};

Report validate_groupoid(const FiniteGroupoid& g);

/// True iff every ordered pair of objects is joined by an arrow.
bool is_transitive(const FiniteGroupoid& g);

/// The vertex groups Psi(a, a).
struct GaugeBundle {
  Labels base;
  std::vector<std::vector<FiniteGroupoid::Arrow>> fibre;
};

GaugeBundle gauge_bundle(const FiniteGroupoid& g);

/// f h f^-1 for f: a -> b and h: a -> a.
FiniteGroupoid::Arrow conjugate(const FiniteGroupoid& g, FiniteGroupoid::Arrow f,
                                FiniteGroupoid::Arrow h);

/// The principal bundle of arrows from `basepoint` into `base`, projected by
/// codomain, with the vertex group at `basepoint` acting by precomposition.
/// Requires a valid transitive groupoid; an object of `base` that receives
/// no arrow from `basepoint` is reported as an empty fibre.
PrincipalBundle extract_bundle(const FiniteGroupoid& g, std::string_view basepoint,
                               const std::vector<std::string>& base);

}  // namespace gauge
