#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "gauge/bundle.hpp"
#include "gauge/errors.hpp"
#include "gauge/model.hpp"
#include "gauge/neighbourhood.hpp"
#include "gauge/report.hpp"

namespace gauge {

/// Where a form's simplices live.
struct OnTotal {};
struct OnBase {};

/// A k-form stored extensionally: one value per infinitesimal k-simplex of
/// the domain table, in the table's (canonical) order.
template <class Value, class Side>
class Form {
 public:
  Form(std::shared_ptr<const SimplexTable> domain, std::vector<Value> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (!domain_ || values_.size() != domain_->size()) {
      throw InputError("form needs exactly one value per simplex");
    }
  }

  unsigned degree() const { return domain_->degree(); }
  const SimplexTable& domain() const { return *domain_; }
  std::shared_ptr<const SimplexTable> domain_ptr() const { return domain_; }
  const std::vector<Value>& values() const { return values_; }
  const Value& at_row(std::size_t row) const { return values_[row]; }

  /// Throws InputError when the tuple is not an infinitesimal simplex.
  const Value& operator()(std::span<const Index> simplex) const {
    auto row = domain_->find(simplex);
    if (!row) throw InputError("tuple is not an infinitesimal simplex of the form's domain");
    return values_[*row];
  }
  const Value& operator()(std::initializer_list<Index> simplex) const {
    return (*this)(std::span<const Index>(simplex.begin(), simplex.size()));
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree() == b.degree() && a.domain_->rows() == b.domain_->rows() && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const SimplexTable> domain_;
  std::vector<Value> values_;
};

/// G-valued form on P.
using GroupForm = Form<Elem, OnTotal>;
/// G-valued form on M.
using BaseForm = Form<Elem, OnBase>;
/// Form on M whose value at (a0, ..., ak) is an endo-arrow of PP^-1 at a0.
using GaugeForm = Form<FractionArrow, OnBase>;

GroupForm tabulate_group_form(const BundleWithNeighbours& bn, unsigned k,
                              const std::function<Elem(const Simplex&)>& value);
BaseForm tabulate_base_form(const BundleWithNeighbours& bn, unsigned k,
                            const std::function<Elem(const Simplex&)>& value);
/// Throws BookkeepingError if some value is not an endo-arrow at the first
/// vertex.
GaugeForm tabulate_gauge_form(const BundleWithNeighbours& bn, unsigned k,
                              const std::function<FractionArrow(const Simplex&)>& value);

GroupForm unit_form(const BundleWithNeighbours& bn, unsigned k);
BaseForm unit_base_form(const BundleWithNeighbours& bn, unsigned k);
GaugeForm identity_gauge_form(const BundleWithNeighbours& bn, unsigned k);

/// Constant under moving every vertex but the first inside its fibre, as far
/// as the result stays a simplex.
PropertyCheck is_horizontal(const BundleWithNeighbours& bn, const GroupForm& theta);
/// theta(u0 g, ..., uk g) = g^-1 theta(u0, ..., uk) g for all g.
PropertyCheck is_equivariant(const BundleWithNeighbours& bn, const GroupForm& theta);
/// theta(u, u) = unit and theta(u, v) = theta(v, u)^-1, for 1-forms.
PropertyCheck is_normalized(const BundleWithNeighbours& bn, const GroupForm& omega);

GroupForm pullback(const BundleWithNeighbours& bn, const BaseForm& theta);

/// The unique base form whose pullback is theta. Refuses a noncommutative
/// group or a theta that is not horizontal and equivariant; throws
/// ConsistencyError if lifts disagree anyway.
BaseForm descend_invariant(const BundleWithNeighbours& bn, const GroupForm& theta);

/// theta -> theta-check: (a0..ak) |-> [u0 theta(u0..uk), u0] over any lift,
/// after verifying that every lift gives the same arrow.
GaugeForm check_transform(const BundleWithNeighbours& bn, const GroupForm& theta);
/// alpha -> alpha-hat: (u0..uk) |-> u0^-1 (alpha(pi u0..pi uk) . u0).
GroupForm hat_transform(const BundleWithNeighbours& bn, const GaugeForm& alpha);
/// u0 * alpha-hat(u) = alpha(pi u) . u0 at every simplex.
PropertyCheck check_hat_relation(const BundleWithNeighbours& bn, const GaugeForm& alpha, const GroupForm& alpha_hat);

/// d omega (x0, x1, x2) = omega(x0, x1) omega(x1, x2) omega(x2, x0).
GroupForm coboundary1(const BundleWithNeighbours& bn, const GroupForm& omega);
BaseForm coboundary1(const BundleWithNeighbours& bn, const BaseForm& omega);

/// Pointwise product and inverse; throws InputError on mismatched domains.
GroupForm product_form(const BundleWithNeighbours& bn, const GroupForm& a, const GroupForm& b);
GroupForm inverse_form(const BundleWithNeighbours& bn, const GroupForm& a);

/// Gauge form read through gauge_to_group (commutative groups only).
BaseForm gauge_to_base_form(const BundleWithNeighbours& bn, const GaugeForm& alpha);

std::string simplex_name(const Labels& names, std::span<const Index> simplex);

}  // namespace gauge
