#include "gauge/forms.hpp"

#include <array>
#include <map>

namespace gauge {

std::string simplex_name(const Labels& names, std::span<const Index> simplex) {
  std::string s = "(";
  for (std::size_t i = 0; i < simplex.size(); ++i) s += (i ? "," : "") + names.name(simplex[i]);
  return s + ")";
}

namespace {

template <class Value, class Fn>
std::vector<Value> tabulate(const SimplexTable& table, const Fn& fn) {
  std::vector<Value> values;
  values.reserve(table.size());
  for (const auto& s : table) values.push_back(fn(s));
  return values;
}

std::size_t base_row(const BundleWithNeighbours& bn, const SimplexTable& base, const Simplex& total_simplex) {
  const Simplex image = bn.project(total_simplex);
  auto row = base.find(image);
  if (!row) {
    throw InputError("projection of " + simplex_name(bn.bundle().total(), total_simplex) +
                     " is not a simplex of the base");
  }
  return *row;
}

void require_degree(unsigned actual, unsigned expected, const char* what) {
  if (actual != expected) {
    throw InputError(std::string(what) + " needs a form of degree " + std::to_string(expected) + ", got " +
                     std::to_string(actual));
  }
}

template <class F>
void require_same_domain(const F& a, const F& b) {
  if (a.domain_ptr() != b.domain_ptr() && a.domain().rows() != b.domain().rows()) {
    throw InputError("forms have different degrees or domains");
  }
}

// Lifts of base simplices that no total simplex covers.
std::optional<std::size_t> first_uncovered(const std::vector<bool>& covered) {
  for (std::size_t r = 0; r < covered.size(); ++r)
    if (!covered[r]) return r;
  return std::nullopt;
}

void refuse_unless_horizontal_equivariant(const BundleWithNeighbours& bn, const GroupForm& theta, const char* op) {
  if (auto h = is_horizontal(bn, theta); !h) {
    throw Refused(std::string(op) + ": form is not horizontal: " + h.counterexample);
  }
  if (auto e = is_equivariant(bn, theta); !e) {
    throw Refused(std::string(op) + ": form is not equivariant: " + e.counterexample);
  }
}

}  // namespace

GroupForm tabulate_group_form(const BundleWithNeighbours& bn, unsigned k,
                              const std::function<Elem(const Simplex&)>& value) {
  auto table = bn.total_simplices(k);
  return GroupForm(table, tabulate<Elem>(*table, value));
}

BaseForm tabulate_base_form(const BundleWithNeighbours& bn, unsigned k,
                            const std::function<Elem(const Simplex&)>& value) {
  auto table = bn.base_simplices(k);
  return BaseForm(table, tabulate<Elem>(*table, value));
}

GaugeForm tabulate_gauge_form(const BundleWithNeighbours& bn, unsigned k,
                              const std::function<FractionArrow(const Simplex&)>& value) {
  const auto& b = bn.bundle();
  auto table = bn.base_simplices(k);
  auto values = tabulate<FractionArrow>(*table, [&](const Simplex& s) {
    FractionArrow f = value(s);
    if (arrow_dom(b, f) != s[0] || arrow_cod(b, f) != s[0]) {
      throw BookkeepingError("gauge value " + arrow_name(b, f) + " at " + simplex_name(b.base(), s) +
                             " is not an endo-arrow at the first vertex");
    }
    return f;
  });
  return GaugeForm(table, std::move(values));
}

GroupForm unit_form(const BundleWithNeighbours& bn, unsigned k) {
  const Elem e = bn.group().unit();
  return tabulate_group_form(bn, k, [e](const Simplex&) { return e; });
}

BaseForm unit_base_form(const BundleWithNeighbours& bn, unsigned k) {
  const Elem e = bn.group().unit();
  return tabulate_base_form(bn, k, [e](const Simplex&) { return e; });
}

GaugeForm identity_gauge_form(const BundleWithNeighbours& bn, unsigned k) {
  return tabulate_gauge_form(bn, k, [&](const Simplex& s) { return identity_arrow(bn.bundle(), s[0]); });
}

PropertyCheck is_horizontal(const BundleWithNeighbours& bn, const GroupForm& theta) {
  // Admissible perturbations of (u0, u1..uk) are exactly the simplices with
  // the same u0 and the same fibres at the other vertices.
  const auto& b = bn.bundle();
  const auto& table = theta.domain();
  std::map<Simplex, std::size_t> first_row;
  for (std::size_t r = 0; r < table.size(); ++r) {
    Simplex key = bn.project(table[r]);
    key[0] = table[r][0];
    auto [it, inserted] = first_row.emplace(std::move(key), r);
    if (!inserted && theta.at_row(it->second) != theta.at_row(r)) {
      const auto& G = bn.group();
      return PropertyCheck::fail("theta" + simplex_name(b.total(), table[it->second]) + " = " +
                                 G.name(theta.at_row(it->second)) + " but theta" + simplex_name(b.total(), table[r]) +
                                 " = " + G.name(theta.at_row(r)));
    }
  }
  return PropertyCheck::ok();
}

PropertyCheck is_equivariant(const BundleWithNeighbours& bn, const GroupForm& theta) {
  const auto& b = bn.bundle();
  const auto& G = bn.group();
  const auto& table = theta.domain();
  Simplex moved;
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (Elem g = 0; g < G.size(); ++g) {
      moved.clear();
      for (Point u : table[r]) moved.push_back(b.act(u, g));
      auto row = table.find(moved);
      if (!row) {
        return PropertyCheck::fail(simplex_name(b.total(), table[r]) + " * " + G.name(g) + " is not a simplex");
      }
      const Elem expected = G.conj(g, theta.at_row(r));
      if (theta.at_row(*row) != expected) {
        return PropertyCheck::fail("theta" + simplex_name(b.total(), moved) + " = " + G.name(theta.at_row(*row)) +
                                   " but g^-1 theta" + simplex_name(b.total(), table[r]) + " g = " + G.name(expected) +
                                   " for g = " + G.name(g));
      }
    }
  }
  return PropertyCheck::ok();
}

PropertyCheck is_normalized(const BundleWithNeighbours& bn, const GroupForm& omega) {
  require_degree(omega.degree(), 1, "is_normalized");
  const auto& b = bn.bundle();
  const auto& G = bn.group();
  for (const auto& s : omega.domain()) {
    const Elem value = omega(s);
    if (s[0] == s[1] && value != G.unit()) {
      return PropertyCheck::fail("omega" + simplex_name(b.total(), s) + " = " + G.name(value) + " is not the unit");
    }
    const std::array<Index, 2> back{s[1], s[0]};
    if (omega(back) != G.inv(value)) {
      return PropertyCheck::fail("omega" + simplex_name(b.total(), s) + " and omega" + simplex_name(b.total(), back) +
                                 " are not mutually inverse");
    }
  }
  return PropertyCheck::ok();
}

GroupForm pullback(const BundleWithNeighbours& bn, const BaseForm& theta) {
  return tabulate_group_form(bn, theta.degree(), [&](const Simplex& s) {
    return theta.at_row(base_row(bn, theta.domain(), s));
  });
}

BaseForm descend_invariant(const BundleWithNeighbours& bn, const GroupForm& theta) {
  if (!bn.group().is_commutative()) throw Refused("descent of invariant forms requires a commutative group");
  refuse_unless_horizontal_equivariant(bn, theta, "descend_invariant");

  const auto& b = bn.bundle();
  auto base = bn.base_simplices(theta.degree());
  std::vector<Elem> values(base->size());
  std::vector<bool> covered(base->size(), false);
  for (std::size_t r = 0; r < theta.domain().size(); ++r) {
    const auto& s = theta.domain()[r];
    const std::size_t br = base_row(bn, *base, s);
    if (!covered[br]) {
      values[br] = theta.at_row(r);
      covered[br] = true;
    } else if (values[br] != theta.at_row(r)) {
      throw ConsistencyError("lifts of " + simplex_name(b.base(), (*base)[br]) + " disagree at " +
                             simplex_name(b.total(), s));
    }
  }
  if (auto r = first_uncovered(covered)) {
    throw ConsistencyError("base simplex " + simplex_name(b.base(), (*base)[*r]) + " has no lift");
  }
  BaseForm result(base, std::move(values));
  if (!(pullback(bn, result) == theta)) throw ConsistencyError("pullback of the descended form differs from the input");
  return result;
}

GaugeForm check_transform(const BundleWithNeighbours& bn, const GroupForm& theta) {
  refuse_unless_horizontal_equivariant(bn, theta, "check_transform");

  const auto& b = bn.bundle();
  auto base = bn.base_simplices(theta.degree());
  std::vector<FractionArrow> values(base->size());
  std::vector<bool> covered(base->size(), false);
  for (std::size_t r = 0; r < theta.domain().size(); ++r) {
    const auto& s = theta.domain()[r];
    const std::size_t br = base_row(bn, *base, s);
    const Point u0 = s[0];
    const FractionArrow f = make_arrow(b, b.act(u0, theta.at_row(r)), u0);
    if (!covered[br]) {
      values[br] = f;
      covered[br] = true;
    } else if (values[br] != f) {
      throw ConsistencyError("check transform depends on the lift of " + simplex_name(b.base(), (*base)[br]) + ": " +
                             arrow_name(b, values[br]) + " vs " + arrow_name(b, f) + " from " +
                             simplex_name(b.total(), s));
    }
  }
  if (auto r = first_uncovered(covered)) {
    throw ConsistencyError("base simplex " + simplex_name(b.base(), (*base)[*r]) + " has no lift");
  }
  return GaugeForm(base, std::move(values));
}

GroupForm hat_transform(const BundleWithNeighbours& bn, const GaugeForm& alpha) {
  const auto& b = bn.bundle();
  return tabulate_group_form(bn, alpha.degree(), [&](const Simplex& s) {
    const FractionArrow f = alpha.at_row(base_row(bn, alpha.domain(), s));
    return b.div(s[0], act_left(b, f, s[0]));
  });
}

PropertyCheck check_hat_relation(const BundleWithNeighbours& bn, const GaugeForm& alpha, const GroupForm& alpha_hat) {
  const auto& b = bn.bundle();
  for (std::size_t r = 0; r < alpha_hat.domain().size(); ++r) {
    const auto& s = alpha_hat.domain()[r];
    const Point lhs = b.act(s[0], alpha_hat.at_row(r));
    const Point rhs = act_left(b, alpha.at_row(base_row(bn, alpha.domain(), s)), s[0]);
    if (lhs != rhs) {
      return PropertyCheck::fail("at " + simplex_name(b.total(), s) + ": u0 * hat = " + b.point_name(lhs) +
                                 " but alpha . u0 = " + b.point_name(rhs));
    }
  }
  return PropertyCheck::ok();
}

namespace {

template <class F>
std::vector<Elem> coboundary_values(const FiniteGroup& G, const SimplexTable& two_simplices, const F& omega) {
  require_degree(omega.degree(), 1, "coboundary1");
  std::vector<Elem> values;
  values.reserve(two_simplices.size());
  for (const auto& s : two_simplices) {
    const std::array<Index, 2> e01{s[0], s[1]}, e12{s[1], s[2]}, e20{s[2], s[0]};
    values.push_back(G.mul(omega(e01), G.mul(omega(e12), omega(e20))));
  }
  return values;
}

}  // namespace

GroupForm coboundary1(const BundleWithNeighbours& bn, const GroupForm& omega) {
  auto table = bn.total_simplices(2);
  return GroupForm(table, coboundary_values(bn.group(), *table, omega));
}

BaseForm coboundary1(const BundleWithNeighbours& bn, const BaseForm& omega) {
  auto table = bn.base_simplices(2);
  return BaseForm(table, coboundary_values(bn.group(), *table, omega));
}

GroupForm product_form(const BundleWithNeighbours& bn, const GroupForm& a, const GroupForm& b) {
  require_same_domain(a, b);
  std::vector<Elem> values(a.values().size());
  for (std::size_t r = 0; r < values.size(); ++r) values[r] = bn.group().mul(a.at_row(r), b.at_row(r));
  return GroupForm(a.domain_ptr(), std::move(values));
}

GroupForm inverse_form(const BundleWithNeighbours& bn, const GroupForm& a) {
  std::vector<Elem> values(a.values().size());
  for (std::size_t r = 0; r < values.size(); ++r) values[r] = bn.group().inv(a.at_row(r));
  return GroupForm(a.domain_ptr(), std::move(values));
}

BaseForm gauge_to_base_form(const BundleWithNeighbours& bn, const GaugeForm& alpha) {
  std::vector<Elem> values;
  values.reserve(alpha.values().size());
  for (const auto& f : alpha.values()) values.push_back(gauge_to_group(bn.bundle(), f));
  return BaseForm(alpha.domain_ptr(), std::move(values));
}

}  // namespace gauge
