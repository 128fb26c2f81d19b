#include "gauge/connection.hpp"

#include <array>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

std::string edge_name(const PrincipalBundle& b, Base a, Base c) {
  return "(" + b.base_name(a) + "," + b.base_name(c) + ")";
}

// Candidate values of nabla(a, c): arrows from the fibre over c to the fibre over a.
std::vector<FractionArrow> edge_choices(const PrincipalBundle& b, Base a, Base c) { return arrows_between(b, c, a); }

}  // namespace

Connection Connection::from_values(const BundleWithNeighbours& bn, std::vector<FractionArrow> values) {
  const auto& b = bn.bundle();
  auto domain = bn.base_simplices(1);
  if (values.size() != domain->size()) throw InputError("connection needs one arrow per neighbour pair");
  for (std::size_t r = 0; r < domain->size(); ++r) {
    const Base a = (*domain)[r][0];
    const Base c = (*domain)[r][1];
    const FractionArrow f = values[r];
    if (arrow_cod(b, f) != a || arrow_dom(b, f) != c) {
      throw InputError("connection value " + arrow_name(b, f) + " at " + edge_name(b, a, c) + " must go from " +
                       b.base_name(c) + " to " + b.base_name(a));
    }
    if (make_arrow(b, f.num, f.den) != f) throw InputError("connection value " + arrow_name(b, f) + " is not canonical");
    if (a == c && f != identity_arrow(b, a)) {
      throw InputError("connection is not reflexive at " + edge_name(b, a, a));
    }
    const std::array<Index, 2> back{c, a};
    if (values[*domain->find(back)] != arrow_inverse(b, f)) {
      throw InputError("connection is not symmetric at " + edge_name(b, a, c));
    }
  }
  return Connection(std::move(domain), std::move(values));
}

Connection Connection::from_edges(const BundleWithNeighbours& bn,
                                  const std::map<std::pair<Base, Base>, FractionArrow>& edges) {
  const auto& b = bn.bundle();
  for (const auto& [key, f] : edges) {
    const auto [a, c] = key;
    if (a >= c || !bn.base_relation().related(a, c)) {
      throw InputError("connection edge " + edge_name(b, a, c) + " is not an ordered neighbour pair a < b");
    }
  }
  auto domain = bn.base_simplices(1);
  std::vector<FractionArrow> values;
  for (const auto& s : *domain) {
    const Base a = s[0];
    const Base c = s[1];
    if (a == c) {
      values.push_back(identity_arrow(b, a));
      continue;
    }
    auto it = edges.find({std::min(a, c), std::max(a, c)});
    if (it == edges.end()) throw InputError("connection has no arrow for edge " + edge_name(b, std::min(a, c), std::max(a, c)));
    const FractionArrow f = make_arrow(b, it->second.num, it->second.den);
    values.push_back(a < c ? f : arrow_inverse(b, f));
  }
  return from_values(bn, std::move(values));
}

Connection Connection::canonical(const BundleWithNeighbours& bn) {
  const auto& b = bn.bundle();
  std::map<std::pair<Base, Base>, FractionArrow> edges;
  for (auto [a, c] : bn.base_relation().off_diagonal_pairs()) {
    edges[{a, c}] = make_arrow(b, b.least_in_fibre(a), b.least_in_fibre(c));
  }
  return from_edges(bn, edges);
}

const FractionArrow& Connection::operator()(Base a, Base b) const {
  const std::array<Index, 2> key{a, b};
  auto row = domain_->find(key);
  if (!row) throw BookkeepingError("connection evaluated off the neighbour relation");
  return values_[*row];
}

std::map<std::pair<Base, Base>, FractionArrow> Connection::edges() const {
  std::map<std::pair<Base, Base>, FractionArrow> out;
  for (std::size_t r = 0; r < domain_->size(); ++r) {
    const auto& s = (*domain_)[r];
    if (s[0] < s[1]) out[{s[0], s[1]}] = values_[r];
  }
  return out;
}

GroupForm connection_to_form(const BundleWithNeighbours& bn, const Connection& nabla) {
  const auto& b = bn.bundle();
  return tabulate_group_form(bn, 1, [&](const Simplex& s) {
    const Point u = s[0];
    const Point v = s[1];
    return b.div(u, act_left(b, nabla(b.proj(u), b.proj(v)), v));
  });
}

PropertyCheck check_vertical_shift(const BundleWithNeighbours& bn, const GroupForm& omega) {
  const auto& b = bn.bundle();
  const auto& G = bn.group();
  const auto& rel = bn.total_relation();
  for (const auto& s : omega.domain()) {
    const Point x = s[0];
    const Point y = s[1];
    for (Elem g = 0; g < G.size(); ++g) {
      const Point xg = b.act(x, g);
      if (!rel.related(xg, y)) continue;
      const std::array<Index, 2> shifted{xg, y};
      const Elem expected = G.mul(G.inv(g), omega(s));
      if (omega(shifted) != expected) {
        return PropertyCheck::fail("omega(" + b.point_name(xg) + "," + b.point_name(y) + ") = " +
                                   G.name(omega(shifted)) + " but g^-1 omega(" + b.point_name(x) + "," +
                                   b.point_name(y) + ") = " + G.name(expected) + " for g = " + G.name(g));
      }
    }
  }
  return PropertyCheck::ok();
}

PropertyCheck check_diagonal_shift(const BundleWithNeighbours& bn, const GroupForm& omega) {
  const auto& b = bn.bundle();
  const auto& G = bn.group();
  for (const auto& s : omega.domain()) {
    for (Elem g = 0; g < G.size(); ++g) {
      const std::array<Index, 2> shifted{b.act(s[0], g), b.act(s[1], g)};
      if (!omega.domain().find(shifted)) {
        return PropertyCheck::fail(simplex_name(b.total(), s) + " * " + G.name(g) + " is not a neighbour pair");
      }
      const Elem expected = G.conj(g, omega(s));
      if (omega(shifted) != expected) {
        return PropertyCheck::fail("omega" + simplex_name(b.total(), shifted) + " = " + G.name(omega(shifted)) +
                                   " but g^-1 omega" + simplex_name(b.total(), s) + " g = " + G.name(expected) +
                                   " for g = " + G.name(g));
      }
    }
  }
  return PropertyCheck::ok();
}

Connection form_to_connection(const BundleWithNeighbours& bn, const GroupForm& omega) {
  if (omega.degree() != 1) throw InputError("form_to_connection needs a 1-form");
  if (auto c = check_vertical_shift(bn, omega); !c) throw Refused("vertical shift law fails: " + c.counterexample);
  if (auto c = check_diagonal_shift(bn, omega); !c) throw Refused("diagonal shift law fails: " + c.counterexample);
  if (auto c = is_normalized(bn, omega); !c) throw Refused("form is not normalized: " + c.counterexample);

  const auto& b = bn.bundle();
  auto base = bn.base_simplices(1);
  std::vector<FractionArrow> values(base->size());
  std::vector<bool> covered(base->size(), false);
  for (const auto& s : omega.domain()) {
    const Point u = s[0];
    const Point v = s[1];
    const std::array<Index, 2> back{v, u};
    const FractionArrow f = make_arrow(b, u, b.act(v, omega(back)));
    const std::size_t r = *base->find(bn.project(s));
    if (!covered[r]) {
      values[r] = f;
      covered[r] = true;
    } else if (values[r] != f) {
      throw ConsistencyError("connection from form depends on the lift of " +
                             edge_name(b, b.proj(u), b.proj(v)) + ": " + arrow_name(b, values[r]) + " vs " +
                             arrow_name(b, f));
    }
  }
  for (std::size_t r = 0; r < covered.size(); ++r) {
    if (!covered[r]) throw ConsistencyError("base edge " + simplex_name(b.base(), (*base)[r]) + " has no lift");
  }
  return Connection::from_values(bn, std::move(values));
}

GaugeForm connection_difference(const BundleWithNeighbours& bn, const Connection& nabla1, const Connection& nabla) {
  const auto& b = bn.bundle();
  return tabulate_gauge_form(bn, 1, [&](const Simplex& s) {
    return arrow_compose(b, nabla1(s[0], s[1]), nabla(s[1], s[0]));
  });
}

GaugeForm curvature(const BundleWithNeighbours& bn, const Connection& nabla) {
  const auto& b = bn.bundle();
  return tabulate_gauge_form(bn, 2, [&](const Simplex& s) {
    return arrow_compose(b, nabla(s[0], s[1]), arrow_compose(b, nabla(s[1], s[2]), nabla(s[2], s[0])));
  });
}

bool is_flat(const BundleWithNeighbours& bn, const Connection& nabla) {
  return curvature(bn, nabla) == identity_gauge_form(bn, 2);
}

CurvatureIdentityReport verify_curvature_identity(const BundleWithNeighbours& bn, const Connection& nabla) {
  const auto& b = bn.bundle();
  const auto& G = bn.group();
  const GroupForm omega = connection_to_form(bn, nabla);
  const GroupForm lhs = hat_transform(bn, curvature(bn, nabla));
  const GroupForm rhs = coboundary1(bn, omega);

  CurvatureIdentityReport report;
  report.simplices_checked = lhs.domain().size();
  for (std::size_t r = 0; r < lhs.domain().size(); ++r) {
    if (lhs.at_row(r) != rhs.at_row(r)) {
      report.mismatches.push_back(simplex_name(b.total(), lhs.domain()[r]) + ": hat R = " + G.name(lhs.at_row(r)) +
                                  ", d omega = " + G.name(rhs.at_row(r)));
    }
  }
  report.horizontal = is_horizontal(bn, rhs);
  report.equivariant = is_equivariant(bn, rhs);
  return report;
}

BaseForm descend_curvature(const BundleWithNeighbours& bn, const Connection& nabla) {
  if (!bn.group().is_commutative()) {
    throw Refused("descending curvature to the base requires a commutative group");
  }
  const GroupForm d_omega = coboundary1(bn, connection_to_form(bn, nabla));
  BaseForm omega_base = descend_invariant(bn, d_omega);
  if (!(pullback(bn, omega_base) == d_omega)) throw ConsistencyError("pullback of descended curvature differs from d omega");
  if (!(gauge_to_base_form(bn, curvature(bn, nabla)) == omega_base)) {
    throw ConsistencyError("descended curvature differs from the curvature read through the group");
  }
  return omega_base;
}

PropertyCheck check_curvature_rotation(const BundleWithNeighbours& bn, const Connection& nabla) {
  const auto& b = bn.bundle();
  const GaugeForm R = curvature(bn, nabla);
  for (std::size_t r = 0; r < R.domain().size(); ++r) {
    const auto& s = R.domain()[r];
    const std::array<Index, 3> rotated{s[1], s[2], s[0]};
    const FractionArrow expected = arrow_conjugate(b, nabla(s[1], s[0]), R.at_row(r));
    if (R(rotated) != expected) {
      return PropertyCheck::fail("R" + simplex_name(b.base(), rotated) + " = " + arrow_name(b, R(rotated)) +
                                 " but conjugating R" + simplex_name(b.base(), s) + " gives " +
                                 arrow_name(b, expected));
    }
  }
  return PropertyCheck::ok();
}

std::uint64_t connection_count(const BundleWithNeighbours& bn) {
  const std::uint64_t g = bn.group().size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < bn.base_relation().off_diagonal_pairs().size(); ++i) {
    if (count > UINT64_MAX / g) return UINT64_MAX;
    count *= g;
  }
  return count;
}

std::vector<Connection> enumerate_connections(const BundleWithNeighbours& bn, std::uint64_t ceiling) {
  const std::uint64_t count = connection_count(bn);
  if (count > ceiling) throw CeilingExceeded(count, ceiling);

  const auto& b = bn.bundle();
  const auto edges = bn.base_relation().off_diagonal_pairs();
  std::vector<std::vector<FractionArrow>> choices;
  for (auto [a, c] : edges) choices.push_back(edge_choices(b, a, c));

  std::vector<Connection> out;
  out.reserve(count);
  std::vector<std::size_t> digit(edges.size(), 0);
  while (true) {
    std::map<std::pair<Base, Base>, FractionArrow> assignment;
    for (std::size_t i = 0; i < edges.size(); ++i) assignment[edges[i]] = choices[i][digit[i]];
    out.push_back(Connection::from_edges(bn, assignment));

    std::size_t i = edges.size();
    while (i > 0) {
      --i;
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
    if (edges.empty()) return out;
  }
}

std::vector<Connection> find_flat(const BundleWithNeighbours& bn, std::uint64_t ceiling) {
  std::vector<Connection> flat;
  for (auto& nabla : enumerate_connections(bn, ceiling)) {
    if (is_flat(bn, nabla)) flat.push_back(std::move(nabla));
  }
  return flat;
}

Connection random_connection(const BundleWithNeighbours& bn, std::mt19937_64& rng) {
  const auto& b = bn.bundle();
  std::map<std::pair<Base, Base>, FractionArrow> assignment;
  for (auto [a, c] : bn.base_relation().off_diagonal_pairs()) {
    const auto choices = edge_choices(b, a, c);
    assignment[{a, c}] = choices[rng() % choices.size()];
  }
  return Connection::from_edges(bn, assignment);
}

}  // namespace gauge
