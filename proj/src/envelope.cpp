#include "gauge/envelope.hpp"

#include "gauge/errors.hpp"

namespace gauge {

namespace {

// P extended by one more fibre, over *, which is G acting on itself from the
// right. Points [0, |P|) are P, [|P|, |P|+|G|) are group elements.
class ExtendedBundle {
 public:
  explicit ExtendedBundle(const PrincipalBundle& b) : b_(b), np_(b.total().size()) {}

  std::size_t size() const { return np_ + b_.group().size(); }
  bool is_star(Point p) const { return p >= np_; }
  Elem elem(Point p) const { return static_cast<Elem>(p - np_); }
  Point from_elem(Elem g) const { return static_cast<Point>(np_ + g); }

  // base objects are 0..|M|-1, * is |M|
  Base star() const { return static_cast<Base>(b_.base().size()); }
  Base proj(Point p) const { return is_star(p) ? star() : b_.proj(p); }

  Point act(Point p, Elem g) const {
    return is_star(p) ? from_elem(b_.group().mul(elem(p), g)) : b_.act(p, g);
  }

  Elem div(Point x, Point z) const {
    if (is_star(x) != is_star(z)) throw BookkeepingError("division across fibres");
    if (is_star(x)) return b_.group().mul(b_.group().inv(elem(x)), elem(z));
    return b_.div(x, z);
  }

  // The fixed denominator of each fibre: least point over a base point, the
  // unit over *.
  Point anchor(Base o) const { return o == star() ? from_elem(b_.group().unit()) : b_.least_in_fibre(o); }

  std::vector<Point> fibre(Base o) const {
    if (o != star()) return {b_.fibre(o).begin(), b_.fibre(o).end()};
    std::vector<Point> out;
    for (Elem g = 0; g < b_.group().size(); ++g) out.push_back(from_elem(g));
    return out;
  }

  // Representative (y', anchor) of the class of (y, x).
  std::pair<Point, Point> canonical(Point y, Point x) const {
    const Point x0 = anchor(proj(x));
    const Elem g = div(x0, x);
    return {act(y, b_.group().inv(g)), x0};
  }

  std::string name(std::pair<Point, Point> cls) const {
    const auto [y, x] = canonical(cls.first, cls.second);
    const auto& G = b_.group();
    if (!is_star(y) && !is_star(x)) return "[" + b_.point_name(y) + "," + b_.point_name(x) + "]";
    if (!is_star(y)) return "[" + b_.point_name(y) + ",*]";
    if (!is_star(x)) {
      // h x^-1 = (x h^-1)^-1
      return "[*," + b_.point_name(b_.act(x, G.inv(elem(y)))) + "]";
    }
    return "<" + G.name(elem(y)) + ">";
  }

 private:
  const PrincipalBundle& b_;
  std::size_t np_;
};

}  // namespace

FiniteGroupoid envelope(const PrincipalBundle& b) {
  if (auto report = validate_bundle(b); !report.empty()) {
    throw InputError("envelope of an invalid bundle: " + report.front().axiom + ": " + report.front().witness);
  }
  if (b.base().find(kEnvelopeBasepoint) || b.total().find(kEnvelopeBasepoint)) {
    throw InputError("envelope needs the name '*' to be free");
  }
  const ExtendedBundle ext(b);
  const std::size_t nobj = b.base().size() + 1;
  auto object_name = [&](Base o) {
    return o == ext.star() ? std::string(kEnvelopeBasepoint) : b.base_name(o);
  };

  // Arrows s -> t are the classes (y, anchor(s)) with y over t.
  std::vector<std::pair<Point, Point>> arrows;
  GroupoidTable t;
  for (Base o = 0; o < nobj; ++o) {
    t.objects.push_back(object_name(o));
    t.identities[object_name(o)] = ext.name({ext.anchor(o), ext.anchor(o)});
  }
  for (Base s = 0; s < nobj; ++s) {
    for (Base tg = 0; tg < nobj; ++tg) {
      for (Point y : ext.fibre(tg)) {
        arrows.emplace_back(y, ext.anchor(s));
        t.arrows.push_back({ext.name(arrows.back()), object_name(s), object_name(tg)});
      }
    }
  }
  for (const auto& [y, x] : arrows) {
    t.inverses[ext.name({y, x})] = ext.name({x, y});
    for (const auto& [z, w] : arrows) {
      // [z,w] after [y,x] = [z * w^-1 y, x]
      if (ext.proj(w) != ext.proj(y)) continue;
      t.compose.push_back({ext.name({z, w}), ext.name({y, x}), ext.name({ext.act(z, ext.div(w, y)), x})});
    }
  }
  return FiniteGroupoid(t);
}

}  // namespace gauge
