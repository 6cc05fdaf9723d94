#include "cantorsep/capacity_bounds.hpp"

#include <stdexcept>

namespace cantorsep {

Rational CantorSquareMeasure::cell_mass(int level) const {
  if (level < 0) throw std::out_of_range("negative level");
  return pow_int(make_rational(1, 4), level);
}

std::array<std::pair<Rational, Rational>, 4> CantorSquareMeasure::offsets() const {
  const Rational z(0);
  const Rational t = make_rational(2, 3);
  return {std::pair{z, z}, {t, z}, {z, t}, {t, t}};
}

Enclosure CantorSquareMeasure::dimension(int precision_bits) const {
  const Enclosure log4 = log_enclosure(Rational(4), precision_bits);
  const Enclosure log3 = log_enclosure(Rational(3), precision_bits);
  return Enclosure(log4.lo() / log3.hi(), log4.hi() / log3.lo());
}

Enclosure frostman_constant() { return Enclosure(Rational(36)); }

Enclosure potential_sup_bound(int refine_steps) {
  if (refine_steps < 0 || refine_steps > 64) {
    throw std::out_of_range("refine_steps out of range");
  }
  const Rational frostman = frostman_constant().hi();
  Rational bound = Rational(12) * frostman + 1;
  for (int i = 0; i < refine_steps; ++i) {
    bound = make_rational(3, 4) * bound + make_rational(9, 2);
  }
  return Enclosure(bound);
}

namespace {

std::vector<Assumption> capacity_assumptions() {
  return {
      {"frostman-growth",
       "The uniform self-similar measure on the planar Cantor square satisfies "
       "mass(disk(x,r)) <= 36 r^d with d = log4/log3, by counting the triadic "
       "grid cells a disk can meet.",
       "O. Frostman, Potentiel d'equilibre et capacite des ensembles (1935); "
       "P. Mattila, Geometry of Sets and Measures in Euclidean Spaces, ch. 8"},
      {"cauchy-transform-continuity",
       "The Cauchy transform of a measure with growth mass(disk(x,r)) <= C r^d, "
       "d > 1, is continuous on the whole plane because the local integral "
       "int_0^1 C t^(d-2) dt is finite.",
       "J. Garnett, Analytic Capacity and Measure, ch. 1"},
      {"admissible-transform",
       "The Cauchy transform of a compactly supported positive measure is "
       "analytic off the support and its derivative at infinity equals the "
       "total mass; dividing by a sup bound of the modulus yields an "
       "admissible competitor for continuous analytic capacity.",
       "J. Garnett, Analytic Capacity and Measure, ch. 1"},
  };
}

}  // namespace

CapacityLB capacity_lower_bound(int refine_steps) {
  CapacityLB out;
  out.potential_bound = potential_sup_bound(refine_steps);

  CapacityDerivation d;
  d.frostman_c = frostman_constant().hi();
  d.annulus_factor = Rational(4);
  d.far_field = Rational(1);
  d.crude_bound = Rational(12) * d.frostman_c + 1;
  d.refine_steps = refine_steps;
  d.potential_bound = out.potential_bound.hi();
  out.derivation = d;

  out.value = Enclosure(1 / out.potential_bound.hi());
  out.assumptions = capacity_assumptions();
  return out;
}

Rational cell_mass_upper(const Rational& cx, const Rational& cy,
                         const Rational& radius, int level) {
  if (level < 0 || level > 30) throw std::out_of_range("level out of range");
  if (radius < 0) throw std::domain_error("negative radius");
  const Rational r2 = radius * radius;
  const CantorSquareMeasure measure;

  // Depth-first over the cell tree, pruning subtrees whose cell misses the
  // closed disk. Squared distances keep everything rational.
  struct Frame {
    Rational x0, y0, side;
    int depth;
  };
  Rational total(0);
  std::vector<Frame> stack{{Rational(0), Rational(0), Rational(1), 0}};
  const auto offsets = measure.offsets();
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();

    Rational dx(0);
    if (cx < f.x0) dx = f.x0 - cx;
    else if (cx > f.x0 + f.side) dx = cx - (f.x0 + f.side);
    Rational dy(0);
    if (cy < f.y0) dy = f.y0 - cy;
    else if (cy > f.y0 + f.side) dy = cy - (f.y0 + f.side);
    if (dx * dx + dy * dy > r2) continue;

    if (f.depth == level) {
      total += measure.cell_mass(level);
      continue;
    }
    const Rational child = f.side / 3;
    for (const auto& [ox, oy] : offsets) {
      stack.push_back(Frame{f.x0 + ox * f.side, f.y0 + oy * f.side, child, f.depth + 1});
    }
  }
  return total;
}

}  // namespace cantorsep
