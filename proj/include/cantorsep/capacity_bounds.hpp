#pragma once

#include <array>
#include <string>
#include <vector>

#include "cantorsep/enclosure.hpp"
#include "cantorsep/rational.hpp"

namespace cantorsep {

// Uniform self-similar probability measure on the planar Cantor square
// C(1/3) x C(1/3): four similitudes of ratio 1/3 fixing the corners of
// [0,1]^2, equal weights 1/4. Every surviving level-k cell of side 3^-k
// carries mass exactly 4^-k.
struct CantorSquareMeasure {
  static constexpr int branch_count = 4;

  Rational contraction() const { return make_rational(1, 3); }
  Rational weight() const { return make_rational(1, 4); }
  Rational cell_mass(int level) const;

  // Corner translations of the four similitudes.
  std::array<std::pair<Rational, Rational>, 4> offsets() const;

  // Similarity dimension log(4)/log(3); satisfies 3^d = 4 exactly.
  Enclosure dimension(int precision_bits) const;
};

// Growth constant: mass(disk(x, r)) <= C * r^d for all centers x and all
// radii r. A disk with 3^-(k+1) <= r < 3^-k meets at most 9 level-k grid
// cells, each of mass 4^-k = (3^-k)^d <= (3r)^d = 4 r^d, so C = 36 works.
Enclosure frostman_constant();

// Bound B for the sup over the plane of the distance-kernel integral
// against the measure, int d(mass)/|z - w|. Splitting at distance 1 and
// over triadic annuli gives B0 = 3*C/(1 - 3^(1-d)) + 1 = 12*C + 1 since
// 3^(1-d) = 3/4 exactly. Each refinement step applies the self-similar
// contraction: of the four level-1 cells at most one is closer than 1/6 to
// any point, so B <= (3/4) B + 3 * (1/4) / (1/6), i.e. B -> (3/4) B + 9/2.
// All values are exact rationals.
Enclosure potential_sup_bound(int refine_steps = 0);

struct Assumption {
  std::string id;
  std::string statement;
  std::string reference;
};

struct CapacityDerivation {
  Rational frostman_c;        // 36
  Rational annulus_factor;    // 1/(1 - 3^(1-d)) = 4
  Rational far_field;         // 1
  Rational crude_bound;       // 12 * frostman_c + 1
  int refine_steps = 0;
  Rational potential_bound;   // after refinement
};

// A certified positive lower bound for the continuous analytic capacity of
// the Cantor square: value.lo = 1/B where B is the potential sup bound.
// The normalized distance-kernel transform of the measure is bounded by 1
// in modulus, analytic off the square, and has derivative 1/B at infinity;
// its continuity is an assumed analytic fact recorded in `assumptions`.
struct CapacityLB {
  Enclosure value;
  Enclosure potential_bound;
  CapacityDerivation derivation;
  std::vector<Assumption> assumptions;
};

CapacityLB capacity_lower_bound(int refine_steps = 0);

// Test support: exact upper bound for the measure of the closed disk of
// the given radius, as the total mass of the level-`level` cells meeting it.
Rational cell_mass_upper(const Rational& cx, const Rational& cy,
                         const Rational& radius, int level);

}  // namespace cantorsep
