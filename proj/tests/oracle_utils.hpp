#pragma once

// Test-only oracles kept independent of the MPFR-backed enclosure path:
// logarithm ratios are bracketed through exact big-integer power
// comparisons only.

#include <utility>

#include "cantorsep/rational.hpp"

namespace cantorsep::test {

// p/q < log2(3)  <=>  2^p < 3^q, decided exactly.
inline bool below_log2_3(unsigned long p, unsigned long q) {
  Integer lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, p);
  mpz_ui_pow_ui(rhs.get_mpz_t(), 3, q);
  return lhs < rhs;
}

// Stern-Brocot bracket [lo, hi] around log2(3), refined by `steps`
// mediant descents from [1/1, 2/1].
inline std::pair<Rational, Rational> bracket_log2_3(int steps) {
  unsigned long lo_num = 1, lo_den = 1;
  unsigned long hi_num = 2, hi_den = 1;
  for (int i = 0; i < steps; ++i) {
    const unsigned long med_num = lo_num + hi_num;
    const unsigned long med_den = lo_den + hi_den;
    if (below_log2_3(med_num, med_den)) {
      lo_num = med_num;
      lo_den = med_den;
    } else {
      hi_num = med_num;
      hi_den = med_den;
    }
  }
  return {make_rational(static_cast<long>(lo_num), static_cast<long>(lo_den)),
          make_rational(static_cast<long>(hi_num), static_cast<long>(hi_den))};
}

// Bracket for eta = 1 - 1/log2(3), derived from the integer-power bracket.
inline std::pair<Rational, Rational> bracket_cover_exponent(int steps = 60) {
  const auto [l, h] = bracket_log2_3(steps);
  return {1 - 1 / l, 1 - 1 / h};
}

// Bracket for d = log(4)/log(3) = 2/log2(3).
inline std::pair<Rational, Rational> bracket_dimension(int steps = 60) {
  const auto [l, h] = bracket_log2_3(steps);
  return {2 / h, 2 / l};
}

}  // namespace cantorsep::test
