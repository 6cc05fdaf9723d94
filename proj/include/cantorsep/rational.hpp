#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cantorsep {

// Exact arbitrary-precision arithmetic. All geometry coordinates, gap
// widths and witnessed cover sums are Rational; floating point never
// enters the geometric or combinatorial computations.
using Rational = mpq_class;
using Integer = mpz_class;

// p/q in lowest terms with positive denominator.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// 2^e for possibly negative e.
Rational pow2(long e);

// base^e for possibly negative e (base must be nonzero when e < 0).
Rational pow_int(const Rational& base, long e);

// Smallest integer >= a/b. Requires b > 0.
Integer ceil_div(const Rational& a, const Rational& b);

// Accepts "p/q", plain integers and plain decimals ("0.125", "-3.5").
// No exponent notation. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_fraction_string(const Rational& value);

// Fixed-point decimal with `digits` digits after the point, rounded
// toward +inf when round_up, toward -inf otherwise. Exact and
// deterministic, suitable for enclosure endpoints in serialized output.
std::string to_decimal_string(const Rational& value, int digits, bool round_up);

}  // namespace cantorsep
