#pragma once

#include <functional>
#include <optional>

#include "cantorsep/errors.hpp"
#include "cantorsep/rational.hpp"

namespace cantorsep {

// Directed-rounded interval [lo, hi] guaranteed to contain an exact real
// quantity. Endpoints are exact rationals, so +, -, * and / are exact and
// trivially outward; only transcendental operations round, and they round
// outward through MPFR. Re-evaluating any operation at higher working
// precision yields a sub-interval of the lower-precision result.
class Enclosure {
 public:
  Enclosure() : lo_(0), hi_(0) {}
  explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
  Enclosure(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool inside(const Enclosure& outer) const { return outer.contains(*this); }
  bool is_positive() const { return lo_ > 0; }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  // Requires 0 outside [lo, hi].
  Enclosure reciprocal() const;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    return a * b.reciprocal();
  }

  friend Enclosure operator+(const Enclosure& a, const Rational& b) {
    return a + Enclosure(b);
  }
  friend Enclosure operator+(const Rational& a, const Enclosure& b) {
    return Enclosure(a) + b;
  }
  friend Enclosure operator-(const Enclosure& a, const Rational& b) {
    return a - Enclosure(b);
  }
  friend Enclosure operator-(const Rational& a, const Enclosure& b) {
    return Enclosure(a) - b;
  }
  friend Enclosure operator*(const Enclosure& a, const Rational& b) {
    return a * Enclosure(b);
  }
  friend Enclosure operator*(const Rational& a, const Enclosure& b) {
    return Enclosure(a) * b;
  }
  friend Enclosure operator/(const Enclosure& a, const Rational& b) {
    return a / Enclosure(b);
  }
  friend Enclosure operator/(const Rational& a, const Enclosure& b) {
    return Enclosure(a) / b;
  }

  // Certified strict comparison: every value of a is below every value of b.
  friend bool strictly_below(const Enclosure& a, const Enclosure& b) {
    return a.hi_ < b.lo_;
  }

 private:
  Rational lo_, hi_;
};

// Natural logarithm of a positive rational, outward rounded at the given
// working precision.
Enclosure log_enclosure(const Rational& x, int precision_bits);

// Exponential of an enclosure, outward rounded.
Enclosure exp_enclosure(const Enclosure& x, int precision_bits);

// Square root of a nonnegative rational, outward rounded.
Enclosure sqrt_enclosure(const Rational& x, int precision_bits);

// base^exponent via exp(exponent * log base); base must be positive
// (enclosure overload: base.lo > 0).
Enclosure pow_enclosure(const Rational& base, const Enclosure& exponent,
                        int precision_bits);
Enclosure pow_enclosure(const Enclosure& base, const Enclosure& exponent,
                        int precision_bits);

// Precision escalation for certified strict inequalities: start at
// start_bits, double until the attempt resolves, fail at cap_bits.
struct PrecisionPolicy {
  int start_bits = 128;
  int cap_bits = 1024;
};

// attempt(bits) returns nullopt while undecided. Throws InconclusiveError
// (tagged with `what`) if still undecided at the cap.
bool resolve_with_precision(const PrecisionPolicy& policy,
                            const std::function<std::optional<bool>(int)>& attempt,
                            const std::string& what);

}  // namespace cantorsep
