#include "cantorsep/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace cantorsep {

namespace {

struct MpfrValue {
  explicit MpfrValue(int bits) { mpfr_init2(v, bits); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_t v;
};

Rational to_rational(const mpfr_t v) {
  if (!mpfr_number_p(v)) throw std::overflow_error("non-finite enclosure endpoint");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v);
  return q;
}

void check_precision(int bits) {
  if (bits < 2) throw std::invalid_argument("working precision below 2 bits");
}

}  // namespace

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("enclosure with lo > hi");
}

Enclosure Enclosure::reciprocal() const {
  if (lo_ <= 0 && hi_ >= 0) throw std::domain_error("reciprocal of enclosure containing zero");
  return Enclosure(1 / hi_, 1 / lo_);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Rational p1 = a.lo_ * b.lo_;
  const Rational p2 = a.lo_ * b.hi_;
  const Rational p3 = a.hi_ * b.lo_;
  const Rational p4 = a.hi_ * b.hi_;
  return Enclosure(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Enclosure log_enclosure(const Rational& x, int precision_bits) {
  check_precision(precision_bits);
  if (x <= 0) throw std::domain_error("log of nonpositive value");
  MpfrValue lo(precision_bits), hi(precision_bits);
  mpfr_set_q(lo.v, x.get_mpq_t(), MPFR_RNDD);
  mpfr_log(lo.v, lo.v, MPFR_RNDD);
  mpfr_set_q(hi.v, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(hi.v, hi.v, MPFR_RNDU);
  return Enclosure(to_rational(lo.v), to_rational(hi.v));
}

Enclosure exp_enclosure(const Enclosure& x, int precision_bits) {
  check_precision(precision_bits);
  MpfrValue lo(precision_bits), hi(precision_bits);
  mpfr_set_q(lo.v, x.lo().get_mpq_t(), MPFR_RNDD);
  mpfr_exp(lo.v, lo.v, MPFR_RNDD);
  mpfr_set_q(hi.v, x.hi().get_mpq_t(), MPFR_RNDU);
  mpfr_exp(hi.v, hi.v, MPFR_RNDU);
  // exp rounded down may underflow to 0; that is still a valid lower bound.
  return Enclosure(to_rational(lo.v), to_rational(hi.v));
}

Enclosure sqrt_enclosure(const Rational& x, int precision_bits) {
  check_precision(precision_bits);
  if (x < 0) throw std::domain_error("sqrt of negative value");
  MpfrValue lo(precision_bits), hi(precision_bits);
  mpfr_set_q(lo.v, x.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(lo.v, lo.v, MPFR_RNDD);
  mpfr_set_q(hi.v, x.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(hi.v, hi.v, MPFR_RNDU);
  return Enclosure(to_rational(lo.v), to_rational(hi.v));
}

Enclosure pow_enclosure(const Rational& base, const Enclosure& exponent,
                        int precision_bits) {
  return pow_enclosure(Enclosure(base), exponent, precision_bits);
}

Enclosure pow_enclosure(const Enclosure& base, const Enclosure& exponent,
                        int precision_bits) {
  if (base.lo() <= 0) throw std::domain_error("pow with nonpositive base");
  const Enclosure ln(log_enclosure(base.lo(), precision_bits).lo(),
                     log_enclosure(base.hi(), precision_bits).hi());
  return exp_enclosure(exponent * ln, precision_bits);
}

bool resolve_with_precision(const PrecisionPolicy& policy,
                            const std::function<std::optional<bool>(int)>& attempt,
                            const std::string& what) {
  for (int bits = policy.start_bits; bits <= policy.cap_bits; bits *= 2) {
    const auto decided = attempt(bits);
    if (decided.has_value()) return *decided;
  }
  throw InconclusiveError(what);
}

}  // namespace cantorsep
