#include "cantorsep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cantorsep {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(long e) {
  Integer n = 1;
  if (e >= 0) {
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n);
  }
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(-e));
  return make_rational(Integer(1), n);
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  const unsigned long mag = static_cast<unsigned long>(e >= 0 ? e : -e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), mag);
  if (e < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    std::swap(num, den);
  }
  return make_rational(num, den);
}

Integer ceil_div(const Rational& a, const Rational& b) {
  if (b <= 0) throw std::domain_error("ceil_div requires positive divisor");
  const Rational q = a / b;
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) return std::nullopt;

  Rational value;
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d(den, 10);
    if (d == 0) return std::nullopt;
    value = make_rational(Integer(num, 10), d);
  } else if (dot != std::string::npos) {
    const std::string ip = s.substr(0, dot);
    const std::string fp = s.substr(dot + 1);
    if (!all_digits(ip) && !ip.empty()) return std::nullopt;
    if (!all_digits(fp)) return std::nullopt;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Integer whole = ip.empty() ? Integer(0) : Integer(ip, 10);
    value = make_rational(whole * scale + Integer(fp, 10), scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Rational(Integer(s, 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_str();
}

std::string to_decimal_string(const Rational& value, int digits, bool round_up) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = value * Rational(scale);
  Integer units;
  if (round_up) {
    mpz_cdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  const bool negative = units < 0;
  Integer mag = negative ? Integer(-units) : units;
  Integer whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), mag.get_mpz_t(), scale.get_mpz_t());
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += ".";
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace cantorsep
