#include "cantorsep/content_bounds.hpp"

#include <stdexcept>
#include <utility>

namespace cantorsep {

Enclosure cover_exponent(int precision_bits) {
  const Enclosure log2 = log_enclosure(Rational(2), precision_bits);
  const Enclosure log3 = log_enclosure(Rational(3), precision_bits);
  // eta = 1 - log(2)/log(3); both logs positive.
  const Enclosure ratio(log2.lo() / log3.hi(), log2.hi() / log3.lo());
  return Rational(1) - ratio;
}

Rational gap_square_cover_sum(const Rational& delta, int max_level) {
  if (delta <= 0) throw std::domain_error("square side must be positive");
  if (max_level < 0 || max_level > 62) throw std::out_of_range("level bound out of range");
  const Integer count = (Integer(1) << (max_level + 1)) - 1;
  return delta * Rational(count);
}

Enclosure gap_square_content_bound(const Rational& delta, int max_level,
                                   int precision_bits) {
  if (max_level < 0 || max_level > 62) throw std::out_of_range("level bound out of range");
  if (delta <= 0 || delta >= pow_int(Rational(3), -max_level + 2)) {
    throw std::domain_error("side must satisfy 0 < delta < 3^(-max_level+2)");
  }
  const Rational full_sum = delta * Rational(Integer(1) << (max_level + 1));
  Enclosure result = Enclosure(Rational(0));
  PrecisionPolicy policy;
  policy.start_bits = precision_bits;
  policy.cap_bits = std::max(precision_bits, 1024);
  resolve_with_precision(
      policy,
      [&](int bits) -> std::optional<bool> {
        const Enclosure eta = cover_exponent(bits);
        result = Rational(8) * pow_enclosure(delta, eta, bits);
        if (full_sum < result.lo()) return true;
        return std::nullopt;  // tighten and retry
      },
      "cover sum below 8*delta^eta");
  return result;
}

namespace {

// Enclosure of one series term 8 * 2^n * delta_n^eta.
Enclosure series_term(const Rational& delta_n, int n, const Enclosure& eta, int bits) {
  const Rational coeff = Rational(8) * Rational(Integer(1) << n);
  return coeff * pow_enclosure(delta_n, eta, bits);
}

}  // namespace

SeriesBound gap_series_bound(const DeltaSequence& seq, int precision_bits,
                             const TailPolicy& tail) {
  if (tail.ratio_base <= 0 || tail.ratio_base >= 1) {
    throw std::domain_error("tail ratio base must be in (0,1)");
  }
  const Enclosure eta = cover_exponent(precision_bits);

  SeriesBound out;
  out.precision_bits = precision_bits;

  const bool closed_form = seq.is_geometric() && !seq.max_level();
  const Rational ratio_base = closed_form ? seq.ratio() : tail.ratio_base;
  // 4^n 3^(n(eta-1)) = 2^n exactly, so consecutive terms differ by 2*rho^eta.
  const Enclosure term_ratio = Rational(2) * pow_enclosure(ratio_base, eta, precision_bits);
  out.term_ratio = term_ratio;

  if (term_ratio.lo() >= 1) {
    out.status = SeriesBound::Status::divergent;
    return out;
  }
  if (term_ratio.hi() >= 1) {
    // Neither convergence nor divergence certified at this precision.
    throw InconclusiveError("series ratio test at " + std::to_string(precision_bits) +
                            " bits");
  }

  out.status = SeriesBound::Status::converged;
  const Enclosure one_minus_ratio = Rational(1) - term_ratio;

  if (closed_form) {
    seq.require_admissible_through(0);
    const Enclosure head = Rational(8) * pow_enclosure(seq.amplitude(), eta, precision_bits);
    out.value = head / one_minus_ratio;
    out.terms_summed = 0;
    return out;
  }

  const int last = *seq.max_level();
  seq.require_admissible_through(last);
  Enclosure sum = Enclosure(Rational(0));
  Enclosure last_term = Enclosure(Rational(0));
  for (int n = 0; n <= last; ++n) {
    last_term = series_term(seq.delta(n), n, eta, precision_bits);
    sum = sum + last_term;
  }
  // Tail majorant: terms beyond the list are assumed to keep shrinking by at
  // least the certified ratio, i.e. delta_(last+k) <= delta_last * base^k.
  const Enclosure tail_sum = last_term * term_ratio / one_minus_ratio;
  out.value = Enclosure(sum.lo(), (sum + tail_sum).hi());
  out.terms_summed = last + 1;
  return out;
}

ContentBound region_content_upper(const RectRegion& region, const Rational& side,
                                  const CoverPolicy& policy) {
  if (side <= 0) throw std::domain_error("cover side must be positive");

  long long count = 0;
  std::vector<CoverSquare> squares;
  for (const auto& r : region.rects()) {
    const Integer cols = r.width() == 0 ? Integer(1) : ceil_div(r.width(), side);
    const Integer rows = r.height() == 0 ? Integer(1) : ceil_div(r.height(), side);
    const Integer cells = cols * rows;
    if (!cells.fits_slong_p() ||
        count > policy.budget - cells.get_si()) {
      throw CoverBudgetError(count, policy.budget);
    }
    count += cells.get_si();
    if (policy.materialize_witness) {
      for (Integer i = 0; i < cols; ++i) {
        for (Integer j = 0; j < rows; ++j) {
          squares.push_back(CoverSquare{r.x0 + Rational(i) * side,
                                        r.y0 + Rational(j) * side, side});
        }
      }
    }
  }

  return ContentBound{Enclosure(side * Rational(Integer(static_cast<long>(count)))),
                      std::move(squares), 0};
}

bool covering_contains(const std::vector<CoverSquare>& squares,
                       const RectRegion& region) {
  std::vector<Rect> as_rects;
  as_rects.reserve(squares.size());
  for (const auto& s : squares) {
    as_rects.push_back(Rect(s.x0, s.x0 + s.side, s.y0, s.y0 + s.side));
  }
  return region.covered_by(RectRegion(std::move(as_rects)));
}

Rational projection_lower(const RectRegion& region) {
  return std::max(region.projection_length_x(), region.projection_length_y());
}

}  // namespace cantorsep
