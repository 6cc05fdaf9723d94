#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cantorsep/cantor_line.hpp"
#include "cantorsep/enclosure.hpp"
#include "cantorsep/rect_region.hpp"

namespace cantorsep {

// The exponent eta = 1 - 1/log2(3) in the delta^eta covering bounds.
// Strictly positive; satisfies 3^(1-eta) = 2 exactly.
Enclosure cover_exponent(int precision_bits);

// Exact sum of the side lengths of the gap squares of levels 0..max_level,
// all of side delta: delta * (2^(max_level+1) - 1).
Rational gap_square_cover_sum(const Rational& delta, int max_level);

// Certified enclosure of 8 * delta^eta, an upper bound for the content of
// gap_square_region(delta, max_level). Requires 0 < delta < 3^(-max_level+2);
// certifies the strict inequality delta * 2^(max_level+1) < lo before
// returning, escalating precision if needed.
Enclosure gap_square_content_bound(const Rational& delta, int max_level,
                                   int precision_bits);

// Certified bound for the full gap-strip series
//   8 * sum_n 4^n 3^(n(eta-1)) delta_n^eta  =  8 * sum_n 2^n delta_n^eta.
// Geometric sequences use the closed form 8 A^eta / (1 - 2 rho^eta) after a
// certified ratio test on 2 rho^eta < 1. Explicit sequences sum their terms
// and append a certified geometric tail that assumes the sequence continues
// below delta_N * tail_ratio_base^k; same for geometric sequences truncated
// by max_level.
struct TailPolicy {
  Rational ratio_base = make_rational(1, 8);
};

struct SeriesBound {
  enum class Status { converged, divergent };
  Status status = Status::divergent;
  std::optional<Enclosure> value;  // present iff converged
  Enclosure term_ratio;            // enclosure of 2 * rho^eta (tail ratio)
  int precision_bits = 0;
  int terms_summed = 0;  // explicit terms before the closed form / tail

  bool converged() const { return status == Status::converged; }
};

SeriesBound gap_series_bound(const DeltaSequence& seq, int precision_bits,
                             const TailPolicy& tail = {});

// Brute-force covering oracle. Each rectangle of the region is tiled
// independently by ceil(w/side) x ceil(h/side) squares anchored at its
// lower-left corner; squares are counted with multiplicity across
// rectangles. The sum of sides is an upper bound for the content of the
// region under the side-length convention.
struct CoverSquare {
  Rational x0, y0, side;
};

enum class FormulaTag { lemma1, lemma2_series };

struct ContentBound {
  Enclosure value;
  std::variant<std::vector<CoverSquare>, FormulaTag> witness;
  int precision_bits = 0;

  bool has_covering() const {
    return std::holds_alternative<std::vector<CoverSquare>>(witness);
  }
  const std::vector<CoverSquare>& covering() const {
    return std::get<std::vector<CoverSquare>>(witness);
  }
};

struct CoverPolicy {
  long long budget = 1'000'000;
  bool materialize_witness = true;
};

// Throws CoverBudgetError when the square count would exceed the budget.
ContentBound region_content_upper(const RectRegion& region, const Rational& side,
                                  const CoverPolicy& policy = {});

// Exact witness check: the region is contained in the union of the squares.
bool covering_contains(const std::vector<CoverSquare>& squares,
                       const RectRegion& region);

// max(|proj_x|, |proj_y|): every side-length square cover of the region has
// side sum at least this value.
Rational projection_lower(const RectRegion& region);

}  // namespace cantorsep
