#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorsep/content_bounds.hpp"
#include "cantorsep/stages.hpp"

using namespace cantorsep;

namespace {

Rational triadic(int t) { return pow_int(make_rational(1, 3), t); }

// Partial sum of the gap-strip series through level m, summed term by term.
Enclosure partial_series(const DeltaSequence& seq, int m, int bits) {
  const Enclosure eta = cover_exponent(bits);
  Enclosure sum = Enclosure(Rational(0));
  for (int n = 0; n <= m; ++n) {
    sum = sum + Rational(8) * Rational(Integer(1) << n) *
                    pow_enclosure(seq.delta(n), eta, bits);
  }
  return sum;
}

}  // namespace

TEST_CASE("gap square cover sum") {
  const Rational delta = make_rational(1, 4);
  CHECK(gap_square_cover_sum(delta, 2) == 7 * delta);
  CHECK(gap_square_cover_sum(delta, 0) == delta);
  CHECK(gap_square_cover_sum(make_rational(1, 27), 2) == make_rational(7, 27));
  CHECK_THROWS_AS(gap_square_cover_sum(Rational(0), 2), std::domain_error);
}

TEST_CASE("single-scale content bound") {
  // Side 1 at level 0: the bound is exactly 8.
  const Enclosure eight = gap_square_content_bound(Rational(1), 0, 128);
  CHECK(eight.contains(Rational(8)));
  CHECK(eight.width() == 0);

  // Side out of range is rejected: needs delta < 3^(-max_level+2).
  CHECK_THROWS_AS(gap_square_content_bound(make_rational(1, 3), 4, 128),
                  std::domain_error);
  CHECK_THROWS_AS(gap_square_content_bound(Rational(9), 0, 128), std::domain_error);
  CHECK_THROWS_AS(gap_square_content_bound(Rational(0), 0, 128), std::domain_error);

  // 8 * (1/9)^eta equals 32/9 exactly, by the identity 3^eta = 3/2.
  const Enclosure bound = gap_square_content_bound(make_rational(1, 9), 3, 128);
  CHECK(bound.contains(make_rational(32, 9)));
  CHECK(bound.width() <
        make_rational(Integer(1), Integer("1000000000000000000000000000000")));
}

TEST_CASE("single-scale bound dominates the cover sum") {
  for (int t = 3; t <= 8; ++t) {
    const Rational delta = triadic(t);
    const int deepest = t + 1;  // largest level bound with delta < 3^(-n0+2)
    CHECK(delta < pow_int(Rational(3), -deepest + 2));
    CHECK_THROWS_AS(gap_square_content_bound(delta, deepest + 1, 128),
                    std::domain_error);
    const Enclosure bound = gap_square_content_bound(delta, deepest, 128);
    const Rational cover = gap_square_cover_sum(delta, deepest);
    CHECK(cover < bound.lo());
    CHECK(delta * Rational(Integer(1) << (deepest + 1)) < bound.lo());
  }
}

TEST_CASE("series bound for geometric sequences") {
  const DeltaSequence seq = DeltaSequence::geometric(pow2(-46), make_rational(1, 8));
  const SeriesBound bound = gap_series_bound(seq, 128);
  REQUIRE(bound.converged());
  CHECK(bound.term_ratio.lo() > make_rational(9283, 10000));
  CHECK(bound.term_ratio.hi() < make_rational(9284, 10000));
  CHECK(bound.value->lo() > 0);
  CHECK(bound.value->hi() < make_rational(1, 1000));

  // The closed form dominates every partial sum.
  const Enclosure partial = partial_series(seq, 32, 128);
  CHECK(partial.hi() < bound.value->hi());
}

TEST_CASE("series divergence is a verdict") {
  // Term ratio 2 * (1/4)^eta is about 1.199.
  const DeltaSequence quarter =
      DeltaSequence::geometric(make_rational(1, 7), make_rational(1, 4));
  const SeriesBound diverged = gap_series_bound(quarter, 128);
  CHECK(!diverged.converged());
  CHECK(!diverged.value.has_value());
  CHECK(diverged.term_ratio.lo() > make_rational(1199, 1000));
  CHECK(diverged.term_ratio.hi() < make_rational(1200, 1000));

  // The legibility default delta_n = 3^(-n-2) also diverges: ratio is 4/3.
  const SeriesBound render = gap_series_bound(DeltaSequence::default_render(), 128);
  CHECK(!render.converged());
  CHECK(render.term_ratio.contains(make_rational(4, 3)));
}

TEST_CASE("explicit series with certified tail") {
  const std::vector<Rational> widths{pow2(-4), pow2(-7), pow2(-10)};
  const DeltaSequence listed = DeltaSequence::explicit_list(widths);
  const SeriesBound bound = gap_series_bound(listed, 128);
  REQUIRE(bound.converged());
  CHECK(bound.terms_summed == 3);

  // Same head as the geometric sequence with ratio 1/8; the two certified
  // bounds enclose the same series value.
  const DeltaSequence full = DeltaSequence::geometric(pow2(-4), make_rational(1, 8));
  const SeriesBound closed = gap_series_bound(full, 128);
  REQUIRE(closed.converged());
  CHECK(bound.value->lo() <= closed.value->hi());
  CHECK(closed.value->lo() <= bound.value->hi());

  // Shrinking one term never raises the certified bound.
  std::vector<Rational> smaller = widths;
  smaller[1] = pow2(-9);
  const SeriesBound lowered =
      gap_series_bound(DeltaSequence::explicit_list(smaller), 128);
  REQUIRE(lowered.converged());
  CHECK(lowered.value->hi() <= bound.value->hi());
}

TEST_CASE("covering oracle basics") {
  const Rational delta = make_rational(1, 16);
  RectRegion square;
  square.add(Rect(Rational(0), delta, Rational(0), delta));
  const ContentBound self = region_content_upper(square, delta);
  CHECK(self.value.hi() == delta);
  REQUIRE(self.has_covering());
  CHECK(self.covering().size() == 1);
  CHECK(covering_contains(self.covering(), square));

  // Non-divisible sides round up.
  RectRegion wide;
  wide.add(Rect(Rational(0), make_rational(5, 16), Rational(0), delta));
  const ContentBound padded = region_content_upper(wide, delta);
  CHECK(padded.covering().size() == 5);
  CHECK(covering_contains(padded.covering(), wide));
}

TEST_CASE("covering oracle reproduces the gap-square cover sum") {
  const Rational delta = make_rational(1, 27);
  const auto region = gap_square_region(delta, 2);
  const ContentBound bound = region_content_upper(region, delta);
  CHECK(bound.value.hi() == gap_square_cover_sum(delta, 2));
  CHECK(bound.covering().size() == 7);
  CHECK(covering_contains(bound.covering(), region));

  // Same at the deepest admissible level, where sibling squares overlap.
  for (int t = 3; t <= 6; ++t) {
    const Rational side = triadic(t);
    const auto deep = gap_square_region(side, t + 1);
    const ContentBound witnessed = region_content_upper(deep, side);
    CHECK(witnessed.value.hi() == gap_square_cover_sum(side, t + 1));
    CHECK(covering_contains(witnessed.covering(), deep));
  }
}

TEST_CASE("cover budget is enforced") {
  CoverPolicy tight;
  tight.budget = 100;
  tight.materialize_witness = false;
  CHECK_THROWS_AS(
      region_content_upper(RectRegion::unit_square(), make_rational(1, 20), tight),
      CoverBudgetError);
  try {
    region_content_upper(RectRegion::unit_square(), make_rational(1, 20), tight);
  } catch (const CoverBudgetError& e) {
    CHECK(e.counted() <= 100);
  }
}

TEST_CASE("oracle bound for the depth-1 complement") {
  const DeltaSequence seq = DeltaSequence::default_render();
  const RectRegion holes = complement_region(seq, 1);

  const ContentBound with_d1 = region_content_upper(holes, seq.delta(1));
  CHECK(with_d1.value.hi() == make_rational(25, 27));
  const ContentBound with_d0 = region_content_upper(holes, seq.delta(0));
  CHECK(with_d0.value.hi() == 1);

  const Rational best = std::min(with_d0.value.hi(), with_d1.value.hi());
  CHECK(best == make_rational(25, 27));
  CHECK(best <= partial_series(seq, 1, 128).lo());
}

TEST_CASE("covering bound scales triadically") {
  const DeltaSequence seq = DeltaSequence::default_render();
  const RectRegion holes = complement_region(seq, 1);
  for (int s = 1; s <= 2; ++s) {
    const Rational lambda = triadic(s);
    for (const Rational& side : {seq.delta(0), seq.delta(1)}) {
      const ContentBound plain = region_content_upper(holes, side);
      const ContentBound scaled =
          region_content_upper(holes.scaled(lambda), lambda * side);
      CHECK(scaled.value.hi() == lambda * plain.value.hi());
      CHECK(scaled.covering().size() == plain.covering().size());
    }
  }
}

TEST_CASE("covering bound is subadditive under union") {
  const DeltaSequence seq = DeltaSequence::default_render();
  const RectRegion a = complement_region(seq, 0);
  const RectRegion b = complement_region(seq, 1);
  RectRegion both = a;
  both.add_all(b);
  const Rational side = seq.delta(1);
  CHECK(region_content_upper(both, side).value.hi() <=
        region_content_upper(a, side).value.hi() +
            region_content_upper(b, side).value.hi());
}

TEST_CASE("sandwich at disjoint gap-square configurations") {
  // With the level bound two below the side scale the squares are disjoint,
  // so projection, cover sum and witnessed oracle sum all agree exactly and
  // sit strictly under the certified analytic bound.
  for (int t = 3; t <= 10; ++t) {
    const Rational delta = triadic(t);
    const int levels = t - 1;
    const auto region = gap_square_region(delta, levels);
    const Rational cover = gap_square_cover_sum(delta, levels);
    CHECK(projection_lower(region) == cover);
    CoverPolicy fast;
    fast.materialize_witness = false;
    CHECK(region_content_upper(region, delta, fast).value.hi() == cover);
    CHECK(cover < gap_square_content_bound(delta, levels, 128).lo());
  }
}

TEST_CASE("covering bounds stay below the full series bound") {
  // For a certified convergent sequence the oracle bound over the truncated
  // complement is dominated by the full series bound at every depth.
  const DeltaSequence seq = DeltaSequence::geometric(pow2(-46), make_rational(1, 8));
  const SeriesBound series = gap_series_bound(seq, 128);
  REQUIRE(series.converged());
  CoverPolicy fast;
  fast.materialize_witness = false;
  for (int m = 0; m <= 4; ++m) {
    const RectRegion holes = complement_region(seq, m);
    Rational best = region_content_upper(holes, seq.delta(0), fast).value.hi();
    for (int j = 1; j <= m; ++j) {
      try {
        best = std::min(best,
                        region_content_upper(holes, seq.delta(j), fast).value.hi());
      } catch (const CoverBudgetError&) {
        // Fine sides on coarse holes blow the square budget and are never
        // optimal here; the coarser sides already witness the bound.
      }
    }
    CHECK(best <= series.value->hi());
  }
}

TEST_CASE("projection lower bounds") {
  CHECK(projection_lower(RectRegion::unit_square()) == 1);

  const Rational delta = make_rational(1, 27);
  RectRegion square;
  square.add(Rect(Rational(0), delta, Rational(0), delta));
  CHECK(projection_lower(square) == delta);

  // Disjoint gap squares: the projection matches the cover sum exactly.
  const auto disjoint = gap_square_region(delta, 2);
  CHECK(projection_lower(disjoint) == gap_square_cover_sum(delta, 2));

  // At the deepest admissible level the sibling squares overlap, so the
  // projection drops strictly below the multiplicity-counted sum.
  const auto overlapping = gap_square_region(delta, 4);
  CHECK(projection_lower(overlapping) < gap_square_cover_sum(delta, 4));

  // Any witnessed cover dominates the projection.
  for (const Rational& side : {delta, make_rational(1, 9), make_rational(1, 3)}) {
    CHECK(projection_lower(disjoint) <=
          region_content_upper(disjoint, side).value.hi());
  }
}
