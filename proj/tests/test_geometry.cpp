#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cantorsep/cantor_line.hpp"
#include "cantorsep/rect_region.hpp"
#include "cantorsep/stages.hpp"

using namespace cantorsep;

namespace {

const DeltaSequence kDefault = DeltaSequence::default_render();

}  // namespace

TEST_CASE("surviving intervals of the first levels") {
  const auto level0 = cantor_intervals(0);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0].lo == 0);
  CHECK(level0[0].hi == 1);

  const auto level1 = cantor_intervals(1);
  REQUIRE(level1.size() == 2);
  CHECK(level1[0].lo == 0);
  CHECK(level1[0].hi == make_rational(1, 3));
  CHECK(level1[1].lo == make_rational(2, 3));
  CHECK(level1[1].hi == 1);

  const auto level2 = cantor_intervals(2);
  REQUIRE(level2.size() == 4);
  const Rational expected[4][2] = {
      {Rational(0), make_rational(1, 9)},
      {make_rational(2, 9), make_rational(1, 3)},
      {make_rational(2, 3), make_rational(7, 9)},
      {make_rational(8, 9), Rational(1)},
  };
  for (int j = 0; j < 4; ++j) {
    CHECK(level2[j].lo == expected[j][0]);
    CHECK(level2[j].hi == expected[j][1]);
  }
}

TEST_CASE("interval structure per level") {
  for (int n = 0; n <= 6; ++n) {
    const auto intervals = cantor_intervals(n);
    CHECK(intervals.size() == (std::uint64_t{1} << n));
    const Rational len = pow_int(make_rational(1, 3), n);
    const Integer scale = Integer(pow_int(Rational(3), n).get_num());
    for (size_t j = 0; j < intervals.size(); ++j) {
      CHECK(intervals[j].length() == len);
      // Endpoint denominators divide 3^n.
      CHECK(Rational(intervals[j].lo * Rational(scale)).get_den() == 1);
      if (j + 1 < intervals.size()) CHECK(intervals[j].hi < intervals[j + 1].lo);
    }
  }
  // Each interval sits inside exactly one parent.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& child : cantor_intervals(n)) {
      int parents = 0;
      for (const auto& parent : cantor_intervals(n - 1)) {
        if (parent.lo <= child.lo && child.hi <= parent.hi) ++parents;
      }
      CHECK(parents == 1);
    }
  }
}

TEST_CASE("interval centers") {
  CHECK(interval_center(0, 1) == make_rational(1, 2));
  CHECK(interval_center(1, 1) == make_rational(1, 6));
  CHECK(interval_center(2, 4) == make_rational(17, 18));
  CHECK_THROWS_AS(interval_center(1, 3), std::out_of_range);
  CHECK_THROWS_AS(interval_center(1, 0), std::out_of_range);
}

TEST_CASE("delta sequences") {
  CHECK(kDefault.delta(0) == make_rational(1, 9));
  CHECK(kDefault.delta(3) == pow_int(make_rational(1, 3), 5));
  CHECK(kDefault.admissible(0));
  CHECK(kDefault.admissible(12));
  CHECK(!kDefault.satisfies_decay_ansatz());  // ratio 1/3 is not < 1/3

  const DeltaSequence selected = DeltaSequence::geometric(pow2(-8), make_rational(1, 8));
  CHECK(selected.satisfies_decay_ansatz());

  CHECK_THROWS_AS(DeltaSequence::geometric(Rational(0), make_rational(1, 8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DeltaSequence::geometric(Rational(1), Rational(1)),
                  std::invalid_argument);

  const DeltaSequence wide = DeltaSequence::explicit_list({make_rational(1, 3)});
  CHECK(!wide.admissible(0));
  CHECK_THROWS_AS(wide.require_admissible_through(0), InvalidSequenceError);
  try {
    wide.require_admissible_through(0);
  } catch (const InvalidSequenceError& e) {
    CHECK(e.level() == 0);
  }

  const DeltaSequence listed =
      DeltaSequence::explicit_list({make_rational(1, 4), make_rational(1, 8)});
  CHECK(listed.max_level() == 1);
  CHECK(listed.delta(1) == make_rational(1, 8));
  CHECK_THROWS_AS(listed.delta(2), std::out_of_range);
  CHECK(listed.admissible(0));   // 1/4 < 1/3
  CHECK(!listed.admissible(1));  // 1/8 >= 1/9
}

TEST_CASE("gaps live strictly inside the middle third") {
  for (int n = 0; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t j = 1; j <= count; ++j) {
      const auto cell = cantor_interval(n, j);
      const auto gap = gap_interval(kDefault, n, j);
      const Rational third = cell.length() / 3;
      CHECK(gap.center == cell.center());
      CHECK(gap.lo() > cell.lo + third);
      CHECK(gap.hi() < cell.hi - third);
    }
  }
}

TEST_CASE("residual intervals after removing gaps") {
  const auto m0 = residual_intervals(kDefault, 0);
  REQUIRE(m0.size() == 2);
  CHECK(m0[0] == std::pair{Rational(0), make_rational(4, 9)});
  CHECK(m0[1] == std::pair{make_rational(5, 9), Rational(1)});

  CHECK(residual_length(kDefault, 0) == make_rational(8, 9));

  for (int m = 0; m <= 4; ++m) {
    const auto pieces = residual_intervals(kDefault, m);
    CHECK(pieces.size() == (std::uint64_t{2} << m));
    Rational total(0);
    for (const auto& [lo, hi] : pieces) total += hi - lo;
    CHECK(total == residual_length(kDefault, m));
  }

  // Deeper stages refine: every piece at depth m+1 lies inside one at depth m.
  for (int m = 0; m <= 3; ++m) {
    const auto coarse = residual_intervals(kDefault, m);
    for (const auto& [lo, hi] : residual_intervals(kDefault, m + 1)) {
      int hosts = 0;
      for (const auto& [clo, chi] : coarse) {
        if (clo <= lo && hi <= chi) ++hosts;
      }
      CHECK(hosts == 1);
    }
  }

  const DeltaSequence bad = DeltaSequence::explicit_list({make_rational(1, 3)});
  CHECK_THROWS_AS(residual_intervals(bad, 0), InvalidSequenceError);
}

TEST_CASE("rect region canonical comparisons") {
  const RectRegion whole = RectRegion::unit_square();
  RectRegion halves;
  halves.add(Rect(Rational(0), make_rational(1, 2), Rational(0), Rational(1)));
  halves.add(Rect(make_rational(1, 2), Rational(1), Rational(0), Rational(1)));
  RectRegion overlapping;
  overlapping.add(Rect(Rational(0), make_rational(2, 3), Rational(0), Rational(1)));
  overlapping.add(Rect(make_rational(1, 3), Rational(1), Rational(0), Rational(1)));

  CHECK(whole.same_point_set(halves));
  CHECK(whole.same_point_set(overlapping));
  CHECK(overlapping.area() == 1);
  CHECK(!whole.same_point_set(RectRegion(
      {Rect(Rational(0), make_rational(1, 2), Rational(0), Rational(1))})));

  RectRegion partial;
  partial.add(Rect(Rational(0), make_rational(1, 3), Rational(0), Rational(1)));
  CHECK(partial.covered_by(whole));
  CHECK(!whole.covered_by(partial));

  CHECK(whole.projection_length_x() == 1);
  CHECK(partial.projection_length_y() == 1);
  CHECK(partial.projection_length_x() == make_rational(1, 3));

  const RectRegion scaled = partial.scaled(make_rational(1, 3));
  CHECK(scaled.rects()[0].x1 == make_rational(1, 9));
  CHECK(scaled.area() == partial.area() / 9);
}

TEST_CASE("stage region area bookkeeping") {
  for (int m = 0; m <= 3; ++m) {
    const Rational e = residual_length(kDefault, m);
    const Rational expected = 2 * e - e * e;
    CHECK(stage_region(kDefault, m).area() == expected);
  }
  // Depth 0: area 80/81, one hole square of area delta_0^2.
  CHECK(stage_region(kDefault, 0).area() == make_rational(80, 81));
  CHECK(1 - stage_region(kDefault, 0).area() == make_rational(1, 81));
}

TEST_CASE("stages nest") {
  for (int m = 0; m <= 2; ++m) {
    CHECK(stage_region(kDefault, m + 1).covered_by(stage_region(kDefault, m)));
  }
}

TEST_CASE("complement region structure") {
  const auto m0 = complement_region(kDefault, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0.rects()[0].x0 == make_rational(4, 9));
  CHECK(m0.rects()[0].x1 == make_rational(5, 9));
  CHECK(m0.rects()[0].y0 == make_rational(4, 9));
  CHECK(m0.rects()[0].y1 == make_rational(5, 9));

  const auto m1 = complement_region(kDefault, 1);
  CHECK(m1.size() == 9);
  CHECK(m1.size() > m0.size());
  for (const auto& r : m1.rects()) {
    CHECK(r.width() <= kDefault.delta(0));
    CHECK(r.height() <= kDefault.delta(0));
  }

  for (int m = 0; m <= 3; ++m) {
    CHECK(complement_region(kDefault, m).area() ==
          1 - stage_region(kDefault, m).area());
  }
}

TEST_CASE("complement is symmetric under coordinate swap") {
  for (int m = 0; m <= 3; ++m) {
    const auto holes = complement_region(kDefault, m);
    CHECK(holes.same_point_set(holes.swapped_xy()));
  }
}

TEST_CASE("cross enumeration") {
  CHECK(crosses(kDefault, 0).size() == 1);
  CHECK(crosses(kDefault, 1).size() == 5);
  CHECK(crosses(kDefault, 2).size() == 21);

  // Level-0 cross spans the whole square through the central gap.
  const Cross base = crosses(kDefault, 0)[0];
  const GapInterval g0 = gap_interval(kDefault, 0, 1);
  CHECK(base.vertical_strip.x0 == g0.lo());
  CHECK(base.vertical_strip.x1 == g0.hi());
  CHECK(base.vertical_strip.y0 == 0);
  CHECK(base.vertical_strip.y1 == 1);
  CHECK(base.horizontal_strip.x0 == 0);
  CHECK(base.horizontal_strip.x1 == 1);

  // Level-1 flat order: index 2 pairs the second column gap with the first
  // row cell; index 3 is the transpose. Offset 1 past the level-0 cross.
  const auto level1 = crosses(kDefault, 1);
  const GapInterval g11 = gap_interval(kDefault, 1, 1);
  const GapInterval g12 = gap_interval(kDefault, 1, 2);
  CHECK(level1[2].index == 2);
  CHECK(level1[2].vertical_strip.x0 == g12.lo());
  CHECK(level1[2].vertical_strip.y1 == make_rational(1, 3));
  CHECK(level1[2].horizontal_strip.x0 == make_rational(2, 3));
  CHECK(level1[2].horizontal_strip.y0 == g11.lo());
  CHECK(level1[3].index == 3);
  CHECK(level1[3].vertical_strip.x0 == g11.lo());
  CHECK(level1[3].vertical_strip.y0 == make_rational(2, 3));
  CHECK(level1[3].horizontal_strip.x1 == make_rational(1, 3));
  CHECK(level1[3].horizontal_strip.y0 == g12.lo());

  // Level-2 index 5 pairs the first column gap with the second row cell.
  const auto level2 = crosses(kDefault, 2);
  const Cross p25 = level2[1 + 4 + 4];
  CHECK(p25.level == 2);
  CHECK(p25.index == 5);
  CHECK(p25.x_index == 1);
  CHECK(p25.y_index == 2);
  CHECK(p25.vertical_strip.y0 == make_rational(2, 9));
  CHECK(p25.vertical_strip.y1 == make_rational(1, 3));
  CHECK(p25.horizontal_strip.x1 == make_rational(1, 9));
}

TEST_CASE("cross strip dimensions") {
  for (int m = 0; m <= 2; ++m) {
    for (const auto& cross : crosses(kDefault, m)) {
      if (cross.level != m) continue;
      const Rational delta = kDefault.delta(m);
      const Rational cell = pow_int(make_rational(1, 3), m);
      CHECK(cross.horizontal_strip.height() == delta);
      CHECK(cross.horizontal_strip.width() == cell);
      CHECK(cross.vertical_strip.width() == delta);
      CHECK(cross.vertical_strip.height() == cell);
      const Rect core = cross.core();
      CHECK(core.width() == delta);
      CHECK(core.height() == delta);
      CHECK(cross.horizontal_strip.contains(core));
      CHECK(cross.vertical_strip.contains(core));
    }
  }
}

TEST_CASE("every hole rectangle lies in exactly one cross") {
  for (int m = 0; m <= 3; ++m) {
    const auto all = crosses(kDefault, m);
    const auto gaps = all_gaps(kDefault, m);
    std::map<std::pair<int, std::uint64_t>, const Cross*> by_key;
    for (const auto& cross : all) by_key[{cross.level, cross.index}] = &cross;

    for (const auto& gx : gaps) {
      for (const auto& gy : gaps) {
        const Rect hole(gx.lo(), gx.hi(), gy.lo(), gy.hi());
        int hosts = 0;
        for (const auto& cross : all) {
          if (cross.horizontal_strip.contains(hole) ||
              cross.vertical_strip.contains(hole)) {
            ++hosts;
          }
        }
        CHECK(hosts == 1);
        // covering_cross_key names that unique cross.
        const CrossKey key = covering_cross_key(gx.level, gx.index, gy.level, gy.index);
        const Cross* host = by_key.at({key.level, key.index});
        CHECK((host->horizontal_strip.contains(hole) ||
               host->vertical_strip.contains(hole)));
      }
    }
  }
}

TEST_CASE("hole rectangles on a gap strip are no larger than its gap width") {
  // Rectangles meeting the horizontal strip of the first level-n cross can
  // only pair its gap with gaps of level >= n, so for a decreasing sequence
  // both sides stay at or below delta_n.
  for (int m = 0; m <= 3; ++m) {
    const auto holes = complement_region(kDefault, m);
    for (int n = 0; n <= m; ++n) {
      const Rect strip = cross_at(kDefault, n, 1, 1).horizontal_strip;
      const Rational delta = kDefault.delta(n);
      for (const auto& r : holes.rects()) {
        if (!r.intersects(strip)) continue;
        CHECK(r.width() <= delta);
        CHECK(r.height() <= delta);
      }
    }
  }
}

TEST_CASE("residual sets shrink for any admissible sequence") {
  const std::vector<DeltaSequence> sequences = {
      DeltaSequence::geometric(make_rational(1, 7), make_rational(1, 5)),
      DeltaSequence::explicit_list({make_rational(1, 5), make_rational(1, 11),
                                    make_rational(1, 50)}),
      DeltaSequence::geometric(pow2(-9), make_rational(1, 8)),
  };
  for (const auto& seq : sequences) {
    for (int m = 0; m + 1 <= 2; ++m) {
      if (!seq.defines_level(m + 1)) continue;
      const auto coarse = residual_intervals(seq, m);
      for (const auto& [lo, hi] : residual_intervals(seq, m + 1)) {
        bool hosted = false;
        for (const auto& [clo, chi] : coarse) {
          hosted = hosted || (clo <= lo && hi <= chi);
        }
        CHECK(hosted);
      }
      CHECK(residual_length(seq, m + 1) < residual_length(seq, m));
    }
  }
}

TEST_CASE("crosses cover the complement exactly") {
  for (int m = 0; m <= 4; ++m) {
    RectRegion cover;
    for (const auto& cross : crosses(kDefault, m)) cover.add_all(cross.as_region());
    CHECK(complement_region(kDefault, m).covered_by(cover));
  }
}

TEST_CASE("gap square row configuration") {
  const Rational delta = make_rational(1, 27);
  const auto region = gap_square_region(delta, 2);
  CHECK(region.size() == 7);
  for (const auto& r : region.rects()) {
    CHECK(r.width() == delta);
    CHECK(r.height() == delta);
    CHECK(r.y0 == 0);
  }
  // Disjoint at these parameters, so the area is the full sum of squares.
  CHECK(region.area() == 7 * delta * delta);
}
