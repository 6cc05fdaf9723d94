#include "cantorsep/stages.hpp"

#include <stdexcept>

namespace cantorsep {

Rect Cross::core() const {
  return Rect(vertical_strip.x0, vertical_strip.x1, horizontal_strip.y0,
              horizontal_strip.y1);
}

RectRegion stage_region(const DeltaSequence& seq, int depth) {
  const auto residual = residual_intervals(seq, depth);
  RectRegion region;
  for (const auto& [lo, hi] : residual) {
    region.add(Rect(lo, hi, Rational(0), Rational(1)));
  }
  for (const auto& [lo, hi] : residual) {
    region.add(Rect(Rational(0), Rational(1), lo, hi));
  }
  return region;
}

RectRegion complement_region(const DeltaSequence& seq, int depth) {
  // Quadratic in the gap count: depth 8 already yields 511^2 rectangles.
  if (depth > 8) throw std::out_of_range("refusing to enumerate holes beyond depth 8");
  const auto gaps = all_gaps(seq, depth);
  RectRegion region;
  for (const auto& gx : gaps) {
    for (const auto& gy : gaps) {
      region.add(Rect(gx.lo(), gx.hi(), gy.lo(), gy.hi()));
    }
  }
  return region;
}

Cross cross_at(const DeltaSequence& seq, int level, std::uint64_t x_index,
               std::uint64_t y_index) {
  const TriadicInterval column = cantor_interval(level, x_index);
  const TriadicInterval row = cantor_interval(level, y_index);
  const GapInterval gx = gap_interval(seq, level, x_index);
  const GapInterval gy = gap_interval(seq, level, y_index);
  Cross cross;
  cross.level = level;
  cross.x_index = x_index;
  cross.y_index = y_index;
  cross.index = (y_index - 1) * (std::uint64_t{1} << level) + x_index;
  cross.horizontal_strip = Rect(column.lo, column.hi, gy.lo(), gy.hi());
  cross.vertical_strip = Rect(gx.lo(), gx.hi(), row.lo, row.hi);
  return cross;
}

std::vector<Cross> crosses(const DeltaSequence& seq, int depth) {
  if (depth < 0) throw std::out_of_range("negative depth");
  if (depth > 8) throw std::out_of_range("refusing to enumerate crosses beyond depth 8");
  seq.require_admissible_through(depth);
  std::vector<Cross> out;
  for (int n = 0; n <= depth; ++n) {
    const std::uint64_t cells = std::uint64_t{1} << n;
    for (std::uint64_t b = 1; b <= cells; ++b) {
      for (std::uint64_t a = 1; a <= cells; ++a) {
        out.push_back(cross_at(seq, n, a, b));
      }
    }
  }
  return out;
}

CrossKey covering_cross_key(int x_level, std::uint64_t x_index, int y_level,
                            std::uint64_t y_index) {
  // The rectangle lies in the cross at the shallower of the two gap levels;
  // the deeper gap's cell is replaced by its ancestor at that level.
  const int n = std::min(x_level, y_level);
  const std::uint64_t a = (x_index - 1) >> (x_level - n);
  const std::uint64_t b = (y_index - 1) >> (y_level - n);
  return CrossKey{n, b * (std::uint64_t{1} << n) + a + 1};
}

RectRegion gap_square_region(const Rational& delta, int max_level) {
  if (delta <= 0) throw std::domain_error("square side must be positive");
  if (max_level < 0) throw std::out_of_range("negative level bound");
  const Rational half = delta / 2;
  RectRegion region;
  for (int n = 0; n <= max_level; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t j = 1; j <= count; ++j) {
      const Rational z = interval_center(n, j);
      region.add(Rect(z - half, z + half, Rational(0), delta));
    }
  }
  return region;
}

}  // namespace cantorsep
