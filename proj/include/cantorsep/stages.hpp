#pragma once

#include <cstdint>
#include <vector>

#include "cantorsep/cantor_line.hpp"
#include "cantorsep/rect_region.hpp"

namespace cantorsep {

// Union of one horizontal and one vertical gap strip inside a surviving
// level-n cell. There are 4^n congruent crosses per level, indexed by the
// pair (x_index, y_index) of the cell; the flat index scans y_index in the
// outer loop and x_index in the inner one:
//   index = (y_index - 1) * 2^n + x_index.
struct Cross {
  int level = 0;
  std::uint64_t index = 1;
  std::uint64_t x_index = 1;  // surviving column, 1-based
  std::uint64_t y_index = 1;  // surviving row, 1-based

  Rect horizontal_strip;  // column cell x gap: width 3^-n, height delta_n
  Rect vertical_strip;    // gap x row cell:   width delta_n, height 3^-n

  // The delta_n x delta_n square where the strips meet.
  Rect core() const;
  RectRegion as_region() const { return RectRegion({horizontal_strip, vertical_strip}); }
};

// Stage m of the construction: the union over residual intervals I of the
// strips I x [0,1] and [0,1] x I. Area is exactly 2e - e^2 where e is the
// residual length.
RectRegion stage_region(const DeltaSequence& seq, int depth);

// Closure of [0,1]^2 minus stage_region: the finite union of products
// gap x gap over all pairs of gaps of levels <= depth. Rectangles are
// pairwise disjoint, ordered by (x level, x index, y level, y index).
RectRegion complement_region(const DeltaSequence& seq, int depth);

// All crosses of levels 0..depth, 4^n per level, ordered by level then index.
std::vector<Cross> crosses(const DeltaSequence& seq, int depth);
Cross cross_at(const DeltaSequence& seq, int level, std::uint64_t x_index,
               std::uint64_t y_index);

// Level and flat index of the unique cross containing the complement
// rectangle gap(x_level, x_index) x gap(y_level, y_index).
struct CrossKey {
  int level;
  std::uint64_t index;
};
CrossKey covering_cross_key(int x_level, std::uint64_t x_index, int y_level,
                            std::uint64_t y_index);

// Row of squares of side `delta` sitting on [0, delta], one centered over
// every gap center of levels 0..max_level. The configuration behind the
// single-scale content bound; squares may overlap at the deepest levels.
RectRegion gap_square_region(const Rational& delta, int max_level);

}  // namespace cantorsep
