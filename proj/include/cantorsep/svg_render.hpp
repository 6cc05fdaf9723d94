#pragma once

#include <string>

#include "cantorsep/cantor_line.hpp"

namespace cantorsep {

struct RenderStyle {
  int canvas_px = 640;  // drawn size of the unit square
  int margin_px = 48;
  std::string background = "#ffffff";
  std::string square_fill = "#c9c2b4";
  std::string hole_fill = "#ffffff";
  std::string frame_color = "#1a1a1a";
  std::string gap_mark_color = "#000000";
  std::string frame_width = "1.5";
  std::string gap_mark_width = "5";
  int depth_cap = 5;
};

// Deterministic SVG 1.1 picture of stage `depth`: the filled unit square
// with the hole rectangles of the complement subtracted, grouped into one
// <g class="cross"> per covering cross, and the removed gaps drawn as bold
// segments along the bottom and left sides. Identical inputs produce
// byte-identical output; coordinates are printed with 12 fixed decimal
// digits from exact rationals.
std::string render_stage_svg(const DeltaSequence& seq, int depth,
                             const RenderStyle& style = {});

}  // namespace cantorsep
