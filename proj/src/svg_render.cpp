#include "cantorsep/svg_render.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cantorsep/rect_region.hpp"
#include "cantorsep/stages.hpp"

namespace cantorsep {

namespace {

std::string px(const Rational& value) {
  return to_decimal_string(value, 12, /*round_up=*/false);
}

struct Mapper {
  Rational scale;
  Rational margin;

  Rational x(const Rational& u) const { return margin + scale * u; }
  // SVG y grows downward.
  Rational y(const Rational& v) const { return margin + scale * (1 - v); }
};

void emit_rect(std::ostringstream& out, const std::string& cls, const Mapper& m,
               const Rect& r, const std::string& fill) {
  out << "  <rect class=\"" << cls << "\" x=\"" << px(m.x(r.x0)) << "\" y=\""
      << px(m.y(r.y1)) << "\" width=\"" << px(r.width() * m.scale)
      << "\" height=\"" << px(r.height() * m.scale) << "\" fill=\"" << fill
      << "\"/>\n";
}

}  // namespace

std::string render_stage_svg(const DeltaSequence& seq, int depth,
                             const RenderStyle& style) {
  if (depth < 0) throw std::domain_error("negative render depth");
  if (depth > style.depth_cap) throw std::domain_error("render depth cap exceeded");
  seq.require_admissible_through(depth);

  const Mapper m{Rational(style.canvas_px), Rational(style.margin_px)};
  const int total = style.canvas_px + 2 * style.margin_px;

  const auto gaps = all_gaps(seq, depth);

  // Hole rectangles of the complement, grouped by the unique covering cross.
  std::map<std::pair<int, std::uint64_t>, std::vector<Rect>> holes;
  for (const auto& gx : gaps) {
    for (const auto& gy : gaps) {
      const CrossKey key = covering_cross_key(gx.level, gx.index, gy.level, gy.index);
      holes[{key.level, key.index}].push_back(
          Rect(gx.lo(), gx.hi(), gy.lo(), gy.hi()));
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << total << "\" height=\"" << total << "\" viewBox=\"0 0 " << total << " "
      << total << "\">\n";
  out << "  <title>stage " << depth << " of the cross construction</title>\n";
  out << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << total
      << "\" height=\"" << total << "\" fill=\"" << style.background << "\"/>\n";
  emit_rect(out, "stage", m, Rect(Rational(0), Rational(1), Rational(0), Rational(1)),
            style.square_fill);

  out << "  <g class=\"holes\">\n";
  for (const auto& [key, rects] : holes) {
    out << "  <g class=\"cross\" data-level=\"" << key.first << "\" data-index=\""
        << key.second << "\">\n";
    for (const auto& r : rects) emit_rect(out, "hole", m, r, style.hole_fill);
    out << "  </g>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"gap-marks\" data-side=\"bottom\">\n";
  for (const auto& gap : gaps) {
    out << "  <line class=\"gap-mark\" x1=\"" << px(m.x(gap.lo())) << "\" y1=\""
        << px(m.y(Rational(0))) << "\" x2=\"" << px(m.x(gap.hi())) << "\" y2=\""
        << px(m.y(Rational(0))) << "\" stroke=\"" << style.gap_mark_color
        << "\" stroke-width=\"" << style.gap_mark_width << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g class=\"gap-marks\" data-side=\"left\">\n";
  for (const auto& gap : gaps) {
    out << "  <line class=\"gap-mark\" x1=\"" << px(m.x(Rational(0))) << "\" y1=\""
        << px(m.y(gap.lo())) << "\" x2=\"" << px(m.x(Rational(0))) << "\" y2=\""
        << px(m.y(gap.hi())) << "\" stroke=\"" << style.gap_mark_color
        << "\" stroke-width=\"" << style.gap_mark_width << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <rect class=\"frame\" x=\"" << px(m.x(Rational(0))) << "\" y=\""
      << px(m.y(Rational(1))) << "\" width=\"" << px(m.scale) << "\" height=\""
      << px(m.scale) << "\" fill=\"none\" stroke=\"" << style.frame_color
      << "\" stroke-width=\"" << style.frame_width << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace cantorsep
