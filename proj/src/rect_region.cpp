#include "cantorsep/rect_region.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cantorsep {

Rect::Rect(Rational x0_, Rational x1_, Rational y0_, Rational y1_)
    : x0(std::move(x0_)), x1(std::move(x1_)), y0(std::move(y0_)), y1(std::move(y1_)) {
  if (x0 > x1 || y0 > y1) throw std::invalid_argument("rectangle with inverted corners");
}

Rect Rect::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  return Rect(x0 * factor, x1 * factor, y0 * factor, y1 * factor);
}

Rect Rect::translated(const Rational& dx, const Rational& dy) const {
  return Rect(x0 + dx, x1 + dx, y0 + dy, y1 + dy);
}

RectRegion RectRegion::unit_square() {
  return RectRegion({Rect(Rational(0), Rational(1), Rational(0), Rational(1))});
}

void RectRegion::add_all(const RectRegion& other) {
  rects_.insert(rects_.end(), other.rects_.begin(), other.rects_.end());
}

bool RectRegion::contains_point(const Rational& x, const Rational& y) const {
  for (const auto& r : rects_) {
    if (r.contains_point(x, y)) return true;
  }
  return false;
}

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Sorted distinct edge coordinates of the nondegenerate rectangles.
void collect_cuts(const std::vector<Rect>& rects, std::vector<Rational>& xs,
                  std::vector<Rational>& ys) {
  for (const auto& r : rects) {
    if (r.degenerate()) continue;
    xs.push_back(r.x0);
    xs.push_back(r.x1);
    ys.push_back(r.y0);
    ys.push_back(r.y1);
  }
}

bool midpoint_covered(const std::vector<Rect>& rects, const Rational& x, const Rational& y) {
  for (const auto& r : rects) {
    if (!r.degenerate() && r.contains_point(x, y)) return true;
  }
  return false;
}

}  // namespace

Rational RectRegion::area() const {
  std::vector<Rational> xs, ys;
  collect_cuts(rects_, xs, ys);
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));
  Rational total(0);
  // Every rectangle is a whole union of grid cells, so a cell belongs to the
  // region iff its midpoint does.
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational xm = (xs[i] + xs[i + 1]) / 2;
    for (size_t j = 0; j + 1 < ys.size(); ++j) {
      const Rational ym = (ys[j] + ys[j + 1]) / 2;
      if (midpoint_covered(rects_, xm, ym)) {
        total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
      }
    }
  }
  return total;
}

bool RectRegion::covered_by(const RectRegion& other) const {
  for (const auto& r : rects_) {
    if (r.degenerate()) continue;
    // Refine r by the edges of the covering candidates that meet it.
    std::vector<Rational> xs{r.x0, r.x1};
    std::vector<Rational> ys{r.y0, r.y1};
    for (const auto& c : other.rects_) {
      if (c.degenerate() || !c.intersects(r)) continue;
      if (c.x0 > r.x0 && c.x0 < r.x1) xs.push_back(c.x0);
      if (c.x1 > r.x0 && c.x1 < r.x1) xs.push_back(c.x1);
      if (c.y0 > r.y0 && c.y0 < r.y1) ys.push_back(c.y0);
      if (c.y1 > r.y0 && c.y1 < r.y1) ys.push_back(c.y1);
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      const Rational xm = (xs[i] + xs[i + 1]) / 2;
      for (size_t j = 0; j + 1 < ys.size(); ++j) {
        const Rational ym = (ys[j] + ys[j + 1]) / 2;
        if (!midpoint_covered(other.rects_, xm, ym)) return false;
      }
    }
  }
  return true;
}

bool RectRegion::same_point_set(const RectRegion& other) const {
  return covered_by(other) && other.covered_by(*this);
}

RectRegion RectRegion::swapped_xy() const {
  std::vector<Rect> out;
  out.reserve(rects_.size());
  for (const auto& r : rects_) out.push_back(r.swapped_xy());
  return RectRegion(std::move(out));
}

RectRegion RectRegion::scaled(const Rational& factor) const {
  std::vector<Rect> out;
  out.reserve(rects_.size());
  for (const auto& r : rects_) out.push_back(r.scaled(factor));
  return RectRegion(std::move(out));
}

RectRegion RectRegion::translated(const Rational& dx, const Rational& dy) const {
  std::vector<Rect> out;
  out.reserve(rects_.size());
  for (const auto& r : rects_) out.push_back(r.translated(dx, dy));
  return RectRegion(std::move(out));
}

namespace {

Rational union_length(std::vector<std::pair<Rational, Rational>> intervals) {
  if (intervals.empty()) return Rational(0);
  std::sort(intervals.begin(), intervals.end());
  Rational total(0);
  Rational lo = intervals.front().first;
  Rational hi = intervals.front().second;
  for (size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first > hi) {
      total += hi - lo;
      lo = intervals[i].first;
      hi = intervals[i].second;
    } else {
      hi = std::max(hi, intervals[i].second);
    }
  }
  total += hi - lo;
  return total;
}

}  // namespace

Rational RectRegion::projection_length_x() const {
  std::vector<std::pair<Rational, Rational>> intervals;
  intervals.reserve(rects_.size());
  for (const auto& r : rects_) intervals.emplace_back(r.x0, r.x1);
  return union_length(std::move(intervals));
}

Rational RectRegion::projection_length_y() const {
  std::vector<std::pair<Rational, Rational>> intervals;
  intervals.reserve(rects_.size());
  for (const auto& r : rects_) intervals.emplace_back(r.y0, r.y1);
  return union_length(std::move(intervals));
}

}  // namespace cantorsep
