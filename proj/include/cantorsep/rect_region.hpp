#pragma once

#include <vector>

#include "cantorsep/rational.hpp"

namespace cantorsep {

// Closed axis-parallel rectangle [x0,x1] x [y0,y1] with exact corners.
struct Rect {
  Rational x0, x1, y0, y1;

  Rect() = default;
  Rect(Rational x0_, Rational x1_, Rational y0_, Rational y1_);

  Rational width() const { return x1 - x0; }
  Rational height() const { return y1 - y0; }
  Rational area() const { return width() * height(); }
  bool degenerate() const { return x0 == x1 || y0 == y1; }

  bool contains_point(const Rational& x, const Rational& y) const {
    return x0 <= x && x <= x1 && y0 <= y && y <= y1;
  }
  bool contains(const Rect& other) const {
    return x0 <= other.x0 && other.x1 <= x1 && y0 <= other.y0 && other.y1 <= y1;
  }
  bool intersects(const Rect& other) const {
    return x0 <= other.x1 && other.x0 <= x1 && y0 <= other.y1 && other.y0 <= y1;
  }

  Rect scaled(const Rational& factor) const;
  Rect translated(const Rational& dx, const Rational& dy) const;
  Rect swapped_xy() const { return Rect(y0, y1, x0, x1); }
};

// Finite union of closed rectangles. Representations are not unique; exact
// point-set comparisons go through refinement onto the common grid of all
// rectangle edges, on which every rectangle is a union of whole cells.
// Degenerate rectangles are allowed but ignored by area and comparisons
// (all comparisons are up to closure of the interiors).
class RectRegion {
 public:
  RectRegion() = default;
  explicit RectRegion(std::vector<Rect> rects) : rects_(std::move(rects)) {}

  static RectRegion unit_square();

  const std::vector<Rect>& rects() const { return rects_; }
  bool empty() const { return rects_.empty(); }
  size_t size() const { return rects_.size(); }
  void add(const Rect& r) { rects_.push_back(r); }
  void add_all(const RectRegion& other);

  // Exact area of the union (overlaps counted once).
  Rational area() const;

  bool contains_point(const Rational& x, const Rational& y) const;

  // Exact point-set subset / equality via grid refinement.
  bool covered_by(const RectRegion& other) const;
  bool same_point_set(const RectRegion& other) const;

  RectRegion swapped_xy() const;
  RectRegion scaled(const Rational& factor) const;
  RectRegion translated(const Rational& dx, const Rational& dy) const;

  // Lebesgue measure of the projection onto the given axis.
  Rational projection_length_x() const;
  Rational projection_length_y() const;

 private:
  std::vector<Rect> rects_;
};

}  // namespace cantorsep
