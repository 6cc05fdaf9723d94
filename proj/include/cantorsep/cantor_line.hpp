#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cantorsep/errors.hpp"
#include "cantorsep/rational.hpp"

namespace cantorsep {

// One of the 2^level surviving intervals of the middle-thirds construction.
// Length is exactly 3^-level and endpoint denominators divide 3^level.
struct TriadicInterval {
  int level = 0;
  std::uint64_t index = 1;  // 1-based, left to right
  Rational lo, hi;

  Rational length() const { return hi - lo; }
  Rational center() const { return (lo + hi) / 2; }
};

// Open gap of width delta_n removed from the middle of a surviving
// interval: (center - width/2, center + width/2). Always strictly inside
// the middle third of its interval since width < 3^-(level+1).
struct GapInterval {
  int level = 0;
  std::uint64_t index = 1;
  Rational center;
  Rational width;

  Rational lo() const { return center - width / 2; }
  Rational hi() const { return center + width / 2; }
};

// The 2^level surviving intervals in increasing order; level 0 is [0, 1].
std::vector<TriadicInterval> cantor_intervals(int level);

// Single surviving interval, 1 <= index <= 2^level. Throws std::out_of_range.
TriadicInterval cantor_interval(int level, std::uint64_t index);

// Midpoint of cantor_interval(level, index).
Rational interval_center(int level, std::uint64_t index);

// Gap-width sequence delta_n. Every materialized level must satisfy the
// strict admissibility bound delta_n < 3^-(n+1); the bound is checked per
// level, never inferred from the parameter form.
class DeltaSequence {
 public:
  enum class Kind { geometric, explicit_list };

  // delta_n = amplitude * ratio^n. Requires 0 < ratio < 1, amplitude > 0.
  static DeltaSequence geometric(const Rational& amplitude, const Rational& ratio,
                                 std::optional<int> max_level = std::nullopt);
  static DeltaSequence explicit_list(std::vector<Rational> widths);

  // delta_n = 3^-(n+2); legible gap widths for figures and geometry demos.
  static DeltaSequence default_render();

  Kind kind() const { return kind_; }
  bool is_geometric() const { return kind_ == Kind::geometric; }

  // Last level this sequence defines, or nullopt when unbounded.
  std::optional<int> max_level() const { return max_level_; }
  bool defines_level(int n) const;

  // Throws std::out_of_range past max_level.
  Rational delta(int n) const;

  bool admissible(int n) const;  // delta_n < 3^-(n+1), strict
  // Throws InvalidSequenceError on the first inadmissible level <= m.
  void require_admissible_through(int m) const;

  // 0 < ratio < 1/3 and amplitude < 1/6; guarantees admissibility at
  // every level at once (still re-checked per level wherever used).
  bool satisfies_decay_ansatz() const;

  const Rational& amplitude() const;  // geometric kind only
  const Rational& ratio() const;      // geometric kind only
  const std::vector<Rational>& widths() const;  // explicit kind only

 private:
  DeltaSequence() = default;

  Kind kind_ = Kind::geometric;
  Rational amplitude_;
  Rational ratio_;
  std::vector<Rational> widths_;
  std::optional<int> max_level_;
};

// Gap removed from cantor_interval(level, index) under seq.
GapInterval gap_interval(const DeltaSequence& seq, int level, std::uint64_t index);

// All gaps of levels 0..depth. Ordered by (level, index) when
// by_position is false, by left endpoint when true. The gaps are pairwise
// disjoint with positive separation.
std::vector<GapInterval> all_gaps(const DeltaSequence& seq, int depth,
                                  bool by_position = false);

// [0,1] minus the open gaps of levels 0..depth, as a sorted list of
// disjoint closed intervals. 2^(depth+1) pieces.
std::vector<std::pair<Rational, Rational>> residual_intervals(const DeltaSequence& seq,
                                                              int depth);

// Exact total length of the residual set: 1 - sum_{n<=depth} 2^n delta_n.
Rational residual_length(const DeltaSequence& seq, int depth);

}  // namespace cantorsep
