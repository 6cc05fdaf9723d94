#include "cantorsep/cantor_line.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cantorsep {

namespace {

constexpr int kMaxEnumerableLevel = 62;

void check_level(int level) {
  if (level < 0) throw std::out_of_range("negative level");
  if (level > kMaxEnumerableLevel) throw std::out_of_range("level too deep to enumerate");
}

}  // namespace

TriadicInterval cantor_interval(int level, std::uint64_t index) {
  check_level(level);
  if (index < 1 || (level < 64 && index > (std::uint64_t{1} << level))) {
    throw std::out_of_range("triadic interval index out of range");
  }
  // Bits of index-1, most significant first, choose left or right third.
  Rational lo(0);
  Rational len(1);
  const std::uint64_t path = index - 1;
  for (int bit = level - 1; bit >= 0; --bit) {
    len /= 3;
    if ((path >> bit) & 1u) lo += 2 * len;
  }
  TriadicInterval out;
  out.level = level;
  out.index = index;
  out.lo = lo;
  out.hi = lo + len;
  return out;
}

std::vector<TriadicInterval> cantor_intervals(int level) {
  check_level(level);
  if (level > 24) throw std::out_of_range("refusing to enumerate more than 2^24 intervals");
  const std::uint64_t count = std::uint64_t{1} << level;
  std::vector<TriadicInterval> out;
  out.reserve(count);
  for (std::uint64_t j = 1; j <= count; ++j) out.push_back(cantor_interval(level, j));
  return out;
}

Rational interval_center(int level, std::uint64_t index) {
  return cantor_interval(level, index).center();
}

DeltaSequence DeltaSequence::geometric(const Rational& amplitude, const Rational& ratio,
                                       std::optional<int> max_level) {
  if (amplitude <= 0) throw std::invalid_argument("amplitude must be positive");
  if (ratio <= 0 || ratio >= 1) throw std::invalid_argument("ratio must be in (0,1)");
  if (max_level && *max_level < 0) throw std::invalid_argument("negative max_level");
  DeltaSequence seq;
  seq.kind_ = Kind::geometric;
  seq.amplitude_ = amplitude;
  seq.ratio_ = ratio;
  seq.max_level_ = max_level;
  return seq;
}

DeltaSequence DeltaSequence::explicit_list(std::vector<Rational> widths) {
  if (widths.empty()) throw std::invalid_argument("empty width list");
  for (const auto& w : widths) {
    if (w <= 0) throw std::invalid_argument("gap widths must be positive");
  }
  DeltaSequence seq;
  seq.kind_ = Kind::explicit_list;
  seq.widths_ = std::move(widths);
  seq.max_level_ = static_cast<int>(seq.widths_.size()) - 1;
  return seq;
}

DeltaSequence DeltaSequence::default_render() {
  return geometric(make_rational(1, 9), make_rational(1, 3));
}

bool DeltaSequence::defines_level(int n) const {
  return n >= 0 && (!max_level_ || n <= *max_level_);
}

Rational DeltaSequence::delta(int n) const {
  if (!defines_level(n)) throw std::out_of_range("level beyond sequence range");
  if (kind_ == Kind::explicit_list) return widths_[static_cast<size_t>(n)];
  return amplitude_ * pow_int(ratio_, n);
}

bool DeltaSequence::admissible(int n) const {
  return defines_level(n) && delta(n) < pow_int(make_rational(1, 3), n + 1);
}

void DeltaSequence::require_admissible_through(int m) const {
  for (int n = 0; n <= m; ++n) {
    if (!defines_level(n)) {
      throw InvalidSequenceError(n, "sequence undefined at level " + std::to_string(n));
    }
    if (!admissible(n)) {
      throw InvalidSequenceError(
          n, "gap width at level " + std::to_string(n) + " is not below 3^-(n+1)");
    }
  }
}

bool DeltaSequence::satisfies_decay_ansatz() const {
  if (kind_ != Kind::geometric) return false;
  return ratio_ < make_rational(1, 3) && amplitude_ < make_rational(1, 6);
}

const Rational& DeltaSequence::amplitude() const {
  if (kind_ != Kind::geometric) throw std::logic_error("not a geometric sequence");
  return amplitude_;
}

const Rational& DeltaSequence::ratio() const {
  if (kind_ != Kind::geometric) throw std::logic_error("not a geometric sequence");
  return ratio_;
}

const std::vector<Rational>& DeltaSequence::widths() const {
  if (kind_ != Kind::explicit_list) throw std::logic_error("not an explicit sequence");
  return widths_;
}

GapInterval gap_interval(const DeltaSequence& seq, int level, std::uint64_t index) {
  if (!seq.admissible(level)) {
    throw InvalidSequenceError(level, "inadmissible gap width at level " + std::to_string(level));
  }
  GapInterval gap;
  gap.level = level;
  gap.index = index;
  gap.center = interval_center(level, index);
  gap.width = seq.delta(level);
  return gap;
}

std::vector<GapInterval> all_gaps(const DeltaSequence& seq, int depth, bool by_position) {
  if (depth < 0) throw std::out_of_range("negative depth");
  if (depth > 16) throw std::out_of_range("refusing to enumerate gaps beyond depth 16");
  seq.require_admissible_through(depth);
  std::vector<GapInterval> gaps;
  for (int n = 0; n <= depth; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t j = 1; j <= count; ++j) gaps.push_back(gap_interval(seq, n, j));
  }
  if (by_position) {
    std::sort(gaps.begin(), gaps.end(),
              [](const GapInterval& a, const GapInterval& b) { return a.center < b.center; });
  }
  return gaps;
}

std::vector<std::pair<Rational, Rational>> residual_intervals(const DeltaSequence& seq,
                                                              int depth) {
  const auto gaps = all_gaps(seq, depth, /*by_position=*/true);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(gaps.size() + 1);
  Rational cursor(0);
  for (const auto& gap : gaps) {
    assert(gap.lo() > cursor);
    out.emplace_back(cursor, gap.lo());
    cursor = gap.hi();
  }
  assert(cursor < 1);
  out.emplace_back(cursor, Rational(1));
  return out;
}

Rational residual_length(const DeltaSequence& seq, int depth) {
  seq.require_admissible_through(depth);
  Rational removed(0);
  for (int n = 0; n <= depth; ++n) {
    removed += Rational(Integer(1) << n) * seq.delta(n);
  }
  return 1 - removed;
}

}  // namespace cantorsep
