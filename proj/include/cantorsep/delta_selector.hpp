#pragma once

#include <string>
#include <vector>

#include "cantorsep/cantor_line.hpp"
#include "cantorsep/content_bounds.hpp"

namespace cantorsep {

// Smallest-machinery constructive choice of a gap sequence whose certified
// series bound falls below a target epsilon: ratio fixed at 1/8 (so the
// term ratio 2 * (1/8)^eta = 2^(1-3*eta) < 1 needs one transcendental
// evaluation), amplitude the largest power-of-two reciprocal below 1/6
// that certifies. Power-of-two parameters keep the selected sequence
// exactly reproducible across platforms.
DeltaSequence select_geometric(const Rational& epsilon, int precision_bits = 128);

struct LevelCheck {
  int level = 0;
  Rational delta;
  Rational limit;  // 3^-(level+1)
  bool admissible = false;
};

// Self-contained audit of one sequence against one target. Failures are
// verdicts, never exceptions; rerunning on the same inputs reproduces the
// identical report.
struct SequenceReport {
  enum class Verdict { pass, fail_admissibility, fail_divergent, fail_bound };

  Rational epsilon;
  int precision_bits = 0;
  int levels_checked = 0;
  std::vector<LevelCheck> levels;
  bool strictly_decreasing = false;
  SeriesBound series;
  Verdict verdict = Verdict::fail_bound;
  std::string detail;

  bool pass() const { return verdict == Verdict::pass; }
};

SequenceReport verify_sequence(const DeltaSequence& seq, const Rational& epsilon,
                               int precision_bits = 128, int levels_to_check = 64);

std::string verdict_name(SequenceReport::Verdict verdict);

}  // namespace cantorsep
