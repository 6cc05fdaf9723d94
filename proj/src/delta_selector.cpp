#include "cantorsep/delta_selector.hpp"

#include <stdexcept>

namespace cantorsep {

DeltaSequence select_geometric(const Rational& epsilon, int precision_bits) {
  if (epsilon <= 0) throw std::domain_error("target epsilon must be positive");
  const Rational ratio = make_rational(1, 8);

  // The series bound 8 A^eta / (1 - 2 rho^eta) decreases as A does, so the
  // first passing exponent gives the largest admissible amplitude.
  constexpr int kMaxExponent = 1 << 20;
  for (int s = 3; s <= kMaxExponent; ++s) {
    const DeltaSequence candidate = DeltaSequence::geometric(pow2(-s), ratio);
    const SeriesBound bound = gap_series_bound(candidate, precision_bits);
    if (bound.converged() && bound.value->hi() < epsilon) return candidate;
  }
  throw InconclusiveError("no power-of-two amplitude certified below target");
}

SequenceReport verify_sequence(const DeltaSequence& seq, const Rational& epsilon,
                               int precision_bits, int levels_to_check) {
  SequenceReport report;
  report.epsilon = epsilon;
  report.precision_bits = precision_bits;

  int last = levels_to_check;
  if (seq.max_level()) last = std::min(last, *seq.max_level());
  report.levels_checked = last + 1;

  bool all_admissible = true;
  for (int n = 0; n <= last; ++n) {
    LevelCheck check;
    check.level = n;
    check.delta = seq.delta(n);
    check.limit = pow_int(make_rational(1, 3), n + 1);
    check.admissible = check.delta < check.limit;
    all_admissible = all_admissible && check.admissible;
    report.levels.push_back(check);
  }

  report.strictly_decreasing = true;
  for (int n = 0; n + 1 <= last; ++n) {
    if (seq.delta(n + 1) >= seq.delta(n)) {
      report.strictly_decreasing = false;
      break;
    }
  }

  if (!all_admissible) {
    for (const auto& check : report.levels) {
      if (!check.admissible) {
        report.verdict = SequenceReport::Verdict::fail_admissibility;
        report.detail = "gap width at level " + std::to_string(check.level) +
                        " is not below 3^-(level+1)";
        return report;
      }
    }
  }

  report.series = gap_series_bound(seq, precision_bits);
  if (!report.series.converged()) {
    report.verdict = SequenceReport::Verdict::fail_divergent;
    report.detail = "series ratio test failed: term ratio at least 1";
    return report;
  }
  if (report.series.value->hi() < epsilon) {
    report.verdict = SequenceReport::Verdict::pass;
    report.detail = "certified series bound below target";
  } else {
    report.verdict = SequenceReport::Verdict::fail_bound;
    report.detail = "certified series bound not below target";
  }
  return report;
}

std::string verdict_name(SequenceReport::Verdict verdict) {
  switch (verdict) {
    case SequenceReport::Verdict::pass:
      return "PASS";
    case SequenceReport::Verdict::fail_admissibility:
      return "FAIL_ADMISSIBILITY";
    case SequenceReport::Verdict::fail_divergent:
      return "FAIL_DIVERGENT";
    case SequenceReport::Verdict::fail_bound:
      return "FAIL_BOUND";
  }
  return "UNKNOWN";
}

}  // namespace cantorsep
