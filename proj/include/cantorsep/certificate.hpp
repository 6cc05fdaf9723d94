#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorsep/capacity_bounds.hpp"
#include "cantorsep/content_bounds.hpp"
#include "cantorsep/json_io.hpp"

namespace cantorsep {

inline constexpr const char* kToolName = "cantorsep";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertificateSchema = "cantorsep/certificate/v1";

// Normalization of 1-dimensional content used on the content side of the
// chain. Covers are by axis-parallel squares; `side` charges the side
// length of each square, `diameter` charges the diagonal. Capacity is
// dominated by diameter-content, which is at most sqrt(2) times
// side-content, so the side convention carries a sqrt(2) margin factor and
// the diameter convention halves the target instead.
enum class ContentConvention { side, diameter };

std::string convention_name(ContentConvention convention);

struct CertificateOptions {
  int precision_bits = 128;
  int refine_steps = 0;
  ContentConvention convention = ContentConvention::side;
};

// One comparison of the separation chain. Computed links are certified
// numerically from exact endpoints; assumed links are justified by the
// cited analytic facts and re-listed, never re-proved.
struct ChainLink {
  std::string id;
  std::string statement;
  std::string relation;  // "<" or "<="
  std::string lhs, rhs;  // display forms
  bool computed = true;
  bool holds = false;
  Rational slack;  // rhs - lhs for computed links
  std::vector<std::string> assumption_ids;
};

// Full record of the certified strict separation
//   content bound of the holes  <  capacity lower bound of the boundary,
// with every numeric comparison carrying explicit slack and every analytic
// ingredient recorded as a cited assumption.
struct CounterexampleCertificate {
  int precision_bits = 0;
  ContentConvention convention = ContentConvention::side;
  Enclosure convention_factor;  // sqrt(2) for side, 1 for diameter
  CapacityLB capacity;
  Rational target_eps;
  int seq_log2_inv_amplitude = 0;
  int seq_log2_inv_ratio = 0;
  SeriesBound content_bound;
  std::vector<ChainLink> chain;
  std::vector<Assumption> assumptions;

  DeltaSequence sequence() const;
};

// Throws InconclusiveError if a chain comparison cannot be certified below
// the precision cap.
CounterexampleCertificate build_certificate(const CertificateOptions& options = {});

Json certificate_to_json(const CounterexampleCertificate& cert);

struct ValidationResult {
  bool pass = false;
  std::string failed_link;  // empty when pass
  std::string audit_log;
};

// Independent replay: recomputes the series bound for the stored sequence
// and the potential bound from the stored derivation at the stored (or
// higher requested) precision and re-certifies every computed link.
// Throws SchemaError on malformed documents and PrecisionMismatchError
// when a lower precision than stored is requested.
ValidationResult validate_certificate(const Json& doc,
                                      std::optional<int> precision_bits = std::nullopt);

}  // namespace cantorsep
