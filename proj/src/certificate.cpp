#include "cantorsep/certificate.hpp"

#include <sstream>
#include <stdexcept>

#include "cantorsep/delta_selector.hpp"

namespace cantorsep {

namespace {

std::string short_decimal(const Rational& value, bool round_up) {
  return to_decimal_string(value, 12, round_up);
}

std::vector<Assumption> chain_assumptions() {
  return {
      {"capacity-below-content",
       "Continuous analytic capacity is dominated by 1-dimensional Hausdorff "
       "content; with content normalized by square side lengths the "
       "domination constant is at most sqrt(2).",
       "A. G. Vitushkin, The analytic capacity of sets in problems of "
       "approximation theory, Russian Math. Surveys 22 (1967)"},
      {"capacity-monotone",
       "Continuous analytic capacity is monotone under set inclusion.",
       "T. W. Gamelin, Uniform Algebras, ch. VIII"},
      {"boundary-negligible",
       "The boundary of the unit square is negligible for continuous "
       "analytic capacity: removing it from the complement of the interior "
       "does not change the capacity.",
       "T. W. Gamelin, Uniform Algebras, ch. VIII"},
      {"cantor-square-in-boundary",
       "The planar Cantor square is contained in the boundary of the "
       "constructed compact set for every admissible gap sequence, since the "
       "residual line sets contain the ternary Cantor set at every stage.",
       "construction property recorded without proof"},
      {"rational-approx-criterion",
       "Uniform rational approximation equals the continuous-analytic "
       "algebra on a compact set if and only if the continuous analytic "
       "capacities of D minus the set and D minus its interior agree for "
       "every bounded open D.",
       "A. G. Vitushkin (1967); T. W. Gamelin, Uniform Algebras, "
       "thm. VIII.8.2"},
  };
}

ChainLink computed_link(const std::string& id, const std::string& statement,
                        const std::string& relation, const std::string& lhs,
                        const std::string& rhs, const Rational& lhs_value,
                        const Rational& rhs_value, bool strict) {
  ChainLink link;
  link.id = id;
  link.statement = statement;
  link.relation = relation;
  link.lhs = lhs;
  link.rhs = rhs;
  link.computed = true;
  link.holds = strict ? lhs_value < rhs_value : lhs_value <= rhs_value;
  link.slack = rhs_value - lhs_value;
  return link;
}

ChainLink assumed_link(const std::string& id, const std::string& statement,
                       std::vector<std::string> assumption_ids) {
  ChainLink link;
  link.id = id;
  link.statement = statement;
  link.relation = "<=";
  link.computed = false;
  link.holds = true;
  link.slack = Rational(0);
  link.assumption_ids = std::move(assumption_ids);
  return link;
}

int log2_of_pow2_reciprocal(const Rational& value) {
  if (value.get_num() != 1) throw std::logic_error("not a power-of-two reciprocal");
  const Integer den = value.get_den();
  const size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2);
  if (pow2(static_cast<long>(bits - 1)) != Rational(den)) {
    throw std::logic_error("not a power-of-two reciprocal");
  }
  return static_cast<int>(bits - 1);
}

}  // namespace

std::string convention_name(ContentConvention convention) {
  return convention == ContentConvention::side ? "side-length" : "diameter";
}

DeltaSequence CounterexampleCertificate::sequence() const {
  return DeltaSequence::geometric(pow2(-seq_log2_inv_amplitude),
                                  pow2(-seq_log2_inv_ratio));
}

CounterexampleCertificate build_certificate(const CertificateOptions& options) {
  CounterexampleCertificate cert;
  cert.convention = options.convention;
  cert.capacity = capacity_lower_bound(options.refine_steps);
  cert.assumptions = cert.capacity.assumptions;
  for (auto& extra : chain_assumptions()) cert.assumptions.push_back(extra);

  const Rational capacity_lo = cert.capacity.value.lo();
  // ceiling of the chain: half the capacity bound, halved once more under
  // the diameter convention so the sqrt(2)-free comparison still clears.
  const Rational eps_cap =
      options.convention == ContentConvention::side ? capacity_lo / 2 : capacity_lo / 4;
  int k = 0;
  while (pow2(-k) > eps_cap) ++k;
  cert.target_eps = pow2(-k);

  const int cap_bits = std::max(options.precision_bits, 1024);
  std::string failing;
  for (int bits = options.precision_bits; bits <= cap_bits; bits *= 2) {
    DeltaSequence seq = DeltaSequence::default_render();
    SeriesBound series;
    try {
      seq = select_geometric(cert.target_eps, bits);
      series = gap_series_bound(seq, bits);
    } catch (const InconclusiveError& e) {
      failing = e.link();
      continue;  // retry at doubled precision
    }
    const Enclosure factor = options.convention == ContentConvention::side
                                 ? sqrt_enclosure(Rational(2), bits)
                                 : Enclosure(Rational(1));

    std::vector<ChainLink> chain;
    chain.push_back(computed_link(
        "series-below-target",
        "certified gap-series bound for the content of the hole region is "
        "strictly below the target",
        "<", "series.hi", "target_eps", series.value->hi(), cert.target_eps,
        /*strict=*/true));
    chain.push_back(computed_link(
        "capacity-replay",
        "capacity lower bound is the reciprocal of the replayed potential "
        "sup bound",
        "<=", "capacity.lo", "1/potential_bound", capacity_lo,
        1 / cert.capacity.potential_bound.hi(), /*strict=*/false));
    chain.push_back(computed_link(
        "target-below-half-capacity",
        "target is at most half the certified capacity lower bound", "<=",
        "target_eps", "capacity.lo / 2", cert.target_eps, capacity_lo / 2,
        /*strict=*/false));
    chain.push_back(computed_link(
        "half-capacity-below-capacity",
        "half the capacity bound is strictly below the capacity bound", "<",
        "capacity.lo / 2", "capacity.lo", capacity_lo / 2, capacity_lo,
        /*strict=*/true));
    chain.push_back(computed_link(
        "scaled-content-below-capacity",
        "content bound scaled by the convention margin factor stays strictly "
        "below the capacity lower bound",
        "<", "factor.hi * series.hi", "capacity.lo",
        factor.hi() * series.value->hi(), capacity_lo, /*strict=*/true));
    chain.push_back(assumed_link(
        "alpha-left-end",
        "the capacity of the open square minus the compact set is at most "
        "the convention factor times the side-content of the hole region",
        {"capacity-below-content"}));
    chain.push_back(assumed_link(
        "alpha-right-end",
        "the capacity lower bound certified for the Cantor square transfers "
        "to the open square minus the interior of the compact set",
        {"frostman-growth", "cauchy-transform-continuity", "admissible-transform",
         "cantor-square-in-boundary", "capacity-monotone", "boundary-negligible"}));
    chain.push_back(assumed_link(
        "conclusion",
        "the two capacities are separated by a certified strict gap, so the "
        "equality criterion fails for the open unit square and the two "
        "algebras differ",
        {"rational-approx-criterion"}));

    bool all_hold = true;
    for (const auto& link : chain) {
      if (!link.holds) {
        all_hold = false;
        failing = link.id;
        break;
      }
    }
    if (!all_hold) continue;

    cert.precision_bits = bits;
    cert.convention_factor = factor;
    cert.seq_log2_inv_amplitude = log2_of_pow2_reciprocal(seq.amplitude());
    cert.seq_log2_inv_ratio = log2_of_pow2_reciprocal(seq.ratio());
    cert.content_bound = series;
    cert.chain = std::move(chain);
    return cert;
  }
  throw InconclusiveError(failing.empty() ? "chain assembly" : failing);
}

Json certificate_to_json(const CounterexampleCertificate& cert) {
  Json doc;
  doc["schema"] = kCertificateSchema;
  doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  doc["precision_bits"] = cert.precision_bits;

  Json convention;
  convention["content_normalization"] = convention_name(cert.convention);
  convention["margin_factor"] = enclosure_json(cert.convention_factor, cert.precision_bits);
  doc["convention"] = convention;

  Json capacity;
  capacity["value"] = enclosure_json(cert.capacity.value, cert.precision_bits);
  capacity["potential_bound"] =
      enclosure_json(cert.capacity.potential_bound, cert.precision_bits);
  Json derivation;
  derivation["frostman_constant"] = rational_pair(cert.capacity.derivation.frostman_c);
  derivation["annulus_factor"] = rational_pair(cert.capacity.derivation.annulus_factor);
  derivation["far_field"] = rational_pair(cert.capacity.derivation.far_field);
  derivation["crude_bound"] = rational_pair(cert.capacity.derivation.crude_bound);
  derivation["refine_steps"] = cert.capacity.derivation.refine_steps;
  derivation["potential_bound"] = rational_pair(cert.capacity.derivation.potential_bound);
  capacity["derivation"] = derivation;
  Json capacity_assumption_ids = Json::array();
  for (const auto& a : cert.capacity.assumptions) capacity_assumption_ids.push_back(a.id);
  capacity["assumption_ids"] = capacity_assumption_ids;
  doc["capacity_lower_bound"] = capacity;

  doc["target_eps"] = rational_pair(cert.target_eps);
  doc["sequence"] = Json{{"kind", "geometric-pow2"},
                         {"log2_inv_amplitude", cert.seq_log2_inv_amplitude},
                         {"log2_inv_ratio", cert.seq_log2_inv_ratio}};
  doc["content_bound"] = series_bound_json(cert.content_bound);

  Json chain = Json::array();
  for (const auto& link : cert.chain) {
    Json entry;
    entry["id"] = link.id;
    entry["statement"] = link.statement;
    entry["relation"] = link.relation;
    entry["lhs"] = link.lhs;
    entry["rhs"] = link.rhs;
    entry["computed"] = link.computed;
    entry["holds"] = link.holds;
    entry["slack"] = rational_pair(link.slack);
    Json ids = Json::array();
    for (const auto& id : link.assumption_ids) ids.push_back(id);
    entry["assumptions"] = ids;
    chain.push_back(entry);
  }
  doc["chain"] = chain;

  Json assumptions = Json::array();
  for (const auto& a : cert.assumptions) {
    assumptions.push_back(
        Json{{"id", a.id}, {"statement", a.statement}, {"reference", a.reference}});
  }
  doc["assumptions"] = assumptions;
  return doc;
}

namespace {

struct ParsedCertificate {
  int precision_bits;
  ContentConvention convention;
  Rational capacity_lo;
  Rational frostman_c;
  int refine_steps;
  Rational target_eps;
  int log2_inv_amplitude;
  int log2_inv_ratio;
  Enclosure stored_content;
};

const Json& field(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing field: ") + key);
  return *it;
}

ParsedCertificate parse_certificate(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("certificate must be a JSON object");
  if (field(doc, "schema").get<std::string>() != kCertificateSchema) {
    throw SchemaError("unexpected certificate schema");
  }
  ParsedCertificate parsed;
  parsed.precision_bits = field(doc, "precision_bits").get<int>();
  if (parsed.precision_bits < 2) throw SchemaError("invalid stored precision");

  const std::string conv =
      field(field(doc, "convention"), "content_normalization").get<std::string>();
  if (conv == "side-length") {
    parsed.convention = ContentConvention::side;
  } else if (conv == "diameter") {
    parsed.convention = ContentConvention::diameter;
  } else {
    throw SchemaError("unknown content normalization: " + conv);
  }

  const Json& capacity = field(doc, "capacity_lower_bound");
  // Only the certified lower endpoint participates in the chain; parse it
  // directly so endpoint tampering reaches the replay check instead of
  // failing interval validation.
  const auto capacity_lo =
      parse_rational(field(field(capacity, "value"), "lo").get<std::string>());
  if (!capacity_lo) throw SchemaError("malformed capacity endpoint");
  parsed.capacity_lo = *capacity_lo;
  const Json& derivation = field(capacity, "derivation");
  parsed.frostman_c = rational_from_pair(field(derivation, "frostman_constant"));
  parsed.refine_steps = field(derivation, "refine_steps").get<int>();
  if (parsed.refine_steps < 0 || parsed.refine_steps > 64) {
    throw SchemaError("refine_steps out of range");
  }

  parsed.target_eps = rational_from_pair(field(doc, "target_eps"));
  const Json& seq = field(doc, "sequence");
  if (field(seq, "kind").get<std::string>() != "geometric-pow2") {
    throw SchemaError("unknown sequence kind in certificate");
  }
  parsed.log2_inv_amplitude = field(seq, "log2_inv_amplitude").get<int>();
  parsed.log2_inv_ratio = field(seq, "log2_inv_ratio").get<int>();
  if (parsed.log2_inv_amplitude < 1 || parsed.log2_inv_amplitude > 4096 ||
      parsed.log2_inv_ratio < 1 || parsed.log2_inv_ratio > 64) {
    throw SchemaError("sequence exponents out of range");
  }

  const Json& content = field(doc, "content_bound");
  if (field(content, "status").get<std::string>() != "converged") {
    throw SchemaError("stored content bound is not a converged series");
  }
  parsed.stored_content = enclosure_from_json(field(content, "value"));
  return parsed;
}

}  // namespace

ValidationResult validate_certificate(const Json& doc, std::optional<int> precision_bits) {
  const ParsedCertificate parsed = parse_certificate(doc);

  const int bits = precision_bits.value_or(parsed.precision_bits);
  if (bits < parsed.precision_bits) {
    throw PrecisionMismatchError("re-verification below stored precision (" +
                                 std::to_string(bits) + " < " +
                                 std::to_string(parsed.precision_bits) + " bits)");
  }

  std::ostringstream log;
  log << "certificate " << kCertificateSchema << "\n";
  log << "re-verification precision: " << bits << " bits (stored "
      << parsed.precision_bits << ")\n";
  log << "content normalization: " << convention_name(parsed.convention) << "\n";

  ValidationResult result;
  result.pass = true;
  auto record = [&](const std::string& id, bool ok, const std::string& detail) {
    log << (ok ? "[ok]   " : "[FAIL] ") << id << ": " << detail << "\n";
    if (!ok && result.pass) {
      result.pass = false;
      result.failed_link = id;
    }
  };

  // Replay the content side.
  const DeltaSequence seq = DeltaSequence::geometric(
      pow2(-parsed.log2_inv_amplitude), pow2(-parsed.log2_inv_ratio));
  const SeriesBound series = gap_series_bound(seq, bits);
  if (!series.converged()) {
    record("series-below-target", false, "replayed series diverges");
  } else {
    record("series-below-target",
           series.value->hi() < parsed.target_eps,
           short_decimal(series.value->hi(), true) + " < " +
               to_fraction_string(parsed.target_eps));
  }

  // Replay the capacity side from the stored derivation.
  Rational potential = Rational(12) * parsed.frostman_c + 1;
  for (int i = 0; i < parsed.refine_steps; ++i) {
    potential = make_rational(3, 4) * potential + make_rational(9, 2);
  }
  record("capacity-replay", parsed.capacity_lo <= 1 / potential,
         short_decimal(parsed.capacity_lo, false) + " <= 1/" +
             to_fraction_string(potential));

  record("target-below-half-capacity",
         parsed.target_eps <= parsed.capacity_lo / 2,
         to_fraction_string(parsed.target_eps) + " <= " +
             short_decimal(parsed.capacity_lo / 2, false));

  record("half-capacity-below-capacity", parsed.capacity_lo > 0,
         "capacity lower bound is strictly positive");

  const Enclosure factor = parsed.convention == ContentConvention::side
                               ? sqrt_enclosure(Rational(2), bits)
                               : Enclosure(Rational(1));
  if (series.converged()) {
    record("scaled-content-below-capacity",
           factor.hi() * series.value->hi() < parsed.capacity_lo,
           short_decimal(factor.hi() * series.value->hi(), true) + " < " +
               short_decimal(parsed.capacity_lo, false));
    record("content-enclosure-replay",
           parsed.stored_content.contains(*series.value),
           "replayed series enclosure lies inside the stored one");
  }

  for (const auto& entry : field(doc, "assumptions")) {
    log << "assumed " << field(entry, "id").get<std::string>() << ": "
        << field(entry, "reference").get<std::string>() << "\n";
  }
  log << "verdict: " << (result.pass ? "PASS" : "FAIL") << "\n";
  result.audit_log = log.str();
  return result;
}

}  // namespace cantorsep
