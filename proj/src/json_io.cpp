#include "cantorsep/json_io.hpp"

#include <cctype>

#include "cantorsep/errors.hpp"

namespace cantorsep {

namespace {

Integer integer_from_string(const std::string& text) {
  if (text.empty()) throw SchemaError("empty integer string");
  size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw SchemaError("malformed integer string");
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw SchemaError("malformed integer string: " + text);
    }
  }
  return Integer(text, 10);
}

const Json& expect_field(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing field: ") + key);
  return *it;
}

}  // namespace

Json rational_pair(const Rational& value) {
  return Json::array({Integer(value.get_num()).get_str(), Integer(value.get_den()).get_str()});
}

Rational rational_from_pair(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_string() || !doc[1].is_string()) {
    throw SchemaError("rational must be a [num, den] string pair");
  }
  const Integer den = integer_from_string(doc[1].get<std::string>());
  if (den <= 0) throw SchemaError("rational denominator must be positive");
  return make_rational(integer_from_string(doc[0].get<std::string>()), den);
}

Json enclosure_json(const Enclosure& value, int precision_bits) {
  Json doc;
  doc["lo"] = to_decimal_string(value.lo(), kDecimalDigits, /*round_up=*/false);
  doc["hi"] = to_decimal_string(value.hi(), kDecimalDigits, /*round_up=*/true);
  doc["precision_bits"] = precision_bits;
  return doc;
}

Enclosure enclosure_from_json(const Json& doc) {
  const auto lo = parse_rational(expect_field(doc, "lo").get<std::string>());
  const auto hi = parse_rational(expect_field(doc, "hi").get<std::string>());
  if (!lo || !hi) throw SchemaError("malformed enclosure endpoint");
  if (*lo > *hi) throw SchemaError("enclosure endpoints are inverted");
  return Enclosure(*lo, *hi);
}

int enclosure_precision(const Json& doc) {
  const auto& field = expect_field(doc, "precision_bits");
  if (!field.is_number_integer()) throw SchemaError("precision_bits must be an integer");
  return field.get<int>();
}

Json sequence_json(const DeltaSequence& seq) {
  Json doc;
  doc["schema"] = kSequenceSchema;
  if (seq.is_geometric()) {
    doc["kind"] = "geometric";
    doc["amplitude"] = rational_pair(seq.amplitude());
    doc["ratio"] = rational_pair(seq.ratio());
  } else {
    doc["kind"] = "explicit";
    Json widths = Json::array();
    for (const auto& w : seq.widths()) widths.push_back(rational_pair(w));
    doc["widths"] = widths;
  }
  if (seq.max_level()) {
    doc["max_level"] = *seq.max_level();
  } else {
    doc["max_level"] = nullptr;
  }
  return doc;
}

DeltaSequence sequence_from_json(const Json& doc) {
  if (expect_field(doc, "schema").get<std::string>() != kSequenceSchema) {
    throw SchemaError("unexpected sequence schema");
  }
  const std::string kind = expect_field(doc, "kind").get<std::string>();
  std::optional<int> max_level;
  const auto& level_field = expect_field(doc, "max_level");
  if (!level_field.is_null()) max_level = level_field.get<int>();
  if (kind == "geometric") {
    return DeltaSequence::geometric(rational_from_pair(expect_field(doc, "amplitude")),
                                    rational_from_pair(expect_field(doc, "ratio")),
                                    max_level);
  }
  if (kind == "explicit") {
    std::vector<Rational> widths;
    for (const auto& w : expect_field(doc, "widths")) widths.push_back(rational_from_pair(w));
    return DeltaSequence::explicit_list(std::move(widths));
  }
  throw SchemaError("unknown sequence kind: " + kind);
}

Json geometry_json(const RectRegion& region, const std::string& kind, int depth,
                   const DeltaSequence& seq) {
  Json doc;
  doc["schema"] = kGeometrySchema;
  doc["kind"] = kind;
  doc["depth"] = depth;
  doc["sequence"] = sequence_json(seq);
  Json rects = Json::array();
  for (const auto& r : region.rects()) {
    Json entry;
    entry["x"] = Json::array({Integer(r.x0.get_num()).get_str(), Integer(r.x0.get_den()).get_str(),
                              Integer(r.x1.get_num()).get_str(), Integer(r.x1.get_den()).get_str()});
    entry["y"] = Json::array({Integer(r.y0.get_num()).get_str(), Integer(r.y0.get_den()).get_str(),
                              Integer(r.y1.get_num()).get_str(), Integer(r.y1.get_den()).get_str()});
    rects.push_back(entry);
  }
  doc["rectangle_count"] = region.size();
  doc["rectangles"] = rects;
  return doc;
}

Json series_bound_json(const SeriesBound& bound) {
  Json doc;
  doc["status"] = bound.converged() ? "converged" : "divergent";
  if (bound.converged()) {
    doc["value"] = enclosure_json(*bound.value, bound.precision_bits);
  } else {
    doc["value"] = nullptr;
  }
  doc["term_ratio"] = enclosure_json(bound.term_ratio, bound.precision_bits);
  doc["terms_summed"] = bound.terms_summed;
  doc["precision_bits"] = bound.precision_bits;
  return doc;
}

Json content_bound_json(const ContentBound& bound, const std::string& method) {
  Json doc;
  doc["schema"] = kContentBoundSchema;
  doc["method"] = method;
  doc["value"] = enclosure_json(bound.value, bound.precision_bits);
  Json witness;
  if (bound.has_covering()) {
    const auto& squares = bound.covering();
    witness["kind"] = "covering";
    witness["square_count"] = squares.size();
    Rational sum(0);
    for (const auto& s : squares) sum += s.side;
    witness["side_sum"] = rational_pair(sum);
    Json list = Json::array();
    for (const auto& s : squares) {
      Json entry;
      entry["x0"] = rational_pair(s.x0);
      entry["y0"] = rational_pair(s.y0);
      entry["side"] = rational_pair(s.side);
      list.push_back(entry);
    }
    witness["squares"] = list;
  } else {
    witness["kind"] =
        std::get<FormulaTag>(bound.witness) == FormulaTag::lemma1 ? "lemma1" : "lemma2-series";
  }
  doc["witness"] = witness;
  return doc;
}

Json verify_report_json(const SequenceReport& report) {
  Json doc;
  doc["schema"] = kVerifyReportSchema;
  doc["epsilon"] = rational_pair(report.epsilon);
  doc["precision_bits"] = report.precision_bits;
  doc["levels_checked"] = report.levels_checked;
  Json levels = Json::array();
  for (const auto& check : report.levels) {
    Json entry;
    entry["level"] = check.level;
    entry["delta"] = rational_pair(check.delta);
    entry["limit"] = rational_pair(check.limit);
    entry["admissible"] = check.admissible;
    levels.push_back(entry);
  }
  doc["levels"] = levels;
  doc["strictly_decreasing"] = report.strictly_decreasing;
  doc["series"] = series_bound_json(report.series);
  doc["verdict"] = verdict_name(report.verdict);
  doc["detail"] = report.detail;
  return doc;
}

}  // namespace cantorsep
