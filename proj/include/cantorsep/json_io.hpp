#pragma once

#include <json.hpp>

#include <string>

#include "cantorsep/cantor_line.hpp"
#include "cantorsep/content_bounds.hpp"
#include "cantorsep/delta_selector.hpp"
#include "cantorsep/enclosure.hpp"
#include "cantorsep/rect_region.hpp"

namespace cantorsep {

// Insertion-ordered JSON keeps serialized documents byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kGeometrySchema = "cantorsep/geometry/v1";
inline constexpr const char* kSequenceSchema = "cantorsep/sequence/v1";
inline constexpr const char* kContentBoundSchema = "cantorsep/content-bound/v1";
inline constexpr const char* kVerifyReportSchema = "cantorsep/verify-report/v1";

// Decimal digits used for enclosure endpoints in serialized documents.
// Endpoints are printed outward, so a reparsed interval still contains the
// original one.
inline constexpr int kDecimalDigits = 40;

// Exact rationals travel as ["num", "den"] decimal strings.
Json rational_pair(const Rational& value);
Rational rational_from_pair(const Json& doc);

Json enclosure_json(const Enclosure& value, int precision_bits);
// Reconstructs the printed (outward) endpoints exactly.
Enclosure enclosure_from_json(const Json& doc);
int enclosure_precision(const Json& doc);

Json sequence_json(const DeltaSequence& seq);
DeltaSequence sequence_from_json(const Json& doc);

// Rectangles as {"x": [n0,d0,n1,d1], "y": [n0,d0,n1,d1]} string quadruples.
Json geometry_json(const RectRegion& region, const std::string& kind, int depth,
                   const DeltaSequence& seq);

Json series_bound_json(const SeriesBound& bound);
Json content_bound_json(const ContentBound& bound, const std::string& method);
Json verify_report_json(const SequenceReport& report);

}  // namespace cantorsep
