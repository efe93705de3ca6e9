#pragma once

#include "mixvol/polytope.hpp"
#include "mixvol/report.hpp"
#include "mixvol/search.hpp"

#include <string>

namespace mixvol {

// Body JSON: {"dim": d, "vertices": [["p/q", ...], ...]}. Coordinate
// entries are exact-rational strings ("p/q" or "p") or bare JSON integers;
// floats are rejected to keep the pipeline lossless. Input points are
// re-hulled, so redundant points are accepted.
VPolytope body_from_json_text(const std::string& text);
std::string body_to_json_text(const VPolytope& body);
VPolytope load_body_file(const std::string& path);

// Staircase JSON: {"dim": n, "generators": [[...], ...]}; the body is the
// hull of all coordinate zeroings of the generators (anti-blocking by
// construction).
VPolytope staircase_from_json_text(const std::string& text);
VPolytope load_staircase_file(const std::string& path);

// Report JSON: {name, params, lhs, rhs, gap, equality, expected_equality,
// proven, body_digest, witnesses[]}, rationals as strings, recursive in
// witnesses. Deterministic field and key order.
std::string report_json_text(const VerificationReport& report);

// One header + one row (witnesses appear only as a count; use JSON for the
// full tree). gap_decimal is a convenience float column.
std::string report_csv_text(const VerificationReport& report);

// Whole search run: config echo, reports (already gap-sorted), summary.
std::string search_json_text(const SearchConfig& config, const SearchResult& result);
std::string search_csv_text(const SearchConfig& config, const SearchResult& result);

}  // namespace mixvol
