#include "mixvol/io.hpp"

#include "mixvol/constructions.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mixvol {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational coordinate_from_json(const ordered_json& entry) {
  if (entry.is_string()) return parse_rational(entry.get<std::string>());
  if (entry.is_number_integer()) {
    return Rational(Integer(entry.get<std::int64_t>()));
  }
  if (entry.is_number_unsigned()) {
    return Rational(Integer(entry.get<std::uint64_t>()));
  }
  throw std::invalid_argument(
      "body JSON: coordinates must be rational strings (\"p/q\") or integers, got " +
      entry.dump());
}

// Parses {"dim": d, <points_key>: [[...], ...]} into (d, points).
std::pair<int, std::vector<Point>> points_from_json_text(const std::string& text,
                                                         const char* points_key) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("body JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains(points_key)) {
    throw std::invalid_argument(std::string("body JSON: expected {\"dim\", \"") + points_key +
                                "\"}");
  }
  if (!doc["dim"].is_number_integer() && !doc["dim"].is_number_unsigned()) {
    throw std::invalid_argument("body JSON: \"dim\" must be an integer");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 0) throw std::invalid_argument("body JSON: \"dim\" must be nonnegative");
  if (!doc[points_key].is_array() || doc[points_key].empty()) {
    throw std::invalid_argument(std::string("body JSON: \"") + points_key +
                                "\" must be a nonempty array");
  }
  std::vector<Point> points;
  points.reserve(doc[points_key].size());
  for (const ordered_json& row : doc[points_key]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw std::invalid_argument(std::string("body JSON: each point needs exactly ") +
                                  std::to_string(dim) + " coordinates");
    }
    Point pt;
    pt.reserve(dim);
    for (const ordered_json& entry : row) pt.push_back(coordinate_from_json(entry));
    points.push_back(std::move(pt));
  }
  return {dim, std::move(points)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json rational_json(const Rational& value) { return to_string(value); }

ordered_json params_json(const std::vector<std::pair<std::string, ReportParam>>& params) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : params) {
    if (std::holds_alternative<std::int64_t>(value)) {
      obj[key] = std::get<std::int64_t>(value);
    } else {
      obj[key] = std::get<std::string>(value);
    }
  }
  return obj;
}

ordered_json report_json(const VerificationReport& report) {
  ordered_json obj = ordered_json::object();
  obj["name"] = report.name;
  obj["params"] = params_json(report.params);
  obj["lhs"] = rational_json(report.lhs);
  obj["rhs"] = rational_json(report.rhs);
  obj["gap"] = rational_json(report.gap);
  obj["equality"] = report.equality;
  obj["expected_equality"] = report.expected_equality;
  obj["proven"] = report.proven;
  obj["body_digest"] = report.body_digest;
  ordered_json witnesses = ordered_json::array();
  for (const VerificationReport& w : report.witnesses) witnesses.push_back(report_json(w));
  obj["witnesses"] = std::move(witnesses);
  return obj;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string params_csv(const std::vector<std::pair<std::string, ReportParam>>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i != 0) out += ';';
    out += params[i].first + "=";
    if (std::holds_alternative<std::int64_t>(params[i].second)) {
      out += std::to_string(std::get<std::int64_t>(params[i].second));
    } else {
      out += std::get<std::string>(params[i].second);
    }
  }
  return out;
}

std::string decimal_text(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", to_double(value));
  return buf;
}

constexpr const char* kCsvHeader =
    "name,params,lhs,rhs,gap,gap_decimal,equality,expected_equality,proven,body_digest,"
    "witness_count";

std::string report_csv_row(const VerificationReport& r) {
  std::string row;
  row += csv_escape(r.name);
  row += ',';
  row += csv_escape(params_csv(r.params));
  row += ',';
  row += csv_escape(to_string(r.lhs));
  row += ',';
  row += csv_escape(to_string(r.rhs));
  row += ',';
  row += csv_escape(to_string(r.gap));
  row += ',';
  row += decimal_text(r.gap);
  row += ',';
  row += r.equality ? "true" : "false";
  row += ',';
  row += r.expected_equality ? "true" : "false";
  row += ',';
  row += r.proven ? "true" : "false";
  row += ',';
  row += csv_escape(r.body_digest);
  row += ',';
  row += std::to_string(r.witnesses.size());
  return row;
}

ordered_json config_json(const SearchConfig& config) {
  ordered_json obj = ordered_json::object();
  obj["target"] = target_id(config.target);
  obj["class"] = body_class_id(config.body_class);
  obj["n"] = config.n;
  obj["p"] = config.p;
  obj["k_spec"] = config.k_spec;
  obj["trials"] = config.trials;
  obj["seed"] = config.seed;
  obj["grid_q"] = config.grid_q;
  obj["max_generators"] = config.max_generators;
  return obj;
}

ordered_json summary_json(const SearchSummary& summary) {
  ordered_json obj = ordered_json::object();
  obj["min_gap"] = rational_json(summary.min_gap);
  obj["violations"] = summary.violations;
  obj["equalities"] = summary.equalities;
  obj["trials"] = summary.trials;
  return obj;
}

}  // namespace

VPolytope body_from_json_text(const std::string& text) {
  auto [dim, points] = points_from_json_text(text, "vertices");
  return hull(dim, std::move(points));
}

std::string body_to_json_text(const VPolytope& body) {
  ordered_json obj = ordered_json::object();
  obj["dim"] = body.ambient_dim();
  ordered_json rows = ordered_json::array();
  for (const Point& v : body.vertices()) {
    ordered_json row = ordered_json::array();
    for (const Rational& x : v) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  obj["vertices"] = std::move(rows);
  return obj.dump(2);
}

VPolytope load_body_file(const std::string& path) {
  return body_from_json_text(read_file(path));
}

VPolytope staircase_from_json_text(const std::string& text) {
  auto [dim, points] = points_from_json_text(text, "generators");
  return staircase_antiblocking(dim, points);
}

VPolytope load_staircase_file(const std::string& path) {
  return staircase_from_json_text(read_file(path));
}

std::string report_json_text(const VerificationReport& report) {
  return report_json(report).dump(2);
}

std::string report_csv_text(const VerificationReport& report) {
  return std::string(kCsvHeader) + "\n" + report_csv_row(report);
}

std::string search_json_text(const SearchConfig& config, const SearchResult& result) {
  ordered_json obj = config_json(config);
  ordered_json reports = ordered_json::array();
  for (const VerificationReport& r : result.reports) reports.push_back(report_json(r));
  obj["reports"] = std::move(reports);
  obj["summary"] = summary_json(result.summary);
  return obj.dump(2);
}

std::string search_csv_text(const SearchConfig& config, const SearchResult& result) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const VerificationReport& r : result.reports) {
    out += report_csv_row(r);
    out += '\n';
  }
  // Trailing comment line so the summary survives in flat exports.
  out += "# target=" + target_id(config.target) + " seed=" + std::to_string(config.seed) +
         " trials=" + std::to_string(result.summary.trials) +
         " violations=" + std::to_string(result.summary.violations) +
         " equalities=" + std::to_string(result.summary.equalities) +
         " min_gap=" + to_string(result.summary.min_gap);
  return out;
}

}  // namespace mixvol
