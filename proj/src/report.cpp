#include "zetalb/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace zetalb {

namespace {

std::string fmt_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

CheckReport make_report(std::string check_id, ParamList params, double log10_lhs, double log10_rhs,
                        BoundKind kind, std::string notes) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  if (kind == BoundKind::upper) r.params.emplace_back("bound", "upper");
  r.log10_lhs = log10_lhs;
  r.log10_rhs = log10_rhs;
  r.margin = kind == BoundKind::lower ? log10_lhs - log10_rhs : log10_rhs - log10_lhs;
  if (std::isnan(r.margin)) {
    r.pass = false;
  } else {
    r.pass = r.margin >= 0.0;
  }
  r.notes = std::move(notes);
  r.kind = kind;
  return r;
}

CheckReport make_info_report(std::string check_id, ParamList params, double log10_value, std::string notes) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.log10_lhs = log10_value;
  r.log10_rhs = log10_value;
  r.margin = 0.0;
  r.pass = true;
  r.notes = "report only: " + notes;
  return r;
}

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string param_string(const ParamList& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + '=' + v;
  }
  return out;
}

std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  // non-finite logs (an integral that is exactly 0, say) are written as strings
  auto number = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return fmt_number(v);
  };
  j["log10_lhs"] = number(r.log10_lhs);
  j["log10_rhs"] = number(r.log10_rhs);
  j["margin"] = number(r.margin);
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  return j.dump();
}

std::string to_csv_row(const CheckReport& r) {
  return csv_field(r.check_id) + ',' + csv_field(param_string(r.params)) + ',' + fmt_number(r.log10_lhs) + ',' +
         fmt_number(r.log10_rhs) + ',' + fmt_number(r.margin) + ',' + (r.pass ? "true" : "false") + ',' +
         csv_field(r.notes);
}

void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::csv) out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    out << (format == ReportFormat::csv ? to_csv_row(r) : to_json_line(r)) << '\n';
  }
}

}  // namespace zetalb
