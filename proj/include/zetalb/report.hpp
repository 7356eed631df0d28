#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zetalb {

using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Which side of the inequality the left-hand side is expected on.
enum class BoundKind {
  lower,  // lhs >= rhs, margin = log10_lhs - log10_rhs
  upper,  // lhs <= rhs, margin = log10_rhs - log10_lhs
};

/// One inequality verification. pass is always margin >= 0.
struct CheckReport {
  std::string check_id;
  ParamList params;
  double log10_lhs = 0.0;
  double log10_rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string notes;

  // Not serialized: set by implied-constant checks for calibration.
  std::string regression_key;
  double ratio = 0.0;
  BoundKind kind = BoundKind::lower;
};

/// Builds a report from log10 sides; upper-bound checks get "bound=upper" in params.
CheckReport make_report(std::string check_id, ParamList params, double log10_lhs, double log10_rhs,
                        BoundKind kind, std::string notes = {});

/// A report carrying a value with no inequality attached (margin 0, pass).
CheckReport make_info_report(std::string check_id, ParamList params, double log10_value, std::string notes);

/// Formats a number for a params entry (12 significant digits).
std::string fmt_param(double v);

/// "k=v;k=v" as used in the CSV param_string column.
std::string param_string(const ParamList& params);

/// One JSON object, no trailing newline.
std::string to_json_line(const CheckReport& r);

inline constexpr const char* kCsvHeader = "check_id,param_string,log10_lhs,log10_rhs,margin,pass,notes";

/// One CSV row, no trailing newline.
std::string to_csv_row(const CheckReport& r);

enum class ReportFormat { json_lines, csv };

/// Writes reports in the given format (CSV includes the header).
void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, ReportFormat format);

}  // namespace zetalb
