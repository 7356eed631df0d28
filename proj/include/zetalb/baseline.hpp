#pragma once

#include <map>
#include <optional>
#include <string>

namespace zetalb {

/// Regression baseline for the implied-constant ("≫") checks.
///
/// ratios holds, per check key, the min LHS/RHS ratio of a calibration run
/// (lower-bound checks) or the max ratio (upper-bound checks). A later run
/// passes when its ratio stays within a factor 2 on the safe side.
struct Baseline {
  std::map<std::string, double> ratios;
  /// Paley–Wiener decay start x0 per weight preset ("eps=1", ...).
  std::map<std::string, double> pw_x0;

  std::optional<double> ratio(const std::string& key) const;
};

/// ConfigError when the file is missing or malformed.
Baseline load_baseline(const std::string& path);
void save_baseline(const Baseline& baseline, const std::string& path);

/// Factor by which a ratio may move toward failure before the guard trips.
inline constexpr double kRegressionFactor = 2.0;

}  // namespace zetalb
