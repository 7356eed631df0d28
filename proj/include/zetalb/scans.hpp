#pragma once

#include <cstdint>
#include <vector>

#include "zetalb/baseline.hpp"
#include "zetalb/dirichlet.hpp"
#include "zetalb/paley_wiener.hpp"
#include "zetalb/report.hpp"

namespace zetalb {

struct ScanOptions {
  unsigned workers = 1;
  /// Regression baseline for implied-constant checks; null means raw comparison.
  const Baseline* baseline = nullptr;
};

/// Lowest sigma a scan evaluates at; thresholds below it are raised to it.
inline constexpr double kSigmaFloor = 0.5;

/// count points evenly spaced in log between lo and hi (inclusive).
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

/// count points drawn log-uniformly from [lo, hi].
std::vector<double> random_log_uniform(double lo, double hi, std::size_t count, std::uint64_t seed);

/// 200 log-spaced points in [16, 1e5].
std::vector<double> default_T_samples();

/// int_T^{T+H} |zeta(sigma+it)| dt (or of |zeta|^{-1}).
double zeta_abs_integral(double sigma, double T, double H, bool inverse = false);

/// Every int_T^{T+H} |zeta(1+it)| dt must be >= (e^{-gamma} pi^2/24) H^2 (1 - 0.1);
/// with include_inverse also int |zeta(1+it)|^{-1} dt >= (e^{-gamma}/4) H^2 (1 - 0.1).
std::vector<CheckReport> ity_scan(double H, const std::vector<double>& T_samples, bool include_inverse,
                                  const ScanOptions& opts = {});

/// int |zeta(sigma+it)| over [T, T+H] against min(H^{2+eps}, H) at
/// sigma = 1 - C H (log log T)^{-1-eps}; regression guard on the ratio.
std::vector<CheckReport> theorem1_scan(const std::vector<double>& H_list, double epsilon,
                                       const std::vector<double>& T_samples, const ScanOptions& opts = {},
                                       double C = 1.0);

/// int |zeta(sigma+it)| over [T, T+H] against H^2 omega(|log H|)/(1+|log H|) at
/// sigma = 1 - H omega(H log T), plus max |M_X(sigma+it)| on [T, T+H] against sum_{n<=X} n^{-sigma}.
std::vector<CheckReport> theorem4_scan(double H, const WeightFunction& omega, const std::vector<double>& T_samples,
                                       const ScanOptions& opts = {});

/// Hurwitz zeta: int |zeta(sigma+it, alpha)| over [T, T+H] against
/// min(H, (H/200)^{7/(6 H eps)}) at sigma = 1 - pi H (1-eps)/(4 log log T).
std::vector<CheckReport> theorem3_scan(double H, double epsilon, double alpha, const std::vector<double>& T_samples,
                                       const ScanOptions& opts = {});

/// int_T^{T+H} |A(sigma+it)| dt against (1/(4 alpha (1-sigma))) (1+194 alpha/(H eps))^{-7/(6 H eps)} 10^{-9/(H eps)}
/// for every sampled T.
///
/// A must be shifted, with a_0 = 1 (the alpha^{-s} term) and |a_n| <= 1;
/// N = max(last index, 16) and sigma must meet 1 - pi H (1-eps)/(4(log log N + 1)).
/// Violations raise ConfigError.
std::vector<CheckReport> lemma8_check(const DirichletPolynomial& A, double sigma, double H, double epsilon,
                                      const std::vector<double>& T_samples, const ScanOptions& opts = {});

/// |zeta(1+it) - zeta(sigma+it)| against delta |zeta(1+it)| at sigma = 1 - delta/log log t.
std::vector<CheckReport> lipschitz_check(const std::vector<double>& t_samples, double delta,
                                         const ScanOptions& opts = {});

/// max over sampled t in (T/2, T) of |zeta(s + iT) - zeta_T(s + iT)| sqrt(T), s = sigma + it,
/// against 10. One report per T.
std::vector<CheckReport> approx_fe_check(double sigma, const std::vector<double>& T_list, std::size_t samples,
                                         std::uint64_t seed, const ScanOptions& opts = {});

struct MaxScanResult {
  double max_abs;
  double argmax_t;
  double loglogH_ratio;
  /// C with max = exp(C (log H)^{1-sigma} / log log H)
  double c_sigma;
};

/// Grid maximum of |zeta(sigma+it)| on [T, T+H], refined around the best grid
/// point. Needs H >= 3.
MaxScanResult max_scan(double sigma, double T, double H, double grid_step);
CheckReport max_scan_report(double sigma, double T, double H, double grid_step);

/// Per regression key, the min ratio (lower-bound checks) or max ratio (upper).
std::map<std::string, double> extreme_ratios(const std::vector<CheckReport>& reports);

}  // namespace zetalb
