#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetalb/baseline.hpp"
#include "zetalb/paley_wiener.hpp"
#include "zetalb/report.hpp"
#include "zetalb/scans.hpp"

namespace zetalb {

/// Verification suites shared by the CLI and the acceptance runner.

/// sup over T in [0,5] (step 0.001) of tail(T,1,2)/exp(-exp T).
struct TailRatioSup {
  double sup_value;
  double argmax_T;
};
TailRatioSup tail_ratio_sup();

/// K_0(2) >= 1/9, the 0.619 tail constant, 13.917 and 13.917^2 < 194.
std::vector<CheckReport> constants_suite();

/// Zeros and local maxima of K_{it}(2) on [t_lo, t_hi].
struct Lemma2Scan {
  std::vector<double> zeros;
  /// max distance from a quadrature zero to the nearest predicted zero
  double printed_phase_distance;
  double stirling_phase_distance;
  std::vector<double> maxima_t;
  /// |K_{it}(2)| / envelope at each maximum
  std::vector<double> maxima_ratio;
};
Lemma2Scan lemma2_scan(double t_lo = 10.0, double t_hi = 40.0);

/// Envelope checks on [10,40] step 0.5, ratio at every local maximum, and
/// which phase formula puts its zeros within 0.05 of the quadrature zeros.
std::vector<CheckReport> kernel_asym_suite();

/// Kernel summation identity on seeded random polynomials (<= 100 terms,
/// |a_n| <= 1), s = 2 + i U(-5,5), x = 2, lambda in {0.5, 1, 2, 0.4/pi},
/// classical and shifted (alpha 0.3 and 1) modes. Tolerance 1e-8.
std::vector<CheckReport> summation_suite(std::uint64_t seed, std::size_t trials);

/// Tail bound as printed for lambda = 1 on T in [0.05, 5] step 0.01, both
/// prefactor variants for lambda in {0.5, 2, 4}, and the substitution identity.
std::vector<CheckReport> tail_suite();

struct PaleyWienerSuiteOptions {
  double epsilon = 1.0;
  /// Adds pw_lemma1_check when H > 0.
  double lemma1_H = 0.0;
  double lemma1_T = 1e6;
};

/// Builds both width laws and checks support, mass, transform and decay.
/// The decay check of the calibrated law uses baseline x0 when present.
std::vector<CheckReport> paley_wiener_suite(const PaleyWienerSuiteOptions& options, const Baseline* baseline);

/// Baseline key for the Paley–Wiener x0 of a preset.
std::string pw_preset_key(double epsilon);

/// Random shifted polynomial for the lemma8 scan: a_0 = 1, |a_n| <= 1 for n <= N.
DirichletPolynomial lemma8_random_polynomial(double alpha, std::size_t N, std::uint64_t seed);

/// Seeded pairs X < T <= T_max: coefficients of zeta_T * M_X satisfy c_1 = 1,
/// c_n = 0 for 2 <= n < X and |c_n| <= d(n). One report per pair.
std::vector<CheckReport> mollifier_suite(std::uint64_t seed, std::size_t pairs, double T_max = 500.0);

struct Lemma8SuiteOptions {
  double H = 3.0;
  double epsilon = 0.5;
  double alpha = 1.0;
  std::size_t N = 100;
  std::size_t samples = 20;
  double T_min = 10.0;
  double T_max = 1e4;
  std::uint64_t seed = 1;
  /// 0 means the threshold for N
  double sigma = 0.0;
};

/// lemma8_check on a random polynomial at log-uniform T.
std::vector<CheckReport> lemma8_suite(const Lemma8SuiteOptions& options, const ScanOptions& opts = {});

/// The runs written by `calibrate` and checked by the regression criterion.
struct CalibrationRuns {
  std::vector<CheckReport> t1;
  std::vector<CheckReport> t4;
  std::vector<CheckReport> t3;
  std::vector<CheckReport> lipschitz;
};
inline const std::vector<double> kTheorem1DefaultH = {0.05, 0.1, 0.2, 0.5, 1.0};
inline const std::vector<double> kTheorem4DefaultH = {0.25, 0.5, 1.0};
CalibrationRuns run_calibration_scans(const ScanOptions& opts);

/// Runs the calibration scans without a baseline and records extreme ratios
/// and the Paley–Wiener x0 for eps = 1.
Baseline calibrate(unsigned workers);

}  // namespace zetalb
