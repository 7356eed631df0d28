#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetalb/complex.hpp"
#include "zetalb/report.hpp"

namespace zetalb {

/// A weight omega with omega = 1 on [0,1], omega nonincreasing, x omega(x)
/// nondecreasing and int_1^inf omega(x)/x dx finite.
struct WeightFunction {
  std::function<double(double)> evaluator;
  /// Optional u -> omega(e^u), used where e^u would overflow.
  std::function<double(double)> log_evaluator;
  std::string description;
  /// x omega(x) is only required to be nondecreasing for x >= increasing_from.
  double increasing_from = 1.0;

  double operator()(double x) const { return evaluator(x); }
  double at_log(double u) const;
};

/// omega(x) = 1 for x <= 1, (1 + log x)^{-1-epsilon} beyond.
///
/// x omega(x) has derivative (log x - epsilon)(1 + log x)^{-2-epsilon}, so it
/// dips on (1, e^epsilon); increasing_from is set to e^epsilon.
WeightFunction epsilon_weight(double epsilon);

struct Admissibility {
  bool admissible = false;
  /// Empty when admissible, otherwise the first failed invariant.
  std::string violation;
  /// int_0^inf omega(e^u) du = int_1^inf omega(x)/x dx (block sums plus extrapolated tail).
  double log_integral = 0.0;
  /// Set when the x omega(x) check starts later than x = 1.
  std::string notes;
};

/// Sampled checks: omega = 1 on [0,1]; omega nonincreasing on x = 1.1^k up
/// to 1e6, and x omega(x) nondecreasing there from increasing_from on; int omega(e^u) du finite, by block
/// integrals over u in [2^j, 2^{j+1}] until the geometric tail estimate is < 1e-6.
Admissibility check_admissibility(const WeightFunction& omega);

/// Throws InvalidWeight naming the violated invariant.
void require_admissible(const WeightFunction& omega);

enum class WidthLaw {
  /// a_k = c omega(e^k), k < K with a_{K-1} < 1e-6.
  geometric,
  /// a_j = c rho^j, rho = 1 - 1/(4K), K picked to make the decay bound start earliest.
  calibrated,
};

std::string to_string(WidthLaw law);

/// Upper end of the range on which the decay bound is verified.
inline constexpr double kDecayRangeEnd = 1000.0;

/// phi = normalization * (convolution of uniform densities on [0, a_k]).
struct PaleyWienerKernel {
  std::vector<double> widths;
  double normalization = 1.0;
  WidthLaw law = WidthLaw::geometric;
  WeightFunction omega;
  /// phi at grid_start + i * grid_step, 2^16 points on [-0.1, 1.1].
  double grid_start = -0.1;
  double grid_step = 0.0;
  std::vector<double> phi;
};

/// Throws InvalidWeight if omega is not admissible.
PaleyWienerKernel build_paley_wiener(const WeightFunction& omega, WidthLaw law = WidthLaw::geometric);

/// (normalization / 2 pi) prod_k e^{-i a_k x/2} sinc(a_k x/2).
ComplexValue pw_phi_hat(const PaleyWienerKernel& kernel, double x);

/// log |phi_hat(x)| as a sum of logs; -inf at an exact zero.
double pw_phi_hat_log_abs(const PaleyWienerKernel& kernel, double x);

/// log of (normalization / 2 pi) prod_k min(1, 2 / (a_k |x|)), an upper bound
/// for log |phi_hat| that is even and nonincreasing in |x|.
double pw_phi_hat_log_bound(const PaleyWienerKernel& kernel, double x);

/// Fourier transform of the piecewise-linear interpolant of the phi grid.
ComplexValue pw_phi_hat_direct(const PaleyWienerKernel& kernel, double x);

/// log(x^{-3} Phi(x)^5) with Phi(x) = exp(-x omega(x/2)).
double pw_decay_log_target(const WeightFunction& omega, double x);

/// Smallest x0 (on a grid of the given step below x_end) such that
/// |phi_hat| <= x^{-3} Phi(x)^5 is certified on all of [x0, x_end]:
/// each cell [x_i, x_i + step] needs bound(x_i) <= target(x_i + step).
/// Cells below 2 * omega.increasing_from are never certified (the target is
/// only known to decrease above it). Returns +inf when even the last cell fails.
double pw_decay_threshold(const PaleyWienerKernel& kernel, double x_end = kDecayRangeEnd, double step = 0.5);

/// |phi_hat(H log n)| n^{-sigma} <= (log n)^{-3} n^{-1} for n in [X, T^2],
/// X = exp(|log H| / (H omega(|log H|))), at log-spaced samples. Reports the worst sample.
///
/// Requires T >= 16 and sigma >= 1 - H omega(H log T) (ConfigError otherwise).
CheckReport pw_lemma1_check(const PaleyWienerKernel& kernel, double H, double sigma, double T, int samples = 200);

}  // namespace zetalb
