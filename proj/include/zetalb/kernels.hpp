#pragma once

#include "zetalb/complex.hpp"

namespace zetalb {

/// exp(-x cosh(t / lambda)); exactly 0 once the exponent underflows.
double ramachandra_kernel(double t, double lambda, double x);

/// Natural log of ramachandra_kernel, finite where the kernel underflows.
double log_ramachandra_kernel(double t, double lambda, double x);

enum class KBesselMethod { integral, series, asymptotic };

struct KBesselResult {
  ComplexValue value;
  KBesselMethod method;
  double abs_error_estimate;
};

/// K_{i mu}(x) = (1/2) int exp(-x cosh tau - i mu tau) dtau by adaptive quadrature.
///
/// For pi|mu|/2 > 6 the line is moved to Im(tau) = -theta with
/// theta = pi/2 - 6/|mu|, which keeps the cancellation in the oscillatory
/// integrand at roughly e^6 instead of e^{pi|mu|/2}. Even in mu.
KBesselResult kbessel_integral(double mu, double x);

/// kbessel_integral scaled by e^{pi|mu|/2}, so that the result is O(1) for large |mu|.
KBesselResult kbessel_integral_scaled(double mu, double x);

/// K_nu(x) = pi/2 (I_{-nu}(x) - I_nu(x)) / sin(nu pi) from the ascending series of I.
///
/// Integer orders are singular for this formula and raise DomainError;
/// x must lie in (0, 20].
KBesselResult kbessel_series(ComplexValue nu, double x);

/// kbessel_series for imaginary order i*mu, scaled by e^{pi|mu|/2}.
KBesselResult kbessel_series_scaled(double mu, double x);

/// K_0(x) from its ascending series (the nu -> 0 limit of the reflection formula).
double kbessel_k0_series(double x);

/// Large-t forms of K_{it}(2).
struct KBesselAsymptotic {
  /// envelope * sin(pi/2 (t log t + t)), the printed phase.
  double printed_phase_value;
  /// envelope * sin(t log t - t + pi/4), the phase of Im Gamma(1+it) / t from Stirling.
  double stirling_phase_value;
  /// e^{-pi t/2} sqrt(2 pi / t)
  double envelope;
  double printed_phase;
  double stirling_phase;
};

KBesselAsymptotic kbessel_asymptotic(double t);

/// 2 int_T^inf exp(-x cosh(t/lambda)) dt, i.e. the kernel mass outside [-T, T].
double tail_integral(double T, double lambda, double x);

/// Natural log of tail_integral; stays finite far beyond double underflow.
double log_tail_integral(double T, double lambda, double x);

/// tail_integral * exp(x cosh(T/lambda)); O(lambda) for every T.
double tail_integral_scaled(double T, double lambda, double x);

struct SupKBesselRatio {
  double sup_value;
  double argmax_t;
  /// sqrt(2 pi / 60) (1 + 2/60) / K_0(2): bound for the ratio past the scanned range.
  double tail_bound;
  /// The ratio at argmax_t recomputed from the series route.
  double series_value;
};

/// sup_{t >= 0} |K_{it}(2)| e^{pi t/2} / K_0(2): grid step 0.05 on [0, 60],
/// golden-section refinement of every local maximum.
SupKBesselRatio sup_kbessel_ratio();

}  // namespace zetalb
