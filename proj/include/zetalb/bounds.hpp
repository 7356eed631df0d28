#pragma once

#include <functional>

#include "zetalb/paley_wiener.hpp"

namespace zetalb {

/// Right-hand sides of the explicit inequalities, all in log10 where a direct
/// evaluation could underflow.

struct Theorem4Rhs {
  /// log10 of H^2 omega(|log H|) / (1 + |log H|)
  double log10_bound;
  /// T -> 1 - H omega(H log T)
  std::function<double(double)> sigma_threshold;
};

/// H in (0,1], omega admissible.
Theorem4Rhs theorem4_rhs(double H, const WeightFunction& omega);

/// min(H^{2+epsilon}, H).
double theorem1_rhs(double H, double epsilon);

/// T -> 1 - C H (log log T)^{-1-epsilon}
double theorem1_sigma_threshold(double H, double epsilon, double C, double T);

struct Theorem3Rhs {
  /// min(H, (H/200)^{7/(6 H epsilon)}) and its log10
  double value;
  double log10_value;
  /// T -> 1 - pi H (1 - epsilon) / (4 log log T)
  std::function<double(double)> sigma_threshold;
};

/// H > 0, epsilon in (0,1].
Theorem3Rhs theorem3_rhs(double H, double epsilon);

/// (4(1-sigma)/pi) log log(C(1-sigma)/epsilon). DomainError unless C(1-sigma)/epsilon > e.
double lemma4_H(double C, double epsilon, double sigma);

/// log10 of alpha^{-1} (1 + M^2 alpha/delta)^{-7/(6 delta)} 10^{-9/delta};
/// alpha in (0,1], M > 0, delta in (0, 0.05].
double lemma5_bound(double alpha, double M, double delta);

/// log10 of pi/(9 alpha (1-sigma)) (1 + 194 alpha M^2/delta)^{-7/(6 delta)} 10^{-9/delta}.
double lemma6_rhs(double alpha, double M, double delta, double sigma);

struct Lemma7Quantities {
  /// log10 of 1/(4 alpha delta (1-sigma)) (1 + 194 alpha/delta)^{-7/(6 delta)} 10^{-9/delta}
  double rhs_log10;
  /// (4/pi)(1-sigma) log log N
  double Delta;
  /// log10 of (1-sigma) delta^2 (1 + 194 alpha/delta)^{7/(3 delta)} 10^{18/delta}
  double N_min_log10;
  bool N_sufficient;
};

/// N >= 16, 1/2 <= sigma < 1.
Lemma7Quantities lemma7_quantities(double alpha, double delta, double sigma, double N);

/// log10 of 1/(4 alpha (1-sigma)) (1 + 194 alpha/(H eps))^{-7/(6 H eps)} 10^{-9/(H eps)}.
double lemma8_rhs(double alpha, double H, double epsilon, double sigma);

/// 1 - pi H (1 - epsilon) / (4 (log log N + 1)).
double lemma8_sigma_threshold(double H, double epsilon, double N);

/// The kernel tail bound as printed, (1/lambda) exp(-exp(T/lambda)), and the
/// form the substitution tau = t/lambda gives, lambda exp(-exp(T/lambda)). Natural logs.
double lemma3_log_bound_printed(double T, double lambda);
double lemma3_log_bound_substituted(double T, double lambda);

}  // namespace zetalb
