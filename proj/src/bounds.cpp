#include "zetalb/bounds.hpp"

#include <cmath>
#include <numbers>

#include "zetalb/errors.hpp"

namespace zetalb {

namespace {

using std::numbers::pi;

void require_range(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

// log10 of (1 + k/delta)^{-7/(6 delta)} 10^{-9/delta}
double vanishing_factor_log10(double k, double delta) {
  return -7.0 / (6.0 * delta) * std::log10(1.0 + k / delta) - 9.0 / delta;
}

}  // namespace

Theorem4Rhs theorem4_rhs(double H, const WeightFunction& omega) {
  require_range(H > 0.0 && H <= 1.0, "theorem4_rhs: H must lie in (0,1]");
  const double l = std::abs(std::log(H));
  const double log10_bound = 2.0 * std::log10(H) + std::log10(omega(l)) - std::log10(1.0 + l);
  WeightFunction w = omega;
  return {log10_bound, [H, w](double T) { return 1.0 - H * w(H * std::log(T)); }};
}

double theorem1_rhs(double H, double epsilon) {
  require_range(H > 0.0 && epsilon > 0.0, "theorem1_rhs: H, epsilon > 0");
  return std::min(std::pow(H, 2.0 + epsilon), H);
}

double theorem1_sigma_threshold(double H, double epsilon, double C, double T) {
  require_range(T > std::exp(1.0), "theorem1_sigma_threshold: T > e needed for log log T > 0");
  return 1.0 - C * H * std::pow(std::log(std::log(T)), -1.0 - epsilon);
}

Theorem3Rhs theorem3_rhs(double H, double epsilon) {
  require_range(H > 0.0 && epsilon > 0.0 && epsilon <= 1.0, "theorem3_rhs: H > 0, epsilon in (0,1]");
  const double log10_second = 7.0 / (6.0 * H * epsilon) * std::log10(H / 200.0);
  const double log10_value = std::min(std::log10(H), log10_second);
  return {std::pow(10.0, log10_value), log10_value, [H, epsilon](double T) {
            return 1.0 - pi * H * (1.0 - epsilon) / (4.0 * std::log(std::log(T)));
          }};
}

double lemma4_H(double C, double epsilon, double sigma) {
  require_range(C > 0.0 && epsilon > 0.0 && sigma < 1.0, "lemma4_H: C, epsilon > 0 and sigma < 1");
  const double arg = C * (1.0 - sigma) / epsilon;
  if (!(arg > std::exp(1.0))) {
    throw DomainError("lemma4_H: C(1-sigma)/epsilon must exceed e, got " + std::to_string(arg));
  }
  return 4.0 * (1.0 - sigma) / pi * std::log(std::log(arg));
}

double lemma5_bound(double alpha, double M, double delta) {
  require_range(alpha > 0.0 && alpha <= 1.0, "lemma5_bound: alpha must lie in (0,1]");
  require_range(M > 0.0, "lemma5_bound: M must be positive");
  require_range(delta > 0.0 && delta <= 0.05, "lemma5_bound: delta must lie in (0, 0.05]");
  return -std::log10(alpha) + vanishing_factor_log10(M * M * alpha, delta);
}

double lemma6_rhs(double alpha, double M, double delta, double sigma) {
  require_range(alpha > 0.0 && alpha <= 1.0, "lemma6_rhs: alpha must lie in (0,1]");
  require_range(M > 0.0 && delta > 0.0 && sigma < 1.0, "lemma6_rhs: M, delta > 0 and sigma < 1");
  return std::log10(pi / (9.0 * alpha * (1.0 - sigma))) + vanishing_factor_log10(194.0 * alpha * M * M, delta);
}

Lemma7Quantities lemma7_quantities(double alpha, double delta, double sigma, double N) {
  require_range(alpha > 0.0 && alpha <= 1.0 && delta > 0.0, "lemma7_quantities: alpha in (0,1], delta > 0");
  require_range(N >= 16.0, "lemma7_quantities: N >= 16");
  require_range(sigma >= 0.5 && sigma < 1.0, "lemma7_quantities: 1/2 <= sigma < 1");
  Lemma7Quantities q;
  q.rhs_log10 = -std::log10(4.0 * alpha * delta * (1.0 - sigma)) + vanishing_factor_log10(194.0 * alpha, delta);
  q.Delta = 4.0 / pi * (1.0 - sigma) * std::log(std::log(N));
  q.N_min_log10 = std::log10((1.0 - sigma) * delta * delta) +
                  7.0 / (3.0 * delta) * std::log10(1.0 + 194.0 * alpha / delta) + 18.0 / delta;
  q.N_sufficient = std::log10(N) >= q.N_min_log10;
  return q;
}

double lemma8_rhs(double alpha, double H, double epsilon, double sigma) {
  require_range(alpha > 0.0 && alpha <= 1.0, "lemma8_rhs: alpha must lie in (0,1]");
  require_range(H > 0.0 && epsilon > 0.0 && epsilon < 1.0 && sigma < 1.0,
                "lemma8_rhs: H > 0, epsilon in (0,1), sigma < 1");
  const double delta = H * epsilon;
  return -std::log10(4.0 * alpha * (1.0 - sigma)) + vanishing_factor_log10(194.0 * alpha, delta);
}

double lemma8_sigma_threshold(double H, double epsilon, double N) {
  require_range(N > std::exp(std::exp(-1.0)), "lemma8_sigma_threshold: log log N + 1 must be positive");
  return 1.0 - pi * H * (1.0 - epsilon) / (4.0 * (std::log(std::log(N)) + 1.0));
}

double lemma3_log_bound_printed(double T, double lambda) { return -std::log(lambda) - std::exp(T / lambda); }

double lemma3_log_bound_substituted(double T, double lambda) { return std::log(lambda) - std::exp(T / lambda); }

}  // namespace zetalb
