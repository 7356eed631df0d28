#pragma once

#include <cstdint>

#include "zetalb/complex.hpp"

namespace zetalb {

struct EvalOptions {
  double target_abs_error = 1e-12;
  std::uint64_t max_terms = 10'000'000;
};

/// Riemann zeta by Euler–Maclaurin summation. Implementation range Re(s) >= 1/4.
///
/// Truncation starts at N = ceil(max(|t|/pi, 20)) and grows until the
/// remainder after the B10 correction is below opts.target_abs_error.
/// Throws PoleError at s = 1 and BudgetExceeded if N would pass opts.max_terms.
ComplexValue riemann_zeta(ComplexValue s, const EvalOptions& opts = {});

/// Hurwitz zeta sum_{n>=0} (n+alpha)^{-s}, alpha in (0,1].
ComplexValue hurwitz_zeta(ComplexValue s, double alpha, const EvalOptions& opts = {});

/// Lerch zeta phi(alpha, beta, s) = sum_{n>=0} e^{2 pi i n beta} (n+alpha)^{-s}.
///
/// For beta != 1 the tail past N is summed in closed form against the
/// geometric kernel sum_j j^m z^j (Eulerian polynomials); when
/// |1 - e^{2 pi i beta}| < 1e-6 the Hurwitz path is used instead.
ComplexValue lerch_phi(double alpha, double beta, ComplexValue s, const EvalOptions& opts = {});

/// Gamma function via shifted Stirling series and reflection.
ComplexValue complex_gamma(ComplexValue z);

/// A logarithm of Gamma(z). Continuous (principal lnGamma) for Re(z) >= 1/2;
/// for Re(z) < 1/2 it is a logarithm whose exponential is Gamma(z).
ComplexValue log_gamma(ComplexValue z);

struct NamedConstants {
  double euler_gamma;
  /// e^{-gamma} pi^2 / 24, the floor constant for int |zeta(1+it)| dt.
  double ity_constant;
  /// e^{-gamma} / 4, the floor constant for int |zeta(1+it)|^{-1} dt.
  double ity_inverse_constant;
};

NamedConstants named_constants() noexcept;

}  // namespace zetalb
