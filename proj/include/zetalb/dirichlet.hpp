#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetalb/arith.hpp"
#include "zetalb/complex.hpp"

namespace zetalb {

/// Largest number of stored coefficients.
inline constexpr std::size_t kMaxCoefficients = 10'000'000;

enum class PolyMode {
  classical,  // a_n n^{-s}, n >= 1
  shifted,    // a_n (n + alpha)^{-s}, n >= 0
};

struct DirichletTerm {
  std::uint64_t n;
  ComplexValue a;
};

/// Finite Dirichlet polynomial with sparse coefficients.
///
/// Indices strictly increasing, zero coefficients dropped, at most
/// kMaxCoefficients terms. Classical mode reports alpha = 1.
class DirichletPolynomial {
 public:
  DirichletPolynomial() = default;

  /// Throws InvalidArgument on unsorted/duplicate indices or n = 0, BudgetExceeded past the cap.
  static DirichletPolynomial classical(std::vector<DirichletTerm> terms);
  /// alpha in (0,1].
  static DirichletPolynomial shifted(double alpha, std::vector<DirichletTerm> terms);

  PolyMode mode() const noexcept { return mode_; }
  double alpha() const noexcept { return alpha_; }
  const std::vector<DirichletTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  std::uint64_t max_index() const noexcept { return terms_.empty() ? 0 : terms_.back().n; }

  /// n (classical) or n + alpha (shifted).
  double base(std::uint64_t n) const noexcept;

  /// Coefficient at n, zero if absent.
  ComplexValue coefficient(std::uint64_t n) const;

  friend bool operator==(const DirichletPolynomial& p, const DirichletPolynomial& q);

 private:
  DirichletPolynomial(PolyMode mode, double alpha, std::vector<DirichletTerm> terms);

  PolyMode mode_ = PolyMode::classical;
  double alpha_ = 1.0;
  std::vector<DirichletTerm> terms_;
};

/// zeta_T(s) = sum_{1 <= n < T} n^{-s}. Needs T >= 2.
DirichletPolynomial truncated_zeta(double T);

/// M_X(s) = sum_{n <= X} mu(n) n^{-s}. Needs X >= 1 and sieve.limit() >= X.
DirichletPolynomial mollifier(double X, const SieveTable& sieve);

/// Dirichlet convolution of two classical polynomials (UnsupportedMode otherwise).
DirichletPolynomial convolve(const DirichletPolynomial& P, const DirichletPolynomial& Q);

/// sum a_n base(n)^{-s}, compensated summation.
ComplexValue evaluate(const DirichletPolynomial& P, ComplexValue s);

/// Values at sigma + i(t0 + k dt), k < count.
///
/// Each term's phase is advanced by a fixed rotator and recomputed directly
/// every 512 steps. Terms are processed in chunks of 4096 whose partial grids
/// are added in chunk order, so the result does not depend on `workers`.
std::vector<ComplexValue> evaluate_grid(const DirichletPolynomial& P, double sigma, double t0, double dt,
                                        std::size_t count, unsigned workers = 1);

/// sum |a_n| base(n)^{-sigma}, a bound for |P(sigma + it)|.
double abs_bound(const DirichletPolynomial& P, double sigma);

struct SummationSides {
  ComplexValue lhs;
  ComplexValue rhs;
};

/// Both sides of the kernel summation identity at s.
///
/// classical: lhs = sum a_n n^{-s} K_{i lambda log n}(x),
///            rhs = (1/2 lambda) int A(s+it) e^{-x cosh(t/lambda)} dt.
/// shifted:   lhs = sum a_n alpha^s (n+alpha)^{-s} K_{i lambda log((n+alpha)/alpha)}(x),
///            rhs = (1/2 lambda) int alpha^{s+it} A(s+it) e^{-x cosh(t/lambda)} dt.
/// Requires Re(s) >= 2, lambda > 0, x > 0.
SummationSides summation_formula_sides(const DirichletPolynomial& P, ComplexValue s, double x, double lambda);

struct DivisorTailSum {
  /// sum_{X < n <= cutoff} d(n) / (n log^3 n)
  double partial;
  /// int_cutoff^inf (log u + 2 gamma) / (u log^3 u) du = 1/L + gamma/L^2, L = log cutoff
  double tail_estimate;
  /// (partial + tail_estimate) log X
  double bound_ratio;
};

/// Needs X > 1 and cutoff >= 10 X; cutoff above the sieve cap raises BudgetExceeded.
DivisorTailSum divisor_tail_sum(double X, double cutoff);

/// {"mode": "classical"|"shifted", "alpha": a, "terms": [[n, re, im], ...]}
std::string to_json(const DirichletPolynomial& P);
/// Inverse of to_json; ConfigError on malformed input.
DirichletPolynomial polynomial_from_json(const std::string& text);

}  // namespace zetalb
