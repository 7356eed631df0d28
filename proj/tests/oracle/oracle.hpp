#pragma once

// Extended-precision reference implementations (50 decimal digits).
// Test-only; nothing in the library depends on them.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline std::complex<double> to_double(const Complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline Complex from_double(std::complex<double> z) { return Complex(Real(z.real()), Real(z.imag())); }

/// Euler–Maclaurin Hurwitz zeta with N terms and Bernoulli corrections through B_40.
/// N = 0 picks 4 * ceil(max(|t|/pi, 20)).
Complex hurwitz(const Complex& s, const Real& alpha, std::uint64_t N = 0);
inline Complex zeta(const Complex& s, std::uint64_t N = 0) { return hurwitz(s, Real(1), N); }

/// Lerch zeta at rational beta = p/q from q Hurwitz values:
/// phi(alpha, p/q, s) = q^{-s} sum_r e^{2 pi i r p/q} zeta(s, (r+alpha)/q).
Complex lerch_rational(const Real& alpha, unsigned p, unsigned q, const Complex& s);

/// ln Gamma by upward shift and the Stirling series (Re z > 0).
Complex log_gamma(const Complex& z);

/// K_0(x) from its ascending series.
Real k0_series(const Real& x);

/// sum a_n (n + shift)^{-s}.
struct Term {
  std::uint64_t n;
  double re;
  double im;
};
Complex dirichlet(const std::vector<Term>& terms, const Real& shift, const Complex& s);

/// Hardy Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)).
Real hardy_z(const Real& t);

/// Zero of Z in [lo, hi] by bisection on its sign change.
Real z_zero(Real lo, Real hi);

Real euler_gamma();

}  // namespace oracle
