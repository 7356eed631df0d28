#include "oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include <stdexcept>

namespace oracle {

namespace {

constexpr int kBernoulliTerms = 20;

}  // namespace

Complex hurwitz(const Complex& s, const Real& alpha, std::uint64_t N) {
  using boost::multiprecision::pow;
  if (N == 0) {
    const double t = std::abs(static_cast<double>(s.imag()));
    N = 4 * static_cast<std::uint64_t>(std::ceil(std::max(t / 3.141592653589793, 20.0)));
  }
  Complex sum(0);
  for (std::uint64_t n = 0; n < N; ++n) sum += pow(Complex(Real(n) + alpha), -s);
  const Complex a(Real(N) + alpha);
  sum += pow(a, Complex(1) - s) / (s - Complex(1));
  sum += pow(a, -s) / 2;
  // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * a^{-s-2k+1}
  Complex rising = s;
  Real factorial = 2;
  Complex power = pow(a, -s - Complex(1));
  const Complex inv_a2 = Complex(1) / (a * a);
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    sum += boost::math::bernoulli_b2n<Real>(k) / factorial * rising * power;
    rising *= (s + Complex(2 * k - 1)) * (s + Complex(2 * k));
    factorial *= Real(2 * k + 1) * Real(2 * k + 2);
    power *= inv_a2;
  }
  return sum;
}

Complex lerch_rational(const Real& alpha, unsigned p, unsigned q, const Complex& s) {
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Complex sum(0);
  for (unsigned r = 0; r < q; ++r) {
    const Complex phase = exp(Complex(Real(0), two_pi * Real(r * p) / Real(q)));
    sum += phase * hurwitz(s, (Real(r) + alpha) / Real(q));
  }
  return pow(Complex(Real(q)), -s) * sum;
}

Complex log_gamma(const Complex& z) {
  using boost::multiprecision::log;
  constexpr int shift = 40;
  Complex w = z;
  Complex log_prod(0);
  for (int k = 0; k < shift; ++k) {
    log_prod += log(w);
    w += Complex(1);
  }
  const Real half_log_two_pi = log(2 * boost::math::constants::pi<Real>()) / 2;
  Complex r = (w - Complex(Real(0.5))) * log(w) - w + Complex(half_log_two_pi);
  Complex w_pow = w;
  const Complex w2 = w * w;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    r += boost::math::bernoulli_b2n<Real>(k) / (Real(2 * k) * Real(2 * k - 1)) / w_pow;
    w_pow *= w2;
  }
  return r - log_prod;
}

Real k0_series(const Real& x) {
  using boost::multiprecision::log;
  const Real q = x * x / 4;
  Real term = 1;  // (x^2/4)^k / (k!)^2
  Real harmonic = 0;
  Real i0 = 0;
  Real rest = 0;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) {
      term *= q / (Real(k) * Real(k));
      harmonic += Real(1) / Real(k);
    }
    i0 += term;
    rest += term * harmonic;
    if (k > 10 && term < Real(1e-60)) break;
  }
  return -(log(x / 2) + euler_gamma()) * i0 + rest;
}

Complex dirichlet(const std::vector<Term>& terms, const Real& shift, const Complex& s) {
  using boost::multiprecision::pow;
  Complex sum(0);
  for (const Term& t : terms) sum += Complex(Real(t.re), Real(t.im)) * pow(Complex(Real(t.n) + shift), -s);
  return sum;
}

Real hardy_z(const Real& t) {
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  const Real theta = log_gamma(Complex(Real(0.25), t / 2)).imag() - t / 2 * log(boost::math::constants::pi<Real>());
  return (exp(Complex(Real(0), theta)) * zeta(Complex(Real(0.5), t))).real();
}

Real z_zero(Real lo, Real hi) {
  Real flo = hardy_z(lo);
  if ((flo < 0) == (hardy_z(hi) < 0)) throw std::runtime_error("z_zero: no sign change");
  for (int i = 0; i < 80; ++i) {
    const Real mid = (lo + hi) / 2;
    const Real fm = hardy_z(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

Real euler_gamma() { return boost::math::constants::euler<Real>(); }

}  // namespace oracle
