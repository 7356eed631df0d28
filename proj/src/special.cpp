#include "zetalb/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zetalb/errors.hpp"

namespace zetalb {
namespace {

using std::numbers::pi;

// B_{2k} for k = 1..11
constexpr std::array<double, 11> kBernoulliEven = {
    1.0 / 6.0,       -1.0 / 30.0,        1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,    7.0 / 6.0,      -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0,  854513.0 / 138.0};

// Euler–Maclaurin corrections use B2..B10; B12 bounds the remainder.
constexpr int kEmCorrections = 5;

struct KahanSum {
  ComplexValue sum{0.0, 0.0};
  ComplexValue carry{0.0, 0.0};

  void add(ComplexValue v) {
    const ComplexValue y = v - carry;
    const ComplexValue t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log of the Euler–Maclaurin remainder bound after the B_{2K} correction:
// |(s)_{2K+1}| |B_{2K+2}| / ((2K+2)! (sigma+2K+1)) * a^{-sigma-2K-1}
double log_em_remainder(ComplexValue s, double a) {
  const int order = 2 * kEmCorrections + 1;
  double log_poch = 0.0;
  for (int j = 0; j < order; ++j) log_poch += std::log(std::abs(s + static_cast<double>(j)));
  const double sigma = s.real();
  return log_poch + std::log(std::abs(kBernoulliEven[kEmCorrections])) -
         log_factorial(order + 1) - std::log(sigma + order) - (sigma + order) * std::log(a);
}

void check_em_domain(ComplexValue s, const char* who) {
  require_finite(s, who);
  if (s.real() < 0.25) {
    throw InvalidArgument(std::string(who) + ": Re(s) must be >= 1/4");
  }
  if (s == ComplexValue(1.0, 0.0)) {
    throw PoleError(std::string(who) + ": pole at s = 1");
  }
}

void check_options(const EvalOptions& opts) {
  if (!(opts.target_abs_error > 0.0) || opts.max_terms < 1) {
    throw InvalidArgument("EvalOptions: target_abs_error > 0 and max_terms >= 1 required");
  }
}

std::uint64_t em_truncation(ComplexValue s, double alpha, const EvalOptions& opts) {
  const double start = std::max(std::abs(s.imag()) / pi, 20.0);
  auto n = static_cast<std::uint64_t>(std::ceil(start));
  const double log_target = std::log(opts.target_abs_error);
  while (log_em_remainder(s, static_cast<double>(n) + alpha) > log_target) {
    n += std::max<std::uint64_t>(1, n / 4);
  }
  return n;
}

ComplexValue power_minus_s(double base, ComplexValue s) {
  const double l = std::log(base);
  const double mag = std::exp(-s.real() * l);
  const double phase = -s.imag() * l;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

ComplexValue euler_maclaurin(ComplexValue s, double alpha, const EvalOptions& opts, const char* who) {
  check_options(opts);
  check_em_domain(s, who);
  const std::uint64_t n_terms = em_truncation(s, alpha, opts);
  if (n_terms > opts.max_terms) {
    throw BudgetExceeded(std::string(who) + ": Euler-Maclaurin truncation exceeds max_terms", n_terms);
  }

  KahanSum acc;
  for (std::uint64_t n = n_terms; n-- > 0;) {
    acc.add(power_minus_s(static_cast<double>(n) + alpha, s));
  }

  const double a = static_cast<double>(n_terms) + alpha;
  const ComplexValue a_pow = power_minus_s(a, s);  // a^{-s}
  acc.add(a_pow * a / (s - 1.0));
  acc.add(0.5 * a_pow);

  // B_{2k}/(2k)! (s)_{2k-1} a^{-s-2k+1}
  ComplexValue poch = s;  // (s)_1
  ComplexValue scale = a_pow / a;
  double fact = 2.0;  // (2k)!
  for (int k = 1; k <= kEmCorrections; ++k) {
    acc.add(kBernoulliEven[k - 1] / fact * poch * scale);
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    scale /= a * a;
    fact *= static_cast<double>((2 * k + 1) * (2 * k + 2));
  }
  return acc.sum;
}

// Eulerian numbers A(m, k), m <= kMaxTailOrder.
constexpr int kMaxTailOrder = 60;

const std::vector<std::vector<double>>& eulerian_rows() {
  static const std::vector<std::vector<double>> rows = [] {
    std::vector<std::vector<double>> r(kMaxTailOrder + 1);
    r[0] = {1.0};
    r[1] = {1.0};
    for (int m = 2; m <= kMaxTailOrder; ++m) {
      r[m].assign(m, 0.0);
      for (int k = 0; k < m; ++k) {
        double v = 0.0;
        if (k < m - 1) v += (k + 1) * r[m - 1][k];
        if (k >= 1) v += (m - k) * r[m - 1][k - 1];
        r[m][k] = v;
      }
    }
    return r;
  }();
  return rows;
}

// sum_{j>=0} j^m z^j for |z| = 1, z != 1 (Abel sum): z A_m(z) / (1-z)^{m+1}, m >= 1.
ComplexValue geometric_moment(int m, ComplexValue z) {
  const ComplexValue inv = 1.0 / (1.0 - z);
  if (m == 0) return inv;
  const auto& row = eulerian_rows()[m];
  ComplexValue poly{0.0, 0.0};
  for (int k = m - 1; k >= 0; --k) poly = poly * z + row[k];
  ComplexValue p = inv;
  for (int i = 0; i < m; ++i) p *= inv;
  return z * poly * p;
}

ComplexValue unit_phase(double beta, std::uint64_t n) {
  // 2 pi frac(beta * n)
  const double x = beta * static_cast<double>(n);
  const double frac = x - std::floor(x);
  return std::polar(1.0, 2.0 * pi * frac);
}

struct TailResult {
  ComplexValue value;
  bool converged;
};

TailResult lerch_tail(double alpha, double beta, ComplexValue s, std::uint64_t n, double target) {
  const ComplexValue z = unit_phase(beta, 1);
  const double a = static_cast<double>(n) + alpha;
  ComplexValue coeff = power_minus_s(a, s);  // f^{(m)}(N)/m!
  KahanSum acc;
  double prev = INFINITY;
  for (int m = 0; m <= kMaxTailOrder; ++m) {
    const ComplexValue term = coeff * geometric_moment(m, z);
    acc.add(term);
    const double mag = std::abs(term);
    // moments vanish at even m when z = -1, so one tiny term proves nothing
    if (mag < 0.1 * target && prev < 0.1 * target) {
      return {unit_phase(beta, n) * acc.sum, true};
    }
    prev = mag;
    coeff *= -(s + static_cast<double>(m)) / (static_cast<double>(m + 1) * a);
  }
  return {{}, false};
}

ComplexValue stirling_log_gamma(ComplexValue w) {
  ComplexValue series{0.0, 0.0};
  const ComplexValue inv = 1.0 / w;
  const ComplexValue inv2 = inv * inv;
  ComplexValue p = inv;
  for (int k = 1; k <= 10; ++k) {
    series += kBernoulliEven[k - 1] / static_cast<double>(2 * k * (2 * k - 1)) * p;
    p *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi) + series;
}

bool is_nonpositive_integer(ComplexValue z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

ComplexValue log_sin_pi(ComplexValue z) {
  const double y = z.imag();
  const ComplexValue i{0.0, 1.0};
  if (y > 1.0) {
    return -i * pi * z + std::log((std::exp(2.0 * i * pi * z) - 1.0) / (2.0 * i));
  }
  if (y < -1.0) {
    return i * pi * z + std::log((1.0 - std::exp(-2.0 * i * pi * z)) / (2.0 * i));
  }
  return std::log(std::sin(pi * z));
}

}  // namespace

ComplexValue hurwitz_zeta(ComplexValue s, double alpha, const EvalOptions& opts) {
  require_finite(alpha, "hurwitz_zeta");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("hurwitz_zeta: alpha must lie in (0, 1]");
  }
  return euler_maclaurin(s, alpha, opts, "hurwitz_zeta");
}

ComplexValue riemann_zeta(ComplexValue s, const EvalOptions& opts) {
  return euler_maclaurin(s, 1.0, opts, "riemann_zeta");
}

ComplexValue lerch_phi(double alpha, double beta, ComplexValue s, const EvalOptions& opts) {
  require_finite(alpha, "lerch_phi");
  require_finite(beta, "lerch_phi");
  require_finite(s, "lerch_phi");
  check_options(opts);
  if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgument("lerch_phi: alpha and beta must lie in (0, 1]");
  }
  if (!(s.real() > 0.25)) {
    throw InvalidArgument("lerch_phi: Re(s) must be > 1/4");
  }
  const ComplexValue z = unit_phase(beta, 1);
  if (beta == 1.0 || std::abs(1.0 - z) < 1e-6) {
    return hurwitz_zeta(s, alpha, opts);
  }

  const double dist = std::min(beta, 1.0 - beta);
  // successive tail terms shrink by (|s|+m) / (2 pi dist (N+alpha)) <= 1/2 for m <= 30
  auto n = static_cast<std::uint64_t>(std::ceil(std::max(20.0, (std::abs(s) + 30.0) / (pi * dist))));
  for (;;) {
    if (n > opts.max_terms) {
      throw BudgetExceeded("lerch_phi: truncation exceeds max_terms", n);
    }
    const TailResult tail = lerch_tail(alpha, beta, s, n, opts.target_abs_error);
    if (tail.converged) {
      KahanSum acc;
      for (std::uint64_t k = n; k-- > 0;) {
        acc.add(unit_phase(beta, k) * power_minus_s(static_cast<double>(k) + alpha, s));
      }
      acc.add(tail.value);
      return acc.sum;
    }
    n *= 2;
  }
}

ComplexValue log_gamma(ComplexValue z) {
  require_finite(z, "log_gamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at nonpositive integer");
  }
  if (z.real() < 0.5) {
    return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  ComplexValue shift_log{0.0, 0.0};
  ComplexValue w = z;
  while (std::abs(w) < 15.0) {
    shift_log += std::log(w);
    w += 1.0;
  }
  return stirling_log_gamma(w) - shift_log;
}

ComplexValue complex_gamma(ComplexValue z) {
  require_finite(z, "complex_gamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("complex_gamma: pole at nonpositive integer");
  }
  if (z.real() < 0.5) {
    return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
  }
  return std::exp(log_gamma(z));
}

NamedConstants named_constants() noexcept {
  constexpr double g = std::numbers::egamma;
  const double eg = std::exp(-g);
  return {g, eg * pi * pi / 24.0, eg / 4.0};
}

}  // namespace zetalb
