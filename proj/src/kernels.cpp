#include "zetalb/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zetalb/errors.hpp"
#include "zetalb/quad.hpp"
#include "zetalb/special.hpp"

namespace zetalb {
namespace {

using std::numbers::pi;

constexpr double kCancellationExponent = 6.0;

double contour_shift(double mu) {
  if (0.5 * pi * mu <= kCancellationExponent) return 0.0;
  return 0.5 * pi - kCancellationExponent / mu;
}

// upper bound for int_U^inf exp(-a cosh u) du
double log_tail_bound(double a, double u) { return -a * std::cosh(u) - std::log(a * std::sinh(u)); }

struct ContourIntegral {
  double integral;  // int_0^inf exp(-x c cosh u) cos(x s sinh u - mu u) du
  double error;
  double theta;
};

ContourIntegral kbessel_contour(double mu, double x) {
  require_finite(mu, "kbessel_integral");
  require_finite(x, "kbessel_integral");
  if (!(x > 0.0)) throw InvalidArgument("kbessel_integral: x must be positive");
  mu = std::abs(mu);
  const double theta = contour_shift(mu);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double a = x * c;

  // L1 mass of the integrand, K_0(a); sets the absolute tolerance
  QuadOptions mass_opts;
  mass_opts.abs_tol = 0.0;
  mass_opts.rel_tol = 1e-6;
  const double mass_cut = std::acosh(std::max(1.0, 50.0 / a)) + 1.0;
  const double mass =
      integrate<double>([&](double u) { return std::exp(-a * std::cosh(u)); }, 0.0, mass_cut, mass_opts).value;

  const double log_tail_target = std::log(1e-17 * mass);
  double hi = 1.0;
  while (log_tail_bound(a, hi) > log_tail_target && a * std::cosh(hi) < 745.0) hi *= 1.5;
  double lo = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid > 0.0 && log_tail_bound(a, mid) <= log_tail_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double cut = hi;

  auto integrand = [&](double u) {
    const double e = std::exp(u);
    const double ch = 0.5 * (e + 1.0 / e);
    const double sh = 0.5 * (e - 1.0 / e);
    return std::exp(-a * ch) * std::cos(x * s * sh - mu * u);
  };
  QuadOptions opts;
  opts.abs_tol = 2e-14 * mass;
  opts.max_panels = 400'000;
  const QuadResult<double> r = integrate<double>(integrand, 0.0, cut, opts);
  if (!r.converged) {
    throw NumericError("kbessel_integral: quadrature did not converge (mu=" + std::to_string(mu) +
                       ", x=" + std::to_string(x) + ", err=" + std::to_string(r.abs_error_estimate) +
                       ", evals=" + std::to_string(r.evaluations) + ")");
  }
  return {r.value, r.abs_error_estimate + std::exp(log_tail_bound(a, cut)), theta};
}

double log_sinh(double y) { return y + std::log1p(-std::exp(-2.0 * y)) - std::log(2.0); }

bool is_integer_order(ComplexValue nu) { return nu.imag() == 0.0 && nu.real() == std::round(nu.real()); }

struct SeriesSum {
  ComplexValue value;
  double abs_sum;
};

// sum_m (x^2/4)^m / (m! (nu+1)_m)
SeriesSum reduced_i_series(ComplexValue nu, double x) {
  const double q = 0.25 * x * x;
  ComplexValue term{1.0, 0.0};
  ComplexValue sum = term;
  double abs_sum = 1.0;
  for (int m = 1; m < 1000; ++m) {
    term *= q / (static_cast<double>(m) * (nu + static_cast<double>(m)));
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) < 1e-18 * std::abs(sum) && m > std::abs(nu)) return {sum, abs_sum};
  }
  throw NumericError("kbessel_series: ascending series did not converge");
}

void check_series_domain(double x) {
  require_finite(x, "kbessel_series");
  if (!(x > 0.0 && x <= 20.0)) throw InvalidArgument("kbessel_series: x must lie in (0, 20]");
}

// K_{i mu}(x) e^{pi mu/2} for mu > 0
KBesselResult imaginary_order_scaled(double mu, double x) {
  const ComplexValue lg = log_gamma(ComplexValue(1.0, mu));
  const SeriesSum s = reduced_i_series(ComplexValue(0.0, mu), x);
  const double log_pref = 0.5 * pi * mu - lg.real() - log_sinh(pi * mu);
  const double pref = pi * std::exp(log_pref);
  const ComplexValue phase = std::polar(1.0, mu * std::log(0.5 * x) - lg.imag());
  const double value = -pref * (phase * s.value).imag();
  return {ComplexValue(value, 0.0), KBesselMethod::series, pref * 1e-15 * s.abs_sum};
}

}  // namespace

double ramachandra_kernel(double t, double lambda, double x) { return std::exp(-x * std::cosh(t / lambda)); }

double log_ramachandra_kernel(double t, double lambda, double x) { return -x * std::cosh(t / lambda); }

KBesselResult kbessel_integral(double mu, double x) {
  const ContourIntegral c = kbessel_contour(mu, x);
  const double scale = std::exp(-std::abs(mu) * c.theta);
  return {ComplexValue(scale * c.integral, 0.0), KBesselMethod::integral, scale * c.error};
}

KBesselResult kbessel_integral_scaled(double mu, double x) {
  const ContourIntegral c = kbessel_contour(mu, x);
  const double scale = std::exp(std::abs(mu) * (0.5 * pi - c.theta));
  return {ComplexValue(scale * c.integral, 0.0), KBesselMethod::integral, scale * c.error};
}

KBesselResult kbessel_series(ComplexValue nu, double x) {
  require_finite(nu, "kbessel_series");
  check_series_domain(x);
  if (is_integer_order(nu)) {
    throw DomainError("kbessel_series: integer order is singular for the reflection formula");
  }
  if (nu.real() == 0.0) {
    const double mu = std::abs(nu.imag());
    KBesselResult r = imaginary_order_scaled(mu, x);
    const double scale = std::exp(-0.5 * pi * mu);
    return {r.value * scale, KBesselMethod::series, r.abs_error_estimate * scale};
  }
  const double lx = std::log(0.5 * x);
  const SeriesSum plus = reduced_i_series(nu, x);
  const SeriesSum minus = reduced_i_series(-nu, x);
  const ComplexValue i_plus = std::exp(nu * lx - log_gamma(nu + 1.0)) * plus.value;
  const ComplexValue i_minus = std::exp(-nu * lx - log_gamma(1.0 - nu)) * minus.value;
  const ComplexValue pref = 0.5 * pi / std::sin(pi * nu);
  const ComplexValue value = pref * (i_minus - i_plus);
  const double err = 1e-15 * std::abs(pref) * (std::abs(i_plus) + std::abs(i_minus));
  return {value, KBesselMethod::series, err};
}

KBesselResult kbessel_series_scaled(double mu, double x) {
  require_finite(mu, "kbessel_series");
  check_series_domain(x);
  if (mu == 0.0) throw DomainError("kbessel_series: integer order is singular for the reflection formula");
  return imaginary_order_scaled(std::abs(mu), x);
}

double kbessel_k0_series(double x) {
  check_series_domain(x);
  const double q = 0.25 * x * x;
  double term = 1.0;
  double i0 = 1.0;
  double harmonic = 0.0;
  double rest = 0.0;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    rest += term * harmonic;
    if (term * harmonic < 1e-18 * rest) break;
  }
  return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + rest;
}

KBesselAsymptotic kbessel_asymptotic(double t) {
  require_finite(t, "kbessel_asymptotic");
  if (!(t >= 2.0)) throw InvalidArgument("kbessel_asymptotic: t must be >= 2");
  const double envelope = std::exp(-0.5 * pi * t) * std::sqrt(2.0 * pi / t);
  const double lt = std::log(t);
  const double printed_phase = 0.5 * pi * (t * lt + t);
  const double stirling_phase = t * lt - t + 0.25 * pi;
  return {envelope * std::sin(printed_phase), envelope * std::sin(stirling_phase), envelope, printed_phase,
          stirling_phase};
}

double tail_integral_scaled(double T, double lambda, double x) {
  require_finite(T, "tail_integral");
  if (!(T >= 0.0) || !(lambda > 0.0) || !(x > 0.0)) {
    throw InvalidArgument("tail_integral: need T >= 0, lambda > 0, x > 0");
  }
  const double c0 = std::cosh(T / lambda);
  if (!std::isfinite(c0)) throw DomainError("tail_integral: cosh(T/lambda) overflows");

  // exp(-x (cosh(t/lambda) - cosh(T/lambda))) in the offset u = t - T, so nothing cancels near t = T
  const double a = T / lambda;
  auto scaled = [&](double u) {
    return std::exp(-2.0 * x * std::sinh(a + u / (2.0 * lambda)) * std::sinh(u / (2.0 * lambda)));
  };
  // any v with cosh(a + v) - cosh(a) >= 45/x will do; both candidates satisfy it
  double v = 2.0 * std::asinh(std::sqrt(22.5 / x));
  if (a > 0.0) v = std::min(v, 45.0 / (x * std::sinh(a)));
  const double cut = lambda * v;
  QuadOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 1e-14;
  return 2.0 * integrate<double>(scaled, 0.0, cut, opts).value;
}

double log_tail_integral(double T, double lambda, double x) {
  require_finite(T, "tail_integral");
  if (!(T >= 0.0) || !(lambda > 0.0) || !(x > 0.0)) {
    throw InvalidArgument("tail_integral: need T >= 0, lambda > 0, x > 0");
  }
  const double c0 = std::cosh(T / lambda);
  if (!std::isfinite(c0)) return -INFINITY;
  return -x * c0 + std::log(tail_integral_scaled(T, lambda, x));
}

double tail_integral(double T, double lambda, double x) { return std::exp(log_tail_integral(T, lambda, x)); }

SupKBesselRatio sup_kbessel_ratio() {
  constexpr double x = 2.0;
  constexpr double step = 0.05;
  constexpr int count = 1201;
  const double k0 = kbessel_integral(0.0, x).value.real();
  auto ratio = [&](double t) {
    if (t == 0.0) return 1.0;
    return std::abs(kbessel_integral_scaled(t, x).value.real()) / k0;
  };

  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = ratio(step * i);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double best = -1.0;
  double best_t = 0.0;
  for (int i = 0; i < count; ++i) {
    const bool left_ok = i == 0 || grid[i] >= grid[i - 1];
    const bool right_ok = i == count - 1 || grid[i] >= grid[i + 1];
    if (!left_ok || !right_ok) continue;
    double a = step * std::max(0, i - 1);
    double b = step * std::min(count - 1, i + 1);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = ratio(c);
    double fd = ratio(d);
    while (b - a > 1e-8) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = ratio(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = ratio(d);
      }
    }
    double t_star = 0.5 * (a + b);
    double v = ratio(t_star);
    if (grid[i] > v) {
      v = grid[i];
      t_star = step * i;
    }
    if (v > best) {
      best = v;
      best_t = t_star;
    }
  }

  const double t_end = step * (count - 1);
  const double tail_bound = std::sqrt(2.0 * pi / t_end) * (1.0 + 2.0 / t_end) / k0;
  if (!(tail_bound < best)) {
    throw NumericError("sup_kbessel_ratio: envelope past the scanned range does not stay below the maximum");
  }
  const double series = best_t > 0.0 ? std::abs(kbessel_series_scaled(best_t, x).value.real()) / k0 : 1.0;
  return {best, best_t, tail_bound, series};
}

}  // namespace zetalb
