#include "zetalb/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetalb/errors.hpp"
#include "zetalb/quad.hpp"

namespace zetalb {

namespace {

using std::numbers::pi;

constexpr int kGridPoints = 1 << 16;
constexpr double kGridStart = -0.1;
constexpr double kGridEnd = 1.1;
constexpr double kSmallestWidth = 1e-6;
constexpr int kMaxBoxes = 100'000;


std::vector<double> geometric_widths(const WeightFunction& omega) {
  std::vector<double> w;
  double running = 0.0;
  for (int k = 0;; ++k) {
    if (k >= kMaxBoxes) throw BudgetExceeded("build_paley_wiener: width sequence decays too slowly", k);
    const double v = omega.at_log(static_cast<double>(k));
    w.push_back(v);
    running += v;
    // the final sum only grows, so this already gives a_{K-1} < 1e-6
    if (v / running < kSmallestWidth) break;
  }
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

std::vector<double> ratio_widths(int K) {
  const double rho = 1.0 - 1.0 / (4.0 * K);
  std::vector<double> w(K);
  double total = 0.0;
  for (int j = 0; j < K; ++j) {
    w[j] = std::pow(rho, j);
    total += w[j];
  }
  for (double& x : w) x /= total;
  return w;
}

double log_bound(const std::vector<double>& widths, double log_prefactor, double x) {
  const double ax = std::abs(x);
  double s = log_prefactor;
  for (double a : widths) {
    const double r = a * ax;
    if (r > 2.0) s += std::log(2.0 / r);
  }
  return s;
}

double decay_threshold(const std::vector<double>& widths, double log_prefactor, const WeightFunction& omega,
                       double x_end, double step) {
  double x0 = std::numeric_limits<double>::infinity();
  const double floor = 2.0 * omega.increasing_from;
  for (double hi = x_end; hi - step >= floor; hi -= step) {
    const double lo = hi - step;
    if (log_bound(widths, log_prefactor, lo) > pw_decay_log_target(omega, hi)) break;
    x0 = lo;
  }
  return x0;
}

std::vector<double> calibrated_widths(const WeightFunction& omega) {
  // prefactor bounded by 1/(2 pi): the grid normalization is at most 1
  const double log_pref = -std::log(2.0 * pi);
  int best_k = 2;
  double best_x0 = std::numeric_limits<double>::infinity();
  for (int K = 2; K <= 400; ++K) {
    const double x0 = decay_threshold(ratio_widths(K), log_pref, omega, kDecayRangeEnd, 0.5);
    if (x0 < best_x0) {
      best_x0 = x0;
      best_k = K;
    }
  }
  return ratio_widths(best_k);
}

// Value at t of the integral from the grid start of the piecewise-linear interpolant.
double cumulative_at(const std::vector<double>& f, const std::vector<double>& F, double h, double t) {
  const double pos = (t - kGridStart) / h;
  if (pos <= 0.0) return 0.0;
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  auto j = static_cast<std::ptrdiff_t>(std::floor(pos));
  if (j >= n - 1) return F[n - 1];
  const double s = (pos - static_cast<double>(j)) * h;
  return F[j] + f[j] * s + (f[j + 1] - f[j]) * s * s / (2.0 * h);
}

std::vector<double> convolve_boxes(const std::vector<double>& widths, double h) {
  std::vector<double> f(kGridPoints, 0.0);
  const double a0 = widths[0];
  const double a1 = widths[1];
  // U[0,a0] + U[0,a1] with a0 >= a1: a trapezoid
  for (int i = 0; i < kGridPoints; ++i) {
    const double t = kGridStart + i * h;
    double v = 0.0;
    if (t <= 0.0 || t >= a0 + a1) {
      v = 0.0;
    } else if (t < a1) {
      v = t / (a0 * a1);
    } else if (t <= a0) {
      v = 1.0 / a0;
    } else {
      v = (a0 + a1 - t) / (a0 * a1);
    }
    f[i] = v;
  }
  double support = a0 + a1;
  std::vector<double> F(kGridPoints, 0.0);
  std::vector<double> next(kGridPoints, 0.0);
  for (std::size_t k = 2; k < widths.size(); ++k) {
    const double a = widths[k];
    F[0] = 0.0;
    for (int i = 1; i < kGridPoints; ++i) F[i] = F[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    support += a;
    for (int i = 0; i < kGridPoints; ++i) {
      const double t = kGridStart + i * h;
      // the exact convolution vanishes outside [0, support]; interpolation
      // would otherwise smear up to one cell past the right end
      if (t <= 0.0 || t >= support) {
        next[i] = 0.0;
        continue;
      }
      next[i] = std::max(0.0, (F[i] - cumulative_at(f, F, h, t - a)) / a);
    }
    f.swap(next);
  }
  return f;
}

}  // namespace

double WeightFunction::at_log(double u) const {
  if (log_evaluator) return log_evaluator(u);
  return evaluator(std::exp(u));
}

WeightFunction epsilon_weight(double epsilon) {
  require_finite(epsilon, "epsilon_weight");
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon_weight: epsilon must be positive");
  WeightFunction w;
  w.evaluator = [epsilon](double x) { return x <= 1.0 ? 1.0 : std::pow(1.0 + std::log(x), -1.0 - epsilon); };
  w.log_evaluator = [epsilon](double u) { return u <= 0.0 ? 1.0 : std::pow(1.0 + u, -1.0 - epsilon); };
  w.description = "(1+log x)^(-1-eps), eps=" + fmt_param(epsilon);
  w.increasing_from = std::exp(epsilon);
  return w;
}

Admissibility check_admissibility(const WeightFunction& omega) {
  Admissibility r;
  if (!omega.evaluator) {
    r.violation = "evaluator missing";
    return r;
  }
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    if (omega(x) != 1.0) {
      r.violation = "omega(x) = 1 on [0,1] fails at x=" + fmt_param(x);
      return r;
    }
  }
  double prev_x = 1.0;
  double prev_w = omega(1.0);
  for (int k = 1;; ++k) {
    const double x = std::pow(1.1, k);
    if (x > 1e6) break;
    const double w = omega(x);
    if (!(w > 0.0 && w <= 1.0) || !std::isfinite(w)) {
      r.violation = "omega(x) in (0,1] fails at x=" + fmt_param(x);
      return r;
    }
    if (w > prev_w) {
      r.violation = "omega nonincreasing fails at x=" + fmt_param(x);
      return r;
    }
    if (prev_x >= omega.increasing_from && x * w < prev_x * prev_w) {
      r.violation = "x*omega(x) nondecreasing fails at x=" + fmt_param(x);
      return r;
    }
    prev_x = x;
    prev_w = w;
  }

  if (omega.increasing_from > 1.0) {
    r.notes = "x*omega(x) checked from x=" + fmt_param(omega.increasing_from);
  }

  QuadOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-10;
  auto block = [&](double lo, double hi) {
    return integrate<double>([&](double u) { return omega.at_log(u); }, lo, hi, opts).value;
  };
  double total = block(0.0, 1.0);
  double previous = total;
  for (int j = 0; j < 1000; ++j) {
    const double lo = std::ldexp(1.0, j);
    const double b = block(lo, 2.0 * lo);
    total += b;
    const double ratio = b / previous;
    previous = b;
    if (j >= 4 && ratio < 1.0) {
      const double tail = b * ratio / (1.0 - ratio);
      if (tail < 1e-6) {
        r.admissible = true;
        r.log_integral = total + tail;
        return r;
      }
    }
  }
  r.violation = "int_1^inf omega(x)/x dx not certified finite";
  return r;
}

void require_admissible(const WeightFunction& omega) {
  const Admissibility a = check_admissibility(omega);
  if (!a.admissible) throw InvalidWeight("weight '" + omega.description + "' inadmissible: " + a.violation);
}

std::string to_string(WidthLaw law) { return law == WidthLaw::geometric ? "geometric" : "calibrated"; }

PaleyWienerKernel build_paley_wiener(const WeightFunction& omega, WidthLaw law) {
  require_admissible(omega);
  PaleyWienerKernel k;
  k.law = law;
  k.omega = omega;
  k.widths = law == WidthLaw::geometric ? geometric_widths(omega) : calibrated_widths(omega);
  if (k.widths.size() < 2) throw InvalidWeight("build_paley_wiener: need at least two boxes");
  for (std::size_t i = 1; i < k.widths.size(); ++i) {
    if (!(k.widths[i] < k.widths[i - 1])) {
      throw InvalidWeight("build_paley_wiener: widths not strictly decreasing at k=" + std::to_string(i));
    }
  }
  k.grid_start = kGridStart;
  k.grid_step = (kGridEnd - kGridStart) / (kGridPoints - 1);
  std::vector<double> density = convolve_boxes(k.widths, k.grid_step);
  const double peak = *std::max_element(density.begin(), density.end());
  k.normalization = 1.0 / peak;
  k.phi = std::move(density);
  for (double& v : k.phi) v *= k.normalization;
  return k;
}

ComplexValue pw_phi_hat(const PaleyWienerKernel& kernel, double x) {
  double magnitude = kernel.normalization / (2.0 * pi);
  double phase = 0.0;
  for (double a : kernel.widths) {
    const double y = 0.5 * a * x;
    if (std::abs(a * x) < 1e-8) {
      magnitude *= 1.0 - y * y / 6.0;
    } else {
      magnitude *= std::sin(y) / y;
    }
    phase -= y;
  }
  return std::polar(1.0, phase) * magnitude;
}

double pw_phi_hat_log_abs(const PaleyWienerKernel& kernel, double x) {
  double s = std::log(kernel.normalization / (2.0 * pi));
  for (double a : kernel.widths) {
    const double y = 0.5 * a * x;
    if (std::abs(a * x) < 1e-8) {
      s += std::log1p(-y * y / 6.0);
    } else {
      s += std::log(std::abs(std::sin(y) / y));
    }
  }
  return s;
}

double pw_phi_hat_log_bound(const PaleyWienerKernel& kernel, double x) {
  return log_bound(kernel.widths, std::log(kernel.normalization / (2.0 * pi)), x);
}

ComplexValue pw_phi_hat_direct(const PaleyWienerKernel& kernel, double x) {
  const double h = kernel.grid_step;
  ComplexValue sum{0.0, 0.0};
  for (std::size_t i = 0; i < kernel.phi.size(); ++i) {
    if (kernel.phi[i] == 0.0) continue;
    sum += kernel.phi[i] * std::polar(1.0, -x * (kernel.grid_start + static_cast<double>(i) * h));
  }
  // transform of a hat function of half-width h is h sinc^2(xh/2)
  const double y = 0.5 * x * h;
  const double sinc = std::abs(y) < 1e-8 ? 1.0 : std::sin(y) / y;
  return sum * (h * sinc * sinc / (2.0 * pi));
}

double pw_decay_log_target(const WeightFunction& omega, double x) {
  return -3.0 * std::log(x) - 5.0 * x * omega(0.5 * x);
}

double pw_decay_threshold(const PaleyWienerKernel& kernel, double x_end, double step) {
  if (!(step > 0.0) || !(x_end > step)) throw InvalidArgument("pw_decay_threshold: need x_end > step > 0");
  return decay_threshold(kernel.widths, std::log(kernel.normalization / (2.0 * pi)), kernel.omega, x_end, step);
}

CheckReport pw_lemma1_check(const PaleyWienerKernel& kernel, double H, double sigma, double T, int samples) {
  if (!(H > 0.0 && H <= 1.0)) throw ConfigError("pw_lemma1_check: H must lie in (0,1]");
  if (!(T >= 16.0)) throw ConfigError("pw_lemma1_check: T >= 16 required");
  if (samples < 2) throw ConfigError("pw_lemma1_check: need at least 2 samples");
  const WeightFunction& omega = kernel.omega;
  const double threshold = 1.0 - H * omega(H * std::log(T));
  if (sigma < threshold) {
    throw ConfigError("pw_lemma1_check: sigma=" + fmt_param(sigma) + " below 1 - H omega(H log T) = " +
                      fmt_param(threshold));
  }
  const double abs_log_h = std::abs(std::log(H));
  const double log_x = abs_log_h / (H * omega(abs_log_h));
  const double log_n_max = 2.0 * std::log(T);
  ParamList params{{"H", fmt_param(H)},
                   {"sigma", fmt_param(sigma)},
                   {"T", fmt_param(T)},
                   {"law", to_string(kernel.law)},
                   {"log_X", fmt_param(log_x)}};
  constexpr double ln10 = std::numbers::ln10;
  if (log_x > log_n_max) {
    return make_report("pw_lemma1", params, 0.0, 0.0, BoundKind::upper, "vacuous: X > T^2, empty range");
  }
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  double worst_n = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double log_n = log_x + (log_n_max - log_x) * i / (samples - 1);
    if (log_n <= 0.0) continue;  // rhs is +inf at n = 1
    const double lhs = (pw_phi_hat_log_abs(kernel, H * log_n) - sigma * log_n) / ln10;
    const double rhs = (-3.0 * std::log(log_n) - log_n) / ln10;
    if (rhs - lhs < worst_margin) {
      worst_margin = rhs - lhs;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_n = log_n;
    }
  }
  params.emplace_back("worst_log_n", fmt_param(worst_n));
  return make_report("pw_lemma1", params, worst_lhs, worst_rhs, BoundKind::upper,
                     "worst of " + std::to_string(samples) + " log-spaced n in [X, T^2]");
}

}  // namespace zetalb
