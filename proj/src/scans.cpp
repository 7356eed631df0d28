#include "zetalb/scans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetalb/bounds.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/parallel.hpp"
#include "zetalb/quad.hpp"
#include "zetalb/rng.hpp"
#include "zetalb/special.hpp"

namespace zetalb {

namespace {

using std::numbers::pi;

constexpr double kIntervalTol = 1e-9;
constexpr double kItySlack = 0.1;
constexpr double kFeConstant = 10.0;

double log10_or_ninf(double v) { return v > 0.0 ? std::log10(v) : -std::numeric_limits<double>::infinity(); }

// Applies the implied-constant protocol: lower checks must keep ratio >=
// baseline/2, upper checks ratio <= 2 baseline; without a baseline the sides
// are compared as they stand.
CheckReport regression_report(std::string check_id, ParamList params, const std::string& key, double lhs,
                              double rhs, BoundKind kind, const ScanOptions& opts, std::string notes) {
  const double ratio = lhs / rhs;
  params.emplace_back("ratio", fmt_param(ratio));
  double factor = 1.0;
  std::string protocol;
  const auto b = opts.baseline ? opts.baseline->ratio(key) : std::nullopt;
  if (b) {
    factor = kind == BoundKind::lower ? *b / kRegressionFactor : *b * kRegressionFactor;
    protocol = std::string("regression: ratio ") + (kind == BoundKind::lower ? ">= 0.5" : "<= 2") +
               " x baseline " + fmt_param(*b);
  } else {
    protocol = "uncalibrated: raw comparison, no baseline for " + key;
  }
  if (!notes.empty()) protocol += "; " + notes;
  CheckReport r = make_report(std::move(check_id), std::move(params), log10_or_ninf(lhs),
                              std::log10(rhs * factor), kind, protocol);
  r.regression_key = key;
  r.ratio = ratio;
  return r;
}

ComplexValue zeta_at(double sigma, double t) { return riemann_zeta(ComplexValue(sigma, t)); }

}  // namespace

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi >= lo) || count < 1) throw InvalidArgument("log_spaced: need 0 < lo <= hi, count >= 1");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(a + (b - a) * static_cast<double>(i) / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> random_log_uniform(double lo, double hi, std::size_t count, std::uint64_t seed) {
  if (!(lo > 0.0 && hi >= lo)) throw InvalidArgument("random_log_uniform: need 0 < lo <= hi");
  Rng rng(seed);
  std::vector<double> out(count);
  for (auto& v : out) v = std::exp(rng.uniform(std::log(lo), std::log(hi)));
  return out;
}

std::vector<double> default_T_samples() { return log_spaced(16.0, 1e5, 200); }

double zeta_abs_integral(double sigma, double T, double H, bool inverse) {
  const QuadResult<double> r = integrate_abs(
      [&](double t) {
        const ComplexValue z = zeta_at(sigma, t);
        return inverse ? 1.0 / z : z;
      },
      T, T + H, kIntervalTol);
  if (!r.converged) {
    throw NumericError("zeta_abs_integral: no convergence at sigma=" + fmt_param(sigma) + ", T=" + fmt_param(T));
  }
  return r.value;
}

std::vector<CheckReport> ity_scan(double H, const std::vector<double>& T_samples, bool include_inverse,
                                  const ScanOptions& opts) {
  if (!(H > 0.0 && H <= 0.5)) throw ConfigError("ity_scan: H must lie in (0, 0.5]");
  const NamedConstants c = named_constants();
  const double floor = c.ity_constant * H * H * (1.0 - kItySlack);
  const double floor_inv = c.ity_inverse_constant * H * H * (1.0 - kItySlack);
  const std::size_t per = include_inverse ? 2 : 1;
  std::vector<CheckReport> out(T_samples.size() * per);
  parallel_for(T_samples.size(), opts.workers, [&](std::size_t i) {
    const double T = T_samples[i];
    const ParamList params{{"H", fmt_param(H)}, {"T", fmt_param(T)}, {"slack", fmt_param(kItySlack)}};
    const std::string note = "one-sided floor; sampling cannot certify the infimum";
    out[per * i] = make_report("ity", params, log10_or_ninf(zeta_abs_integral(1.0, T, H)), std::log10(floor),
                               BoundKind::lower, note);
    if (include_inverse) {
      out[per * i + 1] = make_report("ity_inverse", params, log10_or_ninf(zeta_abs_integral(1.0, T, H, true)),
                                     std::log10(floor_inv), BoundKind::lower, note);
    }
  });
  return out;
}

std::vector<CheckReport> theorem1_scan(const std::vector<double>& H_list, double epsilon,
                                       const std::vector<double>& T_samples, const ScanOptions& opts, double C) {
  if (!(epsilon > 0.0) || !(C > 0.0)) throw ConfigError("theorem1_scan: epsilon, C > 0");
  for (double T : T_samples) {
    if (!(T >= 16.0)) throw ConfigError("theorem1_scan: T >= 16 required");
  }
  for (double H : H_list) {
    if (!(H > 0.0)) throw ConfigError("theorem1_scan: H > 0 required");
  }
  const std::size_t nT = T_samples.size();
  std::vector<CheckReport> out(H_list.size() * nT);
  parallel_for(out.size(), opts.workers, [&](std::size_t idx) {
    const double H = H_list[idx / nT];
    const double T = T_samples[idx % nT];
    const double threshold = theorem1_sigma_threshold(H, epsilon, C, T);
    const double sigma = std::max(threshold, kSigmaFloor);
    const double lhs = zeta_abs_integral(sigma, T, H);
    const std::string key = "t1|H=" + fmt_param(H) + "|eps=" + fmt_param(epsilon) + "|C=" + fmt_param(C);
    ParamList params{{"H", fmt_param(H)},         {"epsilon", fmt_param(epsilon)},
                     {"C", fmt_param(C)},         {"T", fmt_param(T)},
                     {"sigma", fmt_param(sigma)}, {"sigma_threshold", fmt_param(threshold)}};
    out[idx] = regression_report("t1", std::move(params), key, lhs, theorem1_rhs(H, epsilon), BoundKind::lower,
                                 opts, sigma > threshold ? "sigma raised to floor 0.5" : "");
  });
  return out;
}

std::vector<CheckReport> theorem4_scan(double H, const WeightFunction& omega, const std::vector<double>& T_samples,
                                       const ScanOptions& opts) {
  if (!(H > 0.0 && H <= 1.0)) throw ConfigError("theorem4_scan: H must lie in (0,1]");
  for (double T : T_samples) {
    if (!(T >= 16.0)) throw ConfigError("theorem4_scan: T >= 16 required");
  }
  require_admissible(omega);
  const Theorem4Rhs rhs = theorem4_rhs(H, omega);
  const double abs_log_h = std::abs(std::log(H));
  const double log_x = abs_log_h / (H * omega(abs_log_h));
  if (log_x > std::log(static_cast<double>(kMaxSieveLimit))) {
    throw BudgetExceeded("theorem4_scan: mollifier length X = e^" + fmt_param(log_x) +
                             " exceeds the sieve budget; use a larger H",
                         std::numeric_limits<std::uint64_t>::max());
  }
  const double X = std::exp(log_x);
  const SieveTable sieve = build_sieve(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(X))));
  const DirichletPolynomial M = mollifier(std::max(1.0, X), sieve);
  const double side_scale = abs_log_h / (omega(abs_log_h) * H);
  const std::string key = "t4|H=" + fmt_param(H) + "|omega=" + omega.description;

  std::vector<CheckReport> out(2 * T_samples.size());
  parallel_for(T_samples.size(), opts.workers, [&](std::size_t i) {
    const double T = T_samples[i];
    const double sigma = rhs.sigma_threshold(T);
    const double lhs = zeta_abs_integral(sigma, T, H);
    ParamList params{{"H", fmt_param(H)}, {"T", fmt_param(T)}, {"sigma", fmt_param(sigma)}, {"X", fmt_param(X)}};
    out[2 * i] = regression_report("t4", params, key, lhs, std::pow(10.0, rhs.log10_bound), BoundKind::lower, opts,
                                   omega.description);

    constexpr std::size_t kPoints = 129;
    const auto values = evaluate_grid(M, sigma, T, H / (kPoints - 1), kPoints);
    double mx = 0.0;
    for (const auto& v : values) mx = std::max(mx, std::abs(v));
    double triangle = 0.0;
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(std::floor(X)); ++n) {
      triangle += std::pow(static_cast<double>(n), -sigma);
    }
    std::string note = "triangle inequality; max/(|log H|/(omega H)) = ";
    note += side_scale > 0.0 ? fmt_param(mx / side_scale) : std::string("inf (H = 1)");
    out[2 * i + 1] = make_report("t4_mollifier", params, std::log10(mx), std::log10(triangle), BoundKind::upper, note);
  });
  return out;
}

std::vector<CheckReport> theorem3_scan(double H, double epsilon, double alpha, const std::vector<double>& T_samples,
                                       const ScanOptions& opts) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("theorem3_scan: alpha must lie in (0,1]");
  for (double T : T_samples) {
    if (!(T >= 16.0)) throw ConfigError("theorem3_scan: T >= 16 required");
  }
  const Theorem3Rhs rhs = theorem3_rhs(H, epsilon);
  const std::string key =
      "t3|H=" + fmt_param(H) + "|eps=" + fmt_param(epsilon) + "|alpha=" + fmt_param(alpha);
  std::vector<CheckReport> out(T_samples.size());
  parallel_for(T_samples.size(), opts.workers, [&](std::size_t i) {
    const double T = T_samples[i];
    const double threshold = rhs.sigma_threshold(T);
    const double sigma = std::max(threshold, kSigmaFloor);
    const QuadResult<double> r = integrate_abs(
        [&](double t) { return hurwitz_zeta(ComplexValue(sigma, t), alpha); }, T, T + H, kIntervalTol);
    if (!r.converged) throw NumericError("theorem3_scan: no convergence at T=" + fmt_param(T));
    ParamList params{{"H", fmt_param(H)},         {"epsilon", fmt_param(epsilon)},
                     {"alpha", fmt_param(alpha)}, {"T", fmt_param(T)},
                     {"sigma", fmt_param(sigma)}, {"sigma_threshold", fmt_param(threshold)}};
    out[i] = regression_report("t3", std::move(params), key, r.value, rhs.value, BoundKind::lower, opts,
                               sigma > threshold ? "sigma raised to floor 0.5" : "");
  });
  return out;
}

std::vector<CheckReport> lemma8_check(const DirichletPolynomial& A, double sigma, double H, double epsilon,
                                      const std::vector<double>& T_samples, const ScanOptions& opts) {
  if (A.mode() != PolyMode::shifted) throw ConfigError("lemma8_check: A must be a shifted polynomial");
  if (A.empty() || A.terms().front().n != 0 || A.terms().front().a != ComplexValue(1.0, 0.0)) {
    throw ConfigError("lemma8_check: A must start with the alpha^{-s} term (a_0 = 1)");
  }
  for (const auto& t : A.terms()) {
    if (t.n > 0 && std::abs(t.a) > 1.0) throw ConfigError("lemma8_check: |a_n| <= 1 violated");
  }
  if (!(H > 0.0) || !(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("lemma8_check: H > 0, 0 < eps < 1");
  // zero coefficients may be appended, so short polynomials are treated as N = 16
  const double N = std::max<double>(16.0, static_cast<double>(A.max_index()));
  const double threshold = lemma8_sigma_threshold(H, epsilon, N);
  if (sigma < threshold) {
    throw ConfigError("lemma8_check: sigma=" + fmt_param(sigma) + " below threshold " + fmt_param(threshold));
  }
  if (!(sigma < 1.0)) throw ConfigError("lemma8_check: sigma < 1 required");
  const double alpha = A.alpha();
  const double rhs = lemma8_rhs(alpha, H, epsilon, sigma);
  std::vector<CheckReport> out(T_samples.size());
  parallel_for(T_samples.size(), opts.workers, [&](std::size_t i) {
    const double T = T_samples[i];
    const QuadResult<double> r =
        integrate_abs([&](double t) { return evaluate(A, ComplexValue(sigma, t)); }, T, T + H, kIntervalTol);
    if (!r.converged) throw NumericError("lemma8_check: no convergence at T=" + fmt_param(T));
    ParamList params{{"H", fmt_param(H)},         {"epsilon", fmt_param(epsilon)},
                     {"delta", fmt_param(H * epsilon)}, {"alpha", fmt_param(alpha)},
                     {"N", fmt_param(N)},         {"sigma", fmt_param(sigma)},
                     {"T", fmt_param(T)}};
    out[i] = make_report("lemma8", std::move(params), log10_or_ninf(r.value), rhs, BoundKind::lower,
                         "infimum over T: every sample must pass");
  });
  return out;
}

std::vector<CheckReport> lipschitz_check(const std::vector<double>& t_samples, double delta,
                                         const ScanOptions& opts) {
  if (!(delta > 0.0)) throw ConfigError("lipschitz_check: delta > 0 required");
  for (double t : t_samples) {
    if (!(t >= 16.0)) throw ConfigError("lipschitz_check: t >= 16 required");
  }
  const std::string key = "lipschitz|delta=" + fmt_param(delta);
  std::vector<CheckReport> out(t_samples.size());
  parallel_for(t_samples.size(), opts.workers, [&](std::size_t i) {
    const double t = t_samples[i];
    const double sigma = 1.0 - delta / std::log(std::log(t));
    const ComplexValue z1 = zeta_at(1.0, t);
    const double lhs = std::abs(z1 - zeta_at(sigma, t));
    ParamList params{{"delta", fmt_param(delta)}, {"t", fmt_param(t)}, {"sigma", fmt_param(sigma)}};
    out[i] = regression_report("lipschitz", std::move(params), key, lhs, delta * std::abs(z1), BoundKind::upper,
                               opts, "");
  });
  return out;
}

std::vector<CheckReport> approx_fe_check(double sigma, const std::vector<double>& T_list, std::size_t samples,
                                         std::uint64_t seed, const ScanOptions& opts) {
  if (!(sigma >= 0.5)) throw ConfigError("approx_fe_check: sigma >= 1/2 required");
  if (samples < 1) throw ConfigError("approx_fe_check: samples >= 1");
  std::vector<CheckReport> out(T_list.size());
  parallel_for(T_list.size(), opts.workers, [&](std::size_t i) {
    const double T = T_list[i];
    if (!(T >= 2.0)) throw ConfigError("approx_fe_check: T >= 2 required");
    const DirichletPolynomial zt = truncated_zeta(T);
    Rng rng(seed + i);
    double worst = 0.0;
    double worst_t = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = rng.uniform(0.5 * T, T);
      const ComplexValue s(sigma, t + T);
      const double c = std::abs(riemann_zeta(s) - evaluate(zt, s)) * std::sqrt(T);
      if (c > worst) {
        worst = c;
        worst_t = t;
      }
    }
    ParamList params{{"sigma", fmt_param(sigma)},
                     {"T", fmt_param(T)},
                     {"samples", std::to_string(samples)},
                     {"worst_t", fmt_param(worst_t)}};
    out[i] = make_report("fe", std::move(params), log10_or_ninf(worst), std::log10(kFeConstant), BoundKind::upper,
                         "empirical constant max |zeta(s+iT) - zeta_T(s+iT)| sqrt(T), t in (T/2, T)");
  });
  return out;
}

MaxScanResult max_scan(double sigma, double T, double H, double grid_step) {
  if (!(H >= 3.0)) throw ConfigError("max_scan: H >= 3 required");
  if (!(grid_step > 0.0)) throw ConfigError("max_scan: grid_step > 0 required");
  auto f = [&](double t) { return std::abs(zeta_at(sigma, t)); };
  const auto steps = static_cast<std::size_t>(std::ceil(H / grid_step));
  double best = -1.0;
  double best_t = T;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = std::min(T + H, T + static_cast<double>(k) * grid_step);
    const double v = f(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  double a = std::max(T, best_t - grid_step);
  double b = std::min(T + H, best_t + grid_step);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-9 * std::max(1.0, T)) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  const double tm = 0.5 * (a + b);
  const double vm = f(tm);
  if (vm > best) {
    best = vm;
    best_t = tm;
  }
  const double llh = std::log(std::log(H));
  return {best, best_t, best / llh, std::log(best) * llh / std::pow(std::log(H), 1.0 - sigma)};
}

CheckReport max_scan_report(double sigma, double T, double H, double grid_step) {
  const MaxScanResult m = max_scan(sigma, T, H, grid_step);
  ParamList params{{"sigma", fmt_param(sigma)},
                   {"T", fmt_param(T)},
                   {"H", fmt_param(H)},
                   {"grid_step", fmt_param(grid_step)},
                   {"argmax_t", fmt_param(m.argmax_t)},
                   {"loglogH_ratio", fmt_param(m.loglogH_ratio)},
                   {"c_sigma", fmt_param(m.c_sigma)}};
  return make_info_report("max", std::move(params), std::log10(m.max_abs),
                          "max |zeta| on [T, T+H]; implied constant unknown");
}

std::map<std::string, double> extreme_ratios(const std::vector<CheckReport>& reports) {
  std::map<std::string, double> out;
  for (const auto& r : reports) {
    if (r.regression_key.empty()) continue;
    auto it = out.find(r.regression_key);
    if (it == out.end()) {
      out.emplace(r.regression_key, r.ratio);
    } else if (r.kind == BoundKind::lower) {
      it->second = std::min(it->second, r.ratio);
    } else {
      it->second = std::max(it->second, r.ratio);
    }
  }
  return out;
}

}  // namespace zetalb
