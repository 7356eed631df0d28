#include "zetalb/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetalb/arith.hpp"
#include "zetalb/bounds.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/kernels.hpp"
#include "zetalb/rng.hpp"

namespace zetalb {

namespace {

using std::numbers::pi;
constexpr double kLog10e = std::numbers::log10e;

double log10_or_ninf(double v) { return v > 0.0 ? std::log10(v) : -std::numeric_limits<double>::infinity(); }

// envelope-scaled |K_{it}(2)| e^{pi t/2}
double scaled_k(double t) { return kbessel_integral_scaled(t, 2.0).value.real(); }

double bisect_zero(double a, double b) {
  double fa = scaled_k(a);
  for (int i = 0; i < 60 && b - a > 1e-12; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = scaled_k(m);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// zeros of sin(phase(t)) on [lo, hi] for an increasing phase
template <typename Phase>
std::vector<double> phase_zeros(Phase phase, double lo, double hi) {
  std::vector<double> out;
  const auto k_lo = static_cast<long>(std::floor(phase(lo) / pi)) - 1;
  const auto k_hi = static_cast<long>(std::ceil(phase(hi) / pi)) + 1;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double target = pi * static_cast<double>(k);
    double a = 1.0;
    double b = 2.0 * hi;
    if (phase(a) > target || phase(b) < target) continue;
    for (int i = 0; i < 200 && b - a > 1e-13; ++i) {
      const double m = 0.5 * (a + b);
      if (phase(m) < target) {
        a = m;
      } else {
        b = m;
      }
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

double max_nearest_distance(const std::vector<double>& from, const std::vector<double>& to) {
  double worst = 0.0;
  for (double z : from) {
    double best = std::numeric_limits<double>::infinity();
    for (double p : to) best = std::min(best, std::abs(z - p));
    worst = std::max(worst, best);
  }
  return worst;
}

double golden_max(double (*f)(double), double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-9) {
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
  return 0.5 * (a + b);
}

double abs_scaled_k(double t) { return std::abs(scaled_k(t)); }

ComplexValue random_coefficient(Rng& rng) { return std::polar(rng.uniform(), 2.0 * pi * rng.uniform()); }

}  // namespace

TailRatioSup tail_ratio_sup() {
  TailRatioSup best{-1.0, 0.0};
  for (int i = 0; i <= 5000; ++i) {
    const double T = 0.001 * i;
    const double log_ratio = log_tail_integral(T, 1.0, 2.0) + std::exp(T);
    const double ratio = std::exp(log_ratio);
    if (ratio > best.sup_value) best = {ratio, T};
  }
  return best;
}

std::vector<CheckReport> constants_suite() {
  std::vector<CheckReport> out;
  const double k_int = kbessel_integral(0.0, 2.0).value.real();
  const double k_ser = kbessel_k0_series(2.0);
  out.push_back(make_report("k0_lower", {{"x", "2"}}, std::log10(std::min(k_int, k_ser)), std::log10(1.0 / 9.0),
                            BoundKind::lower,
                            "K_0(2) >= 1/9; integral " + fmt_param(k_int) + ", series " + fmt_param(k_ser)));

  const TailRatioSup tail = tail_ratio_sup();
  out.push_back(make_report("tail_sup", {{"argmax_T", fmt_param(tail.argmax_T)}, {"value", fmt_param(tail.sup_value)}},
                            log10_or_ninf(std::abs(tail.sup_value - 0.619)), std::log10(1e-3), BoundKind::upper,
                            "sup_T tail(T,1,2)/exp(-exp T) = 0.619 +- 0.001; 2e K_0(2) = " +
                                fmt_param(2.0 * std::numbers::e * k_int)));

  const SupKBesselRatio sup = sup_kbessel_ratio();
  ParamList params{{"argmax_t", fmt_param(sup.argmax_t)}, {"value", fmt_param(sup.sup_value)}};
  out.push_back(make_report("kbessel_sup", params, log10_or_ninf(std::abs(sup.sup_value - 13.917)), std::log10(0.01),
                            BoundKind::upper,
                            "sup |K_it(2)| e^{pi t/2}/K_0(2) = 13.917 +- 0.01; series " + fmt_param(sup.series_value)));
  out.push_back(make_report("kbessel_sup_squared", params, 2.0 * std::log10(sup.sup_value), std::log10(194.0),
                            BoundKind::upper, "sup^2 < 194"));
  if (!(sup.sup_value * sup.sup_value < 194.0)) out.back().pass = false;
  return out;
}

Lemma2Scan lemma2_scan(double t_lo, double t_hi) {
  Lemma2Scan r;
  constexpr double step = 0.02;
  const auto n = static_cast<std::size_t>(std::round((t_hi - t_lo) / step));
  std::vector<double> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = scaled_k(t_lo + step * static_cast<double>(i));
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[i] < 0.0) != (v[i + 1] < 0.0)) {
      r.zeros.push_back(bisect_zero(t_lo + step * static_cast<double>(i), t_lo + step * static_cast<double>(i + 1)));
    }
  }
  auto printed = [](double t) { return 0.5 * pi * (t * std::log(t) + t); };
  auto stirling = [](double t) { return t * std::log(t) - t + 0.25 * pi; };
  r.printed_phase_distance = max_nearest_distance(r.zeros, phase_zeros(printed, t_lo - 1.0, t_hi + 1.0));
  r.stirling_phase_distance = max_nearest_distance(r.zeros, phase_zeros(stirling, t_lo - 1.0, t_hi + 1.0));

  // one maximum of |K| between consecutive zeros
  for (std::size_t i = 0; i + 1 < r.zeros.size(); ++i) {
    const double t = golden_max(abs_scaled_k, r.zeros[i], r.zeros[i + 1]);
    r.maxima_t.push_back(t);
    r.maxima_ratio.push_back(abs_scaled_k(t) / std::sqrt(2.0 * pi / t));
  }
  return r;
}

std::vector<CheckReport> kernel_asym_suite() {
  std::vector<CheckReport> out;
  for (int i = 0; i <= 60; ++i) {
    const double t = 10.0 + 0.5 * i;
    const KBesselAsymptotic a = kbessel_asymptotic(t);
    const double k = std::abs(kbessel_integral(t, 2.0).value.real());
    out.push_back(make_report("lemma2_envelope", {{"t", fmt_param(t)}}, log10_or_ninf(k),
                              std::log10(a.envelope * (1.0 + 2.0 / t)), BoundKind::upper,
                              "|K_it(2)| <= envelope (1 + 2/t)"));
  }
  const Lemma2Scan scan = lemma2_scan();
  for (std::size_t i = 0; i < scan.maxima_t.size(); ++i) {
    const double t = scan.maxima_t[i];
    out.push_back(make_report("lemma2_maximum", {{"t", fmt_param(t)}, {"ratio", fmt_param(scan.maxima_ratio[i])}},
                              log10_or_ninf(std::abs(scan.maxima_ratio[i] - 1.0)), std::log10(2.0 / t),
                              BoundKind::upper, "|K_it(2)|/envelope at a local maximum within 1 +- 2/t"));
  }
  const bool stirling_best = scan.stirling_phase_distance <= scan.printed_phase_distance;
  const double best = std::min(scan.stirling_phase_distance, scan.printed_phase_distance);
  const std::string verdict =
      std::string(scan.stirling_phase_distance <= 0.05 ? "Stirling phase t log t - t + pi/4 matches"
                                                        : "Stirling phase t log t - t + pi/4 does not match") +
      " (max zero distance " + fmt_param(scan.stirling_phase_distance) + "); " +
      (scan.printed_phase_distance <= 0.05 ? "printed phase pi/2 (t log t + t) matches"
                                           : "printed phase pi/2 (t log t + t) does not match") +
      " (max zero distance " + fmt_param(scan.printed_phase_distance) + ")";
  out.push_back(make_report("lemma2_phase",
                            {{"zeros", std::to_string(scan.zeros.size())},
                             {"maxima", std::to_string(scan.maxima_t.size())},
                             {"best", stirling_best ? "stirling" : "printed"}},
                            log10_or_ninf(best), std::log10(0.05), BoundKind::upper, verdict));
  return out;
}

std::vector<CheckReport> summation_suite(std::uint64_t seed, std::size_t trials) {
  const std::vector<double> lambdas = {0.5, 1.0, 2.0, 4.0 * (1.0 - 0.9) / pi};
  struct Mode {
    const char* name;
    double alpha;  // 0 marks classical
  };
  const std::vector<Mode> modes = {{"classical", 0.0}, {"shifted", 0.3}, {"shifted", 1.0}};
  std::vector<CheckReport> out;
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 100));
    std::vector<ComplexValue> coeffs(m);
    for (auto& c : coeffs) c = random_coefficient(rng);
    const ComplexValue s(2.0, rng.uniform(-5.0, 5.0));
    for (const Mode& mode : modes) {
      std::vector<DirichletTerm> terms;
      const std::uint64_t first = mode.alpha == 0.0 ? 1 : 0;
      for (std::size_t i = 0; i < m; ++i) terms.push_back({first + i, coeffs[i]});
      const DirichletPolynomial P = mode.alpha == 0.0 ? DirichletPolynomial::classical(std::move(terms))
                                                      : DirichletPolynomial::shifted(mode.alpha, std::move(terms));
      for (double lambda : lambdas) {
        const SummationSides sides = summation_formula_sides(P, s, 2.0, lambda);
        ParamList params{{"trial", std::to_string(trial)},
                         {"mode", mode.name},
                         {"alpha", fmt_param(P.alpha())},
                         {"terms", std::to_string(m)},
                         {"s", fmt_param(s.real()) + (s.imag() < 0 ? "-" : "+") + fmt_param(std::abs(s.imag())) + "i"},
                         {"lambda", fmt_param(lambda)},
                         {"x", "2"}};
        out.push_back(make_report("summation", std::move(params), log10_or_ninf(std::abs(sides.lhs - sides.rhs)),
                                  std::log10(1e-8), BoundKind::upper, "|lhs - rhs| <= 1e-8"));
      }
    }
  }
  return out;
}

std::vector<CheckReport> tail_suite() {
  std::vector<CheckReport> out;
  std::vector<double> grid;
  for (int i = 5; i <= 500; ++i) grid.push_back(0.01 * i);
  for (double T : grid) {
    out.push_back(make_report("lemma3", {{"T", fmt_param(T)}, {"lambda", "1"}},
                              log_tail_integral(T, 1.0, 2.0) * kLog10e,
                              lemma3_log_bound_printed(T, 1.0) * kLog10e, BoundKind::upper,
                              "tail(T,1,2) <= exp(-exp(T))"));
  }
  for (double lambda : {0.5, 2.0, 4.0}) {
    double worst_printed = std::numeric_limits<double>::infinity();
    double worst_subst = std::numeric_limits<double>::infinity();
    double worst_identity = 0.0;
    std::size_t fail_printed = 0;
    std::size_t fail_subst = 0;
    for (double T : grid) {
      const double lt = log_tail_integral(T, lambda, 2.0);
      const double mp = (lemma3_log_bound_printed(T, lambda) - lt) * kLog10e;
      const double ms = (lemma3_log_bound_substituted(T, lambda) - lt) * kLog10e;
      worst_printed = std::min(worst_printed, mp);
      worst_subst = std::min(worst_subst, ms);
      if (mp < 0.0) ++fail_printed;
      if (ms < 0.0) ++fail_subst;
      // both sides share the factor exp(-x cosh(T/lambda)); compare what remains
      const double lhs = tail_integral_scaled(T, lambda, 2.0);
      const double rhs = lambda * tail_integral_scaled(T / lambda, 1.0, 2.0);
      worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / rhs);
    }
    const ParamList params{{"lambda", fmt_param(lambda)}, {"T_points", std::to_string(grid.size())}};
    auto verdict = [&](std::size_t fails) {
      return fails == 0 ? std::string("holds at every T")
                        : "fails at " + std::to_string(fails) + " of " + std::to_string(grid.size()) + " T";
    };
    auto p1 = params;
    p1.emplace_back("variant", "printed 1/lambda");
    out.push_back(make_info_report("lemma3_variant", p1, worst_printed,
                                   "worst log10 margin; (1/lambda) exp(-exp(T/lambda)) " + verdict(fail_printed)));
    auto p2 = params;
    p2.emplace_back("variant", "substituted lambda");
    out.push_back(make_info_report("lemma3_variant", p2, worst_subst,
                                   "worst log10 margin; lambda exp(-exp(T/lambda)) " + verdict(fail_subst)));
    out.push_back(make_report("tail_substitution", params, log10_or_ninf(worst_identity), std::log10(1e-12),
                              BoundKind::upper, "tail(T,lambda) = lambda tail(T/lambda,1), max relative difference"));
  }
  // random (T, lambda); powers of two above make both integrands bitwise identical
  Rng rng(20240607);
  double worst = 0.0;
  constexpr int pairs = 200;
  for (int i = 0; i < pairs; ++i) {
    const double lambda = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double T = rng.uniform(0.0, 5.0);
    const double lhs = tail_integral_scaled(T, lambda, 2.0);
    const double rhs = lambda * tail_integral_scaled(T / lambda, 1.0, 2.0);
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  out.push_back(make_report("tail_substitution", {{"lambda", "random"}, {"pairs", std::to_string(pairs)}},
                            log10_or_ninf(worst), std::log10(1e-12), BoundKind::upper,
                            "tail(T,lambda) = lambda tail(T/lambda,1), max relative difference"));
  return out;
}

std::string pw_preset_key(double epsilon) { return "eps=" + fmt_param(epsilon); }

std::vector<CheckReport> paley_wiener_suite(const PaleyWienerSuiteOptions& options, const Baseline* baseline) {
  std::vector<CheckReport> out;
  const WeightFunction omega = epsilon_weight(options.epsilon);
  const std::string preset = pw_preset_key(options.epsilon);
  for (WidthLaw law : {WidthLaw::calibrated, WidthLaw::geometric}) {
    const PaleyWienerKernel k = build_paley_wiener(omega, law);
    ParamList params{{"preset", preset}, {"law", to_string(law)}, {"K", std::to_string(k.widths.size())}};

    double leak = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < k.phi.size(); ++i) {
      const double t = k.grid_start + static_cast<double>(i) * k.grid_step;
      if (t < -1e-9 || t > 1.0 + 1e-9) leak = std::max(leak, std::abs(k.phi[i]));
      mass += k.phi[i];
    }
    mass *= k.grid_step;
    out.push_back(make_report("pw_support", params, log10_or_ninf(leak), std::log10(1e-12), BoundKind::upper,
                              "max |phi| on the grid outside [-1e-9, 1+1e-9]"));
    out.push_back(make_report("pw_mass", params, log10_or_ninf(std::abs(mass - k.normalization)), std::log10(1e-6),
                              BoundKind::upper, "int phi = normalization " + fmt_param(k.normalization)));
    double diff = 0.0;
    for (int i = 0; i <= 800; ++i) {
      const double x = -200.0 + 0.5 * i;
      diff = std::max(diff, std::abs(pw_phi_hat(k, x) - pw_phi_hat_direct(k, x)));
    }
    out.push_back(make_report("pw_transform", params, log10_or_ninf(diff), std::log10(1e-6), BoundKind::upper,
                              "product formula vs transform of the grid phi, |x| <= 200"));

    const double x0 = pw_decay_threshold(k);
    auto p = params;
    p.emplace_back("x0", fmt_param(x0));
    if (law == WidthLaw::geometric) {
      p.emplace_back("c", fmt_param(k.widths[0]));
      out.push_back(make_info_report(
          "pw_decay", p, std::isfinite(x0) ? std::log10(x0) : std::numeric_limits<double>::infinity(),
          std::isfinite(x0) ? "decay bound certified on [x0, 1000]"
                            : "geometric widths never certify x^-3 Phi(x)^5 below x = 1000"));
      continue;
    }
    const auto it = baseline ? baseline->pw_x0.find(preset) : decltype(baseline->pw_x0.end()){};
    if (baseline && it != baseline->pw_x0.end()) {
      p.emplace_back("baseline_x0", fmt_param(it->second));
      out.push_back(make_report("pw_decay", p, std::log10(x0), std::log10(it->second), BoundKind::upper,
                                "|phi_hat| <= x^-3 Phi(x)^5 certified on [baseline x0, 1000]"));
    } else {
      out.push_back(make_info_report("pw_decay", p, std::log10(x0),
                                     "uncalibrated: decay bound certified on [x0, 1000], no baseline x0"));
    }
    for (double x : {50.0, 100.0, 500.0}) {
      auto px = params;
      px.emplace_back("x", fmt_param(x));
      const double lhs = pw_phi_hat_log_abs(k, x) * kLog10e;
      const double rhs = pw_decay_log_target(omega, x) * kLog10e;
      if (x >= x0) {
        out.push_back(make_report("pw_decay_point", px, lhs, rhs, BoundKind::upper, "|phi_hat(x)| <= x^-3 Phi(x)^5"));
      } else {
        out.push_back(make_info_report("pw_decay_point", px, lhs - rhs,
                                       "below calibrated x0; log10 |phi_hat| - log10 target"));
      }
    }
    if (options.lemma1_H > 0.0) {
      const double T = options.lemma1_T;
      const double sigma = 1.0 - options.lemma1_H * omega(options.lemma1_H * std::log(T));
      out.push_back(pw_lemma1_check(k, options.lemma1_H, sigma, T));
    }
  }
  return out;
}

DirichletPolynomial lemma8_random_polynomial(double alpha, std::size_t N, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DirichletTerm> terms{{0, 1.0}};
  for (std::size_t n = 1; n <= N; ++n) terms.push_back({n, random_coefficient(rng)});
  return DirichletPolynomial::shifted(alpha, std::move(terms));
}

std::vector<CheckReport> mollifier_suite(std::uint64_t seed, std::size_t pairs, double T_max) {
  if (!(T_max >= 3.0)) throw ConfigError("mollifier_suite: T_max >= 3 required");
  const auto limit = static_cast<std::uint64_t>(T_max);
  const SieveTable sieve = build_sieve(limit);
  std::vector<std::uint32_t> d;
  divisor_counts(1, limit * limit + 1, d);
  Rng rng(seed);
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto T = static_cast<double>(rng.integer(3, limit));
    const auto X = static_cast<double>(rng.integer(1, static_cast<std::uint64_t>(T) - 1));
    const DirichletPolynomial A = convolve(truncated_zeta(T), mollifier(X, sieve));
    std::size_t violations = 0;
    double worst = 0.0;
    for (const DirichletTerm& term : A.terms()) {
      // coefficients are small integers, so these comparisons are exact
      const double dn = d[term.n - 1];
      if (term.n == 1 && term.a != ComplexValue(1.0, 0.0)) ++violations;
      if (term.n >= 2 && static_cast<double>(term.n) < X) ++violations;
      if (term.a.imag() != 0.0 || std::abs(term.a.real()) > dn) ++violations;
      worst = std::max(worst, std::abs(term.a.real()) / dn);
    }
    if (A.coefficient(1) != ComplexValue(1.0, 0.0)) ++violations;
    out.push_back(make_report("mollifier",
                              {{"X", fmt_param(X)},
                               {"T", fmt_param(T)},
                               {"terms", std::to_string(A.terms().size())},
                               {"violations", std::to_string(violations)}},
                              std::log10(1.0 + static_cast<double>(violations)), 0.0, BoundKind::upper,
                              "c_1 = 1, c_n = 0 for 2 <= n < X, |c_n| <= d(n); max |c_n|/d(n) = " + fmt_param(worst)));
  }
  return out;
}

std::vector<CheckReport> lemma8_suite(const Lemma8SuiteOptions& o, const ScanOptions& opts) {
  const DirichletPolynomial A = lemma8_random_polynomial(o.alpha, o.N, o.seed);
  const double N = std::max<double>(16.0, static_cast<double>(o.N));
  const double sigma = o.sigma > 0.0 ? o.sigma : lemma8_sigma_threshold(o.H, o.epsilon, N);
  const std::vector<double> T = random_log_uniform(o.T_min, o.T_max, o.samples, o.seed + 1);
  return lemma8_check(A, sigma, o.H, o.epsilon, T, opts);
}

CalibrationRuns run_calibration_scans(const ScanOptions& opts) {
  CalibrationRuns runs;
  const std::vector<double> T = default_T_samples();
  runs.t1 = theorem1_scan(kTheorem1DefaultH, 1.0, T, opts);
  const WeightFunction omega = epsilon_weight(1.0);
  for (double H : kTheorem4DefaultH) {
    auto r = theorem4_scan(H, omega, T, opts);
    runs.t4.insert(runs.t4.end(), r.begin(), r.end());
  }
  runs.t3 = theorem3_scan(3.0, 0.5, 1.0, T, opts);
  runs.lipschitz = lipschitz_check(T, 0.5, opts);
  return runs;
}

Baseline calibrate(unsigned workers) {
  ScanOptions opts;
  opts.workers = workers;
  const CalibrationRuns runs = run_calibration_scans(opts);
  Baseline b;
  for (const auto* group : {&runs.t1, &runs.t4, &runs.t3, &runs.lipschitz}) {
    for (const auto& [key, value] : extreme_ratios(*group)) b.ratios[key] = value;
  }
  const PaleyWienerKernel k = build_paley_wiener(epsilon_weight(1.0), WidthLaw::calibrated);
  b.pw_x0[pw_preset_key(1.0)] = pw_decay_threshold(k);
  return b;
}

}  // namespace zetalb
