#include <doctest.h>

#include <cmath>

#include "zetalb/baseline.hpp"
#include "zetalb/bounds.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/scans.hpp"
#include "zetalb/special.hpp"
#include "zetalb/suites.hpp"

using namespace zetalb;

namespace {

bool consistent(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.pass != (r.margin >= 0)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("scans") {
  TEST_CASE("T samples") {
    const auto d = default_T_samples();
    REQUIRE(d.size() == 200);
    CHECK(d.front() == 16.0);
    CHECK(d.back() == doctest::Approx(1e5).epsilon(1e-15));
    const auto r = random_log_uniform(10, 1e5, 500, 9);
    CHECK(r == random_log_uniform(10, 1e5, 500, 9));
    for (double T : r) CHECK((T >= 10 && T <= 1e5));
  }

  TEST_CASE("zeta integral additivity and containment") {
    const double a = zeta_abs_integral(1.0, 500, 0.1);
    const double b = zeta_abs_integral(1.0, 500.1, 0.1);
    const double ab = zeta_abs_integral(1.0, 500, 0.2);
    CHECK(a > 0);
    CHECK(std::abs(a + b - ab) <= 3e-9);
    CHECK(ab >= a);
  }

  TEST_CASE("ity floor") {
    const auto T = random_log_uniform(10, 1e5, 10, 1);
    const auto r = ity_scan(0.1, T, true);
    REQUIRE(r.size() == 20);
    CHECK(consistent(r));
    const NamedConstants c = named_constants();
    CHECK(r[0].log10_rhs == doctest::Approx(std::log10(0.0020781)).epsilon(1e-5));
    CHECK(r[1].log10_rhs == doctest::Approx(std::log10(0.0012633)).epsilon(1e-5));
    CHECK(r[0].log10_rhs == doctest::Approx(std::log10(c.ity_constant * 0.01 * 0.9)).epsilon(1e-14));
    for (const auto& x : r) CHECK(x.pass);
    // upper sanity: integral <= H max |zeta| on the interval
    for (double t0 : T) {
      double mx = 0;
      for (int i = 0; i <= 200; ++i) mx = std::max(mx, std::abs(riemann_zeta({1.0, t0 + 0.1 * i / 200})));
      CHECK(zeta_abs_integral(1.0, t0, 0.1) <= 0.1 * mx * 1.001);
    }
  }

  TEST_CASE("theorem 1 scan without a baseline") {
    const std::vector<double> T = {16, 100, 1000};
    const auto r = theorem1_scan({0.1, 0.2}, 1.0, T);
    REQUIRE(r.size() == 6);
    CHECK(consistent(r));
    for (const auto& x : r) {
      CHECK(std::isfinite(x.log10_lhs));
      CHECK(x.notes.find("uncalibrated") != std::string::npos);
    }
    CHECK_THROWS_AS(theorem1_scan({0.1}, 1.0, {10.0}), ConfigError);
  }

  TEST_CASE("regression floor from a baseline") {
    const std::vector<double> T = {100, 1000};
    const auto raw = theorem1_scan({0.5}, 1.0, T);
    const auto ratios = extreme_ratios(raw);
    REQUIRE(ratios.size() == 1);
    Baseline b;
    b.ratios = ratios;
    ScanOptions opts;
    opts.baseline = &b;
    const auto again = theorem1_scan({0.5}, 1.0, T, opts);
    for (const auto& x : again) CHECK(x.pass);
    b.ratios.begin()->second *= 10;
    const auto strict = theorem1_scan({0.5}, 1.0, T, opts);
    bool any_fail = false;
    for (const auto& x : strict) any_fail = any_fail || !x.pass;
    CHECK(any_fail);
  }

  TEST_CASE("theorem 4 scan") {
    const auto r = theorem4_scan(0.5, epsilon_weight(1.0), {1000.0});
    CHECK(consistent(r));
    bool saw_main = false;
    for (const auto& x : r) {
      if (x.check_id == "t4") {
        saw_main = true;
        CHECK(x.ratio > 0);
      }
    }
    CHECK(saw_main);
    CHECK_THROWS_AS(theorem4_scan(0.1, epsilon_weight(1.0), {1000.0}), BudgetExceeded);
  }

  TEST_CASE("theorem 3 scan") {
    const auto r = theorem3_scan(3, 0.5, 0.5, {100.0, 1000.0});
    CHECK(r.size() == 2);
    CHECK(consistent(r));
    for (const auto& x : r) CHECK(x.ratio > 0);
  }

  TEST_CASE("lemma 8") {
    const double sigma = lemma8_sigma_threshold(3, 0.5, 16);
    const auto constant = DirichletPolynomial::shifted(0.5, {{0, 1.0}});
    const auto c = lemma8_check(constant, sigma, 3, 0.5, {10.0, 500.0});
    for (const auto& x : c) {
      CHECK(x.pass);
      CHECK(x.log10_lhs == doctest::Approx(std::log10(std::pow(0.5, -sigma) * 3)).epsilon(1e-9));
    }
    Lemma8SuiteOptions o;
    const auto r = lemma8_suite(o);
    REQUIRE(r.size() == 20);
    for (const auto& x : r) CHECK(x.pass);
    CHECK(r[0].log10_rhs == doctest::Approx(-7.9156).epsilon(1e-4));

    // margins shrink as delta = H eps grows: the bound rises faster than the integral
    double previous = -1e9;
    for (double H : {4.0, 3.0, 2.0}) {
      Lemma8SuiteOptions p;
      p.H = H;
      p.samples = 5;
      double worst = 1e9;
      for (const auto& x : lemma8_suite(p)) worst = std::min(worst, x.margin);
      CHECK(worst > previous);
      previous = worst;
    }

    CHECK_THROWS_AS(lemma8_check(constant, 0.1, 3, 0.5, {10.0}), ConfigError);
    const auto big = DirichletPolynomial::shifted(0.5, {{0, 1.0}, {1, 2.0}});
    CHECK_THROWS_AS(lemma8_check(big, 0.99, 3, 0.5, {10.0}), ConfigError);
    const auto classical = DirichletPolynomial::classical({{1, 1.0}});
    CHECK_THROWS_AS(lemma8_check(classical, 0.99, 3, 0.5, {10.0}), ConfigError);
  }

  TEST_CASE("lipschitz") {
    const auto r = lipschitz_check({1e4}, 0.5);
    REQUIRE(r.size() == 1);
    CHECK(std::isfinite(r[0].ratio));
    CHECK(r[0].ratio > 0);
    CHECK(r[0].ratio < 10);
    CHECK_THROWS_AS(lipschitz_check({10.0}, 0.5), ConfigError);
  }

  TEST_CASE("approximate functional equation") {
    const auto r = approx_fe_check(1.0, {100.0, 1000.0}, 50, 3);
    REQUIRE(r.size() == 2);
    for (const auto& x : r) CHECK(x.pass);
    const double c100 = std::pow(10.0, r[0].log10_lhs);
    const double c1000 = std::pow(10.0, r[1].log10_lhs);
    // at sigma = 1 the error decays like T^{-1/2} after scaling
    CHECK(c1000 < c100);
    CHECK(c100 / c1000 == doctest::Approx(std::sqrt(10.0)).epsilon(0.5));
    CHECK_THROWS_AS(approx_fe_check(0.4, {100.0}, 5, 1), ConfigError);
  }

  TEST_CASE("max scan") {
    const MaxScanResult m = max_scan(1.0, 1000, 10, 0.05);
    CHECK(m.max_abs >= std::abs(riemann_zeta({1.0, 1005})));
    CHECK(m.argmax_t >= 1000);
    CHECK(m.argmax_t <= 1010);
    CHECK(m.loglogH_ratio == doctest::Approx(m.max_abs / std::log(std::log(10.0))));
    const CheckReport r = max_scan_report(0.75, 1000, 10, 0.05);
    CHECK(r.pass);
    CHECK(r.notes.find("report only") != std::string::npos);
    CHECK_THROWS_AS(max_scan(1.0, 1000, 2, 0.05), ConfigError);
  }

  TEST_CASE("worker count does not change results") {
    const auto T = random_log_uniform(16, 1e4, 12, 5);
    const auto a = theorem1_scan({0.2}, 1.0, T, {1, nullptr});
    const auto b = theorem1_scan({0.2}, 1.0, T, {3, nullptr});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json_line(a[i]) == to_json_line(b[i]));
  }
}
