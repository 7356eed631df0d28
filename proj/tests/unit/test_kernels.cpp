#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracle/oracle.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/kernels.hpp"

using namespace zetalb;
using std::numbers::pi;

TEST_SUITE("kernels") {
  TEST_CASE("ramachandra kernel") {
    CHECK(ramachandra_kernel(0, 1, 2) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(ramachandra_kernel(-3, 2, 2) == ramachandra_kernel(3, 2, 2));
    const double v = ramachandra_kernel(5, 1, 2);
    CHECK(std::log(v) == doctest::Approx(-2.0 * std::cosh(5.0)).epsilon(1e-14));
    CHECK(log_ramachandra_kernel(5, 1, 2) == doctest::Approx(-2 * std::cosh(5.0)).epsilon(1e-14));
    CHECK(v == doctest::Approx(2.6e-65).epsilon(0.05));
    CHECK(ramachandra_kernel(40, 1, 2) == 0.0);
    CHECK(std::isfinite(log_ramachandra_kernel(40, 1, 2)));
  }

  TEST_CASE("K0(2)") {
    const double ref = static_cast<double>(oracle::k0_series(2));
    const KBesselResult k = kbessel_integral(0.0, 2.0);
    CHECK(k.method == KBesselMethod::integral);
    CHECK(std::abs(k.value.real() - ref) <= 1e-9);
    CHECK(std::abs(k.value.real() - 0.1138938727) <= 1e-10);
    CHECK(std::abs(kbessel_k0_series(2.0) - ref) <= 1e-14);
    CHECK(std::abs(k.value.real() - kbessel_k0_series(2.0)) <= 1e-10);
    CHECK(k.value.real() >= 1.0 / 9.0);
    CHECK(std::abs(k.value.imag()) <= 1e-10);
  }

  TEST_CASE("K0 at other arguments against the oracle") {
    for (double x : {0.3, 1.0, 5.0, 12.0}) {
      const double ref = static_cast<double>(oracle::k0_series(oracle::Real(x)));
      CHECK(kbessel_integral(0.0, x).value.real() == doctest::Approx(ref).epsilon(1e-11));
      // ascending series loses digits to cancellation once x is large
      CHECK(kbessel_k0_series(x) == doctest::Approx(ref).epsilon(x <= 5.0 ? 1e-11 : 1e-4));
    }
  }

  TEST_CASE("even in mu") {
    CHECK(std::abs(kbessel_integral(1.7, 2).value - kbessel_integral(-1.7, 2).value) <= 1e-14);
    CHECK(std::abs(kbessel_integral(25, 2).value - kbessel_integral(-25, 2).value) <= 1e-14);
  }

  TEST_CASE("series") {
    const KBesselResult half = kbessel_series({0.5, 0}, 2.0);
    CHECK(half.method == KBesselMethod::series);
    CHECK(half.value.real() == doctest::Approx(std::sqrt(pi / 4) * std::exp(-2.0)).epsilon(1e-13));
    CHECK(std::abs(kbessel_series({0, 1.5}, 2.0).value - kbessel_integral(1.5, 2.0).value) <= 1e-10);
    const double env10 = std::exp(-5 * pi) * std::sqrt(2 * pi / 10);
    CHECK(std::abs(kbessel_series({0, 10}, 2.0).value - kbessel_integral(10, 2.0).value) <= 1e-8 * env10);
    CHECK_THROWS_AS(kbessel_series({1, 0}, 2.0), DomainError);
    CHECK_THROWS_AS(kbessel_series({0.5, 0}, 25.0), InvalidArgument);
  }

  TEST_CASE("integral and series agree on random orders") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mu_d(0.1, 12.0);
    std::uniform_real_distribution<double> x_d(0.5, 6.0);
    for (int i = 0; i < 50; ++i) {
      const double mu = mu_d(rng);
      const double x = x_d(rng);
      const double env = std::exp(-pi * mu / 2) * std::sqrt(2 * pi / mu);
      CAPTURE(mu);
      CAPTURE(x);
      const double a = kbessel_integral(mu, x).value.real();
      const double b = kbessel_series({0, mu}, x).value.real();
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, env));
      // scaled forms carry the same information at O(1) size
      CHECK(std::abs(kbessel_integral_scaled(mu, x).value.real() - kbessel_series_scaled(mu, x).value.real()) <=
            1e-9 * std::sqrt(2 * pi / mu) + 1e-12);
    }
  }

  TEST_CASE("asymptotic forms") {
    const KBesselAsymptotic a = kbessel_asymptotic(10);
    CHECK(a.envelope == doctest::Approx(9.462e-8).epsilon(1e-3));
    CHECK(a.envelope == doctest::Approx(std::exp(-5 * pi) * std::sqrt(2 * pi / 10)).epsilon(1e-14));
    CHECK(std::abs(kbessel_integral(10, 2).value.real()) <= a.envelope * 1.2);
    CHECK(a.printed_phase == doctest::Approx(pi / 2 * (10 * std::log(10.0) + 10)).epsilon(1e-14));
    CHECK(a.stirling_phase == doctest::Approx(10 * std::log(10.0) - 10 + pi / 4).epsilon(1e-14));

    // where the Stirling sine is +-1 near t = 10 (Newton on the phase)
    auto phase = [](double t) { return t * std::log(t) - t + pi / 4; };
    const double k = std::round((phase(10.0) - pi / 2) / pi);
    double t = 10.0;
    for (int i = 0; i < 50; ++i) t -= (phase(t) - (pi / 2 + k * pi)) / std::log(t);
    CHECK(std::abs(t - 10.0) < 0.3);
    const double ratio = std::abs(kbessel_integral_scaled(t, 2).value.real()) / std::sqrt(2 * pi / t);
    CHECK(ratio >= 1 - 2 / t);
    CHECK(ratio <= 1 + 2 / t);
    CHECK_THROWS_AS(kbessel_asymptotic(1.0), InvalidArgument);
  }

  TEST_CASE("tail integral") {
    CHECK(tail_integral(0, 1, 2) == doctest::Approx(2 * static_cast<double>(oracle::k0_series(2))).epsilon(1e-12));
    CHECK(tail_integral(0, 1, 2) == doctest::Approx(0.2277877).epsilon(1e-6));
    CHECK(tail_integral(1, 1, 2) <= std::exp(-std::exp(1.0)));
    CHECK(log_tail_integral(20, 1, 2) < -1e8);
    CHECK(std::isfinite(log_tail_integral(20, 1, 2)));
    CHECK_THROWS_AS(tail_integral(-1, 1, 2), InvalidArgument);
  }

  TEST_CASE("tail substitution identity on random (T, lambda)") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> T_d(0.0, 5.0);
    std::uniform_real_distribution<double> l_d(std::log(0.2), std::log(5.0));
    for (int i = 0; i < 100; ++i) {
      const double T = T_d(rng);
      const double lambda = std::exp(l_d(rng));
      const double lhs = tail_integral_scaled(T, lambda, 2);
      const double rhs = lambda * tail_integral_scaled(T / lambda, 1, 2);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
  }

  TEST_CASE("sup ratio") {
    const SupKBesselRatio r = sup_kbessel_ratio();
    CHECK(std::abs(r.sup_value - 13.917) <= 0.01);
    CHECK(r.sup_value * r.sup_value < 194.0);
    CHECK(r.tail_bound < r.sup_value);
    CHECK(std::abs(r.series_value - r.sup_value) <= 1e-8);
    CHECK(std::abs(kbessel_integral_scaled(0, 2).value.real() / kbessel_integral(0, 2).value.real() - 1) <= 1e-15);
  }
}
