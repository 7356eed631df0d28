#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracle/oracle.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/special.hpp"

using namespace zetalb;
using std::numbers::pi;

namespace {

double err(ComplexValue a, ComplexValue b) { return std::abs(a - b); }

ComplexValue oracle_zeta(ComplexValue s) { return oracle::to_double(oracle::zeta(oracle::from_double(s))); }

ComplexValue oracle_hurwitz(ComplexValue s, double alpha) {
  return oracle::to_double(oracle::hurwitz(oracle::from_double(s), oracle::Real(alpha)));
}

}  // namespace

TEST_SUITE("special") {
  TEST_CASE("zeta closed forms") {
    CHECK(err(riemann_zeta({2, 0}), pi * pi / 6) <= 1e-14);
    CHECK(err(riemann_zeta({4, 0}), std::pow(pi, 4) / 90) <= 1e-14);
  }

  TEST_CASE("zeta against the extended precision oracle") {
    for (ComplexValue s : {ComplexValue(1, 1), ComplexValue(0.5, 20), ComplexValue(0.75, -300), ComplexValue(1, 1000),
                           ComplexValue(0.25, 50), ComplexValue(3, 7)}) {
      CAPTURE(s);
      CHECK(err(riemann_zeta(s), oracle_zeta(s)) <= 1e-10);
    }
  }

  TEST_CASE("first nontrivial zero") {
    const double t0 = static_cast<double>(oracle::z_zero(14.13, 14.14));
    CHECK(t0 == doctest::Approx(14.134725141734695).epsilon(1e-12));
    CHECK(std::abs(riemann_zeta({0.5, 14.134725141734695})) <= 1e-6);
    CHECK(std::abs(riemann_zeta({0.5, t0})) <= 1e-10);
  }

  TEST_CASE("zeta errors") {
    CHECK_THROWS_AS(riemann_zeta({1, 0}), PoleError);
    CHECK_THROWS_AS(riemann_zeta({0.1, 5}), InvalidArgument);
    CHECK_THROWS_AS(riemann_zeta({std::nan(""), 0}), InvalidArgument);
    EvalOptions opts;
    opts.max_terms = 100;
    try {
      riemann_zeta({0.5, 1e4}, opts);
      FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
      CHECK(e.needed() > 100);
    }
  }

  TEST_CASE("direct series for Re(s) >= 2") {
    // at Re(s) = 2 the tail past 1e6 is 1e-6, so the integral tail estimate is added there
    const double N = 1e6;
    for (ComplexValue s : {ComplexValue(2, 0), ComplexValue(2, 15), ComplexValue(3, -40), ComplexValue(4, 2)}) {
      ComplexValue direct = 0;
      for (int n = 1000000; n >= 1; --n) direct += std::pow(static_cast<double>(n), -s);
      if (s.real() < 3.0) direct += std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s);
      CAPTURE(s);
      CHECK(err(direct, riemann_zeta(s)) <= 1e-8);
    }
  }

  TEST_CASE("conjugate symmetry") {
    for (ComplexValue s : {ComplexValue(0.6, 30), ComplexValue(1, 123.4), ComplexValue(2.5, 7)}) {
      const ComplexValue a = riemann_zeta(s);
      const ComplexValue b = riemann_zeta(std::conj(s));
      CHECK(std::abs(std::conj(a) - b) <= 1e-14 * std::abs(a));
    }
  }

  TEST_CASE("hurwitz") {
    CHECK(err(hurwitz_zeta({2, 3}, 1.0), riemann_zeta({2, 3})) <= 1e-12);
    CHECK(err(hurwitz_zeta({2, 0}, 0.5), 3 * pi * pi / 6) <= 1e-12);
    const ComplexValue s(1.1, 50);
    CHECK(err(hurwitz_zeta(s, 0.3), oracle_hurwitz(s, 0.3)) <= 1e-10);
    CHECK(err(hurwitz_zeta({0.6, -80}, 0.77), oracle_hurwitz({0.6, -80}, 0.77)) <= 1e-10);
    CHECK_THROWS_AS(hurwitz_zeta({2, 0}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(hurwitz_zeta({2, 0}, 1.5), InvalidArgument);
    CHECK_THROWS_AS(hurwitz_zeta({1, 0}, 0.5), PoleError);
  }

  TEST_CASE("hurwitz at alpha 1 equals zeta on a random grid") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(0.5, 3.0);
    std::uniform_real_distribution<double> im(-1000.0, 1000.0);
    for (int i = 0; i < 100; ++i) {
      const ComplexValue s(re(rng), im(rng));
      CHECK(err(hurwitz_zeta(s, 1.0), riemann_zeta(s)) <= 1e-12);
    }
  }

  TEST_CASE("lerch") {
    CHECK(err(lerch_phi(0.7, 1.0, {2, 1}), hurwitz_zeta({2, 1}, 0.7)) <= 1e-10);
    CHECK(err(lerch_phi(1.0, 0.5, {2, 0}), pi * pi / 12) <= 1e-12);
    const ComplexValue s(1.2, 10);
    const ComplexValue ref = oracle::to_double(oracle::lerch_rational(0.4, 1, 4, oracle::from_double(s)));
    CHECK(err(lerch_phi(0.4, 0.25, s), ref) <= 1e-9);
    const ComplexValue s2(0.5, 40);
    const ComplexValue ref2 = oracle::to_double(oracle::lerch_rational(0.9, 2, 3, oracle::from_double(s2)));
    CHECK(err(lerch_phi(0.9, 2.0 / 3.0, s2), ref2) <= 1e-9);
    // beta = 1/2 at s = 1 is the convergent alternating series log 2
    CHECK(err(lerch_phi(1.0, 0.5, {1, 0}), std::log(2.0)) <= 1e-10);
    CHECK_THROWS_AS(lerch_phi(0.5, 1.0, {1, 0}), PoleError);
  }

  TEST_CASE("gamma") {
    CHECK(err(complex_gamma({5, 0}), 24.0) <= 24.0 * 1e-13);
    const double t = 3.0;
    CHECK(std::abs(complex_gamma({1, t})) == doctest::Approx(std::sqrt(pi * t / std::sinh(pi * t))).epsilon(1e-10));
    for (ComplexValue z : {ComplexValue(0.5, 2), ComplexValue(3.7, -11), ComplexValue(20, 60), ComplexValue(0.1, 0.2)}) {
      const ComplexValue ref = std::exp(oracle::to_double(oracle::log_gamma(oracle::from_double(z))));
      CHECK(std::abs(complex_gamma(z) - ref) <= 1e-11 * std::abs(ref));
    }
    // reflection side
    CHECK(err(complex_gamma({-0.5, 0}), -2.0 * std::sqrt(pi)) <= 1e-12);
    CHECK_THROWS_AS(complex_gamma({0, 0}), PoleError);
    CHECK_THROWS_AS(complex_gamma({-3, 0}), PoleError);
  }

  TEST_CASE("named constants") {
    const NamedConstants c = named_constants();
    CHECK(c.euler_gamma == doctest::Approx(static_cast<double>(oracle::euler_gamma())).epsilon(1e-16));
    // the defining limit at n = 1e8 with the 1/(2n) correction
    const std::uint64_t n = 100'000'000;
    double sum = 0.0;
    double comp = 0.0;
    for (std::uint64_t k = n; k >= 1; --k) {
      const double y = 1.0 / static_cast<double>(k) - comp;
      const double next = sum + y;
      comp = (next - sum) - y;
      sum = next;
    }
    const double limit = sum - std::log(static_cast<double>(n)) - 0.5 / static_cast<double>(n);
    CHECK(std::abs(limit - c.euler_gamma) <= 1e-14);
    CHECK(c.ity_constant == doctest::Approx(0.230891).epsilon(1e-6));
    CHECK(c.ity_inverse_constant == doctest::Approx(0.1403650).epsilon(1e-6));
    CHECK(c.ity_constant == doctest::Approx(std::exp(-c.euler_gamma) * pi * pi / 24).epsilon(1e-15));
  }
}
