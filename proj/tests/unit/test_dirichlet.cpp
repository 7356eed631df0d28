#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracle/oracle.hpp"
#include "zetalb/arith.hpp"
#include "zetalb/dirichlet.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/kernels.hpp"

using namespace zetalb;
using std::numbers::pi;

namespace {

DirichletPolynomial random_classical(std::mt19937_64& rng, std::uint64_t max_n, double density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DirichletTerm> terms;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (u(rng) < density) terms.push_back({n, static_cast<double>(static_cast<int>(u(rng) * 7) - 3)});
  }
  return DirichletPolynomial::classical(std::move(terms));
}

}  // namespace

TEST_SUITE("dirichlet") {
  TEST_CASE("construction rules") {
    CHECK_THROWS_AS(DirichletPolynomial::classical({{2, 1.0}, {1, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(DirichletPolynomial::classical({{1, 1.0}, {1, 2.0}}), InvalidArgument);
    CHECK_THROWS_AS(DirichletPolynomial::classical({{0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(DirichletPolynomial::shifted(0.0, {{0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(DirichletPolynomial::shifted(1.5, {{0, 1.0}}), InvalidArgument);
    const auto p = DirichletPolynomial::classical({{1, 1.0}, {2, 0.0}, {3, 2.0}});
    CHECK(p.size() == 2);
    CHECK(p.coefficient(2) == ComplexValue(0.0));
    CHECK(p.coefficient(3) == ComplexValue(2.0));
    CHECK(p.base(3) == 3.0);
    const auto q = DirichletPolynomial::shifted(0.25, {{0, 1.0}});
    CHECK(q.base(2) == 2.25);
  }

  TEST_CASE("truncated zeta") {
    const auto z3 = truncated_zeta(3);
    REQUIRE(z3.size() == 2);
    CHECK(z3.terms()[0].n == 1);
    CHECK(z3.terms()[1].n == 2);
    const auto z2 = truncated_zeta(2);
    CHECK(z2.size() == 1);
    CHECK(evaluate(z2, {0.3, 17}) == ComplexValue(1.0));
    CHECK(evaluate(truncated_zeta(100), {0, 0}) == ComplexValue(99.0));
    // sum_{n<1e6} n^-2 = pi^2/6 - psi'(1e6)
    const double N = 1e6;
    const double ref = pi * pi / 6 - (1 / N + 1 / (2 * N * N) + 1 / (6 * N * N * N));
    CHECK(std::abs(evaluate(truncated_zeta(N), {2, 0}) - ref) <= 1e-12);
    CHECK(std::abs(evaluate(truncated_zeta(N), {2, 0}) - 1.6449330) <= 1e-6);
    CHECK_THROWS_AS(truncated_zeta(1.5), InvalidArgument);
    CHECK_THROWS_AS(truncated_zeta(2e7), BudgetExceeded);
  }

  TEST_CASE("mollifier") {
    const SieveTable sieve = build_sieve(10'000);
    const auto m4 = mollifier(4, sieve);
    REQUIRE(m4.size() == 3);
    CHECK(m4.coefficient(1) == ComplexValue(1.0));
    CHECK(m4.coefficient(2) == ComplexValue(-1.0));
    CHECK(m4.coefficient(3) == ComplexValue(-1.0));
    CHECK(m4.coefficient(4) == ComplexValue(0.0));
    const auto m1 = mollifier(1, sieve);
    CHECK(m1.size() == 1);
    CHECK(std::abs(evaluate(mollifier(1e4, sieve), {2, 0}) - 6 / (pi * pi)) <= 2e-4);
    CHECK_THROWS_AS(mollifier(20'000, sieve), InvalidArgument);
  }

  TEST_CASE("convolution") {
    const SieveTable sieve = build_sieve(1000);
    const auto id = DirichletPolynomial::classical({{1, 1.0}});
    CHECK(convolve(id, id) == id);
    const auto A = convolve(truncated_zeta(200), mollifier(50, sieve));
    CHECK(A.coefficient(1) == ComplexValue(1.0));
    for (std::uint64_t n = 2; n < 50; ++n) CHECK(A.coefficient(n) == ComplexValue(0.0));
    std::vector<std::uint32_t> d;
    divisor_counts(1, A.max_index() + 1, d);
    for (const auto& t : A.terms()) CHECK(std::abs(t.a) <= d[t.n - 1]);
    CHECK(A.max_index() <= 199u * 50u);
    CHECK_THROWS_AS(convolve(DirichletPolynomial::shifted(0.5, {{0, 1.0}}), id), UnsupportedMode);
  }

  TEST_CASE("convolution is associative and commutative") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
      const auto p = random_classical(rng, 40, 0.5);
      const auto q = random_classical(rng, 30, 0.5);
      const auto r = random_classical(rng, 20, 0.5);
      CHECK(convolve(p, q) == convolve(q, p));
      CHECK(convolve(convolve(p, q), r) == convolve(p, convolve(q, r)));
    }
  }

  TEST_CASE("evaluate against the oracle") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<DirichletTerm> terms;
    std::vector<oracle::Term> ref_terms;
    for (std::uint64_t n = 1; n <= 50; ++n) {
      const ComplexValue a(u(rng), u(rng));
      terms.push_back({n, a});
      ref_terms.push_back({n, a.real(), a.imag()});
    }
    const auto P = DirichletPolynomial::classical(terms);
    const ComplexValue s(2, 3);
    const ComplexValue ref = oracle::to_double(oracle::dirichlet(ref_terms, 0, oracle::from_double(s)));
    CHECK(std::abs(evaluate(P, s) - ref) <= 1e-13 * std::abs(ref));

    std::vector<DirichletTerm> shifted;
    for (auto t : terms) shifted.push_back({t.n - 1, t.a});
    const auto Q = DirichletPolynomial::shifted(0.3, shifted);
    const ComplexValue ref_q = oracle::to_double(oracle::dirichlet(ref_terms, oracle::Real(0.3) - 1, oracle::from_double(s)));
    CHECK(std::abs(evaluate(Q, s) - ref_q) <= 1e-13 * std::abs(ref_q));
    CHECK(evaluate(DirichletPolynomial::classical({{1, 1.0}}), {0.7, -4}) == ComplexValue(1.0));
  }

  TEST_CASE("grid evaluation") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<DirichletTerm> terms;
    for (std::uint64_t n = 1; n <= 100'000; ++n) terms.push_back({n, u(rng)});
    const auto P = DirichletPolynomial::classical(std::move(terms));
    const double sigma = 0.8;
    const double t0 = 1000.0;
    const double dt = 0.01;
    const std::size_t count = 10'000;
    const auto grid = evaluate_grid(P, sigma, t0, dt, count);
    REQUIRE(grid.size() == count);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    for (int i = 0; i < 20; ++i) {
      const std::size_t k = i == 0 ? count - 1 : pick(rng);
      const ComplexValue direct = evaluate(P, {sigma, t0 + dt * static_cast<double>(k)});
      CHECK(std::abs(grid[k] - direct) <= 1e-10 * std::abs(direct));
    }
    const auto one = evaluate_grid(P, sigma, t0, dt, 1);
    CHECK(std::abs(one[0] - evaluate(P, {sigma, t0})) <= 1e-12 * std::abs(one[0]));
    // real coefficients: the grid at -t is the conjugate
    const auto neg = evaluate_grid(P, sigma, -t0, -dt, 50);
    for (std::size_t k = 0; k < 50; ++k) CHECK(std::abs(neg[k] - std::conj(grid[k])) <= 1e-10 * std::abs(grid[k]));
    const auto parallel = evaluate_grid(P, sigma, t0, dt, 200, 3);
    for (std::size_t k = 0; k < 200; ++k) CHECK(parallel[k] == grid[k]);
  }

  TEST_CASE("summation formula sides") {
    const auto one = DirichletPolynomial::classical({{1, 1.0}});
    const SummationSides s = summation_formula_sides(one, {2, 0}, 2, 1);
    const double k0 = kbessel_integral(0, 2).value.real();
    CHECK(std::abs(s.lhs - k0) <= 1e-13);
    CHECK(std::abs(s.rhs - k0) <= 1e-10);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<DirichletTerm> terms;
    for (std::uint64_t n = 1; n <= 20; ++n) terms.push_back({n, ComplexValue(u(rng), u(rng)) / std::sqrt(2.0)});
    const auto P = DirichletPolynomial::classical(terms);
    for (double lambda : {1.0, 2.0}) {
      const SummationSides r = summation_formula_sides(P, {2, 0}, 2, lambda);
      CHECK(std::abs(r.lhs - r.rhs) <= 1e-8);
    }
    std::vector<DirichletTerm> sterms;
    for (auto t : terms) sterms.push_back({t.n - 1, t.a});
    const auto Q = DirichletPolynomial::shifted(0.3, sterms);
    const SummationSides r = summation_formula_sides(Q, {2, 1.5}, 2, 0.5);
    CHECK(std::abs(r.lhs - r.rhs) <= 1e-8);
    CHECK_THROWS_AS(summation_formula_sides(P, {1.5, 0}, 2, 1), InvalidArgument);
  }

  TEST_CASE("divisor tail sum") {
    const DivisorTailSum a = divisor_tail_sum(100, 1e6);
    const DivisorTailSum b = divisor_tail_sum(1000, 1e6);
    CHECK(b.partial < a.partial);
    CHECK(std::isfinite(a.bound_ratio));
    CHECK(a.tail_estimate == doctest::Approx(1 / std::log(1e6) + 0.5772156649015329 / std::pow(std::log(1e6), 2)));
    const double t6 = divisor_tail_sum(100, 1e6).tail_estimate;
    const double t7 = divisor_tail_sum(100, 1e7).tail_estimate;
    CHECK(t7 < t6);
    CHECK_THROWS_AS(divisor_tail_sum(100, 500), InvalidArgument);
  }

  TEST_CASE("json round trip") {
    const auto P = DirichletPolynomial::shifted(0.4, {{0, 1.0}, {3, ComplexValue(0.25, -0.5)}});
    CHECK(polynomial_from_json(to_json(P)) == P);
    const auto Z = truncated_zeta(10);
    CHECK(polynomial_from_json(to_json(Z)) == Z);
    CHECK_THROWS_AS(polynomial_from_json("{\"mode\":\"classical\",\"alpha\":1,\"terms\":[],\"x\":1}"), ConfigError);
    CHECK_THROWS_AS(polynomial_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(polynomial_from_json("{\"mode\":\"odd\",\"alpha\":1,\"terms\":[]}"), ConfigError);
  }
}
