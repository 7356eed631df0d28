#include "zetalb/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "json.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/kernels.hpp"
#include "zetalb/parallel.hpp"
#include "zetalb/quad.hpp"

namespace zetalb {

namespace {

constexpr std::size_t kChunkTerms = 4096;
constexpr std::size_t kRenormPeriod = 512;
constexpr std::uint64_t kDenseConvolutionLimit = 10'000'000;

struct Kahan {
  ComplexValue sum{0.0, 0.0};
  ComplexValue carry{0.0, 0.0};
  void add(ComplexValue v) {
    const ComplexValue y = v - carry;
    const ComplexValue t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// base^{-s} with the phase taken as -t * log(base), the same way everywhere
ComplexValue power_term(double log_base, double sigma, double t) {
  return std::polar(std::exp(-sigma * log_base), -t * log_base);
}

}  // namespace

DirichletPolynomial::DirichletPolynomial(PolyMode mode, double alpha, std::vector<DirichletTerm> terms)
    : mode_(mode), alpha_(alpha) {
  if (terms.size() > kMaxCoefficients) {
    throw BudgetExceeded("DirichletPolynomial: too many coefficients", terms.size());
  }
  terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    require_finite(terms[i].a, "DirichletPolynomial");
    if (i > 0 && terms[i].n <= terms[i - 1].n) {
      throw InvalidArgument("DirichletPolynomial: indices must be strictly increasing");
    }
    if (mode == PolyMode::classical && terms[i].n == 0) {
      throw InvalidArgument("DirichletPolynomial: classical indices start at 1");
    }
    if (terms[i].a != ComplexValue(0.0, 0.0)) terms_.push_back(terms[i]);
  }
}

DirichletPolynomial DirichletPolynomial::classical(std::vector<DirichletTerm> terms) {
  return DirichletPolynomial(PolyMode::classical, 1.0, std::move(terms));
}

DirichletPolynomial DirichletPolynomial::shifted(double alpha, std::vector<DirichletTerm> terms) {
  require_finite(alpha, "DirichletPolynomial");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("DirichletPolynomial: alpha must lie in (0,1]");
  return DirichletPolynomial(PolyMode::shifted, alpha, std::move(terms));
}

double DirichletPolynomial::base(std::uint64_t n) const noexcept {
  return mode_ == PolyMode::classical ? static_cast<double>(n) : static_cast<double>(n) + alpha_;
}

ComplexValue DirichletPolynomial::coefficient(std::uint64_t n) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const DirichletTerm& t, std::uint64_t k) { return t.n < k; });
  if (it == terms_.end() || it->n != n) return {0.0, 0.0};
  return it->a;
}

bool operator==(const DirichletPolynomial& p, const DirichletPolynomial& q) {
  if (p.mode_ != q.mode_ || p.alpha_ != q.alpha_ || p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (p.terms_[i].n != q.terms_[i].n || p.terms_[i].a != q.terms_[i].a) return false;
  }
  return true;
}

DirichletPolynomial truncated_zeta(double T) {
  require_finite(T, "truncated_zeta");
  if (!(T >= 2.0)) throw InvalidArgument("truncated_zeta: T must be >= 2");
  const auto last = static_cast<std::uint64_t>(std::ceil(T)) - 1;  // largest n < T
  if (last > kMaxCoefficients) throw BudgetExceeded("truncated_zeta: T above coefficient cap", last);
  std::vector<DirichletTerm> terms;
  terms.reserve(last);
  for (std::uint64_t n = 1; n <= last; ++n) terms.push_back({n, 1.0});
  return DirichletPolynomial::classical(std::move(terms));
}

DirichletPolynomial mollifier(double X, const SieveTable& sieve) {
  require_finite(X, "mollifier");
  if (!(X >= 1.0)) throw InvalidArgument("mollifier: X must be >= 1");
  const auto last = static_cast<std::uint64_t>(std::floor(X));
  if (sieve.limit() < last) throw InvalidArgument("mollifier: sieve smaller than X");
  std::vector<DirichletTerm> terms;
  for (std::uint64_t n = 1; n <= last; ++n) {
    const int m = sieve.mobius(n);
    if (m != 0) terms.push_back({n, static_cast<double>(m)});
  }
  return DirichletPolynomial::classical(std::move(terms));
}

DirichletPolynomial convolve(const DirichletPolynomial& P, const DirichletPolynomial& Q) {
  if (P.mode() != PolyMode::classical || Q.mode() != PolyMode::classical) {
    throw UnsupportedMode("convolve: only classical polynomials can be convolved");
  }
  if (P.empty() || Q.empty()) return DirichletPolynomial::classical({});
  const double bound_d = static_cast<double>(P.max_index()) * static_cast<double>(Q.max_index());
  std::vector<DirichletTerm> out;
  if (bound_d <= static_cast<double>(kDenseConvolutionLimit)) {
    const std::uint64_t bound = P.max_index() * Q.max_index();
    std::vector<ComplexValue> dense(bound + 1, {0.0, 0.0});
    std::vector<bool> touched(bound + 1, false);
    for (const auto& p : P.terms()) {
      for (const auto& q : Q.terms()) {
        const std::uint64_t n = p.n * q.n;
        dense[n] += p.a * q.a;
        touched[n] = true;
      }
    }
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (touched[n]) out.push_back({n, dense[n]});
      if (out.size() > kMaxCoefficients) throw BudgetExceeded("convolve: product too large", out.size());
    }
  } else {
    if (bound_d > 1.8e19) throw BudgetExceeded("convolve: index bound overflows", UINT64_MAX);
    std::unordered_map<std::uint64_t, ComplexValue> sparse;
    for (const auto& p : P.terms()) {
      for (const auto& q : Q.terms()) {
        sparse[p.n * q.n] += p.a * q.a;
        if (sparse.size() > kMaxCoefficients) throw BudgetExceeded("convolve: product too large", sparse.size());
      }
    }
    out.reserve(sparse.size());
    for (const auto& [n, a] : sparse) out.push_back({n, a});
    std::sort(out.begin(), out.end(), [](const DirichletTerm& x, const DirichletTerm& y) { return x.n < y.n; });
  }
  return DirichletPolynomial::classical(std::move(out));
}

ComplexValue evaluate(const DirichletPolynomial& P, ComplexValue s) {
  require_finite(s, "evaluate");
  Kahan acc;
  for (const auto& term : P.terms()) {
    acc.add(term.a * power_term(std::log(P.base(term.n)), s.real(), s.imag()));
  }
  return acc.sum;
}

std::vector<ComplexValue> evaluate_grid(const DirichletPolynomial& P, double sigma, double t0, double dt,
                                        std::size_t count, unsigned workers) {
  require_finite(sigma, "evaluate_grid");
  require_finite(t0, "evaluate_grid");
  require_finite(dt, "evaluate_grid");
  if (count < 1) throw InvalidArgument("evaluate_grid: count must be >= 1");
  const auto& terms = P.terms();
  const std::size_t chunks = (terms.size() + kChunkTerms - 1) / kChunkTerms;
  std::vector<ComplexValue> total(count, {0.0, 0.0});
  std::vector<ComplexValue> carry(count, {0.0, 0.0});

  // one batch of chunks at a time keeps memory at workers * count values
  const std::size_t batch = std::max(1u, workers);
  std::vector<std::vector<ComplexValue>> partial(batch);
  for (std::size_t first = 0; first < chunks; first += batch) {
    const std::size_t in_batch = std::min(batch, chunks - first);
    parallel_for(in_batch, workers, [&](std::size_t b) {
      std::vector<ComplexValue>& grid = partial[b];
      grid.assign(count, {0.0, 0.0});
      const std::size_t lo = (first + b) * kChunkTerms;
      const std::size_t hi = std::min(terms.size(), lo + kChunkTerms);
      for (std::size_t i = lo; i < hi; ++i) {
        const double lb = std::log(P.base(terms[i].n));
        const ComplexValue a = terms[i].a;
        const ComplexValue rot = std::polar(1.0, -dt * lb);
        for (std::size_t k0 = 0; k0 < count; k0 += kRenormPeriod) {
          const ComplexValue z0 = a * power_term(lb, sigma, t0 + static_cast<double>(k0) * dt);
          const std::size_t k1 = std::min(count, k0 + kRenormPeriod);
          // plain real arithmetic: std::complex multiply goes through the
          // NaN-recovering library call
          double zr = z0.real();
          double zi = z0.imag();
          const double rr = rot.real();
          const double ri = rot.imag();
          auto* g = reinterpret_cast<double*>(grid.data());
          for (std::size_t k = k0; k < k1; ++k) {
            g[2 * k] += zr;
            g[2 * k + 1] += zi;
            const double nr = zr * rr - zi * ri;
            zi = zr * ri + zi * rr;
            zr = nr;
          }
        }
      }
    });
    for (std::size_t b = 0; b < in_batch; ++b) {
      for (std::size_t k = 0; k < count; ++k) {
        const ComplexValue y = partial[b][k] - carry[k];
        const ComplexValue t = total[k] + y;
        carry[k] = (t - total[k]) - y;
        total[k] = t;
      }
    }
  }
  return total;
}

double abs_bound(const DirichletPolynomial& P, double sigma) {
  double s = 0.0;
  for (const auto& term : P.terms()) s += std::abs(term.a) * std::pow(P.base(term.n), -sigma);
  return s;
}

SummationSides summation_formula_sides(const DirichletPolynomial& P, ComplexValue s, double x, double lambda) {
  require_finite(s, "summation_formula_sides");
  if (!(s.real() >= 2.0)) throw InvalidArgument("summation_formula_sides: Re(s) >= 2 required");
  if (!(x > 0.0) || !(lambda > 0.0)) throw InvalidArgument("summation_formula_sides: x, lambda > 0");
  const bool shifted = P.mode() == PolyMode::shifted;
  const double alpha = P.alpha();
  const double log_alpha = shifted ? std::log(alpha) : 0.0;

  // frequency log(base / alpha) in shifted mode, log n in classical mode
  Kahan lhs;
  for (const auto& term : P.terms()) {
    const double lb = std::log(P.base(term.n));
    const double freq = lb - log_alpha;
    const double k = kbessel_integral(lambda * freq, x).value.real();
    lhs.add(term.a * std::exp(-s * freq) * k);
  }

  const double sigma = s.real();
  double bound = 0.0;
  for (const auto& term : P.terms()) bound += std::abs(term.a) * std::exp(-sigma * (std::log(P.base(term.n)) - log_alpha));
  auto integrand = [&](double t) {
    const ComplexValue w(sigma, s.imag() + t);
    Kahan acc;
    for (const auto& term : P.terms()) {
      acc.add(term.a * std::exp(-w * (std::log(P.base(term.n)) - log_alpha)));
    }
    return acc.sum;
  };
  const QuadResult<ComplexValue> r = integrate_weighted_line(integrand, lambda, x, bound, 1e-12);
  if (!r.converged) throw NumericError("summation_formula_sides: line integral did not converge");
  return {lhs.sum, r.value / (2.0 * lambda)};
}

DivisorTailSum divisor_tail_sum(double X, double cutoff) {
  require_finite(X, "divisor_tail_sum");
  require_finite(cutoff, "divisor_tail_sum");
  if (!(X > 1.0)) throw InvalidArgument("divisor_tail_sum: X must exceed 1");
  if (!(cutoff >= 10.0 * X)) throw InvalidArgument("divisor_tail_sum: cutoff must be >= 10 X");
  if (cutoff > static_cast<double>(kMaxSieveLimit)) {
    throw BudgetExceeded("divisor_tail_sum: cutoff above sieve cap", static_cast<std::uint64_t>(cutoff));
  }
  const auto first = static_cast<std::uint64_t>(std::floor(X)) + 1;
  const auto last = static_cast<std::uint64_t>(std::floor(cutoff));
  constexpr std::uint64_t kSegment = 1 << 20;
  std::vector<std::uint32_t> d;
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t lo = first; lo <= last; lo += kSegment) {
    const std::uint64_t hi = std::min(last + 1, lo + kSegment);
    divisor_counts(lo, hi, d);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const double ln = std::log(static_cast<double>(n));
      const double y = d[n - lo] / (static_cast<double>(n) * ln * ln * ln) - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
  }
  const double L = std::log(cutoff);
  const double tail = 1.0 / L + std::numbers::egamma / (L * L);
  return {sum, tail, (sum + tail) * std::log(X)};
}

std::string to_json(const DirichletPolynomial& P) {
  nlohmann::ordered_json j;
  j["mode"] = P.mode() == PolyMode::classical ? "classical" : "shifted";
  j["alpha"] = P.alpha();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : P.terms()) terms.push_back({t.n, t.a.real(), t.a.imag()});
  j["terms"] = terms;
  return j.dump();
}

DirichletPolynomial polynomial_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& [key, value] : j.items()) {
      if (key != "mode" && key != "alpha" && key != "terms") throw ConfigError("polynomial: unknown key " + key);
    }
    const std::string mode = j.at("mode").get<std::string>();
    std::vector<DirichletTerm> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw ConfigError("polynomial: each term is [n, re, im]");
      terms.push_back({t[0].get<std::uint64_t>(), {t[1].get<double>(), t[2].get<double>()}});
    }
    if (mode == "classical") return DirichletPolynomial::classical(std::move(terms));
    if (mode == "shifted") return DirichletPolynomial::shifted(j.at("alpha").get<double>(), std::move(terms));
    throw ConfigError("polynomial: mode must be classical or shifted");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("polynomial: ") + e.what());
  }
}

}  // namespace zetalb
