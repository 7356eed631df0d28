#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "zetalb/complex.hpp"

namespace zetalb {

template <typename T>
struct QuadResult {
  T value{};
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

struct QuadOptions {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  int max_depth = 30;
  std::int64_t max_panels = 200'000;
};

namespace detail {

// Gauss–Kronrod 7/15 nodes on [-1, 1] (nonnegative half).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-index Kronrod nodes (0.949.., 0.741.., 0.405.., 0).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(ComplexValue v) { return std::abs(v); }

template <typename T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  int depth;
};

template <typename T, typename F>
Panel<T> gauss_kronrod(F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T kronrod = kKronrodWeights[7] * f(center);
  T gauss = kGaussWeights[3] * f(center);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss), depth};
}

}  // namespace detail

/// Globally adaptive 7/15-point Gauss–Kronrod quadrature.
///
/// The panel with the largest |K15 - G7| is bisected until the summed error
/// is below max(abs_tol, rel_tol * |value|). Panels at max_depth are frozen;
/// hitting that limit (or max_panels) returns a best-effort result with
/// converged = false. The final value is summed in left-to-right panel order.
template <typename T, typename F>
QuadResult<T> integrate(F&& f, double a, double b, const QuadOptions& opts) {
  using detail::Panel;
  QuadResult<T> result;
  if (!(a < b)) {
    if (a == b) return result;
    QuadResult<T> r = integrate<T>(f, b, a, opts);
    r.value = -r.value;
    return r;
  }

  auto cmp = [](const Panel<T>& x, const Panel<T>& y) { return x.error < y.error; };
  std::vector<Panel<T>> open;
  std::vector<Panel<T>> frozen;

  open.push_back(detail::gauss_kronrod<T>(f, a, b, 0));
  result.evaluations = 15;
  T total = open.front().value;
  double total_error = open.front().error;
  std::int64_t panels = 1;

  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * detail::magnitude(total)); };
  // running sums drift; resum before trusting them
  auto resum = [&] {
    total = T{};
    total_error = 0.0;
    for (const auto& p : open) {
      total += p.value;
      total_error += p.error;
    }
    for (const auto& p : frozen) {
      total += p.value;
      total_error += p.error;
    }
  };

  while (!open.empty()) {
    if (total_error <= tolerance()) {
      resum();
      if (total_error <= tolerance()) break;
    }
    std::pop_heap(open.begin(), open.end(), cmp);
    Panel<T> worst = open.back();
    open.pop_back();
    if (worst.depth >= opts.max_depth || panels >= opts.max_panels) {
      result.converged = false;
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<T> left = detail::gauss_kronrod<T>(f, worst.a, mid, worst.depth + 1);
    Panel<T> right = detail::gauss_kronrod<T>(f, mid, worst.b, worst.depth + 1);
    result.evaluations += 30;
    ++panels;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    open.push_back(left);
    std::push_heap(open.begin(), open.end(), cmp);
    open.push_back(right);
    std::push_heap(open.begin(), open.end(), cmp);
  }

  frozen.insert(frozen.end(), open.begin(), open.end());
  std::sort(frozen.begin(), frozen.end(), [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
  T sum{};
  double err = 0.0;
  for (const auto& p : frozen) {
    sum += p.value;
    err += p.error;
  }
  result.value = sum;
  result.abs_error_estimate = err;
  if (err > tolerance() * (1.0 + 1e-9)) result.converged = false;
  return result;
}

using ComplexIntegrand = std::function<ComplexValue(double)>;
using RealIntegrand = std::function<double(double)>;

/// Integral of |f| over [a, b]. Non-convergence is reported, not thrown.
QuadResult<double> integrate_abs(const ComplexIntegrand& f, double a, double b, double tol = 1e-9);

/// Integral over the real line of f(t) exp(-x cosh(t/lambda)).
///
/// bound must dominate |f| on the line; the range is cut at T0 where
/// bound * (discarded kernel mass) <= tol/2 and the rest is integrated to tol/2.
QuadResult<ComplexValue> integrate_weighted_line(const ComplexIntegrand& f, double lambda, double x,
                                                 double bound, double tol = 1e-12);

}  // namespace zetalb
