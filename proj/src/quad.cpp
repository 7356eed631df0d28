#include "zetalb/quad.hpp"

#include "zetalb/errors.hpp"
#include "zetalb/kernels.hpp"

namespace zetalb {

QuadResult<double> integrate_abs(const ComplexIntegrand& f, double a, double b, double tol) {
  if (!(a < b)) throw InvalidArgument("integrate_abs: need a < b");
  if (!(tol > 0.0)) throw InvalidArgument("integrate_abs: tol must be positive");
  QuadOptions opts;
  opts.abs_tol = tol;
  return integrate<double>([&](double t) { return std::abs(f(t)); }, a, b, opts);
}

QuadResult<ComplexValue> integrate_weighted_line(const ComplexIntegrand& f, double lambda, double x,
                                                 double bound, double tol) {
  if (!(lambda > 0.0) || !(x > 0.0)) throw InvalidArgument("integrate_weighted_line: lambda, x > 0");
  if (!(bound >= 0.0) || !(tol > 0.0)) throw InvalidArgument("integrate_weighted_line: bound >= 0, tol > 0");

  // smallest cut (in units of lambda, to 1e-3) whose discarded mass is below tol/2
  const double budget = 0.5 * tol;
  double lo = 0.0;
  double hi = 1.0;
  while (bound * tail_integral(hi * lambda, lambda, x) > budget) hi *= 2.0;
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (bound * tail_integral(mid * lambda, lambda, x) > budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double cut = hi * lambda;

  QuadOptions opts;
  opts.abs_tol = budget;
  QuadResult<ComplexValue> r = integrate<ComplexValue>(
      [&](double t) { return f(t) * ramachandra_kernel(t, lambda, x); }, -cut, cut, opts);
  r.abs_error_estimate += bound * tail_integral(cut, lambda, x);
  return r;
}

}  // namespace zetalb
