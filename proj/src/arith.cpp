#include "zetalb/arith.hpp"

#include <cmath>

#include "zetalb/errors.hpp"

namespace zetalb {

SieveTable build_sieve(std::uint64_t limit) {
  if (limit == 0) {
    throw InvalidArgument("build_sieve: limit must be positive");
  }
  if (limit > kMaxSieveLimit) {
    throw BudgetExceeded("build_sieve: limit above sieve cap", limit);
  }

  SieveTable table;
  table.limit_ = limit;
  table.mobius_.assign(limit + 1, 0);
  table.divisors_.assign(limit + 1, 0);

  // exponent of the smallest prime factor, needed to update d(n) multiplicatively
  std::vector<std::uint8_t> spf_exp(limit + 1, 0);
  std::vector<std::uint32_t> primes;

  auto& mu = table.mobius_;
  auto& d = table.divisors_;
  mu[1] = 1;
  d[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (d[i] == 0) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
      d[i] = 2;
      spf_exp[i] = 1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = i * p;
      if (m > limit) break;
      if (i % p == 0) {
        // p is the smallest prime of i: bump its exponent
        mu[m] = 0;
        spf_exp[m] = static_cast<std::uint8_t>(spf_exp[i] + 1);
        d[m] = d[i] / (spf_exp[i] + 1u) * (spf_exp[m] + 1u);
        break;
      }
      mu[m] = static_cast<std::int8_t>(-mu[i]);
      spf_exp[m] = 1;
      d[m] = d[i] * 2;
    }
  }
  return table;
}

void divisor_counts(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint32_t>& out) {
  if (lo == 0 || hi < lo) throw InvalidArgument("divisor_counts: need 1 <= lo <= hi");
  if (hi - 1 > kMaxSieveLimit) throw BudgetExceeded("divisor_counts: range above sieve cap", hi - 1);
  out.assign(hi - lo, 1);
  std::vector<std::uint32_t> rest(hi - lo);
  for (std::uint64_t n = lo; n < hi; ++n) rest[n - lo] = static_cast<std::uint32_t>(n);

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  std::vector<bool> composite(root + 1, false);
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= root; q += p) composite[q] = true;
    for (std::uint64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
      std::uint32_t e = 0;
      std::uint32_t& r = rest[m - lo];
      while (r % p == 0) {
        r /= static_cast<std::uint32_t>(p);
        ++e;
      }
      out[m - lo] *= e + 1;
    }
  }
  // whatever is left is a single prime above sqrt(hi)
  for (std::uint64_t i = 0; i < rest.size(); ++i) {
    if (rest[i] > 1) out[i] *= 2;
  }
}

}  // namespace zetalb
