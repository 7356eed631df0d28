#pragma once

#include <cstdint>
#include <vector>

namespace zetalb {

/// Largest table build_sieve accepts.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Möbius function and divisor-count function for 1 <= n <= limit.
///
/// Immutable once built; index with n directly (entry 0 is unused).
class SieveTable {
 public:
  std::uint64_t limit() const noexcept { return limit_; }

  int mobius(std::uint64_t n) const { return mobius_.at(n); }
  std::uint32_t divisors(std::uint64_t n) const { return divisors_.at(n); }

  const std::vector<std::int8_t>& mobius_table() const noexcept { return mobius_; }
  const std::vector<std::uint32_t>& divisor_table() const noexcept { return divisors_; }

 private:
  friend SieveTable build_sieve(std::uint64_t limit);

  std::uint64_t limit_ = 0;
  std::vector<std::int8_t> mobius_;
  std::vector<std::uint32_t> divisors_;
};

/// Linear sieve. Throws InvalidArgument for limit 0, BudgetExceeded above kMaxSieveLimit.
SieveTable build_sieve(std::uint64_t limit);

/// d(n) for lo <= n < hi (out[n - lo]) by trial division with primes up to
/// sqrt(hi); lets long divisor sums run in fixed memory. Same cap as build_sieve.
void divisor_counts(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint32_t>& out);

}  // namespace zetalb
