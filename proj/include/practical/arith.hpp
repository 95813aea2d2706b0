#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace practical {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest value the library classifies: 2^63 - 1. Intermediates (sigma,
// thresholds) are carried in 128 bits so they cannot overflow below this cap.
inline constexpr u64 kMaxValue = (u64(1) << 63) - 1;

std::string to_string(u128 v);

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending prime-power decomposition. The empty factorization represents 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  // Multiplies the prime powers back out.
  u64 value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

// All primes in [2, limit], ascending. limit must be in [2, 2^32].
std::vector<u64> primes_up_to(u64 limit);

// Shared base table (primes up to 2^20), built once, read-only afterwards.
const std::vector<u64>& shared_prime_table();
inline constexpr u64 kSharedTableLimit = u64(1) << 20;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Trial division against the shared table, continued on a mod-30 wheel for
// residuals whose factors exceed the table. 1 <= n <= 2^63 - 1.
Factorization factorize(u64 n);

// Sum of divisors of the represented value.
u128 sigma(const Factorization& f);

// sigma of the partial product over the first j-1 prime powers; j = 1 gives
// sigma(1) = 1. Valid j: 1 .. k+1.
u128 sigma_prefix(const Factorization& f, std::size_t j);

u64 isqrt(u64 n);

}  // namespace practical
