#pragma once

#include <optional>

#include "practical/arith.hpp"

namespace practical {

// Smallest failing index of a criterion, with the prime that failed and the
// threshold it had to stay below or equal to. Indices are 1-based, matching
// the ordering of the factorization.
struct Witness {
  std::size_t index;
  u64 prime;
  u64 threshold;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CriterionResult {
  bool ok;
  std::optional<Witness> witness;
};

// Stewart's structure criterion: n = 1, or p_1 = 2 and every later prime
// satisfies p_j <= 1 + sigma(product of the earlier prime powers). The j = 1
// case folds in as p_1 <= 1 + sigma(1) = 2.
CriterionResult is_practical(const Factorization& f);

// The stronger condition: n = 1, or p_1 = 2 and every later prime satisfies
// p_i <= product of the earlier prime powers. Every member is practical.
CriterionResult in_set_a(const Factorization& f);

struct Verdict {
  u64 value;
  bool practical;
  bool in_a;
  std::optional<Witness> practical_witness;
  std::optional<Witness> a_witness;
};

Verdict classify(u64 n);

// Definition-level check: every m < n is a sum of distinct divisors of n,
// decided by dynamic programming over a reachable-sum bit array. Takes no
// shortcut through the structure criterion. n <= 10^6.
bool oracle_is_practical(u64 n);
inline constexpr u64 kOracleLimit = 1000000;

// Doubles every exponent; the represented value must square below 2^63.
Factorization square(const Factorization& f);

}  // namespace practical
