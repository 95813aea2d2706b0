#include "practical/classify.hpp"

#include <stdexcept>

namespace practical {

CriterionResult is_practical(const Factorization& f) {
  u128 sig = 1;  // sigma of the prefix product seen so far
  std::size_t index = 0;
  for (const auto& [p, e] : f.factors()) {
    ++index;
    const u128 threshold = sig + 1;
    if (u128(p) > threshold)
      return {false, Witness{index, p, u64(threshold)}};
    u128 term = 1, pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= p;
      term += pw;
    }
    sig *= term;
  }
  return {true, std::nullopt};
}

CriterionResult in_set_a(const Factorization& f) {
  u64 prod = 1;  // partial products divide the value, so they fit in 64 bits
  std::size_t index = 0;
  for (const auto& [p, e] : f.factors()) {
    ++index;
    const u64 threshold = index == 1 ? 2 : prod;
    if (p > threshold) return {false, Witness{index, p, threshold}};
    for (unsigned i = 0; i < e; ++i) prod *= p;
  }
  return {true, std::nullopt};
}

Verdict classify(u64 n) {
  const Factorization f = factorize(n);
  CriterionResult pr = is_practical(f);
  CriterionResult ar = in_set_a(f);
  if (ar.ok && !pr.ok)
    throw std::logic_error("classify: set-A membership without practicality");
  return Verdict{n, pr.ok, ar.ok, std::move(pr.witness), std::move(ar.witness)};
}

bool oracle_is_practical(u64 n) {
  if (n < 1 || n > kOracleLimit)
    throw std::invalid_argument("oracle_is_practical: n must be in [1, 10^6]");
  if (n == 1) return true;  // no m < 1 to represent

  std::vector<u64> divisors;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }

  // reachable[m] = m is a sum of distinct divisors; only sums < n matter.
  const u64 bits = n;  // bits 0 .. n-1
  std::vector<u64> reach((bits + 63) / 64, 0);
  reach[0] = 1;
  for (u64 d : divisors) {
    if (d >= n) continue;
    // reach |= reach << d, truncated at bit n-1
    const u64 word_shift = d / 64, bit_shift = d % 64;
    for (std::size_t i = reach.size(); i-- > word_shift;) {
      u64 v = reach[i - word_shift] << bit_shift;
      if (bit_shift != 0 && i > word_shift)
        v |= reach[i - word_shift - 1] >> (64 - bit_shift);
      reach[i] |= v;
    }
  }

  for (u64 m = 1; m < n; ++m)
    if ((reach[m / 64] >> (m % 64) & 1) == 0) return false;
  return true;
}

Factorization square(const Factorization& f) {
  const u64 v = f.value();
  if (v > isqrt(kMaxValue))
    throw std::invalid_argument("square: value squared exceeds 2^63 - 1");
  std::vector<PrimePower> doubled = f.factors();
  for (auto& pp : doubled) pp.exponent *= 2;
  return Factorization(std::move(doubled));
}

}  // namespace practical
