#include "practical/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace practical {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  u128 product = 1;
  u64 last = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= last)
      throw std::invalid_argument("Factorization: primes must be strictly increasing");
    if (e < 1) throw std::invalid_argument("Factorization: exponents must be >= 1");
    last = p;
    for (unsigned i = 0; i < e; ++i) {
      product *= p;
      if (product > kMaxValue)
        throw std::invalid_argument("Factorization: value exceeds 2^63 - 1");
    }
  }
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : factors_)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

std::vector<u64> primes_up_to(u64 limit) {
  if (limit < 2 || limit > (u64(1) << 32))
    throw std::invalid_argument("primes_up_to: limit must be in [2, 2^32]");
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= limit / i)
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<u64>& shared_prime_table() {
  static const std::vector<u64> table = primes_up_to(kSharedTableLimit);
  return table;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Gap to the next residue coprime to 30, indexed by current residue.
constexpr unsigned kWheelGap[30] = {6, 6, 5, 4, 3, 2, 1, 4, 3, 2, 1, 2, 1, 4,
                                    3, 2, 1, 2, 1, 4, 3, 2, 1, 6, 5, 4, 3, 2,
                                    1, 2};

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is exact for all n < 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n < 1 || n > kMaxValue)
    throw std::invalid_argument("factorize: n must be in [1, 2^63 - 1]");
  std::vector<PrimePower> fs;
  u64 r = n;
  for (u64 p : shared_prime_table()) {
    if (p * p > r) break;
    if (r % p == 0) {
      unsigned e = 0;
      do {
        r /= p;
        ++e;
      } while (r % p == 0);
      fs.push_back({p, e});
    }
  }
  if (r > 1 && r > kSharedTableLimit && !is_prime(r)) {
    u64 c = kSharedTableLimit + 1;
    while (std::gcd(c, u64(30)) != 1) ++c;
    while (c * c <= r) {
      if (r % c == 0) {
        unsigned e = 0;
        do {
          r /= c;
          ++e;
        } while (r % c == 0);
        fs.push_back({c, e});
        if (r == 1 || is_prime(r)) break;
      }
      c += kWheelGap[c % 30];
    }
  }
  if (r > 1) fs.push_back({r, 1});
  return Factorization(std::move(fs));
}

namespace {

// 1 + p + ... + p^e, overflow-free for any prime power below 2^63.
u128 geometric_sum(u64 p, unsigned e) {
  u128 term = 1, sum = 1;
  for (unsigned i = 0; i < e; ++i) {
    term *= p;
    sum += term;
  }
  return sum;
}

}  // namespace

u128 sigma(const Factorization& f) {
  u128 s = 1;
  for (const auto& [p, e] : f.factors()) s *= geometric_sum(p, e);
  return s;
}

u128 sigma_prefix(const Factorization& f, std::size_t j) {
  if (j < 1 || j > f.size() + 1)
    throw std::invalid_argument("sigma_prefix: index out of range");
  u128 s = 1;
  for (std::size_t i = 0; i + 1 < j; ++i) {
    const auto& [p, e] = f.factors()[i];
    s *= geometric_sum(p, e);
  }
  return s;
}

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = u64(std::sqrt(double(n)));
  while (r > 0 && u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace practical
