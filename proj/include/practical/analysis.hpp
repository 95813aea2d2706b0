#pragma once

#include <optional>

#include "practical/arith.hpp"
#include "practical/sieve.hpp"

namespace practical {

// Count of practical numbers strictly inside (n^2, (n+1)^2).
struct IntervalReport {
  u64 n = 0;
  u64 count_open = 0;
  std::optional<std::vector<u64>> members;
};

std::vector<IntervalReport> interval_counts(u64 n_min, u64 n_max,
                                            bool with_members,
                                            unsigned threads = 1);

// Least N consistent with "every interval at n >= N holds at least k
// practicals" over the data up to n_max: 1 + max{n <= n_max : count < k},
// or 1 when no interval falls short. A lower-bound probe, not a proof.
u64 empirical_threshold(u64 k, u64 n_max, unsigned threads = 1);
std::vector<u64> empirical_thresholds(std::span<const u64> ks, u64 n_max,
                                      unsigned threads = 1);

struct ConstantEstimate {
  u64 x = 0;
  u64 p_of_x = 0;
  double c_of_x = 0.0;  // P(x) * ln(x) / x
};

std::vector<ConstantEstimate> estimate_constant(std::span<const u64> xs,
                                                unsigned threads = 1);

struct BandCheck {
  u64 x = 0;
  u64 p_of_x = 0;
  double c_of_x = 0.0;
  bool pass = false;
};

// Chebyshev-style sanity band on c(x); the default [1.0, 1.6] is an
// artifact-chosen envelope, not a literature constant.
std::vector<BandCheck> chebyshev_band_check(std::span<const u64> xs,
                                            double band_lo = 1.0,
                                            double band_hi = 1.6,
                                            unsigned threads = 1);

struct ShortIntervalReport {
  u64 x = 0;
  u64 width = 0;  // ceil(x^theta), or ceil(sqrt(x)) in sqrt mode
  u64 a_count = 0;
  double bound = 0.0;  // x^theta * (ln x)^(-lambda), natural log
  double theta = 0.0;
  double lambda = 0.0;
  bool sqrt_width = false;
  bool satisfied = false;  // a_count >= max(1, bound)
};

ShortIntervalReport short_interval_a_count(u64 x, double theta = 0.4872,
                                           double lambda = 9.557,
                                           bool use_sqrt_width = false,
                                           unsigned threads = 1);

struct ProofStepReport {
  u64 n = 0;
  u64 a_closed_total = 0;    // set-A members in [n^2, (n+1)^2]
  u64 practical_open = 0;    // practicals in (n^2, (n+1)^2)
  unsigned endpoints_practical = 0;  // among n^2, n^2 + n, (n+1)^2
  bool endpoint_ok = false;  // endpoints_practical <= 2 (asserted for n >= 2)
  bool count_ok = false;     // practical_open >= a_closed_total - 2
};

ProofStepReport proof_step_counts(u64 n, unsigned threads = 1);

// Every n <= limit with n in A must have n^2 in A; returns the violations
// (expected empty).
std::vector<u64> square_closure_check(u64 limit, unsigned threads = 1);

struct GoldbachWitness {
  u64 m = 0;
  u64 a = 0;  // smallest practical with m - a practical
  u64 b = 0;
};

// bitmap[i] must say whether i is practical, for 0 <= i <= m. nullopt means
// no decomposition exists, which would falsify the theorem.
std::optional<GoldbachWitness> goldbach_decompose(
    u64 m, const std::vector<std::uint8_t>& bitmap);

struct GoldbachRangeResult {
  std::optional<u64> first_violation;
  u64 checked = 0;
  u64 max_min_a = 0;     // largest minimal part seen
  u64 max_min_a_at = 0;  // the even number attaining it
};

GoldbachRangeResult verify_goldbach_range(u64 max_even, unsigned threads = 1);

// All n in [4, limit] with n-2, n, n+2 simultaneously practical.
std::vector<u64> practical_triples(u64 limit, unsigned threads = 1);

// Practicality bitmap over [0, limit], built by the sieve.
std::vector<std::uint8_t> practical_bitmap(u64 limit, unsigned threads = 1);

}  // namespace practical
