#pragma once

#include <functional>
#include <optional>

#include "practical/arith.hpp"

namespace practical {

inline constexpr u64 kDefaultSegmentLength = u64(1) << 20;
inline constexpr u64 kMaxSegmentLength = u64(1) << 26;

struct SegmentRequest {
  u64 lo = 2;  // half-open [lo, hi), 2 <= lo < hi <= 2^63
  u64 hi = 2;
  bool emit_members = false;
  bool emit_a_members = false;
};

struct SegmentSummary {
  u64 lo = 0;
  u64 hi = 0;
  u64 practical_count = 0;
  u64 a_count = 0;
  std::optional<std::vector<u64>> practical_members;
  std::optional<std::vector<u64>> a_members;
};

// Classifies every number in [lo, hi) with one pass: primes are applied in
// ascending order, each candidate's criterion state is updated incrementally,
// and any residual left after the primes <= sqrt(hi-1) is itself prime and is
// checked last. Odd candidates above 1 are never materialized. The prime
// table must contain every prime <= sqrt(hi-1); an unsorted table is sorted
// internally.
SegmentSummary classify_segment(const SegmentRequest& req,
                                std::span<const u64> primes);

struct ScanOptions {
  u64 segment_size = kDefaultSegmentLength;
  unsigned threads = 1;
  bool members = false;
  bool a_members = false;
  u64 start_segment = 0;  // resume after this many completed segments
};

// Drives classify_segment over [lo, hi) in fixed-size segments, optionally in
// parallel. The sink sees segments strictly ascending regardless of worker
// count; returning false stops the scan after that segment. Returns the
// number of completed segments.
u64 scan_range(u64 lo, u64 hi, const ScanOptions& opt,
               const std::function<bool(u64 index, const SegmentSummary&)>& sink);

// Exactly the practical numbers in [lo, hi), ascending.
std::vector<u64> enumerate_practical(u64 lo, u64 hi,
                                     u64 segment_size = kDefaultSegmentLength);

struct CountOptions {
  u64 segment_size = kDefaultSegmentLength;
  unsigned threads = 1;
  u64 resume_segments = 0;
  u64 resume_practical = 0;  // cumulative counts at the resume point
  u64 resume_a = 0;
  // Called after each completed segment with cumulative totals; return false
  // to stop early (the result is then marked incomplete).
  std::function<bool(u64 segments_done, u64 cum_practical, u64 cum_a)> progress;
};

struct CountResult {
  u64 practical = 0;
  u64 a = 0;
  u64 segments = 0;
  bool complete = true;
};

// P(x) and A(x): counts of practical numbers and set-A members in [1, x].
CountResult count_practical_up_to(u64 x, const CountOptions& opt = {});

}  // namespace practical
