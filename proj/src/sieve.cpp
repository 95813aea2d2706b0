#include "practical/sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace practical {

namespace {

void check_prime_coverage(std::span<const u64> primes, u64 root) {
  if (root < 2) return;
  if (primes.empty() || primes.front() != 2)
    throw std::invalid_argument("classify_segment: prime table must start at 2");
  u64 back = primes.back();
  if (back >= root) return;
  for (u64 q = back + 1; q <= root; ++q)
    if (is_prime(q))
      throw std::invalid_argument("classify_segment: prime table too short");
}

}  // namespace

SegmentSummary classify_segment(const SegmentRequest& req,
                                std::span<const u64> primes) {
  if (req.lo < 2 || req.lo >= req.hi || req.hi > u64(1) << 63)
    throw std::invalid_argument("classify_segment: need 2 <= lo < hi <= 2^63");
  if (req.hi - req.lo > kMaxSegmentLength)
    throw std::invalid_argument("classify_segment: segment too large");

  std::vector<u64> sorted;
  if (!std::is_sorted(primes.begin(), primes.end())) {
    sorted.assign(primes.begin(), primes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    primes = sorted;
  }

  const u64 top = req.hi - 1;
  const u64 root = isqrt(top);
  check_prime_coverage(primes, root);

  SegmentSummary out;
  out.lo = req.lo;
  out.hi = req.hi;
  if (req.emit_members) out.practical_members.emplace();
  if (req.emit_a_members) out.a_members.emplace();

  const u64 first = req.lo + (req.lo & 1);  // first even candidate
  if (first >= req.hi) return out;
  const u64 slots = (req.hi - first + 1) / 2;

  std::vector<u64> residual(slots);
  std::vector<u128> psigma(slots, 1);  // sigma of the factored-out part
  std::vector<u64> pprod(slots, 1);    // factored-out part itself
  std::vector<std::uint8_t> p_alive(slots, 1);
  std::vector<std::uint8_t> a_alive(slots, 1);
  for (u64 i = 0; i < slots; ++i) residual[i] = first + 2 * i;

  // p = 2 first, unconditionally: every candidate is even, so the p_1 = 2
  // requirement of both criteria is met and no threshold check is needed.
  for (u64 i = 0; i < slots; ++i) {
    u64 r = residual[i];
    unsigned e = 0;
    do {
      r >>= 1;
      ++e;
    } while ((r & 1) == 0);
    residual[i] = r;
    psigma[i] = (u128(1) << (e + 1)) - 1;
    pprod[i] = u64(1) << e;
  }

  for (u64 p : primes) {
    if (p == 2) continue;
    if (p * p > top) break;
    const u64 step = 2 * p;  // even multiples only
    u64 m = ((req.lo + step - 1) / step) * step;
    for (; m < req.hi; m += step) {
      const u64 i = (m - first) / 2;
      u64 r = residual[i];
      unsigned e = 0;
      do {
        r /= p;
        ++e;
      } while (r % p == 0);
      residual[i] = r;
      if (a_alive[i] && p > pprod[i]) a_alive[i] = 0;
      if (p_alive[i]) {
        if (u128(p) > psigma[i] + 1) {
          p_alive[i] = 0;
        } else {
          u128 term = 1, pw = 1;
          u64 powe = 1;
          for (unsigned j = 0; j < e; ++j) {
            pw *= p;
            term += pw;
            powe *= p;
          }
          psigma[i] *= term;
          if (a_alive[i]) pprod[i] *= powe;
        }
      }
    }
  }

  for (u64 i = 0; i < slots; ++i) {
    if (!p_alive[i]) continue;
    const u64 r = residual[i];
    if (r > 1) {
      // r is prime: no factor <= sqrt(hi-1) survived.
      if (u128(r) > psigma[i] + 1) continue;
      if (a_alive[i] && r > pprod[i]) a_alive[i] = 0;
    }
    ++out.practical_count;
    if (out.practical_members) out.practical_members->push_back(first + 2 * i);
    if (a_alive[i]) {
      ++out.a_count;
      if (out.a_members) out.a_members->push_back(first + 2 * i);
    }
  }
  return out;
}

u64 scan_range(u64 lo, u64 hi, const ScanOptions& opt,
               const std::function<bool(u64, const SegmentSummary&)>& sink) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("scan_range: bad window");
  if (opt.segment_size < 2 || opt.segment_size > kMaxSegmentLength)
    throw std::invalid_argument("scan_range: bad segment size");
  if (lo == hi) return opt.start_segment;

  const std::vector<u64> primes = primes_up_to(std::max<u64>(2, isqrt(hi - 1)));
  const u64 seg = opt.segment_size;
  const u64 total = (hi - lo + seg - 1) / seg;
  const unsigned workers = std::max(1u, opt.threads);

  u64 s = opt.start_segment;
  while (s < total) {
    const u64 batch = std::min<u64>(workers, total - s);
    std::vector<SegmentSummary> results(batch);
    auto work = [&](u64 b) {
      SegmentRequest req;
      req.lo = lo + (s + b) * seg;
      req.hi = std::min(hi, req.lo + seg);
      req.emit_members = opt.members;
      req.emit_a_members = opt.a_members;
      results[b] = classify_segment(req, primes);
    };
    if (batch == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(batch);
      for (u64 b = 0; b < batch; ++b) pool.emplace_back(work, b);
      for (auto& t : pool) t.join();
    }
    for (u64 b = 0; b < batch; ++b)
      if (!sink(s + b, results[b])) return s + b + 1;
    s += batch;
  }
  return total;
}

std::vector<u64> enumerate_practical(u64 lo, u64 hi, u64 segment_size) {
  std::vector<u64> out;
  if (lo >= hi) return out;
  if (lo <= 1 && hi > 1) out.push_back(1);
  const u64 start = std::max<u64>(lo, 2);
  if (start >= hi) return out;
  ScanOptions opt;
  opt.segment_size = segment_size;
  opt.members = true;
  scan_range(start, hi, opt, [&](u64, const SegmentSummary& s) {
    out.insert(out.end(), s.practical_members->begin(),
               s.practical_members->end());
    return true;
  });
  return out;
}

CountResult count_practical_up_to(u64 x, const CountOptions& opt) {
  if (x < 1) throw std::invalid_argument("count_practical_up_to: x must be >= 1");
  CountResult res;
  // n = 1 is practical and in A; count it with segment 0's prefix.
  res.practical = opt.resume_segments == 0 ? 1 : opt.resume_practical;
  res.a = opt.resume_segments == 0 ? 1 : opt.resume_a;
  res.segments = opt.resume_segments;
  if (x == 1) return res;

  ScanOptions scan;
  scan.segment_size = opt.segment_size;
  scan.threads = opt.threads;
  scan.start_segment = opt.resume_segments;
  bool stopped = false;
  res.segments = scan_range(2, x + 1, scan, [&](u64 idx, const SegmentSummary& s) {
    res.practical += s.practical_count;
    res.a += s.a_count;
    if (opt.progress && !opt.progress(idx + 1, res.practical, res.a)) {
      stopped = true;
      return false;
    }
    return true;
  });
  res.complete = !stopped;
  return res;
}

}  // namespace practical
