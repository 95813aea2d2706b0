#include "practical/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "practical/classify.hpp"

namespace practical {

std::vector<IntervalReport> interval_counts(u64 n_min, u64 n_max,
                                            bool with_members,
                                            unsigned threads) {
  if (n_min < 1 || n_min > n_max)
    throw std::invalid_argument("interval_counts: need 1 <= n_min <= n_max");
  if (n_max + 1 > isqrt(kMaxValue))
    throw std::invalid_argument("interval_counts: (n_max+1)^2 overflows");

  std::vector<IntervalReport> reports(n_max - n_min + 1);
  for (u64 n = n_min; n <= n_max; ++n) {
    auto& r = reports[n - n_min];
    r.n = n;
    if (with_members) r.members.emplace();
  }

  const u64 lo = std::max<u64>(2, n_min * n_min + 1);
  const u64 hi = (n_max + 1) * (n_max + 1);  // exclusive; top endpoint is open
  if (lo >= hi) return reports;

  ScanOptions opt;
  opt.threads = threads;
  opt.members = true;
  scan_range(lo, hi, opt, [&](u64, const SegmentSummary& s) {
    for (u64 m : *s.practical_members) {
      const u64 n = isqrt(m);
      if (n * n == m) continue;  // square endpoints are outside the open interval
      if (n < n_min || n > n_max) continue;
      auto& r = reports[n - n_min];
      ++r.count_open;
      if (r.members) r.members->push_back(m);
    }
    return true;
  });
  return reports;
}

std::vector<u64> empirical_thresholds(std::span<const u64> ks, u64 n_max,
                                      unsigned threads) {
  for (u64 k : ks)
    if (k < 1) throw std::invalid_argument("empirical_threshold: k must be >= 1");
  const auto reports = interval_counts(1, n_max, false, threads);
  std::vector<u64> out;
  out.reserve(ks.size());
  for (u64 k : ks) {
    u64 n_emp = 1;
    for (const auto& r : reports)
      if (r.count_open < k) n_emp = r.n + 1;
    out.push_back(n_emp);
  }
  return out;
}

u64 empirical_threshold(u64 k, u64 n_max, unsigned threads) {
  return empirical_thresholds(std::span<const u64>(&k, 1), n_max, threads)[0];
}

std::vector<ConstantEstimate> estimate_constant(std::span<const u64> xs,
                                                unsigned threads) {
  std::vector<ConstantEstimate> out;
  out.reserve(xs.size());
  for (u64 x : xs) {
    if (x < 2) throw std::invalid_argument("estimate_constant: x must be >= 2");
    CountOptions opt;
    opt.threads = threads;
    const CountResult c = count_practical_up_to(x, opt);
    out.push_back({x, c.practical,
                   double(c.practical) * std::log(double(x)) / double(x)});
  }
  return out;
}

std::vector<BandCheck> chebyshev_band_check(std::span<const u64> xs,
                                            double band_lo, double band_hi,
                                            unsigned threads) {
  for (u64 x : xs)
    if (x < 10)
      throw std::invalid_argument("chebyshev_band_check: x must be >= 10");
  const auto estimates = estimate_constant(xs, threads);
  std::vector<BandCheck> out;
  out.reserve(estimates.size());
  for (const auto& e : estimates)
    out.push_back({e.x, e.p_of_x, e.c_of_x,
                   band_lo <= e.c_of_x && e.c_of_x <= band_hi});
  return out;
}

ShortIntervalReport short_interval_a_count(u64 x, double theta, double lambda,
                                           bool use_sqrt_width,
                                           unsigned threads) {
  if (x < 100)
    throw std::invalid_argument("short_interval_a_count: x must be >= 100");
  ShortIntervalReport r;
  r.x = x;
  r.theta = theta;
  r.lambda = lambda;
  r.sqrt_width = use_sqrt_width;
  const double lx = std::log(double(x));
  r.bound = std::pow(double(x), theta) * std::pow(lx, -lambda);
  const double w = use_sqrt_width ? std::sqrt(double(x))
                                  : std::pow(double(x), theta);
  r.width = u64(std::ceil(w));
  if (r.width < 1 || r.width > x - 1)
    throw std::invalid_argument("short_interval_a_count: bad width");

  // closed interval [x - width, x]
  const u64 lo = std::max<u64>(2, x - r.width);
  ScanOptions opt;
  opt.threads = threads;
  scan_range(lo, x + 1, opt, [&](u64, const SegmentSummary& s) {
    r.a_count += s.a_count;
    return true;
  });
  if (x - r.width <= 1) ++r.a_count;  // n = 1 is in A
  r.satisfied = double(r.a_count) >= std::max(1.0, r.bound);
  return r;
}

ProofStepReport proof_step_counts(u64 n, unsigned threads) {
  if (n < 1 || n + 1 > isqrt(kMaxValue))
    throw std::invalid_argument("proof_step_counts: (n+1)^2 overflows");
  ProofStepReport r;
  r.n = n;
  const u64 lo2 = n * n, hi2 = (n + 1) * (n + 1), mid = n * n + n;

  ScanOptions opt;
  opt.threads = threads;
  opt.members = true;
  opt.a_members = true;
  std::vector<u64> practicals;
  scan_range(std::max<u64>(2, lo2), hi2 + 1, opt,
             [&](u64, const SegmentSummary& s) {
               r.a_closed_total += s.a_count;
               practicals.insert(practicals.end(), s.practical_members->begin(),
                                 s.practical_members->end());
               return true;
             });
  if (lo2 <= 1) {  // n = 1: the interval starts at 1
    ++r.a_closed_total;
    practicals.insert(practicals.begin(), 1);
  }
  auto contains = [&](u64 v) {
    return std::binary_search(practicals.begin(), practicals.end(), v);
  };
  for (u64 m : practicals)
    if (m > lo2 && m < hi2) ++r.practical_open;
  r.endpoints_practical = unsigned(contains(lo2)) + unsigned(contains(mid)) +
                          unsigned(contains(hi2));
  r.endpoint_ok = n < 2 || r.endpoints_practical <= 2;
  r.count_ok = r.practical_open + 2 >= r.a_closed_total;
  return r;
}

std::vector<u64> square_closure_check(u64 limit, unsigned threads) {
  if (limit < 1 || limit > isqrt(kMaxValue))
    throw std::invalid_argument("square_closure_check: limit^2 overflows");
  std::vector<u64> violations;
  auto check = [&](u64 n) {
    if (!in_set_a(factorize(n * n)).ok) violations.push_back(n);
  };
  check(1);
  if (limit < 2) return violations;
  ScanOptions opt;
  opt.threads = threads;
  opt.a_members = true;
  scan_range(2, limit + 1, opt, [&](u64, const SegmentSummary& s) {
    for (u64 n : *s.a_members) check(n);
    return true;
  });
  return violations;
}

std::vector<std::uint8_t> practical_bitmap(u64 limit, unsigned threads) {
  std::vector<std::uint8_t> bitmap(limit + 1, 0);
  if (limit >= 1) bitmap[1] = 1;
  if (limit < 2) return bitmap;
  ScanOptions opt;
  opt.threads = threads;
  opt.members = true;
  scan_range(2, limit + 1, opt, [&](u64, const SegmentSummary& s) {
    for (u64 m : *s.practical_members) bitmap[m] = 1;
    return true;
  });
  return bitmap;
}

std::optional<GoldbachWitness> goldbach_decompose(
    u64 m, const std::vector<std::uint8_t>& bitmap) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("goldbach_decompose: m must be even and >= 2");
  if (bitmap.size() < m + 1)
    throw std::invalid_argument("goldbach_decompose: bitmap does not cover m");
  for (u64 a = 1; a <= m / 2; ++a)
    if (bitmap[a] && bitmap[m - a]) return GoldbachWitness{m, a, m - a};
  return std::nullopt;
}

GoldbachRangeResult verify_goldbach_range(u64 max_even, unsigned threads) {
  if (max_even < 2)
    throw std::invalid_argument("verify_goldbach_range: max_even must be >= 2");
  const auto bitmap = practical_bitmap(max_even, threads);
  GoldbachRangeResult res;
  for (u64 m = 2; m <= max_even; m += 2) {
    const auto w = goldbach_decompose(m, bitmap);
    if (!w) {
      res.first_violation = m;
      return res;
    }
    ++res.checked;
    if (w->a > res.max_min_a) {
      res.max_min_a = w->a;
      res.max_min_a_at = m;
    }
  }
  return res;
}

std::vector<u64> practical_triples(u64 limit, unsigned threads) {
  if (limit < 4)
    throw std::invalid_argument("practical_triples: limit must be >= 4");
  const auto bitmap = practical_bitmap(limit + 2, threads);
  std::vector<u64> out;
  for (u64 n = 4; n <= limit; ++n)
    if (bitmap[n - 2] && bitmap[n] && bitmap[n + 2]) out.push_back(n);
  return out;
}

}  // namespace practical
