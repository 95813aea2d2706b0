#pragma once

#include <optional>
#include <string>
#include <vector>

#include "practical/arith.hpp"
#include "practical/report.hpp"

namespace practical {

// Exit codes shared with the CLI: 0 = data produced / all checks passed,
// 1 = a verified mathematical claim failed, 2 = usage or environment error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

CommandResult cmd_classify(u64 n);
CommandResult cmd_sieve(u64 lo, u64 hi, bool members, unsigned threads);
CommandResult cmd_count(u64 x, u64 segment_size,
                        const std::optional<std::string>& checkpoint_path,
                        unsigned threads);
CommandResult cmd_intervals(u64 n_min, u64 n_max, bool members,
                            unsigned threads);
CommandResult cmd_threshold(std::vector<u64> ks, u64 n_max, unsigned threads);
CommandResult cmd_constant(std::vector<u64> xs, unsigned threads);
CommandResult cmd_short_interval(u64 x, double theta, double lambda,
                                 bool sqrt_width, unsigned threads);
CommandResult cmd_goldbach(u64 max_even, unsigned threads);
CommandResult cmd_triples(u64 limit, unsigned threads);

// suite: oracle | wu | closure | endpoints | goldbach. limit/n_max semantics
// follow the individual suites; 0 selects the suite default.
CommandResult cmd_verify(const std::string& suite, u64 limit, u64 n_max,
                         unsigned threads);

}  // namespace practical
