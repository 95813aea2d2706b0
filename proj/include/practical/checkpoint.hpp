#pragma once

#include <stdexcept>
#include <string>

#include "practical/arith.hpp"

namespace practical {

inline constexpr int kCheckpointFormatVersion = 1;

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One self-describing record per run; rewritten atomically after every
// completed segment. parameter_digest binds the file to the exact run
// parameters so a resume with different parameters is refused.
struct Checkpoint {
  std::string command_id;
  std::string parameter_digest;
  u64 last_completed_segment = 0;
  u64 cumulative_practical = 0;
  u64 cumulative_a = 0;
  int format_version = kCheckpointFormatVersion;
  std::string written_at;
};

// FNV-1a over the canonical parameter string, as 16 hex digits.
std::string digest_parameters(const std::string& canonical);

// temp file + rename; the file is either the old record or the new one.
void write_checkpoint(const Checkpoint& cp, const std::string& path);

// Throws CheckpointError on malformed input or version mismatch.
Checkpoint read_checkpoint(const std::string& path);

// Throws CheckpointError unless the record matches this run.
void validate_checkpoint(const Checkpoint& cp, const std::string& command_id,
                         const std::string& parameter_digest);

}  // namespace practical
