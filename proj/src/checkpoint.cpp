#include "practical/checkpoint.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace practical {

std::string digest_parameters(const std::string& canonical) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void write_checkpoint(const Checkpoint& cp, const std::string& path) {
  nlohmann::ordered_json j;
  j["format_version"] = cp.format_version;
  j["command_id"] = cp.command_id;
  j["parameter_digest"] = cp.parameter_digest;
  j["last_completed_segment"] = cp.last_completed_segment;
  j["cumulative_practical"] = cp.cumulative_practical;
  j["cumulative_a"] = cp.cumulative_a;
  j["written_at"] = cp.written_at.empty() ? utc_now() : cp.written_at;

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("checkpoint: cannot open " + tmp);
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw CheckpointError("checkpoint: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw CheckpointError("checkpoint: rename failed for " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("checkpoint: cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw CheckpointError("checkpoint: malformed or truncated file " + path);
  }
  Checkpoint cp;
  try {
    cp.format_version = j.at("format_version").get<int>();
    cp.command_id = j.at("command_id").get<std::string>();
    cp.parameter_digest = j.at("parameter_digest").get<std::string>();
    cp.last_completed_segment = j.at("last_completed_segment").get<u64>();
    cp.cumulative_practical = j.at("cumulative_practical").get<u64>();
    cp.cumulative_a = j.at("cumulative_a").get<u64>();
    cp.written_at = j.at("written_at").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw CheckpointError("checkpoint: missing fields in " + path);
  }
  if (cp.format_version != kCheckpointFormatVersion)
    throw CheckpointError("checkpoint: unsupported format version in " + path);
  return cp;
}

void validate_checkpoint(const Checkpoint& cp, const std::string& command_id,
                         const std::string& parameter_digest) {
  if (cp.command_id != command_id)
    throw CheckpointError("checkpoint: written by a different command (" +
                          cp.command_id + ")");
  if (cp.parameter_digest != parameter_digest)
    throw CheckpointError("checkpoint: parameter digest mismatch; refusing to resume");
}

}  // namespace practical
