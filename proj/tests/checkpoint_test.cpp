#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "practical/checkpoint.hpp"

using namespace practical;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

Checkpoint sample() {
  Checkpoint cp;
  cp.command_id = "count";
  cp.parameter_digest = digest_parameters("count|x=1000000|segment=1048576");
  cp.last_completed_segment = 7;
  cp.cumulative_practical = 123456;
  cp.cumulative_a = 54321;
  return cp;
}

}  // namespace

TEST_CASE("write then read round-trips") {
  TempFile f("practical_cp_roundtrip.json");
  const Checkpoint cp = sample();
  write_checkpoint(cp, f.path);
  const Checkpoint back = read_checkpoint(f.path);
  CHECK(back.command_id == cp.command_id);
  CHECK(back.parameter_digest == cp.parameter_digest);
  CHECK(back.last_completed_segment == cp.last_completed_segment);
  CHECK(back.cumulative_practical == cp.cumulative_practical);
  CHECK(back.cumulative_a == cp.cumulative_a);
  CHECK(back.format_version == kCheckpointFormatVersion);
  CHECK_FALSE(back.written_at.empty());
}

TEST_CASE("digest binds the checkpoint to its parameters") {
  const Checkpoint cp = sample();
  CHECK_NOTHROW(validate_checkpoint(cp, "count", cp.parameter_digest));
  CHECK_THROWS_AS(
      validate_checkpoint(cp, "count",
                          digest_parameters("count|x=2000000|segment=1048576")),
      CheckpointError);
  CHECK_THROWS_AS(validate_checkpoint(cp, "sieve", cp.parameter_digest),
                  CheckpointError);
}

TEST_CASE("truncated and malformed files are refused") {
  TempFile f("practical_cp_truncated.json");
  write_checkpoint(sample(), f.path);
  std::string text;
  {
    std::ifstream in(f.path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  {
    std::ofstream out(f.path, std::ios::trunc);
    out << text.substr(0, text.size() / 2);
  }
  CHECK_THROWS_AS(read_checkpoint(f.path), CheckpointError);

  {
    std::ofstream out(f.path, std::ios::trunc);
    out << "not json at all";
  }
  CHECK_THROWS_AS(read_checkpoint(f.path), CheckpointError);
}

TEST_CASE("future format versions are refused") {
  TempFile f("practical_cp_version.json");
  Checkpoint cp = sample();
  cp.format_version = kCheckpointFormatVersion + 1;
  write_checkpoint(cp, f.path);
  CHECK_THROWS_AS(read_checkpoint(f.path), CheckpointError);
}

TEST_CASE("missing file is an explicit error") {
  CHECK_THROWS_AS(read_checkpoint("/nonexistent/practical.cp"), CheckpointError);
}

TEST_CASE("digest is stable") {
  CHECK(digest_parameters("abc") == digest_parameters("abc"));
  CHECK(digest_parameters("abc") != digest_parameters("abd"));
  CHECK(digest_parameters("").size() == 16);
}
