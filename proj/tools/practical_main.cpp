#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "practical/checkpoint.hpp"
#include "practical/commands.hpp"
#include "practical/sieve.hpp"

namespace {

using practical::CommandResult;
using practical::u64;

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool quiet = false;
};

void emit(const CommandResult& res, const GlobalOpts& g,
          const nlohmann::ordered_json& params, double wall_s) {
  practical::Report report = res.report;
  report.metadata["tool"] = "practical";
  report.metadata["version"] = "0.1.0";
  report.metadata["parameters"] = params;
  report.metadata["threads"] = g.threads;
  report.metadata["wall_time_s"] = wall_s;
  const std::string text =
      g.format == "csv" ? report.to_csv() : report.to_json() + "\n";
  if (!g.out.empty()) {
    std::ofstream f(g.out, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"practical: classify, enumerate and count practical numbers, "
               "and verify the claims made about them"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write the report to a file instead of stdout");
  app.add_option("--threads", g.threads, "Worker count for segment scans")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Suppress progress on stderr");

  u64 n = 0, lo = 0, hi = 0, x = 0, n_min = 1, n_max = 0, limit = 0,
      max_even = 0;
  u64 segment_size = practical::kDefaultSegmentLength;
  std::vector<u64> ks, xs;
  bool members = false, sqrt_width = false;
  double theta = 0.4872, lambda = 9.557;
  std::string checkpoint_path, suite;

  auto* c_classify = app.add_subcommand("classify", "Classify one number");
  c_classify->add_option("n", n, "Number to classify")->required();

  auto* c_sieve = app.add_subcommand("sieve", "Classify a half-open range");
  c_sieve->add_option("--lo", lo)->required();
  c_sieve->add_option("--hi", hi)->required();
  c_sieve->add_flag("--members", members, "Emit member lists");

  auto* c_count = app.add_subcommand("count", "P(x) and A(x), resumable");
  c_count->add_option("--x", x)->required();
  c_count->add_option("--segment-size", segment_size);
  c_count->add_option("--checkpoint", checkpoint_path,
                      "Checkpoint file for resumable runs");

  auto* c_intervals =
      app.add_subcommand("intervals", "Practicals strictly inside (n^2, (n+1)^2)");
  c_intervals->add_option("--n-min", n_min);
  c_intervals->add_option("--n-max", n_max)->required();
  c_intervals->add_flag("--members", members);

  auto* c_threshold = app.add_subcommand(
      "threshold", "Empirical least N with >= k practicals per interval");
  c_threshold->add_option("--k", ks)->required();
  c_threshold->add_option("--n-max", n_max)->required();

  auto* c_constant =
      app.add_subcommand("constant", "c(x) = P(x) ln(x) / x");
  c_constant->add_option("--x", xs)->required();

  auto* c_short = app.add_subcommand(
      "short-interval", "Set-A count in a short interval ending at x");
  c_short->add_option("--x", x)->required();
  c_short->add_option("--theta", theta);
  c_short->add_option("--lambda", lambda);
  c_short->add_flag("--sqrt-width", sqrt_width,
                    "Use width ceil(sqrt(x)) instead of ceil(x^theta)");

  auto* c_goldbach =
      app.add_subcommand("goldbach", "Two-practical decompositions of evens");
  c_goldbach->add_option("--max-even", max_even)->required();

  auto* c_triples =
      app.add_subcommand("triples", "n with n-2, n, n+2 all practical");
  c_triples->add_option("--limit", limit)->required();

  auto* c_verify = app.add_subcommand("verify", "Run a claim-verification suite");
  c_verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"oracle", "wu", "closure", "endpoints", "goldbach"}));
  c_verify->add_option("--limit", limit);
  c_verify->add_option("--n-max", n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return practical::kExitUsage;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    CommandResult res;
    nlohmann::ordered_json params;
    if (c_classify->parsed()) {
      params = {{"n", n}};
      res = practical::cmd_classify(n);
    } else if (c_sieve->parsed()) {
      params = {{"lo", lo}, {"hi", hi}, {"members", members}};
      res = practical::cmd_sieve(lo, hi, members, g.threads);
    } else if (c_count->parsed()) {
      params = {{"x", x}, {"segment_size", segment_size}};
      std::optional<std::string> cp;
      if (!checkpoint_path.empty()) cp = checkpoint_path;
      res = practical::cmd_count(x, segment_size, cp, g.threads);
    } else if (c_intervals->parsed()) {
      params = {{"n_min", n_min}, {"n_max", n_max}, {"members", members}};
      res = practical::cmd_intervals(n_min, n_max, members, g.threads);
    } else if (c_threshold->parsed()) {
      params = {{"k", ks}, {"n_max", n_max}};
      res = practical::cmd_threshold(ks, n_max, g.threads);
    } else if (c_constant->parsed()) {
      params = {{"x", xs}};
      res = practical::cmd_constant(xs, g.threads);
    } else if (c_short->parsed()) {
      params = {{"x", x}, {"theta", theta}, {"lambda", lambda},
                {"sqrt_width", sqrt_width}};
      res = practical::cmd_short_interval(x, theta, lambda, sqrt_width,
                                          g.threads);
    } else if (c_goldbach->parsed()) {
      params = {{"max_even", max_even}};
      res = practical::cmd_goldbach(max_even, g.threads);
    } else if (c_triples->parsed()) {
      params = {{"limit", limit}};
      res = practical::cmd_triples(limit, g.threads);
    } else if (c_verify->parsed()) {
      params = {{"suite", suite}, {"limit", limit}, {"n_max", n_max}};
      res = practical::cmd_verify(suite, limit, n_max, g.threads);
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    emit(res, g, params, wall);
    if (res.exit_code == practical::kExitClaimFailed && !g.quiet)
      std::cerr << "CLAIM FAILED: a verified mathematical statement did not "
                   "hold; see the report\n";
    return res.exit_code;
  } catch (const practical::CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << "\n";
    return practical::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return practical::kExitUsage;
  }
}
