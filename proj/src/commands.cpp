#include "practical/commands.hpp"

#include <filesystem>

#include "practical/analysis.hpp"
#include "practical/checkpoint.hpp"
#include "practical/classify.hpp"
#include "practical/sieve.hpp"

namespace practical {

namespace {

using nlohmann::ordered_json;

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return ordered_json{{"j", w->index}, {"p", w->prime}, {"threshold", w->threshold}};
}

ordered_json verify_row(const std::string& suite, u64 checked, u64 violations,
                        std::optional<u64> first_violation) {
  ordered_json row;
  row["suite"] = suite;
  row["checked"] = checked;
  row["violations"] = violations;
  row["first_violation"] =
      first_violation ? ordered_json(*first_violation) : ordered_json(nullptr);
  return row;
}

}  // namespace

CommandResult cmd_classify(u64 n) {
  const Verdict v = classify(n);
  CommandResult res;
  res.report.schema = "classify";
  ordered_json row;
  row["n"] = v.value;
  row["practical"] = v.practical;
  row["in_a"] = v.in_a;
  row["practical_witness"] = witness_json(v.practical_witness);
  row["a_witness"] = witness_json(v.a_witness);
  res.report.rows.push_back(std::move(row));
  return res;
}

CommandResult cmd_sieve(u64 lo, u64 hi, bool members, unsigned threads) {
  CommandResult res;
  res.report.schema = "sieve";
  u64 practical = 0, a = 0;
  std::vector<u64> pm, am;
  ScanOptions opt;
  opt.threads = threads;
  opt.members = members;
  opt.a_members = members;
  scan_range(lo, hi, opt, [&](u64, const SegmentSummary& s) {
    practical += s.practical_count;
    a += s.a_count;
    if (members) {
      pm.insert(pm.end(), s.practical_members->begin(), s.practical_members->end());
      am.insert(am.end(), s.a_members->begin(), s.a_members->end());
    }
    return true;
  });
  ordered_json row;
  row["lo"] = lo;
  row["hi"] = hi;
  row["practical_count"] = practical;
  row["a_count"] = a;
  if (members) {
    row["practical_members"] = pm;
    row["a_members"] = am;
  }
  res.report.rows.push_back(std::move(row));
  return res;
}

CommandResult cmd_count(u64 x, u64 segment_size,
                        const std::optional<std::string>& checkpoint_path,
                        unsigned threads) {
  CountOptions opt;
  opt.segment_size = segment_size;
  opt.threads = threads;

  std::string digest;
  if (checkpoint_path) {
    digest = digest_parameters("count|x=" + std::to_string(x) +
                               "|segment=" + std::to_string(segment_size));
    if (std::filesystem::exists(*checkpoint_path)) {
      const Checkpoint cp = read_checkpoint(*checkpoint_path);
      validate_checkpoint(cp, "count", digest);
      opt.resume_segments = cp.last_completed_segment;
      opt.resume_practical = cp.cumulative_practical;
      opt.resume_a = cp.cumulative_a;
    }
    opt.progress = [&, digest](u64 segments, u64 cum_p, u64 cum_a) {
      Checkpoint cp;
      cp.command_id = "count";
      cp.parameter_digest = digest;
      cp.last_completed_segment = segments;
      cp.cumulative_practical = cum_p;
      cp.cumulative_a = cum_a;
      write_checkpoint(cp, *checkpoint_path);
      return true;
    };
  }

  const CountResult c = count_practical_up_to(x, opt);
  CommandResult res;
  res.report.schema = "count";
  ordered_json row;
  row["x"] = x;
  row["practical_count"] = c.practical;
  row["a_count"] = c.a;
  row["segments"] = c.segments;
  res.report.rows.push_back(std::move(row));
  return res;
}

CommandResult cmd_intervals(u64 n_min, u64 n_max, bool members,
                            unsigned threads) {
  const auto reports = interval_counts(n_min, n_max, members, threads);
  CommandResult res;
  res.report.schema = "intervals";
  for (const auto& r : reports) {
    ordered_json row;
    row["n"] = r.n;
    row["count_open"] = r.count_open;
    if (r.members) row["members"] = *r.members;
    res.report.rows.push_back(std::move(row));
  }
  return res;
}

CommandResult cmd_threshold(std::vector<u64> ks, u64 n_max, unsigned threads) {
  const auto ns = empirical_thresholds(ks, n_max, threads);
  CommandResult res;
  res.report.schema = "threshold";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    ordered_json row;
    row["k"] = ks[i];
    row["n_max"] = n_max;
    row["n_emp"] = ns[i];
    res.report.rows.push_back(std::move(row));
  }
  return res;
}

CommandResult cmd_constant(std::vector<u64> xs, unsigned threads) {
  const auto estimates = estimate_constant(xs, threads);
  CommandResult res;
  res.report.schema = "constant";
  for (const auto& e : estimates) {
    ordered_json row;
    row["x"] = e.x;
    row["p_of_x"] = e.p_of_x;
    row["c_of_x"] = e.c_of_x;
    res.report.rows.push_back(std::move(row));
  }
  return res;
}

CommandResult cmd_short_interval(u64 x, double theta, double lambda,
                                 bool sqrt_width, unsigned threads) {
  const auto r = short_interval_a_count(x, theta, lambda, sqrt_width, threads);
  CommandResult res;
  res.report.schema = "short-interval";
  ordered_json row;
  row["x"] = r.x;
  row["width"] = r.width;
  row["sqrt_width"] = r.sqrt_width;
  row["a_count"] = r.a_count;
  row["bound"] = r.bound;
  row["theta"] = r.theta;
  row["lambda"] = r.lambda;
  row["satisfied"] = r.satisfied;
  res.report.rows.push_back(std::move(row));
  return res;
}

CommandResult cmd_goldbach(u64 max_even, unsigned threads) {
  const auto r = verify_goldbach_range(max_even, threads);
  CommandResult res;
  res.report.schema = "goldbach";
  res.report.rows.push_back(verify_row("goldbach", r.checked,
                                       r.first_violation ? 1 : 0,
                                       r.first_violation));
  auto& row = res.report.rows.back();
  row["max_min_a"] = r.max_min_a;
  row["max_min_a_at"] = r.max_min_a_at;
  if (r.first_violation) res.exit_code = kExitClaimFailed;
  return res;
}

CommandResult cmd_triples(u64 limit, unsigned threads) {
  const auto triples = practical_triples(limit, threads);
  CommandResult res;
  res.report.schema = "triples";
  for (u64 n : triples) {
    ordered_json row;
    row["n"] = n;
    res.report.rows.push_back(std::move(row));
  }
  return res;
}

CommandResult cmd_verify(const std::string& suite, u64 limit, u64 n_max,
                         unsigned threads) {
  CommandResult res;
  res.report.schema = "verify";
  u64 checked = 0, violations = 0;
  std::optional<u64> first;
  auto violate = [&](u64 at) {
    ++violations;
    if (!first) first = at;
  };

  if (suite == "oracle") {
    const u64 lim = limit ? limit : 20000;
    if (lim > kOracleLimit)
      throw std::invalid_argument("verify oracle: limit above oracle cap 10^6");
    for (u64 n = 1; n <= lim; ++n) {
      ++checked;
      if (is_practical(factorize(n)).ok != oracle_is_practical(n)) violate(n);
    }
  } else if (suite == "wu") {
    const u64 nm = n_max ? n_max : 5000;
    for (const auto& r : interval_counts(4, nm, false, threads)) {
      ++checked;
      if (r.count_open < 2) violate(r.n);
    }
  } else if (suite == "closure") {
    const u64 lim = limit ? limit : 10000;
    const auto bad = square_closure_check(lim, threads);
    checked = lim;
    for (u64 n : bad) violate(n);
  } else if (suite == "endpoints") {
    const u64 nm = n_max ? n_max : 2000;
    for (u64 n = 2; n <= nm; ++n) {
      ++checked;
      const auto r = proof_step_counts(n, threads);
      if (!r.endpoint_ok || !r.count_ok) violate(n);
    }
  } else if (suite == "goldbach") {
    const u64 lim = limit ? limit : 1000000;
    const auto r = verify_goldbach_range(lim, threads);
    checked = r.checked;
    if (r.first_violation) violate(*r.first_violation);
  } else {
    throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  }

  res.report.rows.push_back(verify_row(suite, checked, violations, first));
  if (violations > 0) res.exit_code = kExitClaimFailed;
  return res;
}

}  // namespace practical
