#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shnr/checks.hpp"

namespace shnr {

inline constexpr const char* kToolVersion = "shnr 1.0.0";

enum class RankProfile { Full, MinusOne, Half };

std::string_view to_string(RankProfile p);
/// "full", "n-1" or "half". Errors: InvalidArgument.
RankProfile parse_rank_profile(std::string_view s);
/// n, max(n - 1, 1) or ceil(n / 2).
std::size_t rank_for(RankProfile p, std::size_t n);

struct InstanceGenConfig {
  std::vector<std::size_t> dims{2, 3, 4};
  std::vector<RankProfile> rank_profiles{RankProfile::Full, RankProfile::MinusOne, RankProfile::Half};
  std::size_t instances_per_check = 200;  // per (dim, rank profile) cell
  std::uint64_t seed = 42;
  double tol_rel = 1e-6;
  double rtol = kDefaultRtol;
  int theta_grid = 32;
  std::vector<std::string> only;  // check ids; empty means all
  unsigned threads = 0;           // 0: hardware concurrency; never affects results

  /// Errors: InvalidArgument (dims < 2, no instances, bad ids, ...).
  void validate() const;
  EvalSettings eval_settings() const;
};

struct Witness {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t index = 0;
  Instance instance;
  Comparison comparison;
};

struct CheckResult {
  std::string id;
  std::size_t instances_run = 0;
  std::size_t violations = 0;
  std::size_t incomplete = 0;
  double max_violation = 0.0;
  double min_slack = 0.0;
  std::size_t comparisons = 0;
  // Conditional checks only.
  std::size_t premise_held = 0;
  std::size_t implication_verified = 0;
  std::optional<Witness> witness;
  // Every comparison of a pinned instance, as "seminorm/label" -> lhs.
  std::vector<std::pair<std::string, double>> observations;
  std::vector<std::string> errors;  // first few Incomplete messages
};

struct SuiteReport {
  std::string tool_version = kToolVersion;
  InstanceGenConfig config;
  std::vector<CheckResult> results;

  std::size_t total_violations() const;
  std::size_t total_incomplete() const;
  bool passed() const { return total_violations() == 0 && total_incomplete() == 0; }
};

/// Runs the selected checks. Deterministic for a fixed config; the thread
/// count only changes wall time.
SuiteReport run_suite(const InstanceGenConfig& cfg);

/// Re-evaluates the witness instance and returns the slack of the recorded
/// comparison. Errors: InvalidArgument if the comparison no longer appears.
double replay_witness(const std::string& check_id, const Witness& w, const EvalSettings& settings);

}  // namespace shnr
