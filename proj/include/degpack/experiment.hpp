#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "degpack/audit.hpp"

namespace degpack {

struct ExperimentConfig {
  std::string host = "complete:n=100";
  std::vector<std::string> guests;  // guest spec strings
  double gamma = 0.25;
  double delta = 0.04;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  /// Explicit audit stages; empty means {0, s*/4, s*/2, 3s*/4, s*}.
  std::vector<std::size_t> checkpoints;
  bool audits = true;
  AuditPolicy audit_policy{2, 2, 200, 0};
  /// Degeneracy bound used for preparation; 0 infers it from the guest specs.
  std::size_t degeneracy = 0;
  bool auto_shrink_delta = false;
  bool continue_on_completion_failure = false;
  std::size_t workers = 1;
  /// Wall-clock times make the CSV non-reproducible, so they are opt-in.
  bool record_timing = false;
  std::string csv_path;
  std::string summary_path;

  /// Throws std::invalid_argument naming every violated field.
  void validate() const;
  std::size_t checkpoint_count() const;

  static ExperimentConfig from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

/// seed of trial i: mix_seed(master_seed, i).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string outcome;  // success | embed_failure | completion_failure | invalid
  std::size_t fail_stage = 0;
  std::size_t fail_pos = 0;  // failing position, or Hall witness size
  std::size_t uncovered = 0;
  std::size_t max_reservoir_drain = 0;
  std::size_t stages = 0;  // s*
  std::size_t guest_edges = 0;
  std::size_t host_edges = 0;
  std::size_t tail_len = 0;
  std::vector<std::size_t> checkpoint_stages;
  std::vector<double> audit_bulk;       // quasirandomness of H_s, NaN if not reached
  std::vector<double> audit_coquasi;    // coquasirandomness of (H_s, H*_s)
  std::vector<std::size_t> drain_per_stage;
  std::vector<std::string> warnings;
  std::vector<std::string> violations;  // verify_packing findings, if any
  double wall_ms = 0.0;
};

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial);

/// Runs all trials on config.workers threads; records come back in trial
/// order.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const ExperimentConfig& config,
               const std::vector<TrialRecord>& records);
nlohmann::json summarize(const ExperimentConfig& config, const std::vector<TrialRecord>& records);

}  // namespace degpack
