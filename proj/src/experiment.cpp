#include "degpack/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "degpack/engine.hpp"
#include "degpack/generators.hpp"
#include "degpack/prepare.hpp"
#include "degpack/rng.hpp"

namespace degpack {

using nlohmann::json;

void ExperimentConfig::validate() const {
  std::vector<std::string> problems;
  try {
    HostSpec::parse(host);
  } catch (const SpecError& e) {
    problems.push_back(std::string("host: ") + e.what());
  }
  for (std::size_t i = 0; i < guests.size(); ++i) {
    try {
      GuestSpec::parse(guests[i]);
    } catch (const SpecError& e) {
      problems.push_back("guests[" + std::to_string(i) + "]: " + e.what());
    }
  }
  if (!(gamma > 0.0 && gamma < 1.0)) problems.push_back("gamma must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) problems.push_back("delta must lie in (0, 1)");
  if (trials == 0) problems.push_back("trials must be positive");
  if (workers == 0) problems.push_back("workers must be positive");
  try {
    audit_policy.validate();
  } catch (const std::invalid_argument& e) {
    problems.emplace_back(e.what());
  }
  if (problems.empty()) return;
  std::string message = "invalid experiment config:";
  for (const auto& p : problems) message += "\n  " + p;
  throw std::invalid_argument(message);
}

std::size_t ExperimentConfig::checkpoint_count() const {
  return checkpoints.empty() ? 5 : checkpoints.size();
}

ExperimentConfig ExperimentConfig::from_json(const json& doc) {
  ExperimentConfig c;
  c.host = doc.value("host", c.host);
  if (doc.contains("guests")) {
    const json& g = doc.at("guests");
    if (g.is_string()) {
      for (const auto& spec : parse_guest_specs(g.get<std::string>())) c.guests.push_back(spec.spec.text);
    } else {
      c.guests = g.get<std::vector<std::string>>();
    }
  }
  c.gamma = doc.value("gamma", c.gamma);
  c.delta = doc.value("delta", c.delta);
  c.trials = doc.value("trials", c.trials);
  c.master_seed = doc.value("seed", c.master_seed);
  c.checkpoints = doc.value("checkpoints", c.checkpoints);
  c.audits = doc.value("audits", c.audits);
  if (doc.contains("audit_policy")) {
    const json& p = doc.at("audit_policy");
    c.audit_policy.max_set_size = p.value("L", c.audit_policy.max_set_size);
    c.audit_policy.exhaustive_max_size =
        p.value("exhaustive_max_size", c.audit_policy.exhaustive_max_size);
    c.audit_policy.samples_per_size = p.value("samples_per_size", c.audit_policy.samples_per_size);
    c.audit_policy.rng_seed = p.value("rng_seed", c.audit_policy.rng_seed);
  }
  c.degeneracy = doc.value("degeneracy", c.degeneracy);
  c.auto_shrink_delta = doc.value("auto_shrink_delta", c.auto_shrink_delta);
  c.continue_on_completion_failure =
      doc.value("continue_on_completion_failure", c.continue_on_completion_failure);
  c.workers = doc.value("workers", c.workers);
  c.record_timing = doc.value("timing", c.record_timing);
  c.csv_path = doc.value("csv", c.csv_path);
  c.summary_path = doc.value("summary", c.summary_path);
  return c;
}

json ExperimentConfig::to_json() const {
  return json{{"host", host},
              {"guests", guests},
              {"gamma", gamma},
              {"delta", delta},
              {"trials", trials},
              {"seed", master_seed},
              {"checkpoints", checkpoints},
              {"audits", audits},
              {"audit_policy",
               {{"L", audit_policy.max_set_size},
                {"exhaustive_max_size", audit_policy.exhaustive_max_size},
                {"samples_per_size", audit_policy.samples_per_size},
                {"rng_seed", audit_policy.rng_seed}}},
              {"degeneracy", degeneracy},
              {"auto_shrink_delta", auto_shrink_delta},
              {"continue_on_completion_failure", continue_on_completion_failure},
              {"workers", workers},
              {"timing", record_timing}};
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
  return mix_seed(master_seed, trial);
}

namespace {

std::vector<std::size_t> checkpoint_stages(const ExperimentConfig& config, std::size_t s_star) {
  if (!config.checkpoints.empty()) return config.checkpoints;
  return {0, s_star / 4, s_star / 2, 3 * s_star / 4, s_star};
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial) {
  const auto started = std::chrono::steady_clock::now();
  TrialRecord record;
  record.trial = trial;
  record.seed = trial_seed(config.master_seed, trial);

  Rng host_rng = substream(record.seed, 1);
  const Graph hhat = HostSpec::parse(config.host).generate(host_rng);
  std::vector<Graph> raw;
  std::size_t D = config.degeneracy;
  for (std::size_t k = 0; k < config.guests.size(); ++k) {
    const GuestSpec spec = GuestSpec::parse(config.guests[k]);
    if (config.degeneracy == 0) D = std::max(D, spec.degeneracy_bound());
    Rng rng = substream(record.seed, 2 + k);
    for (Graph& g : spec.generate(rng)) raw.push_back(std::move(g));
  }
  PrepareOptions prepare{config.delta, config.auto_shrink_delta};
  const PreparedFamily family =
      prepare_guest_family(raw, hhat.num_vertices(), std::max<std::size_t>(D, 1), prepare);

  RunConfig run;
  run.gamma = config.gamma;
  run.delta = config.delta;
  run.rng_seed = mix_seed(record.seed, 0);
  run.audit_policy = config.audit_policy;
  run.audit_policy.rng_seed = mix_seed(record.seed, config.audit_policy.rng_seed + 1);
  run.continue_on_completion_failure = config.continue_on_completion_failure;
  const std::size_t s_star = family.guests.size();
  record.checkpoint_stages = checkpoint_stages(config, s_star);
  if (config.audits) run.audit_checkpoints = record.checkpoint_stages;

  const PackingResult result = packing_process(family.guests, hhat, run);

  record.stages = s_star;
  record.host_edges = hhat.num_edges();
  record.tail_len = family.tail_len;
  for (const auto& g : family.guests) record.guest_edges += g.num_edges();
  record.uncovered = result.uncovered;
  record.warnings = result.warnings;
  if (family.shrunk) {
    record.warnings.push_back("tail shrunk to " + std::to_string(family.tail_len));
  }
  for (const auto& s : result.stages) {
    record.drain_per_stage.push_back(s.max_reservoir_drain);
    record.max_reservoir_drain = std::max(record.max_reservoir_drain, s.max_reservoir_drain);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t stage : record.checkpoint_stages) {
    double bulk = nan;
    double co = nan;
    for (const auto& a : result.audits) {
      if (a.stage == stage) {
        bulk = a.bulk.deviation;
        co = a.bulk_reservoir.deviation;
        break;
      }
    }
    record.audit_bulk.push_back(bulk);
    record.audit_coquasi.push_back(co);
  }

  const FailureRecord* failure = result.failure ? &*result.failure : nullptr;
  if (!failure && !result.skipped_completions.empty()) failure = &result.skipped_completions.front();
  if (result.success) {
    const Verdict verdict = verify_packing(family.guests, hhat, result);
    record.outcome = verdict.ok ? "success" : "invalid";
    record.violations = verdict.violations;
  } else if (failure && failure->phase == Phase::kEmbedding) {
    record.outcome = "embed_failure";
    record.fail_stage = failure->stage;
    record.fail_pos = failure->position;
  } else if (failure) {
    record.outcome = "completion_failure";
    record.fail_stage = failure->stage;
    record.fail_pos = failure->hall_set.size();
  }
  if (config.record_timing) {
    record.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  }
  return record;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<TrialRecord> records(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.trials) return;
      try {
        records[i] = run_trial(config, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(config.trials);
        return;
      }
    }
  };
  const std::size_t threads = std::min(config.workers, config.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return records;
}

namespace {

std::string format_double(double value) {
  if (std::isnan(value)) return "NA";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

json quantiles(std::vector<double> values) {
  values.erase(std::remove_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }),
               values.end());
  if (values.empty()) return json{{"count", 0}};
  std::sort(values.begin(), values.end());
  auto at = [&values](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    return values[lo] + (values[hi] - values[lo]) * (pos - static_cast<double>(lo));
  };
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  return json{{"count", values.size()}, {"min", values.front()}, {"q25", at(0.25)},
              {"median", at(0.5)},      {"q75", at(0.75)},       {"max", values.back()},
              {"mean", mean}};
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentConfig& config,
               const std::vector<TrialRecord>& records) {
  const std::size_t k = config.checkpoint_count();
  out << "trial,outcome,fail_stage,fail_pos,uncovered,max_reservoir_drain";
  for (std::size_t c = 0; c < k; ++c) out << ",audit_bulk_" << c;
  for (std::size_t c = 0; c < k; ++c) out << ",audit_coquasi_" << c;
  out << ",wall_ms\n";
  for (const TrialRecord& r : records) {
    out << r.trial << ',' << r.outcome << ',' << r.fail_stage << ',' << r.fail_pos << ','
        << r.uncovered << ',' << r.max_reservoir_drain;
    for (std::size_t c = 0; c < k; ++c) {
      out << ',' << format_double(c < r.audit_bulk.size() ? r.audit_bulk[c] : NAN);
    }
    for (std::size_t c = 0; c < k; ++c) {
      out << ',' << format_double(c < r.audit_coquasi.size() ? r.audit_coquasi[c] : NAN);
    }
    out << ',' << format_double(r.wall_ms) << '\n';
  }
}

json summarize(const ExperimentConfig& config, const std::vector<TrialRecord>& records) {
  std::map<std::string, std::size_t> outcomes;
  std::map<std::size_t, std::size_t> failure_stages;
  std::size_t successes = 0;
  for (const TrialRecord& r : records) {
    ++outcomes[r.outcome];
    if (r.outcome == "success") {
      ++successes;
    } else if (r.outcome != "invalid") {
      ++failure_stages[r.fail_stage];
    }
  }
  json stage_hist = json::object();
  for (const auto& [stage, count] : failure_stages) stage_hist[std::to_string(stage)] = count;

  const std::size_t k = config.checkpoint_count();
  json checkpoints = json::array();
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> bulk;
    std::vector<double> co;
    std::vector<double> stage;
    for (const TrialRecord& r : records) {
      if (c < r.audit_bulk.size()) bulk.push_back(r.audit_bulk[c]);
      if (c < r.audit_coquasi.size()) co.push_back(r.audit_coquasi[c]);
      if (c < r.checkpoint_stages.size()) stage.push_back(static_cast<double>(r.checkpoint_stages[c]));
    }
    checkpoints.push_back({{"index", c},
                           {"stage", quantiles(stage)},
                           {"bulk_quasirandom", quantiles(std::move(bulk))},
                           {"bulk_reservoir_coquasirandom", quantiles(std::move(co))}});
  }
  std::vector<double> drains;
  std::vector<double> stages;
  std::vector<double> guest_edges;
  for (const TrialRecord& r : records) {
    drains.push_back(static_cast<double>(r.max_reservoir_drain));
    stages.push_back(static_cast<double>(r.stages));
    guest_edges.push_back(static_cast<double>(r.guest_edges));
  }
  json invalid = json::array();
  for (const TrialRecord& r : records) {
    if (r.outcome == "invalid") invalid.push_back({{"trial", r.trial}, {"violations", r.violations}});
  }
  json summary{{"config", config.to_json()},
               {"trials", records.size()},
               {"successes", successes},
               {"success_rate", records.empty() ? 0.0
                                                : static_cast<double>(successes) /
                                                      static_cast<double>(records.size())},
               {"outcomes", outcomes},
               {"failure_stage_histogram", stage_hist},
               {"checkpoints", checkpoints},
               {"max_reservoir_drain", quantiles(drains)},
               {"stages", quantiles(stages)},
               {"guest_edges", quantiles(guest_edges)},
               {"invalid", invalid}};
  if (!records.empty()) {
    summary["warnings"] = records.front().warnings;
    summary["tail_len"] = records.front().tail_len;
    summary["host_edges_first_trial"] = records.front().host_edges;
  }
  return summary;
}

}  // namespace degpack
