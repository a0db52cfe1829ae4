// degpack: command-line driver for packing experiments.
//
//   degpack pack   --host SPEC --guests SPECS [--trials N] [--seed S] ...
//   degpack audit  quasi|coquasi|diet|codiet|cover --graph FILE ...
//   degpack gen    SPEC --seed S --out FILE
//   degpack verify --host FILE --result FILE

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degpack/audit.hpp"
#include "degpack/edge_list.hpp"
#include "degpack/engine.hpp"
#include "degpack/experiment.hpp"
#include "degpack/generators.hpp"
#include "degpack/json_io.hpp"
#include "degpack/prepare.hpp"

namespace {

using nlohmann::json;
using namespace degpack;

constexpr int kExitFailure = 1;  // verify found violations
constexpr int kExitError = 2;    // config or IO error

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_checkpoints(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long value = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad checkpoint '" + item + "'");
    out.push_back(value);
  }
  return out;
}

struct PackOptions {
  std::string config_path;
  std::string host;
  std::string guests;
  std::string checkpoints;
  std::string out;
  std::string result_json;
  std::string colors_bin;
  std::string dump_host;
  bool include_colors = false;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::size_t> audit_l;
  std::optional<std::size_t> audit_samples;
  std::optional<std::size_t> degeneracy;
  bool continue_on_failure = false;
  bool timing = false;
  bool no_audits = false;
  bool auto_shrink = false;
};

int run_pack(const PackOptions& o) {
  ExperimentConfig config;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw std::runtime_error("cannot open " + o.config_path);
    config = ExperimentConfig::from_json(json::parse(in));
  }
  if (!o.host.empty()) config.host = o.host;
  if (!o.guests.empty()) {
    config.guests.clear();
    for (const auto& spec : parse_guest_specs(o.guests)) config.guests.push_back(spec.spec.text);
  }
  if (o.gamma) config.gamma = *o.gamma;
  if (o.delta) config.delta = *o.delta;
  if (o.trials) config.trials = *o.trials;
  if (o.seed) config.master_seed = *o.seed;
  if (o.workers) config.workers = *o.workers;
  if (o.degeneracy) config.degeneracy = *o.degeneracy;
  if (o.audit_l) {
    config.audit_policy.max_set_size = *o.audit_l;
    config.audit_policy.exhaustive_max_size =
        std::min(config.audit_policy.exhaustive_max_size, *o.audit_l);
  }
  if (o.audit_samples) config.audit_policy.samples_per_size = *o.audit_samples;
  if (!o.checkpoints.empty()) config.checkpoints = parse_checkpoints(o.checkpoints);
  if (o.continue_on_failure) config.continue_on_completion_failure = true;
  if (o.timing) config.record_timing = true;
  if (o.no_audits) config.audits = false;
  if (o.auto_shrink) config.auto_shrink_delta = true;
  if (!o.out.empty()) {
    config.csv_path = o.out + ".csv";
    config.summary_path = o.out + ".summary.json";
  }

  const std::vector<TrialRecord> records = run_experiment(config);
  std::ostringstream csv;
  write_csv(csv, config, records);
  write_text(config.csv_path, csv.str());
  const json summary = summarize(config, records);
  if (!config.summary_path.empty()) {
    write_text(config.summary_path, summary.dump(2) + "\n");
  } else {
    std::cerr << "success_rate " << summary["success_rate"] << " over " << records.size()
              << " trials\n";
  }

  // Full packing artifacts for a single trial.
  if (!o.result_json.empty() || !o.colors_bin.empty() || !o.dump_host.empty()) {
    const std::uint64_t seed = trial_seed(config.master_seed, 0);
    Rng host_rng = substream(seed, 1);
    const Graph hhat = HostSpec::parse(config.host).generate(host_rng);
    std::vector<Graph> raw;
    std::size_t D = config.degeneracy;
    for (std::size_t k = 0; k < config.guests.size(); ++k) {
      const GuestSpec spec = GuestSpec::parse(config.guests[k]);
      if (config.degeneracy == 0) D = std::max(D, spec.degeneracy_bound());
      Rng rng = substream(seed, 2 + k);
      for (Graph& g : spec.generate(rng)) raw.push_back(std::move(g));
    }
    const PreparedFamily family = prepare_guest_family(
        raw, hhat.num_vertices(), std::max<std::size_t>(D, 1),
        {config.delta, config.auto_shrink_delta});
    RunConfig run;
    run.gamma = config.gamma;
    run.delta = config.delta;
    run.rng_seed = mix_seed(seed, 0);
    run.continue_on_completion_failure = config.continue_on_completion_failure;
    const PackingResult result = packing_process(family.guests, hhat, run);
    if (!o.dump_host.empty()) write_edge_list(o.dump_host, hhat);
    if (!o.result_json.empty()) {
      const json doc = packing_result_to_json(result, family.guests,
                                              {o.include_colors, run.gamma, run.rng_seed});
      write_text(o.result_json, doc.dump() + "\n");
    }
    if (!o.colors_bin.empty()) write_colors_binary(o.colors_bin, result.colors);
  }
  return 0;
}

struct AuditOptions {
  std::string condition;
  std::string graph;
  std::string graph2;
  std::string exclude;
  std::string result;
  std::string out;
  std::size_t L = 2;
  std::optional<std::size_t> exhaustive;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::size_t guest_index = 1;
  std::size_t start = 0;
  double eps = 0.1;
};

int run_audit(const AuditOptions& o) {
  AuditPolicy policy;
  policy.max_set_size = o.L;
  policy.exhaustive_max_size = o.exhaustive.value_or(std::min<std::size_t>(2, o.L));
  policy.samples_per_size = o.samples;
  policy.rng_seed = o.seed;
  const Graph h = read_edge_list(std::filesystem::path(o.graph));
  VertexSet excluded;
  if (!o.exclude.empty()) excluded = read_vertex_set(o.exclude, h.num_vertices());
  auto second = [&o]() {
    if (o.graph2.empty()) throw std::invalid_argument(o.condition + " needs --graph2");
    return read_edge_list(std::filesystem::path(o.graph2));
  };
  json doc;
  if (o.condition == "quasi") {
    doc = to_json(quasirandomness_error(h, policy));
  } else if (o.condition == "coquasi") {
    doc = to_json(coquasirandomness_error(h, second(), policy));
  } else if (o.condition == "diet") {
    doc = to_json(diet_error(h, excluded, policy));
  } else if (o.condition == "codiet") {
    doc = to_json(codiet_error(h, second(), excluded, policy));
  } else if (o.condition == "cover") {
    if (o.result.empty()) throw std::invalid_argument("cover needs --result");
    std::ifstream in(o.result);
    if (!in) throw std::runtime_error("cannot open " + o.result);
    const LoadedPacking loaded = packing_result_from_json(json::parse(in), h);
    if (o.guest_index == 0 || o.guest_index > loaded.result.embeddings.size()) {
      throw std::invalid_argument("--guest out of range");
    }
    doc = to_json(cover_error(loaded.guests[o.guest_index - 1], h,
                              loaded.result.embeddings[o.guest_index - 1], o.start, o.eps));
  } else {
    throw std::invalid_argument("unknown audit condition '" + o.condition + "'");
  }
  write_text(o.out, doc.dump(2) + "\n");
  return 0;
}

int run_gen(const std::string& spec_text, std::uint64_t seed, const std::string& out) {
  Rng rng(seed);
  std::vector<Graph> graphs;
  const ParsedSpec parsed = parse_spec(spec_text);
  if (parsed.kind == "complete" || parsed.kind == "gnp") {
    graphs.push_back(HostSpec::parse(spec_text).generate(rng));
  } else {
    graphs = GuestSpec::parse(spec_text).generate(rng);
  }
  if (graphs.size() == 1 || out.empty() || out == "-") {
    for (const Graph& g : graphs) {
      std::ostringstream text;
      write_edge_list(text, g);
      write_text(out, text.str());
    }
    return 0;
  }
  const std::filesystem::path base(out);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::filesystem::path path = base.parent_path() /
        (base.stem().string() + "." + std::to_string(i) + base.extension().string());
    write_edge_list(path, graphs[i]);
  }
  return 0;
}

int run_verify(const std::string& host_path, const std::string& result_path,
               const std::string& colors_bin) {
  const Graph hhat = read_edge_list(std::filesystem::path(host_path));
  std::ifstream in(result_path);
  if (!in) throw std::runtime_error("cannot open " + result_path);
  const json doc = json::parse(in);
  LoadedPacking loaded;
  try {
    loaded = packing_result_from_json(doc, hhat);
  } catch (const std::runtime_error& e) {
    std::cout << json{{"ok", false}, {"violations", {e.what()}}}.dump(2) << "\n";
    return kExitFailure;
  }
  if (!colors_bin.empty()) loaded.result.colors = read_colors_binary(colors_bin);
  const Verdict verdict = verify_packing(loaded.guests, hhat, loaded.result);
  std::cout << json{{"ok", verdict.ok}, {"violations", verdict.violations}}.dump(2) << "\n";
  return verdict.ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized packing of degenerate graphs into dense hosts"};
  app.require_subcommand(1);

  PackOptions pack;
  auto* pack_cmd = app.add_subcommand("pack", "Run packing trials and write CSV + JSON summary");
  pack_cmd->add_option("--config", pack.config_path, "JSON config; flags override it");
  pack_cmd->add_option("--host", pack.host, "Host spec, e.g. gnp:n=300,p=0.55 or file:path=h.txt");
  pack_cmd->add_option("--guests", pack.guests, "Guest specs separated by ';'");
  pack_cmd->add_option("--gamma", pack.gamma, "Reservoir density");
  pack_cmd->add_option("--delta", pack.delta, "Tail fraction");
  pack_cmd->add_option("--trials", pack.trials);
  pack_cmd->add_option("--seed", pack.seed, "Master seed");
  pack_cmd->add_option("--workers", pack.workers);
  pack_cmd->add_option("--checkpoints", pack.checkpoints, "Comma-separated audit stages");
  pack_cmd->add_option("--audit-L", pack.audit_l, "Largest audited witness set");
  pack_cmd->add_option("--audit-samples", pack.audit_samples);
  pack_cmd->add_option("--degeneracy", pack.degeneracy, "Override the inferred degeneracy bound");
  pack_cmd->add_option("--out", pack.out, "Output prefix: PREFIX.csv and PREFIX.summary.json");
  pack_cmd->add_option("--result-json", pack.result_json, "Write trial 0's PackingResult");
  pack_cmd->add_flag("--colors", pack.include_colors, "Include colors in --result-json");
  pack_cmd->add_option("--colors-bin", pack.colors_bin, "Write trial 0's colors as uint32 LE");
  pack_cmd->add_option("--dump-host", pack.dump_host, "Write trial 0's host as an edge list");
  pack_cmd->add_flag("--continue-on-completion-failure", pack.continue_on_failure);
  pack_cmd->add_flag("--timing", pack.timing, "Fill the wall_ms column");
  pack_cmd->add_flag("--no-audits", pack.no_audits);
  pack_cmd->add_flag("--auto-shrink-delta", pack.auto_shrink);

  AuditOptions audit;
  auto* audit_cmd = app.add_subcommand("audit", "Measure one quasirandomness condition");
  audit_cmd->add_option("condition", audit.condition, "quasi|coquasi|diet|codiet|cover")->required();
  audit_cmd->add_option("--graph", audit.graph, "Edge-list file")->required();
  audit_cmd->add_option("--graph2", audit.graph2, "Second graph for co-conditions");
  audit_cmd->add_option("--exclude", audit.exclude, "File of excluded vertex ids");
  audit_cmd->add_option("--result", audit.result, "PackingResult JSON (cover)");
  audit_cmd->add_option("--guest", audit.guest_index, "1-based guest index (cover)");
  audit_cmd->add_option("--start", audit.start, "Window start position (cover)");
  audit_cmd->add_option("--eps", audit.eps, "Window fraction (cover)");
  audit_cmd->add_option("--L", audit.L, "Largest witness set");
  audit_cmd->add_option("--exhaustive", audit.exhaustive, "Largest exhaustively enumerated size");
  audit_cmd->add_option("--samples", audit.samples, "Samples per larger size");
  audit_cmd->add_option("--seed", audit.seed);
  audit_cmd->add_option("--out", audit.out, "Output file (default stdout)");

  std::string gen_spec;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen_cmd->add_option("spec", gen_spec, "e.g. tree:n=50, degen:D=2,maxdeg=8,n=200, gnp:n=10,p=1")
      ->required();
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  std::string verify_host;
  std::string verify_result;
  std::string verify_colors;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a PackingResult JSON");
  verify_cmd->add_option("--host", verify_host, "Host edge list")->required();
  verify_cmd->add_option("--result", verify_result, "PackingResult JSON")->required();
  verify_cmd->add_option("--colors-bin", verify_colors, "Binary colors overriding the JSON");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*pack_cmd) return run_pack(pack);
    if (*audit_cmd) return run_audit(audit);
    if (*gen_cmd) return run_gen(gen_spec, gen_seed, gen_out);
    if (*verify_cmd) return run_verify(verify_host, verify_result, verify_colors);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
