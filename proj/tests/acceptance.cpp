// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "degpack/audit.hpp"
#include "degpack/engine.hpp"
#include "degpack/experiment.hpp"
#include "degpack/generators.hpp"
#include "degpack/host_state.hpp"
#include "degpack/ordering.hpp"
#include "degpack/prepare.hpp"
#include "oracles.hpp"

using namespace degpack;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.num_vertices();
}

// ---------------------------------------------------------------------------
// 1 + 5: packing validity and the handshake identity over the test matrix.

struct MatrixCell {
  std::size_t n;
  std::string host;
  std::string guests;
};

std::vector<MatrixCell> matrix() {
  std::vector<MatrixCell> cells;
  for (std::size_t n : {100, 300}) {
    const std::size_t half = n / 2 + 1;
    const std::string h = std::to_string(half);
    const std::vector<std::string> mixes =
        n == 100 ? std::vector<std::string>{"tree:n=" + h + ",count=12",
                                            "degen:D=2,maxdeg=20,n=" + h +
                                                ",count=4;tree:n=" + h + ",count=8"}
                 : std::vector<std::string>{"tree:n=" + h + ",count=30",
                                            "degen:D=2,maxdeg=30,n=" + h +
                                                ",count=6;tree:n=" + h + ",count=20"};
    for (const std::string& host :
         {"complete:n=" + std::to_string(n), "gnp:n=" + std::to_string(n) + ",p=0.5"}) {
      for (const std::string& mix : mixes) cells.push_back({n, host, mix});
    }
  }
  return cells;
}

void criteria_1_and_5() {
  const auto start = Clock::now();
  std::size_t runs = 0;
  std::size_t successes = 0;
  std::size_t invalid = 0;
  std::size_t guests_checked = 0;
  std::size_t handshake_violations = 0;
  std::string first_problem;
  for (const MatrixCell& cell : matrix()) {
    const auto specs = parse_guest_specs(cell.guests);
    std::size_t D = 1;
    for (const auto& s : specs) D = std::max(D, s.degeneracy_bound());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const std::uint64_t trial = trial_seed(2024, seed);
      Rng host_rng = substream(trial, 1);
      const Graph hhat = HostSpec::parse(cell.host).generate(host_rng);
      std::vector<Graph> raw;
      for (std::size_t k = 0; k < specs.size(); ++k) {
        Rng rng = substream(trial, 2 + k);
        for (Graph& g : specs[k].generate(rng)) raw.push_back(std::move(g));
      }
      const PreparedFamily family = prepare_guest_family(raw, cell.n, D, {0.04, false});
      std::size_t guest_edges = 0;
      for (const PreparedGuest& g : family.guests) {
        ++guests_checked;
        guest_edges += g.num_edges();
        const auto& cd = g.completion_degrees();
        const std::size_t sum = std::accumulate(cd.begin(), cd.end(), std::size_t{0});
        if (sum != g.tail_len() * g.tail_degree()) ++handshake_violations;
      }

      RunConfig config;
      config.gamma = 0.25;
      config.delta = 0.04;
      config.rng_seed = mix_seed(trial, 0);
      const PackingResult result = packing_process(family.guests, hhat, config);
      ++runs;
      if (!result.success) continue;
      ++successes;
      const Verdict verdict = verify_packing(family.guests, hhat, result);
      const bool accounting = result.uncovered == hhat.num_edges() - guest_edges;
      if (!verdict.ok || !accounting) {
        ++invalid;
        if (first_problem.empty()) {
          first_problem = cell.host + " / " + cell.guests + " seed " + std::to_string(seed) +
                          ": " + (verdict.ok ? "uncovered count mismatch" : verdict.violations[0]);
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream one;
  one << successes << "/" << runs << " runs succeeded, " << invalid
      << " failed verification or accounting, " << elapsed << " s";
  if (!first_problem.empty()) one << "; first: " << first_problem;
  report(1, invalid == 0 && successes > 0 && elapsed < 300.0, one.str());

  std::ostringstream five;
  five << guests_checked << " prepared guests, " << handshake_violations << " violations";
  report(5, handshake_violations == 0 && guests_checked > 0, five.str());
}

// ---------------------------------------------------------------------------
// 2: completion vs exhaustive SDR search.

void criterion_2() {
  const auto start = Clock::now();
  Rng rng(0x5d12);
  std::size_t agree = 0;
  std::size_t failures_seen = 0;
  std::size_t bad_witness = 0;
  const std::size_t instances = 500;
  for (std::size_t trial = 0; trial < instances; ++trial) {
    const std::size_t tail = 1 + uniform_index(rng, 12);
    const std::size_t n = tail + 4 + uniform_index(rng, 20);
    const std::size_t start_pos = n - tail;
    const std::size_t degree = 1 + uniform_index(rng, std::min<std::size_t>(3, start_pos));
    std::vector<Edge> edges;
    for (std::size_t x = start_pos; x < n; ++x) {
      std::vector<Vertex> picks;
      while (picks.size() < degree) {
        const auto y = static_cast<Vertex>(uniform_index(rng, start_pos));
        if (std::find(picks.begin(), picks.end(), y) == picks.end()) picks.push_back(y);
      }
      for (Vertex y : picks) edges.push_back({y, static_cast<Vertex>(x)});
    }
    // A few bulk edges among non-tail positions, which completion ignores.
    for (std::size_t k = 0; k + 1 < start_pos && k < 5; ++k) {
      edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>(k + 1)});
    }
    const PreparedGuest guest =
        PreparedGuest::from_positional(Graph::from_edges(n, edges), tail);
    const double p = 0.3 + 0.6 * uniform_unit(rng);
    const HostGraph reservoir(gnp(n, p, rng));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Embedding phi(n, n);
    for (std::size_t t = 0; t < start_pos; ++t) phi.assign(t, perm[t]);

    std::vector<Vertex> unused;
    for (Vertex v = 0; v < n; ++v) {
      if (!phi.image().test(v)) unused.push_back(v);
    }
    std::vector<std::vector<std::size_t>> cand(tail);
    for (std::size_t j = 0; j < tail; ++j) {
      for (std::size_t r = 0; r < unused.size(); ++r) {
        bool ok = true;
        for (Vertex y : guest.graph().neighbors(static_cast<Vertex>(start_pos + j))) {
          ok = ok && reservoir.has_edge(phi.at(y), unused[r]);
        }
        if (ok) cand[j].push_back(r);
      }
    }
    const bool exists = oracle::sdr_exists(cand, unused.size());
    const CompletionOutcome out = complete_embedding(guest, reservoir, phi);
    if (out.ok() == exists) ++agree;
    if (!out.ok()) {
      ++failures_seen;
      std::vector<std::size_t> cover;
      for (std::size_t x : out.failure->hall_set) {
        const auto& c = cand[x - start_pos];
        cover.insert(cover.end(), c.begin(), c.end());
      }
      std::sort(cover.begin(), cover.end());
      cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
      if (out.failure->hall_set.empty() || cover.size() >= out.failure->hall_set.size()) {
        ++bad_witness;
      }
    } else {
      for (const Edge& e : guest.graph().edges()) {
        if (guest.in_tail(e.v) && !reservoir.has_edge(out.embedding.at(e.u), out.embedding.at(e.v))) {
          ++bad_witness;
          break;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream msg;
  msg << agree << "/" << instances << " agree with exhaustive search (" << failures_seen
      << " Hall failures, " << bad_witness << " invalid witnesses/completions), " << elapsed
      << " s";
  report(2, agree == instances && bad_witness == 0 && failures_seen > 0 &&
                failures_seen < instances && elapsed < 60.0,
         msg.str());
}

// ---------------------------------------------------------------------------
// 3: peeling degeneracy vs minimum over all orderings.

void criterion_3() {
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  // Every connected labeled graph on up to 6 vertices.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      }
      const Graph g = Graph::from_edges(n, edges);
      if (!connected(g)) continue;
      ++checked;
      if (degeneracy_order(g).degeneracy() != oracle::degeneracy_by_permutations(g)) ++mismatches;
    }
  }
  // 1000 random connected graphs on 7 vertices.
  Rng rng(7);
  std::size_t sampled = 0;
  while (sampled < 1000) {
    const Graph g = gnp(7, 0.2 + 0.7 * uniform_unit(rng), rng);
    if (!connected(g)) continue;
    ++sampled;
    ++checked;
    if (degeneracy_order(g).degeneracy() != oracle::degeneracy_by_permutations(g)) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream msg;
  msg << checked << " connected graphs (all with n <= 6, 1000 sampled with n = 7), "
      << mismatches << " mismatches, " << elapsed << " s";
  report(3, mismatches == 0 && elapsed < 120.0, msg.str());
}

// ---------------------------------------------------------------------------
// 4: equal-degree independent set size guarantee.

void criterion_4() {
  Rng rng(44);
  std::size_t violations = 0;
  double worst_ratio = 1e300;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t D = 1 + i % 3;
    const std::size_t n = (i / 3) % 2 == 0 ? 50 : 200;
    const std::size_t maxdeg = D + uniform_index(rng, n);
    const Graph arrival = random_degenerate(n, D, maxdeg, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = relabel(arrival, perm);
    const EqualDegreeSet set = equal_degree_independent_set(g, D);
    bool ok = set.degree <= 2 * D;
    for (Vertex v : set.vertices) {
      ok = ok && g.degree(v) == set.degree;
      for (Vertex w : set.vertices) ok = ok && !g.has_edge(v, w);
    }
    const double bound = static_cast<double>(n) / std::pow(2.0 * D + 1.0, 3);
    ok = ok && static_cast<double>(set.vertices.size()) >= bound;
    worst_ratio = std::min(worst_ratio, static_cast<double>(set.vertices.size()) / bound);
    if (!ok) ++violations;
  }
  std::ostringstream msg;
  msg << "200 graphs, " << violations << " violations, smallest |I| / bound = " << worst_ratio;
  report(4, violations == 0, msg.str());
}

// ---------------------------------------------------------------------------
// 6: audit consistency.

void criterion_6() {
  std::size_t problems = 0;
  Rng rng(66);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph h = gnp(120, 0.3 + 0.1 * trial, rng);
    const AuditPolicy policy{4, 2, 100, static_cast<std::uint64_t>(trial)};
    const AuditEntry q = quasirandomness_error(h, policy);
    const AuditEntry d = diet_error(h, {}, policy);
    if (q.deviation != d.deviation || q.witness != d.witness || q.sets_tested != d.sets_tested) {
      ++problems;
    }
    std::vector<Vertex> x;
    for (Vertex v = 0; v < 120; v += 7 + trial) x.push_back(v);
    const AuditEntry diet = diet_error(h, x, policy);
    const AuditEntry codiet_same = codiet_error(h, h, x, policy);
    if (codiet_same.deviation != diet.deviation) ++problems;
    // Against a different second graph, the R = S term is the diet term, so
    // the codiet maximum dominates it.
    const Graph other = gnp(120, 0.5, rng);
    if (codiet_error(h, other, x, policy).deviation < diet.deviation) ++problems;
  }
  std::size_t exact = 0;
  std::size_t cases = 0;
  for (std::size_t n : {10, 20, 50}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      ++cases;
      const AuditEntry e = quasirandomness_error(complete_graph(n), {k, k, 1, 0});
      if (e.deviation == static_cast<double>(k) / static_cast<double>(n)) ++exact;
    }
  }
  std::ostringstream msg;
  msg << problems << " diet/codiet inconsistencies, K_n deviation exact in " << exact << "/"
      << cases << " cases";
  report(6, problems == 0 && exact == cases, msg.str());
}

// ---------------------------------------------------------------------------
// 7: reservoir split on K_1000.

void criterion_7() {
  const Graph k = complete_graph(1000);
  const double pairs = 1000.0 * 999.0 / 2.0;
  std::size_t within = 0;
  std::size_t reproducible = 0;
  double lo = 1.0;
  double hi = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a = substream(seed, 0);
    const HostState first = split_bulk_reservoir(k, 0.25, a);
    const double fraction = static_cast<double>(first.reservoir.num_edges()) / pairs;
    lo = std::min(lo, fraction);
    hi = std::max(hi, fraction);
    if (std::fabs(fraction - 0.25) <= 0.01) ++within;
    Rng b = substream(seed, 0);
    const HostState second = split_bulk_reservoir(k, 0.25, b);
    if (second.in_reservoir == first.in_reservoir) ++reproducible;
  }
  std::ostringstream msg;
  msg << within << "/50 seeds within 0.25 +- 0.01 (range " << lo << " .. " << hi << "), "
      << reproducible << "/50 reproducible";
  report(7, within >= 48 && reproducible == 50, msg.str());
}

// ---------------------------------------------------------------------------
// 8 + 9: desk-scale success experiment and CSV determinism.

ExperimentConfig success_experiment() {
  ExperimentConfig c;
  c.host = "gnp:n=300,p=0.55";
  // The 2-degenerate guests go first: late in the run the bulk is sparse and
  // a left-degree-2 vertex has roughly (free vertices) * p^2 candidates.
  c.guests = {"degen:D=2,maxdeg=30,n=151,count=10", "tree:n=151,count=40"};
  c.gamma = 0.25;
  c.delta = 0.04;
  c.trials = 100;
  c.master_seed = 1;
  c.audits = true;
  c.audit_policy = {2, 2, 1, 0};
  return c;
}

double median(std::vector<double> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](double x) { return std::isnan(x); }), v.end());
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

void criteria_8_and_9() {
  const ExperimentConfig config = success_experiment();
  const auto start = Clock::now();
  const auto records = run_experiment(config);
  const double elapsed = seconds_since(start);

  std::size_t successes = 0;
  std::size_t invalid = 0;
  std::size_t budget_violations = 0;
  for (const TrialRecord& r : records) {
    if (r.outcome == "success") ++successes;
    if (r.outcome == "invalid") ++invalid;
    const double budget = (0.55 - 0.25) * 300.0 * 299.0 / 2.0;
    if (static_cast<double>(r.guest_edges) > budget) ++budget_violations;
  }
  std::vector<double> trajectory;
  std::vector<std::size_t> stages;
  for (std::size_t c = 0; c < config.checkpoint_count(); ++c) {
    std::vector<double> column;
    for (const TrialRecord& r : records) {
      if (r.outcome == "success") column.push_back(r.audit_bulk[c]);
    }
    trajectory.push_back(median(column));
    stages.push_back(records.front().checkpoint_stages[c]);
  }
  bool upward = trajectory.back() > trajectory.front();
  for (std::size_t c = 1; c < trajectory.size(); ++c) {
    upward = upward && trajectory[c] >= trajectory[c - 1];
  }
  std::ostringstream msg;
  msg << successes << "/100 successes, " << invalid << " invalid, " << budget_violations
      << " over the edge budget, median bulk deviation by stage:";
  for (std::size_t c = 0; c < trajectory.size(); ++c) {
    msg << " s=" << stages[c] << ":" << trajectory[c];
  }
  msg << (upward ? " (non-decreasing)" : " (NOT trending upward)") << ", " << elapsed << " s";
  report(8, successes >= 95 && invalid == 0 && budget_violations == 0 && upward &&
                elapsed < 600.0,
         msg.str());

  std::ostringstream first;
  write_csv(first, config, records);
  std::ostringstream second;
  write_csv(second, config, run_experiment(config));
  const bool same = first.str() == second.str();
  report(9, same,
         same ? "two runs produced byte-identical CSV (" + std::to_string(first.str().size()) +
                    " bytes)"
              : "CSV output differs between runs");
}

}  // namespace

int main() {
  criteria_1_and_5();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_6();
  criterion_7();
  criteria_8_and_9();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
