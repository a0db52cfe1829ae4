#include "degpack/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "degpack/matching.hpp"

namespace degpack {

namespace {

Vertex select_set_bit(const Bitset& bits, std::uint64_t rank) {
  auto v = bits.find_first();
  for (std::uint64_t i = 0; i < rank; ++i) v = bits.find_next(v);
  return static_cast<Vertex>(v);
}

void require_same_size(const PreparedGuest& guest, std::size_t host_size) {
  if (guest.size() != host_size) {
    throw PreconditionError("guest has " + std::to_string(guest.size()) +
                            " vertices but the host has " + std::to_string(host_size));
  }
}

std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + ")";
}

}  // namespace

std::string to_string(Phase phase) {
  return phase == Phase::kEmbedding ? "embedding" : "completion";
}

Bitset candidate_set(const PreparedGuest& guest, const HostGraph& host, const Embedding& psi,
                     std::size_t t) {
  Bitset cand(host.num_vertices());
  cand.set();
  for (Vertex y : guest.left_neighbors(t)) {
    if (!psi.assigned(y)) {
      throw PreconditionError("left-neighbor " + std::to_string(y) + " of position " +
                              std::to_string(t) + " is not embedded");
    }
    cand &= host.row(psi.at(y));
  }
  return cand;
}

EmbedOutcome random_embedding(const PreparedGuest& guest, const HostGraph& host, Rng& rng) {
  require_same_size(guest, host.num_vertices());
  EmbedOutcome out{Embedding(guest.size(), host.num_vertices()), std::nullopt};
  Embedding& psi = out.embedding;
  Bitset cand(host.num_vertices());
  for (std::size_t t = 0; t < guest.tail_start(); ++t) {
    cand.set();
    for (Vertex y : guest.left_neighbors(t)) cand &= host.row(psi.at(y));
    cand -= psi.image();
    const std::size_t available = cand.count();
    if (available == 0) {
      out.failure = EmbedFailure{t, psi.size()};
      return out;
    }
    psi.assign(t, select_set_bit(cand, uniform_index(rng, available)));
  }
  return out;
}

Bitset completion_candidates(const PreparedGuest& guest, const HostGraph& reservoir,
                             const Embedding& phi, std::size_t x) {
  Bitset cand(reservoir.num_vertices());
  cand.set();
  for (Vertex y : guest.graph().neighbors(static_cast<Vertex>(x))) {
    if (!phi.assigned(y)) {
      throw PreconditionError("neighbor " + std::to_string(y) + " of tail position " +
                              std::to_string(x) + " is not embedded");
    }
    cand &= reservoir.row(phi.at(y));
  }
  cand -= phi.image();
  return cand;
}

CompletionOutcome complete_embedding(const PreparedGuest& guest, const HostGraph& reservoir,
                                     Embedding phi) {
  require_same_size(guest, reservoir.num_vertices());
  const std::size_t start = guest.tail_start();
  if (phi.size() != start) {
    throw PreconditionError("completion expects exactly the non-tail positions embedded");
  }
  for (std::size_t t = 0; t < start; ++t) {
    if (!phi.assigned(t)) {
      throw PreconditionError("non-tail position " + std::to_string(t) + " is not embedded");
    }
  }
  const std::size_t n = reservoir.num_vertices();
  std::vector<Vertex> unused;
  std::vector<std::size_t> slot(n, kUnmatched);
  for (Vertex v = 0; v < n; ++v) {
    if (!phi.image().test(v)) {
      slot[v] = unused.size();
      unused.push_back(v);
    }
  }

  std::vector<std::vector<std::size_t>> adjacency(guest.tail_len());
  std::vector<Bitset> candidates;
  candidates.reserve(guest.tail_len());
  for (std::size_t j = 0; j < guest.tail_len(); ++j) {
    candidates.push_back(completion_candidates(guest, reservoir, phi, start + j));
    const Bitset& cand = candidates.back();
    for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
      adjacency[j].push_back(slot[v]);
    }
  }

  const BipartiteMatching matching = maximum_matching(adjacency, unused.size());
  CompletionOutcome out{std::move(phi), std::nullopt};
  if (matching.size == guest.tail_len()) {
    for (std::size_t j = 0; j < guest.tail_len(); ++j) {
      out.embedding.assign(start + j, unused[matching.left_match[j]]);
    }
    return out;
  }
  CompletionFailure failure;
  failure.matched = matching.size;
  Bitset cover(n);
  for (std::size_t j : hall_violator(adjacency, matching)) {
    failure.hall_set.push_back(start + j);
    cover |= candidates[j];
  }
  failure.hall_neighborhood = to_vertex_set(cover);
  out.failure = std::move(failure);
  return out;
}

void RunConfig::validate() const {
  std::vector<std::string> problems;
  if (!(gamma > 0.0 && gamma < 1.0)) problems.push_back("gamma must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) problems.push_back("delta must lie in (0, 1)");
  try {
    audit_policy.validate();
  } catch (const std::invalid_argument& e) {
    problems.emplace_back(e.what());
  }
  if (problems.empty()) return;
  std::string message = "invalid run config:";
  for (const auto& p : problems) message += " " + p + ";";
  throw std::invalid_argument(message);
}

namespace {

CheckpointAudit audit_state(const HostState& state, std::size_t stage,
                            const AuditPolicy& policy) {
  CheckpointAudit audit;
  audit.stage = stage;
  const Graph bulk = state.bulk.snapshot();
  const Graph reservoir = state.reservoir.snapshot();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    audit.bulk = quasirandomness_error(bulk, policy);
  } catch (const DegenerateDensityError&) {
    audit.bulk.condition = "quasirandom";
    audit.bulk.deviation = nan;
  }
  try {
    audit.bulk_reservoir = coquasirandomness_error(bulk, reservoir, policy);
  } catch (const DegenerateDensityError&) {
    audit.bulk_reservoir.condition = "coquasirandom";
    audit.bulk_reservoir.deviation = nan;
  }
  return audit;
}

}  // namespace

PackingResult packing_process(std::span<const PreparedGuest> guests, const Graph& hhat,
                              const RunConfig& config) {
  config.validate();
  const std::size_t n = hhat.num_vertices();
  for (std::size_t s = 0; s < guests.size(); ++s) {
    if (guests[s].size() != n) {
      throw std::invalid_argument("guest " + std::to_string(s + 1) + " has " +
                                  std::to_string(guests[s].size()) +
                                  " vertices, host has " + std::to_string(n));
    }
  }

  PackingResult result;
  result.host_vertices = n;
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  std::size_t guest_edges = 0;
  for (const auto& g : guests) guest_edges += g.num_edges();
  const double budget = static_cast<double>(hhat.num_edges()) - config.gamma * pairs;
  if (static_cast<double>(guest_edges) > budget) {
    result.warnings.push_back("guest edges " + std::to_string(guest_edges) +
                              " exceed e(H) - gamma*C(n,2) = " + std::to_string(budget));
  }
  if (guests.size() > 2 * n) {
    result.warnings.push_back("more than 2n guests");
  }
  const std::size_t expected_tail = tail_length(config.delta, n);
  for (std::size_t s = 0; s < guests.size(); ++s) {
    if (guests[s].tail_len() != expected_tail) {
      result.warnings.push_back("guest " + std::to_string(s + 1) + " has tail length " +
                                std::to_string(guests[s].tail_len()) +
                                ", floor(delta*n) = " + std::to_string(expected_tail));
      break;
    }
  }

  auto wants_audit = [&config](std::size_t stage) {
    return std::find(config.audit_checkpoints.begin(), config.audit_checkpoints.end(),
                     stage) != config.audit_checkpoints.end();
  };

  Rng split_rng = substream(config.rng_seed, 0);
  HostState state = split_bulk_reservoir(hhat, config.gamma, split_rng);
  result.in_reservoir = state.in_reservoir;
  result.colors.assign(hhat.num_edges(), 0);
  if (wants_audit(0)) result.audits.push_back(audit_state(state, 0, config.audit_policy));

  auto color_edge = [&](Vertex a, Vertex b, std::size_t stage) {
    result.colors[hhat.edge_index(a, b)] = static_cast<std::uint32_t>(stage);
  };

  for (std::size_t s = 1; s <= guests.size(); ++s) {
    const PreparedGuest& guest = guests[s - 1];
    state.stage = s;
    Rng rng = substream(config.rng_seed, s);
    EmbedOutcome embedded = random_embedding(guest, state.bulk, rng);
    if (!embedded.ok()) {
      FailureRecord record;
      record.stage = s;
      record.phase = Phase::kEmbedding;
      record.position = embedded.failure->position;
      record.image_size = embedded.failure->image_size;
      result.failure = record;
      result.embeddings.push_back(std::move(embedded.embedding));
      break;
    }
    const Embedding& phi = embedded.embedding;
    for (const Edge& e : guest.graph().edges()) {
      if (guest.in_tail(e.v)) continue;
      state.bulk.remove_edge(phi.at(e.u), phi.at(e.v));
      color_edge(phi.at(e.u), phi.at(e.v), s);
    }

    StageStats stats;
    stats.stage = s;
    CompletionOutcome completed = complete_embedding(guest, state.reservoir,
                                                     std::move(embedded.embedding));
    if (completed.ok()) {
      const Embedding& full = completed.embedding;
      for (const Edge& e : guest.graph().edges()) {
        if (!guest.in_tail(e.v)) continue;
        state.reservoir.remove_edge(full.at(e.u), full.at(e.v));
        color_edge(full.at(e.u), full.at(e.v), s);
      }
      stats.completed = true;
    } else {
      FailureRecord record;
      record.stage = s;
      record.phase = Phase::kCompletion;
      record.hall_set = completed.failure->hall_set;
      record.hall_neighborhood = completed.failure->hall_neighborhood;
      record.image_size = completed.embedding.size();
      if (!config.continue_on_completion_failure) {
        result.failure = std::move(record);
        result.embeddings.push_back(std::move(completed.embedding));
        break;
      }
      result.skipped_completions.push_back(std::move(record));
    }
    result.embeddings.push_back(std::move(completed.embedding));
    stats.bulk_edges = state.bulk.num_edges();
    stats.reservoir_edges = state.reservoir.num_edges();
    stats.max_reservoir_drain = state.max_reservoir_drain();
    result.stages.push_back(stats);
    if (wants_audit(s)) result.audits.push_back(audit_state(state, s, config.audit_policy));
  }

  result.success = !result.failure && result.skipped_completions.empty() &&
                   result.embeddings.size() == guests.size();
  result.uncovered = static_cast<std::size_t>(
      std::count(result.colors.begin(), result.colors.end(), 0U));
  return result;
}

Verdict verify_packing(std::span<const PreparedGuest> guests, const Graph& hhat,
                       const PackingResult& result) {
  Verdict verdict;
  auto fail = [&verdict](std::string message) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(message));
  };
  if (!result.success) fail("result does not report success");
  const std::size_t n = hhat.num_vertices();
  const std::size_t m = hhat.num_edges();
  if (result.embeddings.size() != guests.size()) {
    fail("expected " + std::to_string(guests.size()) + " embeddings, found " +
         std::to_string(result.embeddings.size()));
    return verdict;
  }
  if (result.colors.size() != m || result.in_reservoir.size() != m) {
    fail("color or reservoir array does not match the host edge count");
    return verdict;
  }

  std::vector<std::uint32_t> claimed(m, 0);
  std::size_t guest_edges = 0;
  for (std::size_t s = 1; s <= guests.size(); ++s) {
    const PreparedGuest& guest = guests[s - 1];
    const auto forward = result.embeddings[s - 1].forward();
    const std::string tag = "guest " + std::to_string(s) + ": ";
    if (forward.size() != guest.size()) {
      fail(tag + "embedding covers " + std::to_string(forward.size()) + " positions, guest has " +
           std::to_string(guest.size()));
      continue;
    }
    std::vector<bool> used(n, false);
    bool mapped = true;
    for (std::size_t t = 0; t < forward.size(); ++t) {
      const Vertex v = forward[t];
      if (v == kNoVertex || v >= n) {
        fail(tag + "position " + std::to_string(t) + " is not mapped to a host vertex");
        mapped = false;
      } else if (used[v]) {
        fail(tag + "not injective, host vertex " + std::to_string(v) + " used twice");
        mapped = false;
      } else {
        used[v] = true;
      }
    }
    if (!mapped) continue;
    guest_edges += guest.num_edges();
    for (const Edge& e : guest.graph().edges()) {
      const Vertex a = forward[e.u];
      const Vertex b = forward[e.v];
      const std::size_t idx = hhat.edge_index(a, b);
      if (idx == m) {
        fail(tag + "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
             ") maps to non-edge " + edge_name(a, b));
        continue;
      }
      if (claimed[idx] != 0) {
        fail("color overlap at host edge " + edge_name(a, b) + ": guests " +
             std::to_string(claimed[idx]) + " and " + std::to_string(s));
        continue;
      }
      claimed[idx] = static_cast<std::uint32_t>(s);
      if (result.colors[idx] != s) {
        fail(tag + "host edge " + edge_name(a, b) + " has color " +
             std::to_string(result.colors[idx]));
      }
      const bool tail_edge = guest.in_tail(e.u) || guest.in_tail(e.v);
      if (tail_edge && !result.in_reservoir[idx]) {
        fail(tag + "tail edge mapped to bulk edge " + edge_name(a, b));
      } else if (!tail_edge && result.in_reservoir[idx]) {
        fail(tag + "non-tail edge mapped to reservoir edge " + edge_name(a, b));
      }
    }
  }
  std::size_t uncovered = 0;
  for (std::size_t idx = 0; idx < m; ++idx) {
    if (result.colors[idx] == 0) {
      ++uncovered;
    } else if (claimed[idx] != result.colors[idx]) {
      const Edge& e = hhat.edges()[idx];
      fail("host edge " + edge_name(e.u, e.v) + " has color " +
           std::to_string(result.colors[idx]) + " but is not the image of that guest's edge");
    }
  }
  if (uncovered != m - std::min(m, guest_edges)) {
    fail("uncovered count " + std::to_string(uncovered) + " differs from e(H) - sum e(G) = " +
         std::to_string(m - std::min(m, guest_edges)));
  }
  if (result.uncovered != uncovered) {
    fail("reported uncovered count " + std::to_string(result.uncovered) +
         " differs from recount " + std::to_string(uncovered));
  }
  return verdict;
}

}  // namespace degpack
