#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degpack/audit.hpp"
#include "degpack/embedding.hpp"
#include "degpack/graph.hpp"
#include "degpack/host_state.hpp"
#include "degpack/prepare.hpp"
#include "degpack/rng.hpp"

namespace degpack {

/// Raw candidate set of position t: common host-neighborhood of the images of
/// t's left-neighbors, used vertices included. Throws PreconditionError if a
/// left-neighbor is unembedded.
Bitset candidate_set(const PreparedGuest& guest, const HostGraph& host, const Embedding& psi,
                     std::size_t t);

struct EmbedFailure {
  std::size_t position = 0;    // position with no free candidate
  std::size_t image_size = 0;  // vertices used before that step
};

struct EmbedOutcome {
  Embedding embedding;  // partial on failure
  std::optional<EmbedFailure> failure;
  bool ok() const noexcept { return !failure; }
};

/// Embeds positions [0, tail_start) in order, each onto a uniformly random
/// unused vertex of its candidate set, and stops at the first empty choice.
/// One uniform_index draw per embedded position.
EmbedOutcome random_embedding(const PreparedGuest& guest, const HostGraph& host, Rng& rng);

/// Unused host vertices adjacent in the reservoir to the images of all
/// guest-neighbors of tail position x.
Bitset completion_candidates(const PreparedGuest& guest, const HostGraph& reservoir,
                             const Embedding& phi, std::size_t x);

struct CompletionFailure {
  /// Tail positions whose candidate sets jointly cover fewer host vertices
  /// than their number.
  std::vector<std::size_t> hall_set;
  VertexSet hall_neighborhood;  // union of their candidate sets
  std::size_t matched = 0;      // size of the maximum matching found
};

struct CompletionOutcome {
  Embedding embedding;  // unchanged input on failure
  std::optional<CompletionFailure> failure;
  bool ok() const noexcept { return !failure; }
};

/// Maps the tail bijectively onto the unused host vertices through a maximum
/// matching between tail positions and their completion candidates.
CompletionOutcome complete_embedding(const PreparedGuest& guest, const HostGraph& reservoir,
                                     Embedding phi);

struct RunConfig {
  double gamma = 0.25;
  double delta = 0.04;
  std::uint64_t rng_seed = 0;
  /// Stages (0 = right after the split) after which the host is audited.
  std::vector<std::size_t> audit_checkpoints;
  AuditPolicy audit_policy;
  bool continue_on_completion_failure = false;

  /// Throws std::invalid_argument listing every violated field.
  void validate() const;
};

enum class Phase { kEmbedding, kCompletion };

struct FailureRecord {
  std::size_t stage = 0;  // 1-based guest index
  Phase phase = Phase::kEmbedding;
  std::size_t position = 0;     // failing position for embedding failures
  std::size_t image_size = 0;
  std::vector<std::size_t> hall_set;  // tail positions for completion failures
  VertexSet hall_neighborhood;
};

struct CheckpointAudit {
  std::size_t stage = 0;
  AuditEntry bulk;               // quasirandomness of H_s
  AuditEntry bulk_reservoir;     // coquasirandomness of (H_s, H*_s)
};

struct StageStats {
  std::size_t stage = 0;
  std::size_t bulk_edges = 0;       // e(H_s) after the stage
  std::size_t reservoir_edges = 0;  // e(H*_s) after the stage
  std::size_t max_reservoir_drain = 0;
  bool completed = false;
};

struct PackingResult {
  bool success = false;
  std::size_t host_vertices = 0;
  std::vector<Embedding> embeddings;  // one per guest, partial if it failed
  /// Color of each edge of the input host in edges() order; 0 = uncovered,
  /// s = guest s (1-based).
  std::vector<std::uint32_t> colors;
  std::vector<bool> in_reservoir;
  std::optional<FailureRecord> failure;
  /// Completion failures skipped in continue mode.
  std::vector<FailureRecord> skipped_completions;
  std::vector<CheckpointAudit> audits;
  std::vector<StageStats> stages;
  std::vector<std::string> warnings;
  std::size_t uncovered = 0;
};

/// Splits the host, then embeds guest s into the bulk and completes it into
/// the reservoir, for s = 1..s*. Stage s draws from substream(seed, s); the
/// split uses substream(seed, 0).
PackingResult packing_process(std::span<const PreparedGuest> guests, const Graph& hhat,
                              const RunConfig& config);

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Recomputes every packing claim from the embedding maps and colors alone.
Verdict verify_packing(std::span<const PreparedGuest> guests, const Graph& hhat,
                       const PackingResult& result);

std::string to_string(Phase phase);

}  // namespace degpack
