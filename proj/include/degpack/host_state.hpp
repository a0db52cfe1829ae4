#pragma once

#include <cstddef>
#include <vector>

#include "degpack/graph.hpp"
#include "degpack/rng.hpp"

namespace degpack {

/// Dense adjacency matrix that only ever loses edges.
class HostGraph {
 public:
  HostGraph() = default;
  explicit HostGraph(std::size_t n);
  explicit HostGraph(const Graph& g);

  std::size_t num_vertices() const noexcept { return rows_.size(); }
  std::size_t num_edges() const noexcept { return edges_; }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  void add_edge(Vertex u, Vertex v);
  /// Throws PreconditionError if the edge is absent.
  void remove_edge(Vertex u, Vertex v);

  /// Immutable copy of the current edge set.
  Graph snapshot() const;

 private:
  std::vector<Bitset> rows_;
  std::vector<std::size_t> degree_;
  std::size_t edges_ = 0;
};

/// Bulk and reservoir of a packing run. The two edge sets stay disjoint.
struct HostState {
  HostGraph bulk;
  HostGraph reservoir;
  std::size_t stage = 0;
  /// Edge-index mask over the input host: true for edges placed in the
  /// initial reservoir.
  std::vector<bool> in_reservoir;
  /// Reservoir degrees right after the split.
  std::vector<std::size_t> initial_reservoir_degree;

  /// max over v of initial reservoir degree minus current reservoir degree.
  std::size_t max_reservoir_drain() const;
};

/// Puts each edge of hhat into the reservoir independently with probability
/// q = gamma * C(n,2) / e(hhat), otherwise into the bulk. Edges are visited in
/// lexicographic order with one bernoulli draw each. Throws
/// std::invalid_argument if gamma < 0 or q > 1.
HostState split_bulk_reservoir(const Graph& hhat, double gamma, Rng& rng);

}  // namespace degpack
