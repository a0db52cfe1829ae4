#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degpack/graph.hpp"

namespace degpack {

/// A graph together with a vertex ordering. Positions are 0-based; the
/// left-neighborhood of position t holds the positions of t's neighbors that
/// come before it.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  /// order[t] is the vertex placed at position t; must be a permutation.
  OrderedGraph(Graph graph, std::vector<Vertex> order);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return order_.size(); }
  Vertex vertex_at(std::size_t t) const { return order_[t]; }
  std::size_t position_of(Vertex v) const { return position_[v]; }
  const std::vector<Vertex>& order() const noexcept { return order_; }

  std::span<const Vertex> left_neighbors(std::size_t t) const {
    return {left_[t].data(), left_[t].size()};
  }
  std::size_t left_degree(std::size_t t) const { return left_[t].size(); }
  /// Max left-degree over all positions.
  std::size_t degeneracy() const noexcept { return degeneracy_; }

  /// The graph relabeled so that vertex ids equal positions.
  Graph positional_graph() const;

 private:
  Graph graph_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<VertexSet> left_;
  std::size_t degeneracy_ = 0;
};

/// Minimum-degree peeling (ties to the smallest id), reversed. The reported
/// degeneracy is exact.
OrderedGraph degeneracy_order(const Graph& g);

struct EqualDegreeSet {
  std::size_t degree = 0;
  VertexSet vertices;
};

/// Independent set of vertices sharing one degree d <= 2D. Picks the most
/// frequent degree among 0..2D (smallest d on ties), then extracts a maximal
/// independent subset greedily by increasing vertex id. Guarantees
/// |I| >= n / (2D+1)^3. Throws GraphError if g is not D-degenerate.
EqualDegreeSet equal_degree_independent_set(const Graph& g, std::size_t D);

/// Sum of squared degrees.
std::uint64_t sum_sq_degrees(const Graph& g);

}  // namespace degpack
