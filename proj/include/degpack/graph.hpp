#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace degpack {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Vertex kNoVertex = 0xffffffffu;

// Above this vertex count adjacency membership falls back to binary search
// over the sorted neighbor lists.
inline constexpr std::size_t kDenseRowLimit = 65536;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Pairs may be given in either
  /// orientation; self-loops, duplicates and out-of-range ids throw GraphError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_[v].data(), adj_[v].size()};
  }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges in lexicographic order, each with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Position of edge {u,v} in edges(), or num_edges() if absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

  /// e(G) / C(n,2); zero when n < 2.
  double density() const noexcept;

  bool dense() const noexcept { return !rows_.empty() || n_ == 0; }
  /// Bit row of N(v). Only valid when dense().
  const Bitset& row(Vertex v) const { return rows_[v]; }
  /// N(v) as a bitset, built on demand when the graph is not dense.
  Bitset neighbor_bits(Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<Bitset> rows_;
};

/// Disjoint union; vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Copy of g with isolated vertices appended up to n vertices.
Graph pad_isolated(const Graph& g, std::size_t n);

/// Relabels g so that vertex order[i] becomes vertex i.
Graph relabel(const Graph& g, std::span<const Vertex> order);

/// Drops isolated vertices, keeping the relative order of the rest.
Graph strip_isolated(const Graph& g);

Graph complete_graph(std::size_t n);

/// Sets bits of a vertex set into a bitset of size n.
Bitset to_bitset(std::size_t n, std::span<const Vertex> set);
VertexSet to_vertex_set(const Bitset& bits);

}  // namespace degpack
