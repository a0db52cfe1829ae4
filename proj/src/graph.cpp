#include "degpack/graph.hpp"

#include <algorithm>

namespace degpack {

Graph::Graph(std::size_t n) : n_(n), adj_(n) {
  if (n <= kDenseRowLimit) rows_.assign(n, Bitset(n));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") out of range for n=" +
                       std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + ")");
  }
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  if (!g.rows_.empty()) {
    for (const Edge& e : g.edges_) {
      g.rows_[e.u].set(e.v);
      g.rows_[e.v].set(e.u);
    }
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (!rows_.empty()) return rows_[u].test(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

double Graph::density() const noexcept {
  if (n_ < 2) return 0.0;
  const double pairs = static_cast<double>(n_) * static_cast<double>(n_ - 1) / 2.0;
  return static_cast<double>(edges_.size()) / pairs;
}

Bitset Graph::neighbor_bits(Vertex v) const {
  if (!rows_.empty()) return rows_[v];
  return to_bitset(n_, adj_[v]);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges = a.edges();
  edges.reserve(a.num_edges() + b.num_edges());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

Graph pad_isolated(const Graph& g, std::size_t n) {
  if (n < g.num_vertices()) {
    throw GraphError("cannot pad a graph on " +
                     std::to_string(g.num_vertices()) + " vertices down to " +
                     std::to_string(n));
  }
  return Graph::from_edges(n, g.edges());
}

Graph relabel(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.num_vertices()) {
    throw GraphError("relabel: order has wrong length");
  }
  std::vector<Vertex> position(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.num_vertices() || position[order[i]] != kNoVertex) {
      throw GraphError("relabel: order is not a permutation");
    }
    position[order[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({position[e.u], position[e.v]});
  return Graph::from_edges(g.num_vertices(), edges);
}

Graph strip_isolated(const Graph& g) {
  std::vector<Vertex> id(g.num_vertices(), kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) id[v] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({id[e.u], id[e.v]});
  return Graph::from_edges(next, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Bitset to_bitset(std::size_t n, std::span<const Vertex> set) {
  Bitset bits(n);
  for (Vertex v : set) bits.set(v);
  return bits;
}

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

}  // namespace degpack
