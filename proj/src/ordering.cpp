#include "degpack/ordering.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace degpack {

OrderedGraph::OrderedGraph(Graph graph, std::vector<Vertex> order)
    : graph_(std::move(graph)), order_(std::move(order)) {
  const std::size_t n = graph_.num_vertices();
  if (order_.size() != n) throw GraphError("ordering has wrong length");
  position_.assign(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    const Vertex v = order_[t];
    if (v >= n || position_[v] != n) {
      throw GraphError("ordering is not a permutation");
    }
    position_[v] = t;
  }
  left_.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (Vertex w : graph_.neighbors(order_[t])) {
      if (position_[w] < t) left_[t].push_back(static_cast<Vertex>(position_[w]));
    }
    std::sort(left_[t].begin(), left_[t].end());
    degeneracy_ = std::max(degeneracy_, left_[t].size());
  }
}

Graph OrderedGraph::positional_graph() const { return relabel(graph_, order_); }

OrderedGraph degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> peeled;
  peeled.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = true;
    peeled.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return OrderedGraph(g, std::move(peeled));
}

EqualDegreeSet equal_degree_independent_set(const Graph& g, std::size_t D) {
  const std::size_t actual = degeneracy_order(g).degeneracy();
  if (actual > D) {
    throw GraphError("graph has degeneracy " + std::to_string(actual) +
                     ", expected at most " + std::to_string(D));
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> count(2 * D + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 2 * D) ++count[g.degree(v)];
  }
  EqualDegreeSet out;
  if (n == 0) return out;
  out.degree = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());

  std::vector<bool> blocked(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != out.degree || blocked[v]) continue;
    out.vertices.push_back(v);
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  return out;
}

std::uint64_t sum_sq_degrees(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto d = static_cast<std::uint64_t>(g.degree(v));
    total += d * d;
  }
  return total;
}

}  // namespace degpack
