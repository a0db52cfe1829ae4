#include "degpack/host_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "degpack/embedding.hpp"

namespace degpack {

HostGraph::HostGraph(std::size_t n) : rows_(n, Bitset(n)), degree_(n, 0) {}

HostGraph::HostGraph(const Graph& g) : HostGraph(g.num_vertices()) {
  for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

void HostGraph::add_edge(Vertex u, Vertex v) {
  if (u == v || rows_[u].test(v)) {
    throw PreconditionError("host: cannot add edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
  }
  rows_[u].set(v);
  rows_[v].set(u);
  ++degree_[u];
  ++degree_[v];
  ++edges_;
}

void HostGraph::remove_edge(Vertex u, Vertex v) {
  if (u == v || !rows_[u].test(v)) {
    throw PreconditionError("host: edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") is not present");
  }
  rows_[u].reset(v);
  rows_[v].reset(u);
  --degree_[u];
  --degree_[v];
  --edges_;
}

Graph HostGraph::snapshot() const {
  std::vector<Edge> edges;
  edges.reserve(edges_);
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != Bitset::npos; v = rows_[u].find_next(v)) {
      edges.push_back({u, static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(rows_.size(), edges);
}

std::size_t HostState::max_reservoir_drain() const {
  std::size_t drain = 0;
  for (Vertex v = 0; v < initial_reservoir_degree.size(); ++v) {
    drain = std::max(drain, initial_reservoir_degree[v] - reservoir.degree(v));
  }
  return drain;
}

HostState split_bulk_reservoir(const Graph& hhat, double gamma, Rng& rng) {
  const std::size_t n = hhat.num_vertices();
  if (!(gamma >= 0.0)) throw std::invalid_argument("split: gamma must be non-negative");
  const double pairs = static_cast<double>(n) * static_cast<double>(n > 0 ? n - 1 : 0) / 2.0;
  double q = 0.0;
  if (gamma > 0.0) {
    if (hhat.num_edges() == 0) {
      throw std::invalid_argument("split: host has no edges to form a reservoir");
    }
    q = gamma * pairs / static_cast<double>(hhat.num_edges());
    if (q > 1.0) {
      throw std::invalid_argument("split: gamma=" + std::to_string(gamma) +
                                  " needs reservoir probability " + std::to_string(q) +
                                  " > 1 for this host");
    }
  }
  HostState state;
  state.bulk = HostGraph(n);
  state.reservoir = HostGraph(n);
  state.in_reservoir.assign(hhat.num_edges(), false);
  for (std::size_t i = 0; i < hhat.num_edges(); ++i) {
    const Edge& e = hhat.edges()[i];
    if (bernoulli(rng, q)) {
      state.reservoir.add_edge(e.u, e.v);
      state.in_reservoir[i] = true;
    } else {
      state.bulk.add_edge(e.u, e.v);
    }
  }
  state.initial_reservoir_degree.resize(n);
  for (Vertex v = 0; v < n; ++v) state.initial_reservoir_degree[v] = state.reservoir.degree(v);
  return state;
}

}  // namespace degpack
