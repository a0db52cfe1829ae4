#include "degpack/prepare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace degpack {

PreparedGuest PreparedGuest::from_positional(Graph positional, std::size_t tail_len) {
  std::vector<Vertex> identity(positional.num_vertices());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<Vertex>(i);
  return from_ordered(OrderedGraph(std::move(positional), std::move(identity)), tail_len);
}

PreparedGuest PreparedGuest::from_ordered(OrderedGraph ordered, std::size_t tail_len,
                                          std::vector<GuestPart> parts) {
  PreparedGuest out;
  const std::size_t n = ordered.size();
  if (tail_len > n) throw GraphError("tail longer than the guest");
  out.positional_ = ordered.positional_graph();
  out.ordered_ = std::move(ordered);
  out.tail_len_ = tail_len;
  out.parts_ = std::move(parts);

  const Graph& g = out.positional_;
  const std::size_t start = n - tail_len;
  for (std::size_t t = start; t < n; ++t) {
    const auto v = static_cast<Vertex>(t);
    if (t == start) out.tail_degree_ = g.degree(v);
    if (g.degree(v) != out.tail_degree_) {
      throw GraphError("tail vertex " + std::to_string(t) + " has degree " +
                       std::to_string(g.degree(v)) + ", expected " +
                       std::to_string(out.tail_degree_));
    }
    for (Vertex w : g.neighbors(v)) {
      if (w >= start) {
        throw GraphError("tail is not independent: edge (" + std::to_string(t) +
                         "," + std::to_string(w) + ")");
      }
    }
  }
  out.completion_degrees_.assign(start, 0);
  for (const Edge& e : g.edges()) {
    if (e.v >= start) {
      ++out.completion_degrees_[e.u];
    } else {
      ++out.bulk_edges_;
    }
  }
  return out;
}

std::size_t tail_length(double delta, std::size_t n) {
  return static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
}

namespace {

struct MergedGuest {
  Graph graph;
  std::vector<GuestPart> parts;
};

std::vector<MergedGuest> merge_small_guests(std::span<const Graph> guests, std::size_t n) {
  std::vector<MergedGuest> family;
  family.reserve(guests.size());
  for (std::size_t i = 0; i < guests.size(); ++i) {
    Graph stripped = strip_isolated(guests[i]);
    const std::size_t size = stripped.num_vertices();
    family.push_back({std::move(stripped), {{i, 0, size}}});
  }
  auto small = [n](const MergedGuest& m) { return 2 * m.graph.num_vertices() <= n; };
  for (;;) {
    auto first = std::find_if(family.begin(), family.end(), small);
    if (first == family.end()) break;
    auto second = std::find_if(std::next(first), family.end(), small);
    if (second == family.end()) break;
    const std::size_t shift = first->graph.num_vertices();
    for (GuestPart part : second->parts) {
      part.offset += shift;
      first->parts.push_back(part);
    }
    first->graph = disjoint_union(first->graph, second->graph);
    family.erase(second);
  }
  return family;
}

}  // namespace

PreparedFamily prepare_guest_family(std::span<const Graph> guests, std::size_t n,
                                    std::size_t D, const PrepareOptions& options) {
  if (!(options.delta >= 0.0 && options.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in [0, 1)");
  }
  for (std::size_t i = 0; i < guests.size(); ++i) {
    if (guests[i].num_vertices() > n) {
      throw GraphError("guest " + std::to_string(i) + " has " +
                       std::to_string(guests[i].num_vertices()) +
                       " vertices, more than n=" + std::to_string(n));
    }
    const std::size_t degeneracy = degeneracy_order(guests[i]).degeneracy();
    if (degeneracy > D) {
      throw GraphError("guest " + std::to_string(i) + " has degeneracy " +
                       std::to_string(degeneracy) + ", expected at most " +
                       std::to_string(D));
    }
  }

  std::vector<MergedGuest> merged = merge_small_guests(guests, n);

  struct Staged {
    Graph padded;
    OrderedGraph core_order;
    EqualDegreeSet independent;
    std::vector<GuestPart> parts;
  };
  std::vector<Staged> staged;
  staged.reserve(merged.size());
  PreparedFamily family;
  family.tail_len = tail_length(options.delta, n);
  std::size_t shortest = family.tail_len;
  for (MergedGuest& m : merged) {
    Staged s;
    s.core_order = degeneracy_order(m.graph);
    s.padded = pad_isolated(m.graph, n);
    s.independent = equal_degree_independent_set(s.padded, D);
    s.parts = std::move(m.parts);
    shortest = std::min(shortest, s.independent.vertices.size());
    staged.push_back(std::move(s));
  }
  if (shortest < family.tail_len) {
    if (!options.auto_shrink_delta) {
      throw GraphError("equal-degree independent set of size " +
                       std::to_string(shortest) + " is shorter than the tail length " +
                       std::to_string(family.tail_len));
    }
    family.tail_len = shortest;
    family.shrunk = true;
  }
  family.delta = n == 0 ? 0.0
                        : static_cast<double>(family.tail_len) / static_cast<double>(n);

  for (Staged& s : staged) {
    const VertexSet tail(s.independent.vertices.begin(),
                         s.independent.vertices.begin() +
                             static_cast<std::ptrdiff_t>(family.tail_len));
    std::vector<bool> is_tail(n, false);
    for (Vertex v : tail) is_tail[v] = true;

    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex v : s.core_order.order()) {
      if (!is_tail[v]) order.push_back(v);
    }
    for (auto v = static_cast<Vertex>(s.core_order.size()); v < n; ++v) {
      if (!is_tail[v]) order.push_back(v);
    }
    order.insert(order.end(), tail.begin(), tail.end());

    PreparedGuest guest = PreparedGuest::from_ordered(
        OrderedGraph(std::move(s.padded), std::move(order)), family.tail_len,
        std::move(s.parts));
    if (guest.left_degeneracy() > 2 * D) {
      throw std::logic_error("prepared ordering exceeds twice the input degeneracy");
    }
    family.guests.push_back(std::move(guest));
  }
  return family;
}

}  // namespace degpack
