#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "degpack/graph.hpp"
#include "degpack/ordering.hpp"

namespace degpack {

/// Where a block of a prepared guest came from: guest `source` of the input
/// family occupies vertices [offset, offset + size) of the merged graph.
struct GuestPart {
  std::size_t source = 0;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// A guest on exactly n vertices in embedding order. Positions
/// [tail_start(), n) form an independent set whose vertices all have degree
/// tail_degree(); every other position has at most left_degeneracy() earlier
/// neighbors.
class PreparedGuest {
 public:
  PreparedGuest() = default;

  /// Wraps a graph whose vertex ids already are positions. Throws GraphError
  /// if the last tail_len vertices are not independent or not equal-degree.
  static PreparedGuest from_positional(Graph positional, std::size_t tail_len);

  /// Takes an ordered graph and a tail length; the tail is the last tail_len
  /// positions of the ordering.
  static PreparedGuest from_ordered(OrderedGraph ordered, std::size_t tail_len,
                                    std::vector<GuestPart> parts = {});

  const OrderedGraph& ordered() const noexcept { return ordered_; }
  /// Graph on positions 0..n-1.
  const Graph& graph() const noexcept { return positional_; }
  std::size_t size() const noexcept { return positional_.num_vertices(); }
  std::size_t num_edges() const noexcept { return positional_.num_edges(); }

  std::size_t tail_len() const noexcept { return tail_len_; }
  std::size_t tail_start() const noexcept { return size() - tail_len_; }
  bool in_tail(std::size_t t) const noexcept { return t >= tail_start(); }
  std::size_t tail_degree() const noexcept { return tail_degree_; }

  std::span<const Vertex> left_neighbors(std::size_t t) const {
    return ordered_.left_neighbors(t);
  }
  std::size_t left_degeneracy() const noexcept { return ordered_.degeneracy(); }

  /// Number of tail neighbors of each non-tail position.
  const std::vector<std::size_t>& completion_degrees() const noexcept {
    return completion_degrees_;
  }
  /// Edges with both endpoints outside the tail.
  std::size_t bulk_edge_count() const noexcept { return bulk_edges_; }

  const std::vector<GuestPart>& parts() const noexcept { return parts_; }

 private:
  OrderedGraph ordered_;
  Graph positional_;
  std::size_t tail_len_ = 0;
  std::size_t tail_degree_ = 0;
  std::size_t bulk_edges_ = 0;
  std::vector<std::size_t> completion_degrees_;
  std::vector<GuestPart> parts_;
};

struct PrepareOptions {
  double delta = 0.04;           // tail_len = floor(delta * n)
  bool auto_shrink_delta = false;
};

struct PreparedFamily {
  std::vector<PreparedGuest> guests;
  std::size_t tail_len = 0;
  double delta = 0.0;      // effective tail fraction
  bool shrunk = false;     // true if auto-shrink reduced the tail
};

/// Merges small guests pairwise, pads to n vertices and orders each result
/// so that a common-degree independent tail comes last, preceded by padding
/// vertices. Throws GraphError if a guest is larger than n or not
/// D-degenerate, or if some independent set is shorter than the tail and
/// auto-shrink is off.
PreparedFamily prepare_guest_family(std::span<const Graph> guests, std::size_t n,
                                    std::size_t D, const PrepareOptions& options);

/// floor(delta * n) computed without drifting below an exact product.
std::size_t tail_length(double delta, std::size_t n);

}  // namespace degpack
