#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "degpack/graph.hpp"

namespace degpack {

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Injective partial map from guest positions to host vertices.
class Embedding {
 public:
  Embedding() = default;
  Embedding(std::size_t guest_size, std::size_t host_size);

  std::size_t guest_size() const noexcept { return forward_.size(); }
  std::size_t host_size() const noexcept { return inverse_.size(); }
  /// Number of positions mapped so far.
  std::size_t size() const noexcept { return mapped_; }
  bool complete() const noexcept { return mapped_ == forward_.size(); }

  bool assigned(std::size_t pos) const { return forward_[pos] != kNoVertex; }
  /// Host vertex of a position, or kNoVertex.
  Vertex at(std::size_t pos) const { return forward_[pos]; }
  /// Guest position mapped onto v, or kNoVertex.
  Vertex preimage(Vertex v) const { return inverse_[v]; }
  /// Throws PreconditionError if pos is already mapped or v already used.
  void assign(std::size_t pos, Vertex v);

  const Bitset& image() const noexcept { return image_; }
  std::span<const Vertex> forward() const noexcept { return forward_; }

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
  Bitset image_;
  std::size_t mapped_ = 0;
};

}  // namespace degpack
