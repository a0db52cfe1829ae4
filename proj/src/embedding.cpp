#include "degpack/embedding.hpp"

#include <string>

namespace degpack {

Embedding::Embedding(std::size_t guest_size, std::size_t host_size)
    : forward_(guest_size, kNoVertex), inverse_(host_size, kNoVertex), image_(host_size) {
  if (guest_size > host_size) {
    throw PreconditionError("guest has more vertices than the host");
  }
}

void Embedding::assign(std::size_t pos, Vertex v) {
  if (pos >= forward_.size() || v >= inverse_.size()) {
    throw PreconditionError("embedding index out of range");
  }
  if (forward_[pos] != kNoVertex) {
    throw PreconditionError("position " + std::to_string(pos) + " already embedded");
  }
  if (inverse_[v] != kNoVertex) {
    throw PreconditionError("host vertex " + std::to_string(v) + " already used");
  }
  forward_[pos] = v;
  inverse_[v] = static_cast<Vertex>(pos);
  image_.set(v);
  ++mapped_;
}

}  // namespace degpack
