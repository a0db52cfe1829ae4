#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "degpack/graph.hpp"

namespace degpack {

// Text format: a header line "n m" followed by m lines "u v" with
// 0 <= u < v < n. Parse errors carry the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Whitespace-separated vertex ids; used for excluded-set files.
VertexSet read_vertex_set(const std::filesystem::path& path, std::size_t n);

}  // namespace degpack
