#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degpack/graph.hpp"
#include "degpack/rng.hpp"

namespace degpack {

/// Decodes a Prüfer sequence of length n-2 over [0, n) into a labeled tree.
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);

/// Uniform labeled tree on n >= 1 vertices.
Graph random_tree(std::size_t n, Rng& rng);

/// Vertices arrive in id order; each picks up to D earlier neighbors
/// uniformly among those still below max_degree. The arrival order has
/// left-degree <= D and the result has maximum degree <= max_degree.
/// Saturated vertices are skipped, so this is not the uniform D-degenerate
/// model.
Graph random_degenerate(std::size_t n, std::size_t D, std::size_t max_degree, Rng& rng);

/// Each pair is an edge independently with probability p; pairs are visited
/// in lexicographic order with one draw each.
Graph gnp(std::size_t n, double p, Rng& rng);

Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Random trees T_1..T_n with v(T_i) = i.
std::vector<Graph> gyarfas_family(std::size_t n, Rng& rng);

/// Drops the largest graphs (latest first on ties) until the total edge count
/// is at most max_edges.
std::vector<Graph> truncate_to_budget(std::vector<Graph> family, std::size_t max_edges);

/// 2m+1 copies of one random tree with m edges, the Ringel schedule for
/// K_{2m+1}.
std::vector<Graph> ringel_family(std::size_t m, Rng& rng);

class SpecError : public std::invalid_argument {
 public:
  SpecError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

struct SpecParam {
  std::string value;
  std::size_t position = 0;  // offset of the key in the spec text
};

/// "kind:key=value,key=value". Values stay strings until a typed getter asks.
struct ParsedSpec {
  std::string kind;
  std::map<std::string, SpecParam> params;
  std::string text;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  std::size_t get_size(const std::string& key) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  /// Throws SpecError at the first key not in `allowed`.
  void expect_keys(std::initializer_list<std::string_view> allowed) const;
};

ParsedSpec parse_spec(std::string_view text);

/// Guest kinds: tree(n), degen(n, D, maxdeg), star(n), path(n),
/// gyarfas(n[, budget]), ringel(m). Every kind accepts count (default 1);
/// gyarfas and ringel produce whole families per count.
struct GuestSpec {
  ParsedSpec spec;
  static GuestSpec parse(std::string_view text);
  std::vector<Graph> generate(Rng& rng) const;
  /// Degeneracy bound the generated graphs satisfy by construction.
  std::size_t degeneracy_bound() const;
};

/// Host kinds: complete(n), gnp(n, p), file(path).
struct HostSpec {
  ParsedSpec spec;
  static HostSpec parse(std::string_view text);
  Graph generate(Rng& rng) const;
};

/// Semicolon-separated list of guest specs.
std::vector<GuestSpec> parse_guest_specs(std::string_view text);

}  // namespace degpack
