#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "degpack/embedding.hpp"
#include "degpack/graph.hpp"
#include "degpack/prepare.hpp"

namespace degpack {

/// Which witness sets an audit looks at. Sets of size up to
/// exhaustive_max_size are enumerated completely; larger sizes up to
/// max_set_size get samples_per_size uniform random sets each. Sampled
/// audits therefore report lower bounds on the true worst deviation.
struct AuditPolicy {
  std::size_t max_set_size = 5;
  std::size_t exhaustive_max_size = 2;
  std::size_t samples_per_size = 200;
  std::uint64_t rng_seed = 0;

  /// max_set_size = 2D + 3.
  static AuditPolicy for_degeneracy(std::size_t D, std::uint64_t seed = 0);
  /// Throws std::invalid_argument when the fields are inconsistent.
  void validate() const;
};

class DegenerateDensityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Worst observed relative deviation of one condition.
struct AuditEntry {
  std::string condition;
  double deviation = 0.0;
  VertexSet witness;            // the set S achieving the deviation
  VertexSet witness_first;      // R subset of S for co-conditions, else S
  std::size_t sets_tested = 0;  // (S, R) pairs for co-conditions
  double density = 0.0;
  std::optional<double> density_star;
  std::size_t excluded = 0;     // |X|
};

/// Calls visit(S) for every witness set the policy selects on n vertices, in
/// a fixed order: sizes ascending, lexicographic within exhaustive sizes.
void for_each_witness(std::size_t n, const AuditPolicy& policy,
                      const std::function<void(std::span<const Vertex>)>& visit);

/// Intersection of N(v) over v in S; all of V(h) when S is empty.
VertexSet common_neighborhood(const Graph& h, std::span<const Vertex> S);

AuditEntry quasirandomness_error(const Graph& h, const AuditPolicy& policy);
AuditEntry coquasirandomness_error(const Graph& f, const Graph& fstar,
                                   const AuditPolicy& policy);
AuditEntry diet_error(const Graph& h, std::span<const Vertex> excluded,
                      const AuditPolicy& policy);
AuditEntry codiet_error(const Graph& h, const Graph& hstar,
                        std::span<const Vertex> excluded, const AuditPolicy& policy);

struct CoverReport {
  double beta = 0.0;
  Vertex worst_vertex = kNoVertex;
  std::size_t worst_degree = 0;
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
  double density = 0.0;
  /// stratum_sizes[d] = |X_{i,d}|.
  std::vector<std::size_t> stratum_sizes;
  /// counts[d][v] = number of x in X_{i,d} whose candidate set contains v.
  std::vector<std::vector<std::size_t>> counts;
};

/// Cover condition for the window [i, i + floor(eps*n)) of guest positions.
/// Throws PreconditionError if a left-neighbor of a window position is not
/// embedded by psi.
CoverReport cover_error(const PreparedGuest& guest, const Graph& h, const Embedding& psi,
                        std::size_t i, double eps);

}  // namespace degpack
