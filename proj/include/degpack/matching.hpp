#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace degpack {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct BipartiteMatching {
  std::vector<std::size_t> left_match;   // right partner or kUnmatched
  std::vector<std::size_t> right_match;  // left partner or kUnmatched
  std::size_t size = 0;
};

/// Hopcroft-Karp maximum matching. adjacency[l] lists the right vertices of
/// left vertex l; right ids must be below `right`.
BipartiteMatching maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                                   std::size_t right);

/// Left vertices reachable from unmatched left vertices by alternating paths.
/// When the matching is maximum and leaves some left vertex unmatched, the
/// returned set X has |N(X)| = |X| - (#unmatched in X) < |X|. Sorted.
std::vector<std::size_t> hall_violator(const std::vector<std::vector<std::size_t>>& adjacency,
                                       const BipartiteMatching& matching);

}  // namespace degpack
