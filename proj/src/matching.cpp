#include "degpack/matching.hpp"

#include <algorithm>
#include <queue>

namespace degpack {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj, std::size_t right)
      : adj_(adj), dist_(adj.size()), next_edge_(adj.size()) {
    m_.left_match.assign(adj.size(), kUnmatched);
    m_.right_match.assign(right, kUnmatched);
  }

  BipartiteMatching run() {
    while (layer()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (m_.left_match[l] == kUnmatched && augment(l)) ++m_.size;
      }
    }
    return std::move(m_);
  }

 private:
  // BFS from free left vertices; true if some free right vertex is reachable.
  bool layer() {
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (m_.left_match[l] == kUnmatched) {
        dist_[l] = 0;
        queue.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t l = queue.front();
      queue.pop();
      for (std::size_t r : adj_[l]) {
        const std::size_t partner = m_.right_match[r];
        if (partner == kUnmatched) {
          found = true;
        } else if (dist_[partner] == kInf) {
          dist_[partner] = dist_[l] + 1;
          queue.push(partner);
        }
      }
    }
    return found;
  }

  // Iterative DFS along the BFS layers.
  bool augment(std::size_t root) {
    std::vector<std::size_t> path{root};
    while (!path.empty()) {
      const std::size_t l = path.back();
      bool advanced = false;
      while (next_edge_[l] < adj_[l].size()) {
        const std::size_t r = adj_[l][next_edge_[l]++];
        const std::size_t partner = m_.right_match[r];
        if (partner == kUnmatched) {
          // Flip the path: each left vertex on it takes the right vertex that
          // was last explored from it.
          std::size_t right = r;
          for (auto it = path.rbegin(); it != path.rend(); ++it) {
            const std::size_t left = *it;
            const std::size_t previous = m_.left_match[left];
            m_.left_match[left] = right;
            m_.right_match[right] = left;
            right = previous;
          }
          return true;
        }
        if (dist_[partner] == dist_[l] + 1) {
          path.push_back(partner);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist_[l] = kInf;
        path.pop_back();
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_edge_;
  BipartiteMatching m_;
};

}  // namespace

BipartiteMatching maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                                   std::size_t right) {
  return HopcroftKarp(adjacency, right).run();
}

std::vector<std::size_t> hall_violator(const std::vector<std::vector<std::size_t>>& adjacency,
                                       const BipartiteMatching& matching) {
  std::vector<bool> seen_left(adjacency.size(), false);
  std::vector<bool> seen_right(matching.right_match.size(), false);
  std::queue<std::size_t> queue;
  for (std::size_t l = 0; l < adjacency.size(); ++l) {
    if (matching.left_match[l] == kUnmatched) {
      seen_left[l] = true;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    const std::size_t l = queue.front();
    queue.pop();
    for (std::size_t r : adjacency[l]) {
      if (seen_right[r]) continue;
      seen_right[r] = true;
      const std::size_t partner = matching.right_match[r];
      if (partner != kUnmatched && !seen_left[partner]) {
        seen_left[partner] = true;
        queue.push(partner);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < adjacency.size(); ++l) {
    if (seen_left[l]) out.push_back(l);
  }
  return out;
}

}  // namespace degpack
