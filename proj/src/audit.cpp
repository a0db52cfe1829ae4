#include "degpack/audit.hpp"

#include <algorithm>
#include <cmath>

#include "degpack/rng.hpp"

namespace degpack {

AuditPolicy AuditPolicy::for_degeneracy(std::size_t D, std::uint64_t seed) {
  AuditPolicy policy;
  policy.max_set_size = 2 * D + 3;
  policy.rng_seed = seed;
  return policy;
}

void AuditPolicy::validate() const {
  if (max_set_size < 1) throw std::invalid_argument("audit: max_set_size must be >= 1");
  if (exhaustive_max_size > max_set_size) {
    throw std::invalid_argument("audit: exhaustive_max_size exceeds max_set_size");
  }
  if (max_set_size > exhaustive_max_size && samples_per_size < 1) throw std::invalid_argument("audit: samples_per_size must be >= 1");
}

namespace {

// Floyd's sampling: k distinct values from [0, n) using exactly k draws.
void sample_subset(Rng& rng, std::size_t n, std::size_t k, std::vector<Vertex>& out) {
  out.clear();
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<Vertex>(uniform_index(rng, j + 1));
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    } else {
      out.push_back(static_cast<Vertex>(j));
    }
  }
  std::sort(out.begin(), out.end());
}

const Bitset& row_of(const Graph& g, Vertex v, Bitset& scratch) {
  if (g.dense()) return g.row(v);
  scratch = g.neighbor_bits(v);
  return scratch;
}

struct Scanner {
  const Graph& first;
  const Graph& second;
  Bitset keep;  // complement of the excluded set
  double p = 0.0;
  double pstar = 0.0;
  double base = 0.0;
  bool co = false;
  AuditEntry entry;
  Bitset acc;
  Bitset scratch;

  void visit(std::span<const Vertex> S) {
    const std::size_t k = S.size();
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    const std::uint64_t first_mask = co ? 0 : full;
    for (std::uint64_t mask = first_mask; mask <= full; ++mask) {
      acc = keep;
      int in_r = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if ((mask >> j) & 1U) {
          acc &= row_of(first, S[j], scratch);
          ++in_r;
        } else {
          acc &= row_of(second, S[j], scratch);
        }
      }
      // Equal densities take the single-power path so that a co-condition on
      // (h, h) reproduces the plain condition bit for bit.
      const double product =
          p == pstar ? std::pow(p, static_cast<int>(k))
                     : std::pow(p, in_r) * std::pow(pstar, static_cast<int>(k) - in_r);
      const double expected = product * base;
      const double count = static_cast<double>(acc.count());
      const double deviation = std::fabs(count - expected) / expected;
      ++entry.sets_tested;
      if (entry.sets_tested == 1 || deviation > entry.deviation) {
        entry.deviation = deviation;
        entry.witness.assign(S.begin(), S.end());
        entry.witness_first.clear();
        for (std::size_t j = 0; j < k; ++j) {
          if ((mask >> j) & 1U) entry.witness_first.push_back(S[j]);
        }
      }
    }
  }
};

AuditEntry run_scan(std::string condition, const Graph& first, const Graph& second,
                    std::span<const Vertex> excluded, const AuditPolicy& policy, bool co) {
  policy.validate();
  const std::size_t n = first.num_vertices();
  if (second.num_vertices() != n) {
    throw std::invalid_argument("audit: graphs must share a vertex set");
  }
  const double p = first.density();
  const double pstar = second.density();
  if (p <= 0.0 || (co && pstar <= 0.0)) {
    throw DegenerateDensityError(condition + ": graph density is zero");
  }
  Bitset keep(n);
  keep.set();
  for (Vertex v : excluded) {
    if (v >= n) throw std::invalid_argument("audit: excluded vertex out of range");
    keep.reset(v);
  }
  if (keep.none()) {
    throw DegenerateDensityError(condition + ": excluded set covers every vertex");
  }
  if (policy.max_set_size >= 63) {
    throw std::invalid_argument("audit: max_set_size too large for subset enumeration");
  }
  Scanner scan{first, second, std::move(keep), p, co ? pstar : p, 0.0, co, {}, {}, {}};
  scan.base = static_cast<double>(scan.keep.count());
  scan.entry.condition = std::move(condition);
  scan.entry.density = p;
  if (co) scan.entry.density_star = pstar;
  scan.entry.excluded = n - scan.keep.count();
  for_each_witness(n, policy, [&scan](std::span<const Vertex> S) { scan.visit(S); });
  return std::move(scan.entry);
}

}  // namespace

void for_each_witness(std::size_t n, const AuditPolicy& policy,
                      const std::function<void(std::span<const Vertex>)>& visit) {
  policy.validate();
  std::vector<Vertex> set;
  const std::size_t top = std::min(policy.max_set_size, n);
  for (std::size_t k = 1; k <= top; ++k) {
    if (k <= policy.exhaustive_max_size) {
      set.resize(k);
      for (std::size_t j = 0; j < k; ++j) set[j] = static_cast<Vertex>(j);
      for (;;) {
        visit(set);
        std::size_t j = k;
        while (j > 0 && set[j - 1] == n - k + (j - 1)) --j;
        if (j == 0) break;
        ++set[j - 1];
        for (std::size_t l = j; l < k; ++l) set[l] = set[l - 1] + 1;
      }
    } else {
      Rng rng = substream(policy.rng_seed, k);
      for (std::size_t s = 0; s < policy.samples_per_size; ++s) {
        sample_subset(rng, n, k, set);
        visit(set);
      }
    }
  }
}

VertexSet common_neighborhood(const Graph& h, std::span<const Vertex> S) {
  Bitset acc(h.num_vertices());
  acc.set();
  Bitset scratch;
  for (Vertex v : S) {
    if (v >= h.num_vertices()) {
      throw std::invalid_argument("common_neighborhood: vertex out of range");
    }
    acc &= row_of(h, v, scratch);
  }
  return to_vertex_set(acc);
}

AuditEntry quasirandomness_error(const Graph& h, const AuditPolicy& policy) {
  return run_scan("quasirandom", h, h, {}, policy, false);
}

AuditEntry coquasirandomness_error(const Graph& f, const Graph& fstar,
                                   const AuditPolicy& policy) {
  return run_scan("coquasirandom", f, fstar, {}, policy, true);
}

AuditEntry diet_error(const Graph& h, std::span<const Vertex> excluded,
                      const AuditPolicy& policy) {
  return run_scan("diet", h, h, excluded, policy, false);
}

AuditEntry codiet_error(const Graph& h, const Graph& hstar, std::span<const Vertex> excluded,
                        const AuditPolicy& policy) {
  return run_scan("codiet", h, hstar, excluded, policy, true);
}

CoverReport cover_error(const PreparedGuest& guest, const Graph& h, const Embedding& psi,
                        std::size_t i, double eps) {
  const std::size_t n = h.num_vertices();
  const double p = h.density();
  if (p <= 0.0) throw DegenerateDensityError("cover: graph density is zero");
  const std::size_t width = tail_length(eps, n);
  CoverReport report;
  report.window_begin = std::min(i, guest.size());
  report.window_end = std::min(i + width, guest.size());
  report.density = p;
  const std::size_t max_d = guest.left_degeneracy();
  report.stratum_sizes.assign(max_d + 1, 0);
  report.counts.assign(max_d + 1, std::vector<std::size_t>(n, 0));

  Bitset acc(n);
  Bitset scratch;
  for (std::size_t x = report.window_begin; x < report.window_end; ++x) {
    const auto left = guest.left_neighbors(x);
    const std::size_t d = left.size();
    ++report.stratum_sizes[d];
    acc.set();
    for (Vertex y : left) {
      if (!psi.assigned(y)) {
        throw PreconditionError("cover: left-neighbor " + std::to_string(y) + " of " +
                                std::to_string(x) + " is not embedded");
      }
      acc &= row_of(h, psi.at(y), scratch);
    }
    auto& counts = report.counts[d];
    for (auto v = acc.find_first(); v != Bitset::npos; v = acc.find_next(v)) ++counts[v];
  }

  const double slack = eps * eps * static_cast<double>(n);
  for (std::size_t d = 1; d <= max_d; ++d) {
    if (report.stratum_sizes[d] == 0) continue;
    const double expected = std::pow(p, static_cast<int>(d)) *
                            static_cast<double>(report.stratum_sizes[d]);
    for (Vertex v = 0; v < n; ++v) {
      const double gap =
          std::fabs(static_cast<double>(report.counts[d][v]) - expected) - slack;
      const double beta = std::max(0.0, gap / expected);
      if (beta > report.beta) {
        report.beta = beta;
        report.worst_vertex = v;
        report.worst_degree = d;
      }
    }
  }
  return report;
}

}  // namespace degpack
