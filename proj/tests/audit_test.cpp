#include <gtest/gtest.h>

#include <cmath>

#include "degpack/audit.hpp"
#include "degpack/engine.hpp"
#include "degpack/generators.hpp"
#include "degpack/host_state.hpp"
#include "oracles.hpp"

namespace degpack {
namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

std::vector<std::vector<Vertex>> collect_witnesses(std::size_t n, const AuditPolicy& policy) {
  std::vector<std::vector<Vertex>> out;
  for_each_witness(n, policy, [&out](std::span<const Vertex> S) {
    out.emplace_back(S.begin(), S.end());
  });
  return out;
}

TEST(CommonNeighborhoodTest, SmallCases) {
  const Graph c5 = cycle(5);
  const std::vector<Vertex> s{0, 2};
  EXPECT_EQ(common_neighborhood(c5, s), (VertexSet{1}));
  const Graph k6 = complete_graph(6);
  const std::vector<Vertex> t{1, 4};
  EXPECT_EQ(common_neighborhood(k6, t), (VertexSet{0, 2, 3, 5}));
  EXPECT_EQ(common_neighborhood(k6, {}).size(), 6u);
}

TEST(WitnessTest, ExhaustiveCountsAndOrder) {
  const AuditPolicy policy{3, 3, 0, 0};
  const auto sets = collect_witnesses(6, policy);
  EXPECT_EQ(sets.size(), 6u + 15u + 20u);
  EXPECT_EQ(sets.front(), (std::vector<Vertex>{0}));
  EXPECT_EQ(sets[6], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(sets.back(), (std::vector<Vertex>{3, 4, 5}));
}

TEST(WitnessTest, SampledSetsAreDistinctSortedAndSeeded) {
  const AuditPolicy policy{4, 1, 50, 9};
  const auto a = collect_witnesses(30, policy);
  const auto b = collect_witnesses(30, policy);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 30u + 50u + 50u + 50u);
  for (const auto& s : a) {
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
  }
  AuditPolicy other = policy;
  other.rng_seed = 10;
  EXPECT_NE(collect_witnesses(30, other), a);
}

TEST(QuasirandomTest, CompleteGraphDeviationIsSetSizeOverN) {
  const Graph k10 = complete_graph(10);
  EXPECT_NEAR(quasirandomness_error(k10, {2, 2, 0, 0}).deviation, 0.2, 1e-12);
  EXPECT_NEAR(quasirandomness_error(k10, {1, 1, 0, 0}).deviation, 0.1, 1e-12);
  for (std::size_t k = 1; k <= 4; ++k) {
    const AuditEntry e = quasirandomness_error(complete_graph(20), {k, k, 0, 0});
    EXPECT_NEAR(e.deviation, static_cast<double>(k) / 20.0, 1e-12);
  }
}

TEST(QuasirandomTest, RejectsEmptyGraph) {
  EXPECT_THROW(quasirandomness_error(Graph(5), {2, 2, 0, 0}), DegenerateDensityError);
}

TEST(QuasirandomTest, MatchesBruteForce) {
  Rng rng(42);
  const Graph g = gnp(200, 0.5, rng);
  const AuditPolicy policy{3, 2, 60, 1};
  const AuditEntry entry = quasirandomness_error(g, policy);
  const auto sets = collect_witnesses(200, policy);
  const double brute = oracle::co_deviation(g, g, sets, {}, false);
  EXPECT_NEAR(entry.deviation, brute, 1e-12);
  EXPECT_EQ(entry.sets_tested, sets.size());
  // The reported witness realizes the deviation.
  const auto nbhd = oracle::common_neighbors(g, entry.witness);
  const double expected =
      std::pow(oracle::density(g), static_cast<int>(entry.witness.size())) * 200.0;
  EXPECT_NEAR(std::fabs(static_cast<double>(nbhd.size()) - expected) / expected,
              entry.deviation, 1e-12);
}

TEST(DietTest, EmptyExclusionEqualsQuasirandom) {
  Rng rng(4);
  const Graph g = gnp(80, 0.4, rng);
  const AuditPolicy policy{3, 2, 40, 3};
  const AuditEntry q = quasirandomness_error(g, policy);
  const AuditEntry d = diet_error(g, {}, policy);
  EXPECT_DOUBLE_EQ(q.deviation, d.deviation);
  EXPECT_EQ(q.witness, d.witness);
}

TEST(DietTest, SingleExclusionOnCompleteGraph) {
  // X = {9}, S = {0}: N(0) \ X has 8 vertices, expected 1 * 9.
  const std::vector<Vertex> x{9};
  const AuditEntry e = diet_error(complete_graph(10), x, {1, 1, 0, 0});
  EXPECT_NEAR(e.deviation, 1.0 / 9.0, 1e-12);
  EXPECT_EQ(e.excluded, 1u);
}

TEST(DietTest, MatchesBruteForceWithExclusions) {
  Rng rng(8);
  const Graph g = gnp(60, 0.5, rng);
  const std::vector<Vertex> x{3, 17, 40};
  const AuditPolicy policy{2, 2, 0, 0};
  const double brute = oracle::co_deviation(g, g, collect_witnesses(60, policy), x, false);
  EXPECT_NEAR(diet_error(g, x, policy).deviation, brute, 1e-12);
}

TEST(CoquasirandomTest, MatchesBruteForceOnSplit) {
  Rng host_rng(21);
  const Graph hhat = gnp(120, 0.6, host_rng);
  Rng split_rng = substream(5, 0);
  const HostState state = split_bulk_reservoir(hhat, 0.25, split_rng);
  const Graph f = state.bulk.snapshot();
  const Graph fstar = state.reservoir.snapshot();
  const AuditPolicy policy{3, 2, 30, 2};
  const auto sets = collect_witnesses(120, policy);
  const AuditEntry e = coquasirandomness_error(f, fstar, policy);
  EXPECT_NEAR(e.deviation, oracle::co_deviation(f, fstar, sets, {}, true), 1e-12);
  std::size_t pairs = 0;
  for (const auto& s : sets) pairs += std::size_t{1} << s.size();
  EXPECT_EQ(e.sets_tested, pairs);
  EXPECT_TRUE(std::includes(e.witness.begin(), e.witness.end(), e.witness_first.begin(),
                            e.witness_first.end()));

  const std::vector<Vertex> x{0, 1, 2, 3, 4};
  EXPECT_NEAR(codiet_error(f, fstar, x, policy).deviation,
              oracle::co_deviation(f, fstar, sets, x, true), 1e-12);
}

TEST(CoquasirandomTest, FullSubsetReducesToDiet) {
  // With F* = F every mixed condition is the plain one.
  Rng rng(31);
  const Graph g = gnp(50, 0.5, rng);
  const AuditPolicy policy{2, 2, 0, 0};
  EXPECT_NEAR(codiet_error(g, g, {}, policy).deviation, diet_error(g, {}, policy).deviation,
              1e-12);
}

TEST(AuditPolicyTest, ValidationAndDefaults) {
  EXPECT_EQ(AuditPolicy::for_degeneracy(2).max_set_size, 7u);
  EXPECT_THROW((AuditPolicy{0, 0, 0, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((AuditPolicy{2, 3, 0, 0}.validate()), std::invalid_argument);
}

TEST(CoverTest, ZeroStratumAndBruteForceRecount) {
  Rng rng(77);
  const std::size_t n = 300;
  const Graph h = gnp(n, 0.5, rng);
  const Graph tree = random_tree(n, rng);
  const PreparedGuest guest = PreparedGuest::from_ordered(degeneracy_order(tree), 0);
  Embedding psi(n, n);
  for (std::size_t t = 0; t < n; ++t) psi.assign(t, static_cast<Vertex>(t));
  const CoverReport report = cover_error(guest, h, psi, 0, 0.1);
  EXPECT_EQ(report.window_begin, 0u);
  EXPECT_EQ(report.window_end, 30u);
  ASSERT_EQ(report.stratum_sizes.size(), 2u);
  EXPECT_EQ(report.stratum_sizes[0], 1u);  // the root
  EXPECT_EQ(report.stratum_sizes[1], 29u);
  for (std::size_t v = 0; v < n; ++v) EXPECT_EQ(report.counts[0][v], 1u);

  double beta = 0.0;
  const double p = oracle::density(h);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (std::size_t x = 1; x < 30; ++x) {
      const Vertex parent = guest.left_neighbors(x)[0];
      count += h.has_edge(v, psi.at(parent)) ? 1 : 0;
    }
    EXPECT_EQ(report.counts[1][v], count);
    const double expected = p * 29.0;
    beta = std::max(beta, (std::fabs(count - expected) - 0.01 * n) / expected);
  }
  EXPECT_NEAR(report.beta, beta, 1e-12);
}

TEST(CoverTest, RequiresEmbeddedLeftNeighbors) {
  const PreparedGuest guest = PreparedGuest::from_positional(path_graph(5), 0);
  const Embedding empty(5, 5);
  EXPECT_THROW(cover_error(guest, complete_graph(5), empty, 1, 0.5), PreconditionError);
}

TEST(AuditDeterminismTest, SameSeedSameResult) {
  Rng rng(1);
  const Graph g = gnp(100, 0.5, rng);
  const AuditPolicy policy{5, 2, 100, 7};
  const AuditEntry a = quasirandomness_error(g, policy);
  const AuditEntry b = quasirandomness_error(g, policy);
  EXPECT_EQ(a.deviation, b.deviation);
  EXPECT_EQ(a.witness, b.witness);
}

}  // namespace
}  // namespace degpack
