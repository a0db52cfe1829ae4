#include <gtest/gtest.h>

#include <cmath>

#include "degpack/generators.hpp"
#include "degpack/ordering.hpp"

namespace degpack {
namespace {

bool is_tree(const Graph& g) {
  if (g.num_edges() + 1 != g.num_vertices()) return false;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.num_vertices();
}

TEST(PrueferTest, SmallSequences) {
  const std::vector<Vertex> seq{2};
  const Graph t = tree_from_pruefer(3, seq);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
  const std::vector<Vertex> star{0, 0, 0};
  EXPECT_EQ(tree_from_pruefer(5, star).degree(0), 4u);
  EXPECT_EQ(tree_from_pruefer(2, {}).num_edges(), 1u);
  EXPECT_THROW(tree_from_pruefer(4, seq), std::invalid_argument);
}

TEST(RandomTreeTest, AlwaysATree) {
  Rng rng(1);
  for (std::size_t n = 1; n < 60; ++n) EXPECT_TRUE(is_tree(random_tree(n, rng)));
}

TEST(RandomDegenerateTest, RespectsBounds) {
  Rng rng(2);
  for (std::size_t D = 1; D <= 4; ++D) {
    const Graph g = random_degenerate(200, D, 3 * D, rng);
    EXPECT_LE(degeneracy_order(g).degeneracy(), D);
    EXPECT_LE(g.max_degree(), 3 * D);
    // Arrival order has left-degree <= D.
    for (Vertex v = 0; v < 200; ++v) {
      std::size_t left = 0;
      for (Vertex w : g.neighbors(v)) left += w < v ? 1 : 0;
      EXPECT_LE(left, D);
    }
  }
  EXPECT_THROW(random_degenerate(10, 3, 2, rng), std::invalid_argument);
}

TEST(GnpTest, ExtremesAndEdgeCount) {
  Rng rng(3);
  EXPECT_EQ(gnp(30, 0.0, rng).num_edges(), 0u);
  EXPECT_EQ(gnp(30, 1.0, rng).num_edges(), 435u);
  const double pairs = 300.0 * 299.0 / 2.0;
  const double sigma = std::sqrt(pairs * 0.3 * 0.7);
  for (int trial = 0; trial < 5; ++trial) {
    const double m = static_cast<double>(gnp(300, 0.3, rng).num_edges());
    EXPECT_LT(std::fabs(m - 0.3 * pairs), 3.0 * sigma);
  }
  EXPECT_THROW(gnp(5, 1.5, rng), std::invalid_argument);
}

TEST(FamilyTest, GyarfasSizesAndTruncation) {
  Rng rng(4);
  const auto family = gyarfas_family(10, rng);
  ASSERT_EQ(family.size(), 10u);
  std::size_t total = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(family[i].num_vertices(), i + 1);
    total += family[i].num_edges();
  }
  EXPECT_EQ(total, 45u);
  const auto cut = truncate_to_budget(family, 30);
  std::size_t kept = 0;
  for (const Graph& g : cut) kept += g.num_edges();
  EXPECT_LE(kept, 30u);
  EXPECT_EQ(cut.size(), 8u);  // drops the trees with 9 and 8 edges (45 - 17 = 28)
  EXPECT_EQ(ringel_family(4, rng).size(), 9u);
}

TEST(SpecTest, ParsesAndGenerates) {
  Rng rng(5);
  const GuestSpec degen = GuestSpec::parse("degen:n=40,D=2,maxdeg=6,count=3");
  EXPECT_EQ(degen.degeneracy_bound(), 2u);
  EXPECT_EQ(degen.generate(rng).size(), 3u);
  EXPECT_EQ(GuestSpec::parse("tree:n=9").degeneracy_bound(), 1u);
  EXPECT_EQ(GuestSpec::parse("gyarfas:n=6").generate(rng).size(), 6u);
  EXPECT_EQ(GuestSpec::parse("ringel:m=3,count=2").generate(rng).size(), 14u);
  EXPECT_EQ(HostSpec::parse("gnp:n=10,p=1").generate(rng).num_edges(), 45u);
  EXPECT_EQ(HostSpec::parse("complete:n=7").generate(rng).num_edges(), 21u);
}

std::size_t error_position(std::string_view text) {
  try {
    parse_guest_specs(text);
  } catch (const SpecError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

TEST(SpecTest, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("tree:n=abc"), 5u);
  EXPECT_EQ(error_position("tree:n=5,q=1"), 9u);
  EXPECT_EQ(error_position("tree:n=5;blob:n=3"), 9u);
  EXPECT_EQ(error_position("tree:n=5;tree:n"), 14u);
  EXPECT_EQ(error_position("tree:n=5,n=6"), 9u);
  EXPECT_EQ(error_position("tree:n=0"), 5u);
  EXPECT_EQ(error_position("tree:n=5;star:n=3"), std::string_view::npos);
  EXPECT_THROW(HostSpec::parse("gnp:n=5,p=2"), SpecError);
  EXPECT_THROW(HostSpec::parse("torus:n=5"), SpecError);
}

}  // namespace
}  // namespace degpack
