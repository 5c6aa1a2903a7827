#include "ramsey/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ramsey/witnesses.hpp"

using namespace ramsey;

namespace {

RedBlueGraph pentagon() { return build_witness(WitnessSpec::pentagon5()); }

RedBlueGraph all_red(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return RedBlueGraph::build(n, edges);
}

RedBlueGraph blue_k44() { return build_witness(WitnessSpec::blue_balanced(5)); }

// Brute-force cycle detection: try every k-subset in every order.
// Independent of the production search.
bool brute_cycle(const RedBlueGraph& g, Colour c, int k) {
  int n = g.order();
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - k, pick.end(), true);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (pick[i]) verts.push_back(i);
    std::sort(verts.begin(), verts.end());
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int u = verts[i], v = verts[(i + 1) % k];
        if (g.colour_of(u, v) != c) ok = false;
      }
      if (ok) return true;
    } while (std::next_permutation(verts.begin() + 1, verts.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

RedBlueGraph graph_from_bits(int n, std::uint32_t bits) {
  std::vector<std::pair<int, int>> red;
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if ((bits >> idx) & 1) red.emplace_back(u, v);
  return RedBlueGraph::build(n, red);
}

}  // namespace

TEST(Build, Examples) {
  RedBlueGraph k3 = all_red(3);
  EXPECT_TRUE(k3.is_red(0, 1) && k3.is_red(1, 2) && k3.is_red(0, 2));
  RedBlueGraph k4 = RedBlueGraph::build(4, {});
  EXPECT_EQ(k4.degree(Colour::Blue, 0), 3);
  EXPECT_EQ(pentagon().degree(Colour::Red, 2), 2);
}

TEST(Build, Errors) {
  EXPECT_THROW(RedBlueGraph::build(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(RedBlueGraph::build(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(RedBlueGraph::build(4, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(RedBlueGraph::build(2, {}), std::invalid_argument);
  EXPECT_THROW(RedBlueGraph::build(65, {}), std::invalid_argument);
}

TEST(CycleExists, PentagonAndCompanions) {
  RedBlueGraph p = pentagon();
  EXPECT_TRUE(cycle_exists(p, Colour::Red, 5));
  EXPECT_FALSE(cycle_exists(p, Colour::Red, 3));
  EXPECT_TRUE(cycle_exists(p, Colour::Blue, 5));
  EXPECT_FALSE(cycle_exists(p, Colour::Blue, 3));

  RedBlueGraph k6 = all_red(6);
  for (int k = 3; k <= 6; ++k) EXPECT_TRUE(cycle_exists(k6, Colour::Red, k));

  RedBlueGraph bip = blue_k44();
  EXPECT_FALSE(cycle_exists(bip, Colour::Blue, 5));
  EXPECT_TRUE(cycle_exists(bip, Colour::Blue, 4));
  EXPECT_THROW(cycle_exists(bip, Colour::Blue, 9), std::invalid_argument);
}

TEST(CycleExists, MatchesBruteForceOnAllSmallGraphs) {
  for (int n = 4; n <= 6; ++n) {
    int nedges = n * (n - 1) / 2;
    for (std::uint32_t bits = 0; bits < (1u << nedges); ++bits) {
      RedBlueGraph g = graph_from_bits(n, bits);
      for (int k = 3; k <= n; ++k)
        for (Colour c : {Colour::Red, Colour::Blue})
          ASSERT_EQ(cycle_exists(g, c, k), brute_cycle(g, c, k))
              << "n=" << n << " bits=" << bits << " k=" << k;
    }
  }
}

TEST(CycleFromSet, Examples) {
  EXPECT_FALSE(cycle_from_set(pentagon(), Colour::Blue, cs("3")).has_value());
  EXPECT_EQ(cycle_from_set(all_red(5), Colour::Red, cs(">=4")), 4);
  EXPECT_FALSE(cycle_from_set(blue_k44(), Colour::Blue, cs("odd")).has_value());
}

TEST(IsAvoiding, Examples) {
  EXPECT_TRUE(is_avoiding(pentagon(), cs("3"), cs("3")));
  EXPECT_TRUE(is_avoiding(blue_k44(), cs(">=5"), cs("odd")));
  EXPECT_FALSE(is_avoiding(all_red(6), cs("3"), cs("3")));
}

TEST(IsBipartite, Examples) {
  auto parts = is_bipartite(blue_k44(), Colour::Blue);
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(std::popcount((*parts)[0]), 4);
  EXPECT_EQ(std::popcount((*parts)[1]), 4);

  EXPECT_FALSE(is_bipartite(pentagon(), Colour::Blue).has_value());

  RedBlueGraph one_blue = RedBlueGraph::build(3, {{0, 1}, {0, 2}});  // blue edge 1-2
  EXPECT_TRUE(is_bipartite(one_blue, Colour::Blue).has_value());
}

TEST(IsPancyclic, Examples) {
  EXPECT_TRUE(is_pancyclic(all_red(5), Colour::Red, 0b11111));
  EXPECT_TRUE(is_pancyclic(all_red(6), Colour::Red, 0b111111));  // 6-cycle, all chords red
  RedBlueGraph red_k33 = build_witness(WitnessSpec::red_biclique(4));  // red K33 on 6
  EXPECT_FALSE(is_pancyclic(red_k33, Colour::Red, 0b111111));
  EXPECT_THROW(is_pancyclic(all_red(5), Colour::Red, 0b11), std::invalid_argument);
}

TEST(CliqueExists, Examples) {
  EXPECT_TRUE(clique_exists(all_red(5), Colour::Red, 5));
  EXPECT_FALSE(clique_exists(pentagon(), Colour::Red, 3));
  EXPECT_FALSE(clique_exists(blue_k44(), Colour::Blue, 3));
  EXPECT_TRUE(clique_exists(blue_k44(), Colour::Red, 4));
  EXPECT_THROW(clique_exists(all_red(5), Colour::Red, 6), std::invalid_argument);
}

// A non-avoiding induced subgraph poisons every completion.
TEST(IsAvoiding, MonotoneUnderInducedSubgraphs) {
  std::mt19937 rng(42);
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"3", "3"}, {"4", "4"}, {"3,5", "4"}, {">=4", "3"}, {"odd", "even"}};
  for (int trial = 0; trial < 300; ++trial) {
    int m = 4 + rng() % 3;
    int n = m + 1 + rng() % 3;
    RedBlueGraph small = graph_from_bits(m, rng() & ((1u << (m * (m - 1) / 2)) - 1));
    std::vector<std::pair<int, int>> red = small.edges(Colour::Red);
    for (int u = 0; u < n; ++u)
      for (int v = std::max(u + 1, m); v < n; ++v)
        if (rng() & 1) red.emplace_back(u, v);
    RedBlueGraph big = RedBlueGraph::build(n, red);
    for (auto& [a, b] : pairs) {
      if (!is_avoiding(small, cs(a), cs(b)))
        ASSERT_FALSE(is_avoiding(big, cs(a), cs(b))) << a << ";" << b;
    }
  }
}

// Even-cycle cascade: a monochromatic 6-cycle forces a monochromatic 4-cycle.
TEST(CycleExists, MonochromaticCascadeExhaustiveAt6) {
  for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
    RedBlueGraph g = graph_from_bits(6, bits);
    bool c6 = cycle_exists(g, Colour::Red, 6) || cycle_exists(g, Colour::Blue, 6);
    if (c6)
      ASSERT_TRUE(cycle_exists(g, Colour::Red, 4) || cycle_exists(g, Colour::Blue, 4))
          << bits;
  }
}
