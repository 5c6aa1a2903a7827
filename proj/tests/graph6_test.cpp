#include "ramsey/graph6.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace ramsey;

namespace {

RedBlueGraph random_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> red;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) red.emplace_back(u, v);
  return RedBlueGraph::build(n, red);
}

// Second, independently written reader: decodes one bit at a time with
// shifts over a flat bit counter and fills a dense matrix.
std::vector<std::vector<int>> flat_decode(const std::string& s) {
  int n = s.at(0) - 63;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  int pos = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      int chunk = s.at(1 + pos / 6) - 63;
      m[row][col] = m[col][row] = (chunk >> (5 - pos % 6)) & 1;
      ++pos;
    }
  return m;
}

}  // namespace

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 3 + rng() % 6;
    RedBlueGraph g = random_graph(rng, n);
    EXPECT_TRUE(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST(Graph6, EmptyGraphBytes) {
  RedBlueGraph g = RedBlueGraph::build(5, {});
  std::string s = graph6_encode(g);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], static_cast<char>(5 + 63));
  EXPECT_EQ(s[1], static_cast<char>(63));
  EXPECT_EQ(s[2], static_cast<char>(63));
}

TEST(Graph6, KnownVector) {
  // Red 5-cycle 0-1-2-3-4-0: column bits 1|01|001|1001 pack to 101001 100100,
  // i.e. bytes 63+41, 63+36 after the size byte.
  RedBlueGraph g =
      RedBlueGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(graph6_encode(g), "Dhc");
}

TEST(Graph6, Errors) {
  EXPECT_THROW(graph6_decode(""), Graph6Error);
  EXPECT_THROW(graph6_decode("D?"), Graph6Error);         // truncated payload
  EXPECT_THROW(graph6_decode("D???"), Graph6Error);       // overlong payload
  EXPECT_THROW(graph6_decode(std::string(1, 1)), Graph6Error);  // bad size byte
  // Nonzero padding bits after the triangle.
  std::string padded = graph6_encode(RedBlueGraph::build(5, {}));
  padded.back() = static_cast<char>(63 + 1);
  EXPECT_THROW(graph6_decode(padded), Graph6Error);
  // Single-byte size header stops at 62 vertices.
  EXPECT_THROW(graph6_encode(RedBlueGraph::build(63, {})), Graph6Error);
}

TEST(Graph6, BlueConventionDecodesComplement) {
  std::mt19937_64 rng(7);
  RedBlueGraph g = random_graph(rng, 6);
  std::string s = graph6_encode(g);
  RedBlueGraph back = graph6_decode(s, Colour::Blue);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      EXPECT_EQ(g.is_red(u, v), !back.is_red(u, v));
}

TEST(Graph6, AgreesWithIndependentReader) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + rng() % 10;
    RedBlueGraph g = random_graph(rng, n);
    auto m = flat_decode(graph6_encode(g));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        ASSERT_EQ(m[u][v] == 1, g.is_red(u, v));
  }
}
