#include "ramsey/canonical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ramsey/witnesses.hpp"

using namespace ramsey;

namespace {

RedBlueGraph random_graph(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> red;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) red.emplace_back(u, v);
  return RedBlueGraph::build(n, red);
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Permutation brute force: isomorphic iff some relabeling maps one onto the
// other. Only usable for tiny orders; that is the point.
bool brute_isomorphic(const RedBlueGraph& a, const RedBlueGraph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> perm(a.order());
  for (int i = 0; i < a.order(); ++i) perm[i] = i;
  do {
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(CanonicalKey, RelabelingInvariance) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + rng() % 7;  // up to 9
    RedBlueGraph g = random_graph(rng, n);
    RedBlueGraph h = g.permuted(random_permutation(rng, n));
    ASSERT_EQ(canonical_key(g), canonical_key(h)) << "trial " << trial;
  }
}

TEST(CanonicalKey, DistinguishesEdgeCounts) {
  RedBlueGraph full = build_witness(WitnessSpec::balanced_minus(5, false));
  RedBlueGraph minus = build_witness(WitnessSpec::balanced_minus(5, true));
  EXPECT_NE(canonical_key(full), canonical_key(minus));
}

TEST(CanonicalKey, ElevenClassesOnFourVertices) {
  // Expected count derived by pairwise permutation-isomorphism testing.
  std::vector<RedBlueGraph> graphs;
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    std::vector<std::pair<int, int>> red;
    int idx = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++idx)
        if ((bits >> idx) & 1) red.emplace_back(u, v);
    graphs.push_back(RedBlueGraph::build(4, red));
  }

  std::vector<RedBlueGraph> brute_reps;
  for (const auto& g : graphs) {
    bool seen = false;
    for (const auto& rep : brute_reps)
      if (brute_isomorphic(g, rep)) { seen = true; break; }
    if (!seen) brute_reps.push_back(g);
  }
  EXPECT_EQ(brute_reps.size(), 11u);

  std::set<CanonicalKey> keys;
  for (const auto& g : graphs) keys.insert(canonical_key(g));
  EXPECT_EQ(keys.size(), brute_reps.size());
}

TEST(CanonicalKey, EqualKeyMeansBruteIsomorphic) {
  std::mt19937 rng(99);
  std::map<CanonicalKey, RedBlueGraph> seen;
  for (int trial = 0; trial < 400; ++trial) {
    RedBlueGraph g = random_graph(rng, 5);
    CanonicalKey k = canonical_key(g);
    auto it = seen.find(k);
    if (it != seen.end())
      ASSERT_TRUE(brute_isomorphic(g, it->second));
    else
      seen.emplace(k, g);
  }
}

TEST(CanonicalKey, RespectsAvoidance) {
  std::mt19937 rng(7);
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"3", "3"}, {"4", "4"}, {"3,5", "4"}, {">=4", "odd"}};
  std::map<CanonicalKey, RedBlueGraph> seen;
  for (int trial = 0; trial < 600; ++trial) {
    RedBlueGraph g = random_graph(rng, 6);
    CanonicalKey k = canonical_key(g);
    auto it = seen.find(k);
    if (it != seen.end()) {
      for (auto& [a, b] : pairs)
        ASSERT_EQ(is_avoiding(g, cs(a), cs(b)), is_avoiding(it->second, cs(a), cs(b)));
    } else {
      seen.emplace(k, g);
    }
  }
}

TEST(CanonicalKey, HighlySymmetricGraphs) {
  // Balanced bicliques stress the refinement: every vertex looks alike.
  for (int n = 5; n <= 6; ++n) {
    RedBlueGraph g = build_witness(WitnessSpec::blue_balanced(n));
    std::mt19937 rng(n);
    for (int t = 0; t < 20; ++t) {
      RedBlueGraph h = g.permuted(random_permutation(rng, g.order()));
      ASSERT_EQ(canonical_key(g), canonical_key(h));
    }
  }
}

TEST(CanonicalOrder, ProducesValidPermutation) {
  std::mt19937 rng(5);
  RedBlueGraph g = random_graph(rng, 7);
  std::vector<int> order = canonical_order(g);
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 7; ++i) EXPECT_EQ(sorted[i], i);
}
