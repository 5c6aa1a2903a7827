#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

// Relabeling-invariant fingerprint of a coloured graph. Since blue is the
// complement of red, equality of keys is exactly colour-preserving
// isomorphism. The bytes are the graph6 encoding of the red subgraph under
// the canonical labeling, so keys are printable and directly comparable.
struct CanonicalKey {
  std::string bytes;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes <=> b.bytes;
  }
};

namespace detail {

// Canonical labeling by iterative degree/neighbourhood refinement plus
// backtracking over the remaining cell choices, selecting the
// lexicographically least adjacency encoding. Practical for the orders this
// project enumerates (n <= ~13, including complete bipartite graphs).
class Canonicalizer {
 public:
  Canonicalizer(const AdjMasks& red, int n) : red_(red), n_(n) {}

  std::vector<int> run() {
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    refine(cells);
    search(cells);
    return best_order_;
  }

 private:
  // Split every cell by the vector of red-neighbour counts into the current
  // cells; repeat to a fixed point. Sub-cells are ordered by signature, which
  // is label-free, so the refinement is isomorphism-invariant.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<VertexMask> cell_masks;
      cell_masks.reserve(cells.size());
      for (const auto& c : cells) {
        VertexMask m = 0;
        for (int v : c) m |= vbit(v);
        cell_masks.push_back(m);
      }
      std::vector<std::vector<int>> next;
      for (const auto& c : cells) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sigs;
        sigs.reserve(c.size());
        for (int v : c) {
          std::vector<int> sig;
          sig.reserve(cell_masks.size());
          for (VertexMask m : cell_masks)
            sig.push_back(std::popcount(red_[v] & m));
          sigs.emplace_back(std::move(sig), v);
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> cur;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
          if (i > 0 && sigs[i].first != sigs[i - 1].first) {
            next.push_back(cur);
            cur.clear();
            changed = true;
          }
          cur.push_back(sigs[i].second);
        }
        next.push_back(cur);
        if (next.back().size() != c.size()) changed = true;
      }
      cells = std::move(next);
    }
  }

  // Bits of the red upper triangle among the first t ordered vertices, in
  // the same column order the final encoding uses. Leading singleton cells
  // therefore fix a prefix of the encoding, which prunes the search.
  std::vector<bool> prefix_bits(const std::vector<int>& order) const {
    std::vector<bool> bits;
    bits.reserve(order.size() * (order.size() - 1) / 2);
    for (std::size_t j = 1; j < order.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        bits.push_back((red_[order[i]] >> order[j]) & 1);
    return bits;
  }

  static std::strong_ordering compare_prefix(const std::vector<bool>& probe,
                                             const std::vector<bool>& best) {
    std::size_t m = std::min(probe.size(), best.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (probe[i] != best[i]) return probe[i] ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  void search(std::vector<std::vector<int>> cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) { target = i; break; }

    if (target == cells.size()) {
      std::vector<int> order;
      order.reserve(n_);
      for (const auto& c : cells) order.push_back(c[0]);
      std::vector<bool> bits = prefix_bits(order);
      if (!have_best_ || compare_prefix(bits, best_bits_) == std::strong_ordering::less) {
        best_bits_ = std::move(bits);
        best_order_ = std::move(order);
        have_best_ = true;
      }
      return;
    }

    if (have_best_) {
      std::vector<int> fixed;
      for (std::size_t i = 0; i < target; ++i) fixed.push_back(cells[i][0]);
      if (compare_prefix(prefix_bits(fixed), best_bits_) == std::strong_ordering::greater)
        return;
    }

    for (int v : cells[target]) {
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < target; ++i) child.push_back(cells[i]);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      for (std::size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
      refine(child);
      search(std::move(child));
    }
  }

  const AdjMasks& red_;
  int n_;
  bool have_best_ = false;
  std::vector<bool> best_bits_;
  std::vector<int> best_order_;
};

}  // namespace detail

// Order in which the vertices must be listed to reach the canonical form.
inline std::vector<int> canonical_order(const RedBlueGraph& g) {
  AdjMasks red = g.subgraph(Colour::Red);
  return detail::Canonicalizer(red, g.order()).run();
}

inline CanonicalKey canonical_key(const RedBlueGraph& g) {
  std::vector<int> order = canonical_order(g);
  // perm maps old label -> new position.
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
  RedBlueGraph canon = g.permuted(perm);
  return CanonicalKey{graph6_encode(canon)};
}

}  // namespace ramsey
