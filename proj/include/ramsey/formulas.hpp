#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ramsey/cycle_set.hpp"

namespace ramsey {

// The four minima that drive every closed-form value: shortest cycle and
// shortest even cycle of the red-avoided and the blue-avoided set.
struct MinLengths {
  int red_min;
  ExtLen red_even_min;
  int blue_min;
  ExtLen blue_even_min;

  MinLengths swapped() const { return {blue_min, blue_even_min, red_min, red_even_min}; }
};

inline MinLengths min_lengths(const CycleSet& red_set, const CycleSet& blue_set) {
  return {red_set.min_length(), red_set.min_even_length(),
          blue_set.min_length(), blue_set.min_even_length()};
}

// Threshold forcing a red cycle from the first set or a blue cycle from the
// second inside every blue-bipartite colouring. Depends only on the shortest
// red length and the shortest even blue length.
inline int blue_bipartite_ramsey(int red_min, ExtLen blue_even_min) {
  if (blue_even_min.is_finite() && blue_even_min.value() % 2 != 0)
    throw std::invalid_argument("even minimum must be even");
  if (red_min == 3 && blue_even_min == ExtLen(4)) return 5;
  return min_finite(blue_even_min.half().plus(red_min - 1), 2 * red_min - 1);
}

// Same with the colour roles swapped (red-bipartite colourings).
inline int red_bipartite_ramsey(int blue_min, ExtLen red_even_min) {
  return blue_bipartite_ramsey(blue_min, red_even_min);
}

// Closed form of max(red-bipartite threshold, blue-bipartite threshold).
inline int bipartite_bound(const MinLengths& m) {
  int t_red = min_finite(m.red_even_min.half().plus(m.blue_min - 1), 2 * m.blue_min - 1);
  int t_blue = min_finite(m.blue_even_min.half().plus(m.red_min - 1), 2 * m.red_min - 1);
  return std::max({5, t_red, t_blue});
}

inline int bipartite_bound(const CycleSet& red_set, const CycleSet& blue_set) {
  return bipartite_bound(min_lengths(red_set, blue_set));
}

// The exceptional pairs whose Ramsey number exceeds the bipartite bound by
// one: a 3-cycle or 4-cycle common to both sets, and neither set reaching
// the lengths 3 and 5 together.
inline bool in_plus_one_class(const CycleSet& a, const CycleSet& b) {
  bool shared_small = (a.contains(3) && b.contains(3)) || (a.contains(4) && b.contains(4));
  bool has3 = a.contains(3) || b.contains(3);
  bool has5 = a.contains(5) || b.contains(5);
  return shared_small && !(has3 && has5);
}

namespace detail {

// Condition family under which the pair reduces to the red-bipartite
// threshold. Fractional thresholds are compared as exact rationals.
inline bool reducible_conditions(const MinLengths& m) {
  const int g1 = m.red_min, g2 = m.blue_min;
  const ExtLen ge1 = m.red_even_min, ge2 = m.blue_even_min;
  // (i) g2 even and g2 >= max(6, ge1), or 2*g2 >= 3*ge1.
  if (g2 % 2 == 0 && g2 >= 6 && ExtLen(g2) >= ge1) return true;
  if (ExtLen(2 * g2) >= ge1.times(3)) return true;
  // (ii) g1 odd, ge1 >= 2*g2, and (g2 even with 3*g2 >= 2*g1, or g2 >= max(4, g1)).
  if (g1 % 2 == 1 && ge1 >= ExtLen(2 * g2)) {
    if (g2 % 2 == 0 && 3 * g2 >= 2 * g1) return true;
    if (g2 >= 4 && g2 >= g1) return true;
  }
  // (iii) g2 > ge1 and ge2 = g2 + 1.
  if (ExtLen(g2) > ge1 && ge2 == ExtLen(g2 + 1)) return true;
  return false;
}

}  // namespace detail

inline bool in_red_reducible_class(const MinLengths& m) {
  return detail::reducible_conditions(m);
}
inline bool in_blue_reducible_class(const MinLengths& m) {
  return detail::reducible_conditions(m.swapped());
}
inline bool in_red_reducible_class(const CycleSet& a, const CycleSet& b) {
  return in_red_reducible_class(min_lengths(a, b));
}
inline bool in_blue_reducible_class(const CycleSet& a, const CycleSet& b) {
  return in_blue_reducible_class(min_lengths(a, b));
}

enum class VerdictStatus { Exact, ConjecturedLowerBound };

inline const char* to_string(VerdictStatus s) {
  return s == VerdictStatus::Exact ? "Exact" : "ConjecturedLowerBound";
}

struct RamseyVerdict {
  int value;
  VerdictStatus status;
  std::string basis;
  MinLengths mins;
};

// The generalised Ramsey number of the pair: bipartite bound, plus one for
// the exceptional class, with exactness tracked per the rule that fired.
inline RamseyVerdict generalized_ramsey(const CycleSet& red_set, const CycleSet& blue_set) {
  MinLengths m = min_lengths(red_set, blue_set);
  bool plus_one = in_plus_one_class(red_set, blue_set);
  int value = bipartite_bound(m) + (plus_one ? 1 : 0);

  bool shared_small = (red_set.contains(3) && blue_set.contains(3)) ||
                      (red_set.contains(4) && blue_set.contains(4));
  int lo = std::min(m.red_min, m.blue_min);
  int hi = std::max(m.red_min, m.blue_min);

  std::string basis;
  VerdictStatus status = VerdictStatus::Exact;
  if (shared_small) {
    basis = "Prop4.2";
  } else if (lo == 3 && hi == 4) {
    basis = "Prop4.3";
  } else if (lo == 3) {
    basis = "Prop4.4";
  } else if (lo == 4) {
    basis = "Prop4.5";
  } else if (lo == 5 && hi == 5) {
    basis = "Prop4.6";
  } else if (lo == 5) {
    basis = "Prop4.7";
  } else if (lo == 6) {
    basis = "Prop4.8";
  } else if (in_red_reducible_class(m)) {
    basis = "Prop4.1(red)";
  } else if (in_blue_reducible_class(m)) {
    basis = "Prop4.1(blue)";
  } else {
    basis = "Conj1.11";
    status = VerdictStatus::ConjecturedLowerBound;
  }
  return {value, status, std::move(basis), m};
}

// Classification of a single-cycle pair (n >= k >= 3) by parity and the
// 3k/2 ratio; drives the classical closed form.
enum class CyclePairClass { Exceptional, HalfSum, TwiceShorter, TwiceLonger };

inline CyclePairClass cycle_pair_class(int n, int k) {
  if (n < k || k < 3) throw std::invalid_argument("need n >= k >= 3");
  if ((n == 3 && k == 3) || (n == 4 && k == 4)) return CyclePairClass::Exceptional;
  if (k % 2 == 1) return CyclePairClass::TwiceLonger;  // k odd, n >= 4 here
  if (n % 2 == 0) {
    if (n >= 6) return CyclePairClass::HalfSum;
    throw std::logic_error("unreachable: even n < 6 with even k is (4,4)");
  }
  // n odd, k even; at 2n == 3k both classes give the same value.
  return 2 * n >= 3 * k ? CyclePairClass::HalfSum : CyclePairClass::TwiceShorter;
}

inline int classical_cycle_ramsey(int n, int k) {
  switch (cycle_pair_class(n, k)) {
    case CyclePairClass::Exceptional: return 6;
    case CyclePairClass::HalfSum: return n + k / 2 - 1;
    case CyclePairClass::TwiceShorter: return 2 * k - 1;
    case CyclePairClass::TwiceLonger: return 2 * n - 1;
  }
  throw std::logic_error("unreachable");
}

// Ramsey numbers of a cycle-length range versus a complete graph.
enum class RangeKind { UpTo, AtLeast };

inline int cycle_vs_clique(RangeKind kind, int m, int n) {
  if (kind == RangeKind::UpTo) {
    if (!(m > n && n >= 2)) throw std::invalid_argument("UpTo needs m > n >= 2");
    return m < 2 * n - 1 ? 2 * n : 2 * n - 1;
  }
  if (!(m >= 3 && n >= 2)) throw std::invalid_argument("AtLeast needs m >= 3, n >= 2");
  return (m - 1) * (n - 1) + 1;
}

}  // namespace ramsey
