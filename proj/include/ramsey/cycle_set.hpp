#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Cycle length that may be infinite. Infinity compares above every finite
// value, absorbs addition, and halves to itself.
class ExtLen {
 public:
  constexpr ExtLen() : v_(kInf) {}
  constexpr ExtLen(int v) : v_(v) {}

  static constexpr ExtLen infinity() { return ExtLen(); }

  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr int value() const {
    if (!is_finite()) throw std::logic_error("ExtLen: value() on infinity");
    return v_;
  }

  constexpr ExtLen plus(int d) const { return is_finite() ? ExtLen(v_ + d) : infinity(); }
  constexpr ExtLen half() const { return is_finite() ? ExtLen(v_ / 2) : infinity(); }
  constexpr ExtLen times(int f) const { return is_finite() ? ExtLen(v_ * f) : infinity(); }

  friend constexpr bool operator==(ExtLen a, ExtLen b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(ExtLen a, ExtLen b) {
    // kInf is numeric_limits::max, so plain integer order is correct.
    return a.v_ <=> b.v_;
  }

  friend constexpr ExtLen min(ExtLen a, ExtLen b) { return a < b ? a : b; }
  friend constexpr ExtLen max(ExtLen a, ExtLen b) { return a < b ? b : a; }

  // min(a, b) as a plain int when one side is guaranteed finite.
  friend constexpr int min_finite(ExtLen a, int b) {
    return a.is_finite() && a.v_ < b ? a.v_ : b;
  }

  std::string to_string() const { return is_finite() ? std::to_string(v_) : "inf"; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int v_;
};

enum class Parity : std::uint8_t { Any, Odd, Even };

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// A set of cycle lengths: finite atoms plus parity-filtered upward tails.
// Values are immutable after construction and safe to share across threads.
//
// Text grammar (comma separated, optional surrounding braces):
//   atom := INT | "<=" INT | ">=" INT [":" ("odd"|"even")] | "odd" | "even" | "all"
// with INT >= 3. "<=m" expands to the atoms 3..m; "odd"/"even"/"all" are
// tails starting at the least legal length (4 for "even").
class CycleSet {
 public:
  struct Tail {
    int min_len;
    Parity parity;
    friend bool operator==(const Tail&, const Tail&) = default;
  };

  static constexpr int kMaxAtom = 4096;

  CycleSet(std::vector<int> atoms, std::vector<Tail> tails) {
    for (int a : atoms) {
      if (a < 3) throw std::invalid_argument("cycle length below 3");
      if (a > kMaxAtom) throw std::invalid_argument("cycle length above supported cap");
    }
    for (Tail t : tails) {
      if (t.min_len < 3) throw std::invalid_argument("tail start below 3");
      if (t.min_len > kMaxAtom) throw std::invalid_argument("tail start above supported cap");
    }
    atoms_ = std::move(atoms);
    tails_ = std::move(tails);
    normalize();
    if (atoms_.empty() && tails_.empty())
      throw std::invalid_argument("empty cycle set");
  }

  static CycleSet parse(std::string_view text);

  static CycleSet single(int k) { return CycleSet({k}, {}); }
  static CycleSet of(std::initializer_list<int> ks) { return CycleSet(std::vector<int>(ks), {}); }
  static CycleSet at_least(int m, Parity p = Parity::Any) { return CycleSet({}, {Tail{m, p}}); }
  static CycleSet up_to(int m) {
    std::vector<int> as;
    for (int k = 3; k <= m; ++k) as.push_back(k);
    return CycleSet(std::move(as), {});
  }
  static CycleSet all() { return at_least(3); }

  bool contains(int k) const {
    if (k < 3) throw std::invalid_argument("contains: cycle length below 3");
    if (std::binary_search(atoms_.begin(), atoms_.end(), k)) return true;
    for (const Tail& t : tails_)
      if (k >= t.min_len && parity_ok(t.parity, k)) return true;
    return false;
  }

  // Least member. Non-emptiness is a construction invariant.
  int min_length() const {
    int best = std::numeric_limits<int>::max();
    if (!atoms_.empty()) best = atoms_.front();
    for (const Tail& t : tails_) best = std::min(best, t.min_len);
    return best;
  }

  // Least even member, infinite when the set has no even cycle.
  ExtLen min_even_length() const {
    ExtLen best = ExtLen::infinity();
    for (int a : atoms_)
      if (a % 2 == 0) { best = min(best, ExtLen(a)); break; }
    for (const Tail& t : tails_) {
      if (t.parity == Parity::Odd) continue;
      int m = t.min_len;
      if (m % 2 != 0) ++m;
      best = min(best, ExtLen(m));
    }
    return best;
  }

  const std::vector<int>& atoms() const { return atoms_; }
  const std::vector<Tail>& tails() const { return tails_; }

  bool eventually_covers(Parity p) const {
    for (const Tail& t : tails_)
      if (t.parity == Parity::Any || t.parity == p) return true;
    return false;
  }

  // Canonical printable form; parse(to_string()) denotes the same set.
  std::string to_string() const {
    std::string out;
    auto sep = [&] { if (!out.empty()) out += ','; };
    for (int a : atoms_) { sep(); out += std::to_string(a); }
    for (const Tail& t : tails_) {
      sep();
      switch (t.parity) {
        case Parity::Any:
          out += t.min_len == 3 ? "all" : ">=" + std::to_string(t.min_len);
          break;
        case Parity::Odd:
          out += t.min_len == 3 ? "odd" : ">=" + std::to_string(t.min_len) + ":odd";
          break;
        case Parity::Even:
          out += t.min_len == 4 ? "even" : ">=" + std::to_string(t.min_len) + ":even";
          break;
      }
    }
    return out;
  }

  // Denotational equality (same member set, including the infinite part).
  bool same_set(const CycleSet& other) const {
    if (eventually_covers(Parity::Odd) != other.eventually_covers(Parity::Odd)) return false;
    if (eventually_covers(Parity::Even) != other.eventually_covers(Parity::Even)) return false;
    int m = 3;
    for (int a : atoms_) m = std::max(m, a);
    for (int a : other.atoms_) m = std::max(m, a);
    for (const Tail& t : tails_) m = std::max(m, t.min_len);
    for (const Tail& t : other.tails_) m = std::max(m, t.min_len);
    for (int k = 3; k <= m + 2; ++k)
      if (contains(k) != other.contains(k)) return false;
    return true;
  }

 private:
  static bool parity_ok(Parity p, int k) {
    switch (p) {
      case Parity::Any: return true;
      case Parity::Odd: return k % 2 == 1;
      case Parity::Even: return k % 2 == 0;
    }
    return false;
  }

  void normalize() {
    // Tail starts snap to the least length of the right parity.
    for (Tail& t : tails_) {
      if (t.parity == Parity::Odd && t.min_len % 2 == 0) ++t.min_len;
      if (t.parity == Parity::Even && t.min_len % 2 == 1) ++t.min_len;
      if (t.parity == Parity::Even && t.min_len < 4) t.min_len = 4;
    }
    // Keep one tail per parity kind, the widest.
    auto keep_min = [&](Parity p) -> int {
      int best = std::numeric_limits<int>::max();
      for (const Tail& t : tails_)
        if (t.parity == p) best = std::min(best, t.min_len);
      return best;
    };
    int any_min = keep_min(Parity::Any);
    int odd_min = keep_min(Parity::Odd);
    int even_min = keep_min(Parity::Even);
    // Adjacent odd+even tails collapse to a full tail.
    if (odd_min != std::numeric_limits<int>::max() &&
        even_min != std::numeric_limits<int>::max() &&
        std::abs(odd_min - even_min) == 1) {
      any_min = std::min(any_min, std::min(odd_min, even_min));
    }
    tails_.clear();
    if (any_min != std::numeric_limits<int>::max()) tails_.push_back({any_min, Parity::Any});
    auto covered_by_any = [&](int m) { return any_min <= m; };
    if (odd_min != std::numeric_limits<int>::max() && !covered_by_any(odd_min))
      tails_.push_back({odd_min, Parity::Odd});
    if (even_min != std::numeric_limits<int>::max() && !covered_by_any(even_min))
      tails_.push_back({even_min, Parity::Even});

    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    std::erase_if(atoms_, [&](int a) {
      for (const Tail& t : tails_)
        if (a >= t.min_len && parity_ok(t.parity, a)) return true;
      return false;
    });
  }

  std::vector<int> atoms_;
  std::vector<Tail> tails_;
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline int parse_int(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError("expected integer", start);
  int v = 0;
  auto res = std::from_chars(s.data() + start, s.data() + i, v);
  if (res.ec != std::errc{} || v > CycleSet::kMaxAtom)
    throw ParseError("integer out of range", start);
  if (v < 3) throw ParseError("cycle length below 3", start);
  return v;
}

}  // namespace detail

inline CycleSet CycleSet::parse(std::string_view text) {
  std::string_view s = text;
  std::size_t base = 0;
  // Optional surrounding braces.
  {
    std::size_t a = 0, b = s.size();
    detail::skip_ws(s, a);
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    if (b > a && s[a] == '{' && s[b - 1] == '}') {
      base = a + 1;
      s = s.substr(a + 1, b - a - 2);
    }
  }

  std::vector<int> atoms;
  std::vector<Tail> tails;
  std::size_t i = 0;
  bool any_atom = false;
  while (true) {
    detail::skip_ws(s, i);
    if (i >= s.size()) {
      if (!any_atom) throw ParseError("empty cycle set", base + i);
      break;
    }
    std::size_t atom_start = i;
    if (s.compare(i, 2, "<=") == 0) {
      i += 2;
      int m = detail::parse_int(s, i);
      for (int k = 3; k <= m; ++k) atoms.push_back(k);
    } else if (s.compare(i, 2, ">=") == 0) {
      i += 2;
      int m = detail::parse_int(s, i);
      Parity p = Parity::Any;
      detail::skip_ws(s, i);
      if (i < s.size() && s[i] == ':') {
        ++i;
        detail::skip_ws(s, i);
        if (s.compare(i, 3, "odd") == 0) { p = Parity::Odd; i += 3; }
        else if (s.compare(i, 4, "even") == 0) { p = Parity::Even; i += 4; }
        else throw ParseError("expected 'odd' or 'even' after ':'", base + i);
      }
      tails.push_back({m, p});
    } else if (s.compare(i, 3, "odd") == 0) {
      i += 3;
      tails.push_back({3, Parity::Odd});
    } else if (s.compare(i, 4, "even") == 0) {
      i += 4;
      tails.push_back({4, Parity::Even});
    } else if (s.compare(i, 3, "all") == 0) {
      i += 3;
      tails.push_back({3, Parity::Any});
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      atoms.push_back(detail::parse_int(s, i));
    } else {
      throw ParseError("unexpected character", base + atom_start);
    }
    any_atom = true;
    detail::skip_ws(s, i);
    if (i >= s.size()) break;
    if (s[i] != ',') throw ParseError("expected ','", base + i);
    ++i;
    detail::skip_ws(s, i);
    if (i >= s.size()) throw ParseError("trailing ','", base + i);
  }
  try {
    return CycleSet(std::move(atoms), std::move(tails));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), base);
  }
}

// Short alias used all over the tests and the CLI.
inline CycleSet cs(std::string_view text) { return CycleSet::parse(text); }

}  // namespace ramsey
