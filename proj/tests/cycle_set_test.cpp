#include "ramsey/cycle_set.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <random>
#include <sstream>

using namespace ramsey;

TEST(ExtLen, InfinityOrderAndArithmetic) {
  ExtLen inf = ExtLen::infinity();
  EXPECT_TRUE(inf > ExtLen(1000000));
  EXPECT_EQ(min(inf, ExtLen(7)), ExtLen(7));
  EXPECT_EQ(inf.plus(5), inf);
  EXPECT_EQ(inf.half(), inf);
  EXPECT_EQ(ExtLen(8).half(), ExtLen(4));
  EXPECT_EQ(min_finite(inf, 9), 9);
  EXPECT_EQ(min_finite(ExtLen(4), 9), 4);
}

TEST(CycleSetParse, FiniteAtoms) {
  CycleSet s = cs("3,5");
  EXPECT_EQ(s.atoms(), (std::vector<int>{3, 5}));
  EXPECT_TRUE(s.tails().empty());
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
}

TEST(CycleSetParse, Tails) {
  CycleSet s = cs(">=5");
  EXPECT_EQ(s.min_length(), 5);
  EXPECT_TRUE(s.contains(6));
  EXPECT_FALSE(s.contains(4));

  CycleSet odd = cs("odd");
  EXPECT_EQ(odd.min_even_length(), ExtLen::infinity());
  EXPECT_FALSE(odd.contains(8));
  EXPECT_TRUE(odd.contains(9));

  EXPECT_TRUE(cs(">=6").contains(6));
  EXPECT_FALSE(cs("<=4").contains(5));
}

TEST(CycleSetParse, BracesAndWhitespace) {
  EXPECT_TRUE(cs("{3}").contains(3));
  EXPECT_TRUE(cs(" { 3 , 5 } ").contains(5));
  EXPECT_TRUE(cs("{>=7:odd}").contains(9));
}

TEST(CycleSetParse, Errors) {
  EXPECT_THROW(cs(""), ParseError);
  EXPECT_THROW(cs("2"), ParseError);
  EXPECT_THROW(cs("3,,5"), ParseError);
  EXPECT_THROW(cs("3,"), ParseError);
  EXPECT_THROW(cs(">=x"), ParseError);
  EXPECT_THROW(cs(">=7:weird"), ParseError);
  try {
    cs("3,2");
  } catch (const ParseError& e) {
    EXPECT_GE(e.position, 2u);
  }
}

TEST(CycleSetMin, Gamma) {
  EXPECT_EQ(cs("{3,5}").min_length(), 3);
  EXPECT_EQ(cs(">=7:even").min_length(), 8);
  EXPECT_EQ(cs("even").min_length(), 4);
}

TEST(CycleSetMin, GammaEven) {
  EXPECT_EQ(cs("{5}").min_even_length(), ExtLen::infinity());
  EXPECT_EQ(cs(">=5").min_even_length(), ExtLen(6));
  EXPECT_EQ(cs("{3,8}").min_even_length(), ExtLen(8));
  EXPECT_EQ(cs("even").min_even_length(), ExtLen(4));
}

TEST(CycleSetInvariants, GammaVsGammaEven) {
  std::vector<std::string> samples = {"3",      "4",        "3,5",  ">=5",     "odd",
                                      "even",   "<=9",      "all",  ">=8:even", "5,>=12",
                                      "3,>=5",  ">=7:odd",  "4,9",  "6,>=11:odd"};
  for (const auto& t : samples) {
    CycleSet s = cs(t);
    ExtLen ge = s.min_even_length();
    EXPECT_LE(ExtLen(s.min_length()), ge) << t;
    EXPECT_EQ(s.min_length() % 2 == 0, ExtLen(s.min_length()) == ge) << t;
  }
}

// Independent re-evaluation of the grammar, one atom at a time, without the
// CycleSet normalisation machinery.
namespace {
bool naive_member(const std::string& text, int k) {
  std::string body = text;
  auto l = body.find('{');
  if (l != std::string::npos) {
    body.erase(body.find('}'), 1);
    body.erase(l, 1);
  }
  std::istringstream in(body);
  std::string atom;
  while (std::getline(in, atom, ',')) {
    std::erase_if(atom, [](char c) { return c == ' '; });
    if (atom == "all" && k >= 3) return true;
    if (atom == "odd" && k >= 3 && k % 2 == 1) return true;
    if (atom == "even" && k >= 4 && k % 2 == 0) return true;
    if (atom.rfind("<=", 0) == 0) {
      if (k >= 3 && k <= std::stoi(atom.substr(2))) return true;
    } else if (atom.rfind(">=", 0) == 0) {
      auto colon = atom.find(':');
      int m = std::stoi(atom.substr(2, colon - 2));
      bool par_ok = colon == std::string::npos ||
                    (atom.substr(colon + 1) == "odd" ? k % 2 == 1 : k % 2 == 0);
      if (k >= m && par_ok) return true;
    } else if (!atom.empty() && std::isdigit(static_cast<unsigned char>(atom[0]))) {
      if (k == std::stoi(atom)) return true;
    }
  }
  return false;
}
}  // namespace

TEST(CycleSetInvariants, AgreesWithNaiveDenotation) {
  std::vector<std::string> samples = {"3,5",       ">=5",       "odd",      "even",
                                      "all",       "<=7",       ">=9:odd",  ">=6:even",
                                      "4,>=11",    "3,4,5",     "{3,8}",    "5,>=8:even",
                                      "7,>=7:odd", "<=5,>=9"};
  for (const auto& t : samples) {
    CycleSet s = cs(t);
    for (int k = 3; k <= 64; ++k)
      EXPECT_EQ(s.contains(k), naive_member(t, k)) << t << " at " << k;
  }
}

TEST(CycleSetInvariants, PrinterRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> atoms;
    std::vector<CycleSet::Tail> tails;
    int n_atoms = rng() % 4;
    for (int i = 0; i < n_atoms; ++i) atoms.push_back(3 + rng() % 20);
    if (rng() % 3 == 0) tails.push_back({static_cast<int>(3 + rng() % 10), Parity::Any});
    if (rng() % 3 == 0) tails.push_back({static_cast<int>(3 + rng() % 10), Parity::Odd});
    if (rng() % 3 == 0) tails.push_back({static_cast<int>(3 + rng() % 10), Parity::Even});
    if (atoms.empty() && tails.empty()) atoms.push_back(3);
    CycleSet s(atoms, tails);
    CycleSet reparsed = cs(s.to_string());
    EXPECT_TRUE(s.same_set(reparsed)) << s.to_string();
    for (int k = 3; k <= 64; ++k) EXPECT_EQ(s.contains(k), reparsed.contains(k));
  }
}

TEST(CycleSetNormalise, AdjacentParityTailsMerge) {
  CycleSet s({}, {{5, Parity::Odd}, {4, Parity::Even}});
  EXPECT_TRUE(s.same_set(cs(">=4")));
  CycleSet t({}, {{3, Parity::Odd}, {4, Parity::Even}});
  EXPECT_TRUE(t.same_set(cs("all")));
}
