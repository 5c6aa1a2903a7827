#include "ramsey/lemmas.hpp"

#include <gtest/gtest.h>

using namespace ramsey;

TEST(VerifyLemma, TriangleFreeDichotomyExhaustive) {
  for (int n : {5, 6}) {
    LemmaReport r = verify_lemma("L3.7", n);
    EXPECT_TRUE(r.pass()) << n;
    EXPECT_TRUE(r.exhaustive);
    EXPECT_GT(r.hypothesis_hits, 0u);
    EXPECT_EQ(r.checked, std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST(VerifyLemma, EvenCascadeAtSix) {
  LemmaReport r = verify_lemma("L3.5b", 6);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_GT(r.hypothesis_hits, 0u);
}

TEST(VerifyLemma, ShortBlueFiveFreeProperties) {
  EXPECT_TRUE(verify_lemma("L3.11", 6).pass());
  EXPECT_TRUE(verify_lemma("L3.6", 6).pass());
}

TEST(VerifyLemma, SampledAtEight) {
  EXPECT_TRUE(verify_lemma("L3.12", 8, 20000).pass());
  EXPECT_TRUE(verify_lemma("P3.10", 8, 20000).pass());
  EXPECT_TRUE(verify_lemma("L3.13", 8, 20000).pass());
}

TEST(VerifyLemma, OptionalPancyclicityCheck) {
  LemmaReport r = verify_lemma("L3.9", 6);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.hypothesis_hits, 0u);
}

TEST(VerifyLemma, BlueBipartitenessViaSearch) {
  LemmaReport r = verify_lemma("P4.9", 7);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.hypothesis_hits, 0u);
}

TEST(VerifyLemma, UnknownIdThrows) {
  EXPECT_THROW(verify_lemma("L9.9", 6), std::invalid_argument);
  EXPECT_THROW(verify_lemma("L3.7", 2), std::invalid_argument);
}

TEST(VerifyLemma, DeterministicForFixedSeed) {
  LemmaReport a = verify_lemma("L3.12", 8, 5000, 123);
  LemmaReport b = verify_lemma("L3.12", 8, 5000, 123);
  EXPECT_EQ(a.hypothesis_hits, b.hypothesis_hits);
  EXPECT_EQ(a.checked, b.checked);
}

TEST(LemmaCatalog, ListsEverything) {
  auto ids = lemma_catalog();
  EXPECT_EQ(ids.size(), 12u);
  for (const auto& id : ids)
    if (id != "P4.9") EXPECT_NO_THROW(verify_lemma(id, 6, 500));
}
