#include <gtest/gtest.h>

#include <set>

#include "flagstar/permutation.hpp"

using flagstar::Permutation;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(Permutation, LengthOracles) {
  EXPECT_EQ(length(P("123")), 0);
  EXPECT_EQ(length(P("321")), 3);
  EXPECT_EQ(length(P("312")), 2);
}

TEST(Permutation, ComposeOracles) {
  EXPECT_EQ(compose(P("321"), P("312")), P("132"));
  for (const auto& w : flagstar::all_permutations(3)) EXPECT_EQ(compose(P("123"), w), w);
  EXPECT_EQ(compose(P("321"), P("321")), P("123"));
}

TEST(Permutation, ComposeRejectsSizeMismatch) {
  EXPECT_THROW(compose(P("12"), P("123")), std::invalid_argument);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(P("1a3"), std::invalid_argument);
}

TEST(Permutation, ParseForms) {
  EXPECT_EQ(P("2,1,3"), P("213"));
  EXPECT_EQ(P("213").to_string(), "213");
}

TEST(Permutation, AssociativityAndLongestLengthExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = flagstar::all_permutations(n);
    const auto w0 = Permutation::longest(n);
    for (const auto& w : all) EXPECT_EQ(length(compose(w0, w)), n * (n - 1) / 2 - length(w));
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& c : all) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      }
    }
  }
}

TEST(Permutation, SwapPositionsIsRightMultiplication) {
  const auto w = P("2413");
  EXPECT_EQ(w.swap_positions(1, 3), compose(w, Permutation::transposition(4, 1, 3)));
}

TEST(Permutation, ReducedWordsMultiplyBack) {
  for (const auto& w : flagstar::all_permutations(4)) {
    const auto words = w.reduced_words();
    std::set<std::vector<int>> distinct(words.begin(), words.end());
    EXPECT_EQ(distinct.size(), words.size());
    for (const auto& word : words) {
      ASSERT_EQ(static_cast<int>(word.size()), w.length());
      auto p = Permutation::identity(4);
      for (int i : word) p = compose(p, Permutation::simple(4, i));
      EXPECT_EQ(p, w);
    }
    EXPECT_EQ(w.reduced_word(), words.empty() ? std::vector<int>{} : w.reduced_word());
  }
  EXPECT_EQ(P("321").reduced_words().size(), 2u);
}

TEST(Permutation, AllPermutationsIsLexicographic) {
  const auto all = flagstar::all_permutations(3);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), P("123"));
  EXPECT_EQ(all[1], P("132"));
  EXPECT_EQ(all.back(), P("321"));
}
