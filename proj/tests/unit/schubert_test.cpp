#include <gtest/gtest.h>

#include "flagstar/permutation.hpp"
#include "flagstar/schubert.hpp"

using namespace flagstar;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }
Permutation W(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(DividedDifference, Oracles) {
  EXPECT_EQ(divided_difference(1, P("x1")), P("1"));
  EXPECT_EQ(divided_difference(1, P("x1^2")), P("x1 + x2"));
  EXPECT_EQ(divided_difference(2, P("x1")), P("0"));
}

TEST(DividedDifference, BraidAndNilpotence) {
  const auto f = P("x1^3*x2 + 2*x1*x3^2 - x2^2*x3");
  EXPECT_TRUE(divided_difference(1, divided_difference(1, f)).is_zero());
  EXPECT_EQ(divided_difference(1, divided_difference(2, divided_difference(1, f))),
            divided_difference(2, divided_difference(1, divided_difference(2, f))));
  EXPECT_THROW(divided_difference(0, f), std::invalid_argument);
}

TEST(SchubertPolynomial, Oracles) {
  EXPECT_EQ(schubert_polynomial(W("231")), P("x1*x2"));
  EXPECT_EQ(schubert_polynomial(W("312")), P("x1^2"));
  EXPECT_EQ(schubert_polynomial(W("123")), P("1"));
  EXPECT_EQ(schubert_polynomial(W("321")), P("x1^2*x2"));
  EXPECT_EQ(schubert_polynomial(W("132")), P("x1 + x2"));
}

TEST(SchubertPolynomial, IndependentOfReducedWord) {
  for (const auto& w : all_permutations(4)) {
    const auto target = compose(w.inverse(), Permutation::longest(4));
    for (const auto& word : target.reduced_words()) {
      ASSERT_EQ(schubert_polynomial_from_word(4, word), schubert_polynomial(w)) << w.to_string();
    }
  }
}

TEST(SchubertPolynomial, DegreeIsLength) {
  for (const auto& w : all_permutations(4)) EXPECT_EQ(schubert_polynomial(w).degree(4), 2 * w.length());
}

TEST(PairingIndex, Oracles) {
  EXPECT_EQ(pairing_index(W("123"), W("321")), 1);
  EXPECT_EQ(pairing_index(W("132"), W("312")), 1);
  EXPECT_EQ(pairing_index(W("213"), W("213")), 0);
  EXPECT_EQ(pairing_index(W("213"), W("231")), 1);
}

TEST(SchubertBasis, OrderAndDuals) {
  const SchubertBasis basis(3);
  std::vector<std::string> names;
  for (const auto& w : basis.order()) names.push_back(w.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"123", "132", "213", "231", "312", "321"}));
  EXPECT_EQ(basis.simple_index(1), basis.index(W("213")));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(basis.dual_index(basis.dual_index(i)), i);
    EXPECT_EQ(pairing_index(basis.at(i), basis.at(basis.dual_index(i))), 1);
  }
  EXPECT_THROW(basis.index(W("1234")), std::out_of_range);
}

TEST(ClassicalExpansion, SchubertPolynomialsAreUnitVectors) {
  const SchubertBasis basis(4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto c = classical_expansion(basis, basis.polynomial(i));
    for (std::size_t j = 0; j < c.size(); ++j) ASSERT_EQ(c[j], i == j ? 1 : 0);
  }
}

TEST(ClassicalExpansion, MonkAtN3) {
  const SchubertBasis basis(3);
  // x1 * S_213 = x1^2 = S_312.
  const auto c = classical_expansion(basis, P("x1^2"));
  EXPECT_EQ(c[basis.index(W("312"))], 1);
  // x1 (x1 + x2) = S_231 + S_312.
  const auto d = classical_expansion(basis, P("x1^2 + x1*x2"));
  EXPECT_EQ(d[basis.index(W("231"))], 1);
  EXPECT_EQ(d[basis.index(W("312"))], 1);
  // e1 lies in the coinvariant ideal.
  for (const auto& v : classical_expansion(basis, P("x1 + x2 + x3"))) EXPECT_EQ(v, 0);
}

TEST(ClassicalStructureConstants, UnitAndTopPairing) {
  const SchubertBasis basis(4);
  const auto c = classical_structure_constants(basis);
  const auto top = basis.longest_index();
  for (std::size_t u = 0; u < basis.size(); ++u) {
    for (std::size_t v = 0; v < basis.size(); ++v) {
      ASSERT_EQ(c[0][v][v], 1);
      ASSERT_EQ(c[u][v][top], pairing_index(basis.at(u), basis.at(v)));
      for (std::size_t w = 0; w < basis.size(); ++w) ASSERT_GE(c[u][v][w], 0);
    }
  }
}
