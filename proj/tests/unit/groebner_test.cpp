#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "flagstar/groebner.hpp"

using namespace flagstar;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

std::set<std::string> names(const std::vector<Monomial>& monos) {
  std::set<std::string> out;
  for (const auto& m : monos) out.insert(m.to_string());
  return out;
}

}  // namespace

TEST(MonomialOrder, BlockGrevlex) {
  const auto order = MonomialOrder::block_grevlex({Var::Y(1)}, {Var::q(1), Var::q(2)});
  // ring block dominates
  EXPECT_EQ(order.compare(Monomial::of(Var::Y(1)), Monomial::of(Var::q(1), 5)), std::strong_ordering::greater);
  EXPECT_EQ(order.compare(Monomial::of(Var::q(1)), Monomial::of(Var::q(2))), std::strong_ordering::greater);
  EXPECT_EQ(order.compare(Monomial::of(Var::q(1)), Monomial::of(Var::q(1))), std::strong_ordering::equal);
  EXPECT_TRUE(order.covers(Monomial::of(Var::Y(1))));
  EXPECT_FALSE(order.covers(Monomial::of(Var::X(1))));
}

TEST(Buchberger, N2PeriodicGeneratorsAreAlreadyABasis) {
  const auto gb = buchberger({P("Y1^2 - q1 - q2"), P("q1*q2")}, presentation_order(2, VarKind::Y));
  auto gens = gb.primitive_generators();
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], P("Y1^2 - q1 - q2"));
  EXPECT_EQ(gens[1], P("q1*q2"));
  EXPECT_TRUE(gb.s_pairs_reduce_to_zero());
}

TEST(Buchberger, ClassicalStandardMonomials) {
  const auto gb = classical_ideal_basis(3, VarKind::x);
  const auto std_monos = gb.standard_monomials({Var::x(1), Var::x(2), Var::x(3)});
  ASSERT_TRUE(std_monos.has_value());
  EXPECT_EQ(names(*std_monos), (std::set<std::string>{"1", "x1", "x2", "x1*x2", "x1^2", "x1^2*x2"}));
}

TEST(Buchberger, UnitIdeal) {
  const auto gb = buchberger({P("1"), P("x1^2 + x2")}, presentation_order(2, VarKind::x, false));
  const auto gens = gb.primitive_generators();
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0], P("1"));
  EXPECT_TRUE(gb.contains(P("x1*x2 + 7")));
}

TEST(Buchberger, RejectsUncoveredVariables) {
  EXPECT_THROW(buchberger({P("X1 + Y1")}, presentation_order(2, VarKind::X)), std::invalid_argument);
}

TEST(Buchberger, BasisIsReducedAndMonic) {
  const auto gb = periodic_ideal_basis(3, Presentation::Y);
  EXPECT_TRUE(gb.is_reduced());
  EXPECT_TRUE(gb.s_pairs_reduce_to_zero());
  for (const auto& g : gb.generators()) EXPECT_EQ(g.leading().coeff, Rational(1));
}

TEST(NormalForm, Oracles) {
  const auto gb2 = periodic_ideal_basis(2, Presentation::Y);
  EXPECT_EQ(gb2.normal_form(P("Y1^2")).to_polynomial(), P("q1 + q2"));
  const auto gb3 = periodic_ideal_basis(3, Presentation::Y);
  EXPECT_TRUE(gb3.normal_form(P("q1*q2*q3")).is_zero());
  for (const auto& r : periodic_relations(3, Presentation::Y).ideal_generators()) EXPECT_TRUE(gb3.contains(r));
  EXPECT_FALSE(gb3.contains(P("Y1")));
}

TEST(NormalForm, IdealMembershipIsLinear) {
  const auto gb = periodic_ideal_basis(3, Presentation::X);
  const auto r = periodic_relations(3, Presentation::X);
  const auto f = P("X1^3 + q2*X2") * r.R(1) + P("X3 - 2*q1") * r.R(2) + P("X2^5") * r.R(0);
  EXPECT_TRUE(gb.contains(f));
  EXPECT_EQ(gb.normal_form(f + P("X1")).to_polynomial(), gb.normal_form(P("X1")).to_polynomial());
}

TEST(Rank, ChartQuotientsHaveFactorialDimension) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_rank(n);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_EQ(r.cases, static_cast<std::size_t>(n));
  }
}

TEST(ClassicalIdeal, PeriodicIdealAtQZero) {
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(verify_classical_ideal(n).passed) << n;
}

TEST(ElementarySymmetric, Values) {
  EXPECT_EQ(elementary_symmetric(3, 2, VarKind::x), P("x1*x2 + x1*x3 + x2*x3"));
  EXPECT_EQ(elementary_symmetric(3, 0, VarKind::x), P("1"));
}
