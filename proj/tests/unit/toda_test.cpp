#include <gtest/gtest.h>

#include "flagstar/toda.hpp"

using namespace flagstar;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

}  // namespace

TEST(PeriodicRelations, N2Oracles) {
  const auto r = periodic_relations(2, Presentation::Y);
  EXPECT_EQ(r.top(), 2);
  EXPECT_EQ(r.R(-1), P("1"));
  EXPECT_EQ(r.R(0), P("0"));
  EXPECT_EQ(r.R(1), P("-Y1^2 + q1 + q2"));
  EXPECT_EQ(r.R(2), P("-q1*q2"));
}

TEST(PeriodicRelations, N3Oracles) {
  const auto r = periodic_relations(3, Presentation::Y);
  EXPECT_EQ(r.R(1), P("-Y1^2 + Y1*Y2 - Y2^2 + q1 + q2 + q3"));
  EXPECT_EQ(r.R(3), P("q1*q2*q3"));
  const auto x = periodic_relations(3, Presentation::X);
  EXPECT_EQ(x.R(0), P("X1 + X2 + X3"));
  EXPECT_EQ(x.R(1), P("X1*X2 + X1*X3 + X2*X3 + q1 + q2 + q3"));
}

TEST(PeriodicRelations, ClosedFormAndSigns) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto p : {Presentation::Y, Presentation::X}) {
      const auto r = periodic_relations(n, p);
      EXPECT_EQ(r.R(-1), P("1"));
      EXPECT_EQ(r.R(1), closed_form_R1(n, p));
      Polynomial prod(n % 2 == 1 ? 1 : -1);
      for (int i = 1; i <= n; ++i) prod *= Polynomial::variable(Var::q(i));
      EXPECT_EQ(r.R(n), prod);
      for (int k = 1; k < n; ++k) {
        EXPECT_TRUE(r.R(k).is_homogeneous(n));
        EXPECT_EQ(r.R(k).degree(n), 2 * (k + 1));
      }
      EXPECT_EQ(r.R(n).degree(n), 4 * n);
    }
    EXPECT_TRUE(periodic_relations(n, Presentation::Y).R(0).is_zero());
  }
}

TEST(PeriodicRelations, YAndXPresentationsAgree) {
  for (int n = 2; n <= 4; ++n) {
    std::map<Var, Polynomial> images;
    for (int i = 1; i <= n; ++i) images[Var::X(i)] = x_in_y(n, i);
    const auto x = periodic_relations(n, Presentation::X);
    const auto y = periodic_relations(n, Presentation::Y);
    for (int k = 1; k <= n; ++k) EXPECT_EQ(x.R(k).substitute(images), y.R(k)) << "n=" << n << " k=" << k;
  }
}

TEST(ChartRelations, Oracles) {
  const auto a = chart_relations(2, 2);
  EXPECT_EQ(a.top(), 1);
  EXPECT_EQ(a.R(1), P("-Y1^2 + q1"));
  const auto b = chart_relations(3, 3);
  EXPECT_EQ(b.R(1), P("-Y1^2 + Y1*Y2 - Y2^2 + q1 + q2"));
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      EXPECT_TRUE(periodic_relations(n, Presentation::Y).R(n).set_zero(Var::q(k)).is_zero());
      EXPECT_EQ(chart_relations(n, k).top(), n - 1);
    }
  }
}

TEST(TodaMatrix, DeterminantHasUnitZCoefficient) {
  for (int n = 2; n <= 4; ++n) {
    const auto det = toda_determinant(n, Presentation::Y);
    EXPECT_EQ(det.coefficient_of(Var::z(), 1), P("-1"));
    EXPECT_TRUE(det.coefficient_of(Var::z(), 1).coefficient_of(Var::mu(), 1).is_zero());
    EXPECT_EQ(static_cast<int>(toda_matrix(n, Presentation::Y).size()), n);
  }
}

TEST(RelationIdentities, Pass) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = verify_relation_identities(n);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_GT(r.cases, 0u);
  }
}
