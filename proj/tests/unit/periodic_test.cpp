#include <gtest/gtest.h>

#include "flagstar/periodic.hpp"

using namespace flagstar;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }
Permutation W(const char* s) { return Permutation::parse(s); }

const PeriodicModel& model(int n) {
  static std::map<int, PeriodicModel> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_periodic_model(n)).first;
  return it->second;
}

std::string star(int n, const char* u, const char* v) {
  const auto& m = model(n);
  return class_to_string(*m.basis, star_product(m.star, W(u), W(v)));
}

}  // namespace

TEST(ChartMap, Oracles) {
  const VarMap k1{{Var::X(1), Var::x(1)}, {Var::X(2), Var::x(3)}, {Var::X(3), Var::x(2)},
                  {Var::Q(1), Var::q(3)}, {Var::Q(2), Var::q(2)}};
  EXPECT_EQ(chart_map(3, 1), k1);
  const VarMap k2{{Var::X(1), Var::x(2)}, {Var::X(2), Var::x(1)}, {Var::X(3), Var::x(3)},
                  {Var::Q(1), Var::q(1)}, {Var::Q(2), Var::q(3)}};
  EXPECT_EQ(chart_map(3, 2), k2);
  for (int n = 2; n <= 5; ++n) {
    const auto m = chart_map(n, n);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(m.at(Var::X(i)), Var::x(n - i + 1));
    for (int j = 1; j < n; ++j) EXPECT_EQ(m.at(Var::Q(j)), Var::q(n - j));
  }
}

TEST(ChartMap, IndicesStayInRange) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int i = 1; i <= n; ++i) {
        EXPECT_GE(chart_reflect(n, k, i), 1);
        EXPECT_LE(chart_reflect(n, k, i), n);
        EXPECT_EQ(chart_reflect(n, k, chart_reflect(n, k, i)), i);
      }
      for (int j = 1; j < n; ++j) EXPECT_NE(chart_shift(n, k, j), k);
    }
  }
}

TEST(ChartTransport, IsAnIntegralInvolution) {
  for (int n = 2; n <= 4; ++n) {
    const SchubertBasis basis(n);
    for (int k = 1; k <= n; ++k) {
      const auto t = chart_transport(basis, k);
      EXPECT_EQ(t.forward, t.inverse) << n << "," << k;
      const std::size_t size = basis.size();
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          Integer s = 0;
          for (std::size_t a = 0; a < size; ++a) s += t.forward[i][a] * t.forward[a][j];
          ASSERT_EQ(s, i == j ? 1 : 0);
        }
      }
    }
  }
}

TEST(SpecializedTable, N2ChartTwo) {
  const auto& m = model(2);
  const auto& chart = m.charts.at(1);
  ASSERT_EQ(chart.k, 2);
  const auto s1 = m.basis->index(W("21"));
  EXPECT_EQ(class_to_string(*m.basis, chart.constants[s1][s1]), "(q1)*s12");
}

TEST(SpecializedTable, ClassicalPartInEveryChart) {
  const auto& m = model(3);
  for (const auto& chart : m.charts) {
    for (std::size_t u = 0; u < m.basis->size(); ++u) {
      for (std::size_t v = 0; v < m.basis->size(); ++v) {
        for (std::size_t w = 0; w < m.basis->size(); ++w) {
          ASSERT_EQ(chart.constants[u][v][w].constant_term(), m.classical[u][v][w]);
          ASSERT_TRUE(chart.constants[u][v][w].set_zero(Var::q(chart.k)) == chart.constants[u][v][w]);
        }
      }
    }
  }
}

TEST(SpecializedTable, ChartNIsTheQuantumTable) {
  // X_i -> X_{n-i+1}, Q_j -> Q_{n-j} is an automorphism of the quantum ring
  for (int n = 2; n <= 4; ++n) {
    const auto& m = model(n);
    const auto& chart = m.charts.at(n - 1);
    ASSERT_EQ(chart.k, n);
    for (std::size_t u = 0; u < m.basis->size(); ++u) {
      for (std::size_t v = 0; v < m.basis->size(); ++v) {
        for (std::size_t w = 0; w < m.basis->size(); ++w) {
          ASSERT_EQ(rename_kind(chart.constants[u][v][w], VarKind::q, VarKind::Q), m.quantum_table[u][v][w]);
        }
      }
    }
  }
}

TEST(Glue, Oracles) {
  EXPECT_EQ(star(2, "21", "21"), "(q1 + q2)*s12");
  EXPECT_EQ(star(3, "213", "213"), "(q1 + q3)*s123 + s312");
  EXPECT_EQ(star(3, "213", "132"), "(q3)*s123 + s231 + s312");
  for (const auto& v : model(3).basis->order()) EXPECT_EQ(star(3, "123", v.to_string().c_str()), "s" + v.to_string());
}

TEST(Glue, ConstantTermIsClassical) {
  for (int n = 2; n <= 4; ++n) {
    const auto& m = model(n);
    for (std::size_t u = 0; u < m.basis->size(); ++u) {
      for (std::size_t v = 0; v < m.basis->size(); ++v) {
        for (std::size_t w = 0; w < m.basis->size(); ++w) {
          ASSERT_EQ(m.star.constants[u][v][w].poly().constant_term(), m.classical[u][v][w]);
        }
      }
    }
  }
}

TEST(Glue, NoMismatchesAndRoundTrip) {
  for (int n = 2; n <= 4; ++n) {
    const auto& m = model(n);
    EXPECT_TRUE(overlap_mismatches(*m.basis, m.charts).empty());
    EXPECT_TRUE(verify_gluing(*m.basis, m.charts).passed);
    EXPECT_TRUE(verify_round_trip(m.star, m.charts).passed);
  }
}

TEST(Glue, DisagreeingChartsAbort) {
  const auto& m = model(3);
  auto charts = m.charts;
  const auto s1 = m.basis->index(W("213"));
  // q1 is seen by charts 2 and 3; perturb it in chart 2 only
  charts.at(1).constants[s1][s1][0] += P("q1");
  const auto mismatches = overlap_mismatches(*m.basis, charts);
  ASSERT_FALSE(mismatches.empty());
  EXPECT_EQ(mismatches.front().u, "213");
  EXPECT_EQ(mismatches.front().w, "123");
  EXPECT_THROW(glue_tables(m.basis, charts), OverlapError);
  EXPECT_FALSE(verify_gluing(*m.basis, charts).passed);
}

TEST(StarAxioms, PassForSmallN) {
  for (int n = 2; n <= 3; ++n) {
    const auto& m = model(n);
    const auto report = verify_star_axioms(*m.ring, m.star, m.classical);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << n << " " << c.name;
    EXPECT_TRUE(verify_frobenius(m.star).passed);
  }
}

TEST(StarAxioms, FrobeniusCaseCount) {
  EXPECT_EQ(verify_frobenius(model(2).star).cases, 8u);
  EXPECT_EQ(verify_frobenius(model(3).star).cases, 216u);
}

TEST(StarRing, TruncationIsActive) {
  const auto& m = model(3);
  for (const auto& row : m.star.constants) {
    for (const auto& cls : row) {
      for (std::size_t w = 0; w < cls.size(); ++w) {
        for (const auto& t : cls[w].poly().terms()) ASSERT_FALSE(has_full_q_support(t.monomial, 3));
      }
    }
  }
  EXPECT_TRUE(m.ring->evaluate(P("X1*X2 + X1*X3 + X2*X3 + q1 + q2 + q3")).is_zero());
}
