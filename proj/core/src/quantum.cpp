#include "flagstar/quantum.hpp"

#include "flagstar/axioms.hpp"
#include "flagstar/groebner.hpp"

namespace flagstar {

MultOperator<Polynomial> monk_matrix(const SchubertBasis& basis, int r) {
  const int n = basis.n();
  if (r < 1 || r >= n) throw std::invalid_argument("monk_matrix: r out of range");
  MultOperator<Polynomial> op(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Permutation& w = basis.at(col);
    const int l = basis.length(col);
    for (int a = 1; a <= r; ++a) {
      for (int b = r + 1; b <= n; ++b) {
        const Permutation wt = w.swap_positions(a, b);
        const int lt = wt.length();
        const std::size_t row = basis.index(wt);
        if (lt == l + 1) {
          op.at(row, col) += Polynomial(1);
        } else if (lt == l - 2 * (b - a) + 1) {
          Monomial m;
          for (int c = a; c < b; ++c) m.set(Var::Q(c), 1);
          op.at(row, col) += Polynomial::monomial(m);
        }
      }
    }
  }
  return op;
}

std::shared_ptr<const QuantumRing> make_quantum_ring(std::shared_ptr<const SchubertBasis> basis) {
  std::vector<MultOperator<Polynomial>> gens;
  for (int r = 1; r < basis->n(); ++r) gens.push_back(monk_matrix(*basis, r));
  return make_quantum_ring(std::move(basis), std::move(gens));
}

std::shared_ptr<const QuantumRing> make_quantum_ring(std::shared_ptr<const SchubertBasis> basis,
                                                     std::vector<MultOperator<Polynomial>> generators) {
  return std::make_shared<const QuantumRing>(std::move(basis), VarKind::Q, std::move(generators));
}

QuantumTable quantum_table(const QuantumRing& ring) { return ring.product_table(); }

CheckResult certify_classical_constants(const SchubertBasis& basis, const ClassicalConstants& constants) {
  return timed_check("classical.groebner", "(iii)", [&](CheckResult& r) {
    const GroebnerBasis gb = classical_ideal_basis(basis.n(), VarKind::x);
    const std::size_t size = basis.size();
    axioms::FirstFailure first(size);
    parallel_for(size, [&](std::size_t u) {
      for (std::size_t v = u; v < size; ++v) {
        Polynomial f = basis.polynomial(u) * basis.polynomial(v);
        for (std::size_t w = 0; w < size; ++w) {
          if (constants[u][v][w] != 0) f -= basis.polynomial(w) * constants[u][v][w];
        }
        const auto nf = gb.normal_form(f);
        if (!nf.is_zero()) {
          first.record(u, {{"u", basis.at(u).to_string()},
                           {"v", basis.at(v).to_string()},
                           {"normal_form", nf.to_string()}});
        }
      }
    });
    r.cases = size * (size + 1) / 2;
    first.apply(r);
  });
}

namespace {

CheckResult check_structure(const QuantumRing& ring, const QuantumTable& table) {
  return timed_check("quantum.structure", "(i)", [&](CheckResult& r) {
    const auto& basis = ring.basis();
    const int n = ring.n();
    for (std::size_t u = 0; u < basis.size(); ++u) {
      ++r.cases;
      if (!(ring.evaluate(ring.lift(u)) == ring.basis_vector(u))) {
        r.fail({{"u", basis.at(u).to_string()}, {"lift", ring.lift(u).to_string()}});
      }
      ++r.cases;
      if (!(table[basis.identity_index()][u] == ring.basis_vector(u))) {
        r.fail({{"unit", basis.at(u).to_string()}});
      }
    }
    // Generator operators are homogeneous of degree 2.
    for (int i = 1; i < n; ++i) {
      const auto& op = ring.y_operator(i);
      for (std::size_t v = 0; v < basis.size(); ++v) {
        for (std::size_t w = 0; w < basis.size(); ++w) {
          ++r.cases;
          for (const auto& t : op.at(v, w).terms()) {
            if (2 + 2 * basis.length(w) != 2 * basis.length(v) + t.monomial.grading()) {
              r.fail({{"generator", "y" + std::to_string(i)},
                      {"row", basis.at(v).to_string()},
                      {"column", basis.at(w).to_string()},
                      {"entry", op.at(v, w).to_string()}});
            }
          }
        }
      }
    }
  });
}

CheckResult check_positivity(const SchubertBasis& basis, const QuantumTable& table) {
  return timed_check("quantum.positivity", "", [&](CheckResult& r) {
    r.note = "observational";
    for (std::size_t u = 0; u < basis.size(); ++u) {
      for (std::size_t v = 0; v < basis.size(); ++v) {
        for (std::size_t w = 0; w < basis.size(); ++w) {
          ++r.cases;
          for (const auto& t : table[u][v][w].terms()) {
            if (t.coeff < 0) {
              r.fail({{"u", basis.at(u).to_string()},
                      {"v", basis.at(v).to_string()},
                      {"w", basis.at(w).to_string()},
                      {"coefficient", table[u][v][w].to_string()}});
            }
          }
        }
      }
    }
  });
}

}  // namespace

Report verify_quantum_axioms(const QuantumRing& ring, const QuantumTable& table, const ClassicalConstants& classical) {
  Report report;
  report.n = ring.n();
  const auto& basis = ring.basis();
  report.checks.push_back(check_structure(ring, table));
  report.checks.push_back(axioms::check_grading("quantum.grading", basis, table));
  report.checks.push_back(axioms::check_classical_limit("quantum.classical_limit", basis, table, classical));
  report.checks.push_back(axioms::check_commutativity("quantum.commutativity", ring, table));
  report.checks.push_back(axioms::check_associativity("quantum.associativity", basis, table));
  report.checks.push_back(axioms::check_quadratic_relation("quantum.relation", ring));
  report.checks.push_back(axioms::check_flatness("quantum.flatness", ring, [](const Monomial& d, int i) {
    return Integer(d.exponent(Var::Q(i)));
  }));
  report.checks.push_back(check_positivity(basis, table));
  return report;
}

}  // namespace flagstar
