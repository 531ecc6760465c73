#include "flagstar/periodic.hpp"

#include <map>
#include <sstream>

#include "flagstar/axioms.hpp"
#include "flagstar/linear_solve.hpp"

namespace flagstar {

namespace {

int wrap(int n, int i) {
  const int r = ((i - 1) % n + n) % n;
  return r + 1;
}

}  // namespace

int chart_reflect(int n, int k, int i) { return wrap(n, k - i + 1); }
int chart_shift(int n, int k, int j) { return wrap(n, k - j); }

VarMap chart_map(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("chart_map: k out of range");
  VarMap map;
  for (int i = 1; i <= n; ++i) map[Var::X(i)] = Var::x(chart_reflect(n, k, i));
  for (int j = 1; j < n; ++j) map[Var::Q(j)] = Var::q(chart_shift(n, k, j));
  return map;
}

ChartTransport chart_transport(const SchubertBasis& basis, int k) {
  const int n = basis.n();
  const std::size_t size = basis.size();
  VarMap pull;
  for (int j = 1; j <= n; ++j) pull[Var::x(j)] = Var::x(chart_reflect(n, k, j));

  ChartTransport t;
  t.k = k;
  t.forward.assign(size, std::vector<Integer>(size));
  RationalMatrix m(size, std::vector<Rational>(size));
  for (std::size_t u = 0; u < size; ++u) {
    const auto column = classical_expansion(basis, relabel(basis.polynomial(u), pull));
    for (std::size_t v = 0; v < size; ++v) {
      t.forward[v][u] = column[v];
      m[v][u] = Rational(column[v]);
    }
  }
  const auto inv = invert(m);
  if (!inv) throw std::logic_error("chart transport is singular");
  t.inverse.assign(size, std::vector<Integer>(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (!is_integral((*inv)[a][b])) throw std::logic_error("chart transport inverse is not integral");
      t.inverse[a][b] = to_integer((*inv)[a][b]);
    }
  }
  return t;
}

ChartTable specialized_table(const SchubertBasis& basis, const QuantumTable& quantum, const ChartTransport& transport) {
  const int n = basis.n();
  const int k = transport.k;
  const std::size_t size = basis.size();
  const auto& P = transport.forward;
  const auto& Pinv = transport.inverse;

  VarMap rename;
  for (int j = 1; j < n; ++j) rename[Var::Q(j)] = Var::q(chart_shift(n, k, j));

  // mixed[a][v] = sigma_a o (image of chart sigma_v), in quantum coordinates.
  std::vector<std::vector<ClassVector<Polynomial>>> mixed(size, std::vector<ClassVector<Polynomial>>(size));
  parallel_for(size, [&](std::size_t a) {
    for (std::size_t v = 0; v < size; ++v) {
      ClassVector<Polynomial> acc(size);
      for (std::size_t b = 0; b < size; ++b) {
        if (P[b][v] != 0) acc.add_scaled(Polynomial(P[b][v]), quantum[a][b]);
      }
      mixed[a][v] = std::move(acc);
    }
  });

  ChartTable out;
  out.k = k;
  out.constants.assign(size, std::vector<ClassVector<Polynomial>>(size));
  parallel_for(size, [&](std::size_t u) {
    for (std::size_t v = 0; v < size; ++v) {
      ClassVector<Polynomial> acc(size);
      for (std::size_t a = 0; a < size; ++a) {
        if (P[a][u] != 0) acc.add_scaled(Polynomial(P[a][u]), mixed[a][v]);
      }
      ClassVector<Polynomial> chart(size);
      for (std::size_t w = 0; w < size; ++w) {
        Polynomial c;
        for (std::size_t x = 0; x < size; ++x) {
          if (Pinv[w][x] != 0 && !acc[x].is_zero()) c += acc[x] * Pinv[w][x];
        }
        chart[w] = relabel(c, rename);
      }
      out.constants[u][v] = std::move(chart);
    }
  });
  return out;
}

std::vector<ChartTable> chart_tables(const SchubertBasis& basis, const QuantumTable& quantum) {
  const int n = basis.n();
  std::vector<ChartTable> out(static_cast<std::size_t>(n));
  parallel_for(out.size(), [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    out[i] = specialized_table(basis, quantum, chart_transport(basis, k));
  });
  return out;
}

std::string OverlapMismatch::describe() const {
  std::ostringstream os;
  os << "overlap mismatch at u=" << u << " v=" << v << " w=" << w << " d=" << d.to_string() << ": chart "
     << chart << " gives " << value << ", chart " << other_chart << " gives " << other_value;
  return os.str();
}

namespace {

// Mismatches for one (u, v, w), in chart order.
void collect_mismatches(const SchubertBasis& basis, const std::vector<ChartTable>& charts, std::size_t u,
                        std::size_t v, std::size_t w, std::vector<OverlapMismatch>& out) {
  for (const auto& chart : charts) {
    for (const auto& t : chart.constants[u][v][w].terms()) {
      for (const auto& other : charts) {
        if (other.k == chart.k || t.monomial.exponent(Var::q(other.k)) != 0) continue;
        const Integer theirs = other.constants[u][v][w].coefficient(t.monomial);
        if (theirs != t.coeff) {
          out.push_back({basis.at(u).to_string(), basis.at(v).to_string(), basis.at(w).to_string(), t.monomial,
                         chart.k, other.k, t.coeff, theirs});
        }
      }
    }
  }
}

}  // namespace

std::vector<OverlapMismatch> overlap_mismatches(const SchubertBasis& basis, const std::vector<ChartTable>& charts) {
  const std::size_t size = basis.size();
  std::vector<std::vector<OverlapMismatch>> per_u(size);
  parallel_for(size, [&](std::size_t u) {
    for (std::size_t v = 0; v < size; ++v) {
      for (std::size_t w = 0; w < size; ++w) collect_mismatches(basis, charts, u, v, w, per_u[u]);
    }
  });
  std::vector<OverlapMismatch> out;
  for (auto& list : per_u) out.insert(out.end(), list.begin(), list.end());
  return out;
}

StarTable glue_tables(std::shared_ptr<const SchubertBasis> basis, const std::vector<ChartTable>& charts) {
  const int n = basis->n();
  if (static_cast<int>(charts.size()) != n) throw std::invalid_argument("glue_tables: need one table per chart");
  const auto mismatches = overlap_mismatches(*basis, charts);
  if (!mismatches.empty()) throw OverlapError(mismatches.front());

  const std::size_t size = basis->size();
  StarTable table;
  table.n = n;
  table.basis = basis;
  table.constants.assign(size, std::vector<ClassVector<KElement>>(size));
  parallel_for(size, [&](std::size_t u) {
    for (std::size_t v = 0; v < size; ++v) {
      ClassVector<KElement> out(size);
      for (std::size_t w = 0; w < size; ++w) {
        std::map<Monomial, Integer, CanonicalLess> coeffs;
        for (const auto& chart : charts) {
          for (const auto& t : chart.constants[u][v][w].terms()) coeffs.emplace(t.monomial, t.coeff);
        }
        std::vector<Polynomial::Term> terms;
        for (auto& [m, c] : coeffs) terms.push_back({m, c});
        out[w] = normalize_K(n, Polynomial::from_terms(std::move(terms)));
      }
      table.constants[u][v] = std::move(out);
    }
  });
  return table;
}

const ClassVector<KElement>& star_product(const StarTable& table, const Permutation& u, const Permutation& v) {
  return table.product(table.basis->index(u), table.basis->index(v));
}

std::shared_ptr<const StarRing> make_star_ring(const StarTable& table) {
  const auto& basis = *table.basis;
  std::vector<MultOperator<KElement>> gens;
  for (int i = 1; i < table.n; ++i) {
    const std::size_t s = basis.simple_index(i);
    gens.push_back(MultOperator<KElement>::from_columns(table.constants[s]));
  }
  return std::make_shared<const StarRing>(table.basis, VarKind::q, std::move(gens));
}

PeriodicModel build_periodic_model(int n) {
  PeriodicModel m;
  m.basis = std::make_shared<const SchubertBasis>(n);
  m.quantum = make_quantum_ring(m.basis);
  m.quantum_table = quantum_table(*m.quantum);
  m.classical = classical_structure_constants(*m.basis);
  for (int k = 1; k <= n; ++k) m.transports.push_back(chart_transport(*m.basis, k));
  m.charts.resize(m.transports.size());
  parallel_for(m.transports.size(), [&](std::size_t i) {
    m.charts[i] = specialized_table(*m.basis, m.quantum_table, m.transports[i]);
  });
  m.star = glue_tables(m.basis, m.charts);
  m.ring = make_star_ring(m.star);
  return m;
}

namespace {

CheckResult check_star_structure(const StarRing& ring, const StarTable& table) {
  return timed_check("star.structure", "(i)", [&](CheckResult& r) {
    const auto& basis = ring.basis();
    for (std::size_t u = 0; u < basis.size(); ++u) {
      ++r.cases;
      if (!(ring.evaluate(ring.lift(u)) == ring.basis_vector(u))) {
        r.fail({{"u", basis.at(u).to_string()}, {"lift", ring.lift(u).to_string()}});
      }
    }
    const auto rebuilt = ring.product_table();
    for (std::size_t u = 0; u < basis.size(); ++u) {
      for (std::size_t v = 0; v < basis.size(); ++v) {
        ++r.cases;
        if (!(rebuilt[u][v] == table.constants[u][v])) {
          r.fail({{"u", basis.at(u).to_string()}, {"v", basis.at(v).to_string()}, {"reason", "glued != operator"}});
        }
      }
    }
  });
}

}  // namespace

Report verify_star_axioms(const StarRing& ring, const StarTable& table, const ClassicalConstants& classical) {
  Report report;
  report.n = ring.n();
  const auto& basis = ring.basis();
  const int n = ring.n();
  report.checks.push_back(check_star_structure(ring, table));
  report.checks.push_back(axioms::check_grading("star.grading", basis, table.constants));
  report.checks.push_back(axioms::check_classical_limit("star.classical_limit", basis, table.constants, classical));
  report.checks.push_back(axioms::check_commutativity("star.commutativity", ring, table.constants));
  report.checks.push_back(axioms::check_associativity("star.associativity", basis, table.constants));
  report.checks.push_back(axioms::check_quadratic_relation("star.relation", ring));
  report.checks.push_back(axioms::check_flatness("star.flatness", ring, [n](const Monomial& d, int i) {
    return Integer(d.exponent(Var::q(i)) - d.exponent(Var::q(n)));
  }));
  return report;
}

CheckResult verify_frobenius(const StarTable& table) {
  return timed_check("star.frobenius", "", [&](CheckResult& r) {
    const auto& basis = *table.basis;
    const std::size_t size = basis.size();
    axioms::FirstFailure first(size);
    parallel_for(size, [&](std::size_t u) {
      for (std::size_t v = 0; v < size; ++v) {
        for (std::size_t w = 0; w < size; ++w) {
          const KElement& left = table.constants[u][v][basis.dual_index(w)];
          const KElement& right = table.constants[v][w][basis.dual_index(u)];
          if (!(left == right)) {
            first.record(u, {{"u", basis.at(u).to_string()},
                             {"v", basis.at(v).to_string()},
                             {"w", basis.at(w).to_string()},
                             {"left", left.to_string()},
                             {"right", right.to_string()}});
          }
        }
      }
    });
    r.cases = size * size * size;
    first.apply(r);
  });
}

CheckResult verify_gluing(const SchubertBasis& basis, const std::vector<ChartTable>& charts) {
  return timed_check("star.gluing", "", [&](CheckResult& r) {
    const auto mismatches = overlap_mismatches(basis, charts);
    const std::size_t size = basis.size();
    r.cases = size * size * size * charts.size();
    if (!mismatches.empty()) {
      const auto& m = mismatches.front();
      r.fail({{"u", m.u},
              {"v", m.v},
              {"w", m.w},
              {"d", m.d.to_string()},
              {"chart", std::to_string(m.chart)},
              {"other_chart", std::to_string(m.other_chart)},
              {"value", m.value.str()},
              {"other_value", m.other_value.str()}});
      r.note = std::to_string(mismatches.size()) + " mismatches";
    }
  });
}

CheckResult verify_round_trip(const StarTable& table, const std::vector<ChartTable>& charts) {
  return timed_check("star.round_trip", "", [&](CheckResult& r) {
    const auto& basis = *table.basis;
    for (const auto& chart : charts) {
      for (std::size_t u = 0; u < basis.size(); ++u) {
        for (std::size_t v = 0; v < basis.size(); ++v) {
          for (std::size_t w = 0; w < basis.size(); ++w) {
            ++r.cases;
            const Polynomial restricted = table.constants[u][v][w].restrict_to_chart(chart.k);
            if (!(restricted == chart.constants[u][v][w])) {
              r.fail({{"k", std::to_string(chart.k)},
                      {"u", basis.at(u).to_string()},
                      {"v", basis.at(v).to_string()},
                      {"w", basis.at(w).to_string()},
                      {"glued", restricted.to_string()},
                      {"chart", chart.constants[u][v][w].to_string()}});
            }
          }
        }
      }
    }
  });
}

}  // namespace flagstar
