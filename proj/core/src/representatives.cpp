#include "flagstar/representatives.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "flagstar/axioms.hpp"
#include "flagstar/linear_solve.hpp"

namespace flagstar {

Polynomial chart_pullback(const Polynomial& f, int n, int k) {
  std::map<Var, Polynomial> images;
  for (int j = 1; j <= n; ++j) images[Var::X(j)] = Polynomial::variable(Var::X(chart_reflect(n, k, j)));
  for (int m = 1; m <= n; ++m) {
    images[Var::q(m)] = m == k ? Polynomial() : Polynomial::variable(Var::Q(chart_shift(n, k, m)));
  }
  return f.substitute(images);
}

std::vector<Monomial> correction_monomials(int n, int length) {
  std::vector<Monomial> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  // Artin exponents a_i <= n - i, then q-exponents filling the rest.
  std::function<void(int, int)> ring = [&](int i, int used) {
    if (i == n) {
      const int rest = length - used;
      if (rest < 2 || rest % 2 != 0) return;
      const int qdeg = rest / 2;
      std::vector<int> d(static_cast<std::size_t>(n), 0);
      std::function<void(int, int)> params = [&](int j, int left) {
        if (j == n - 1) {
          d[j] = left;
          Monomial m;
          for (int t = 0; t < n; ++t) {
            if (a[t]) m.set(Var::X(t + 1), a[t]);
            if (d[t]) m.set(Var::q(t + 1), d[t]);
          }
          if (!has_full_q_support(m, n)) out.push_back(m);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          d[j] = e;
          params(j + 1, left - e);
        }
      };
      params(0, qdeg);
      return;
    }
    for (int e = 0; e <= n - 1 - i && used + e <= length; ++e) {
      a[i] = e;
      ring(i + 1, used + e);
    }
    a[i] = 0;
  };
  ring(0, 0);
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    return canonical_compare(x, y) == std::strong_ordering::greater;
  });
  return out;
}

Representative solve_representative(const PeriodicModel& model, std::size_t index) {
  const auto& basis = *model.basis;
  const auto& quantum = *model.quantum;
  const int n = basis.n();
  const std::size_t size = basis.size();
  const Polynomial base = rename_kind(basis.polynomial(index), VarKind::x, VarKind::X);
  const auto monos = correction_monomials(n, basis.length(index));

  // One equation per (chart, class, Q-monomial).
  using Key = std::tuple<int, std::size_t, Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return CanonicalLess{}(std::get<2>(a), std::get<2>(b));
    }
  };
  std::map<Key, std::size_t, KeyLess> rows;
  RationalMatrix a;
  std::vector<Rational> b;
  auto row = [&](const Key& key) -> std::size_t {
    auto [it, inserted] = rows.emplace(key, a.size());
    if (inserted) {
      a.emplace_back(monos.size());
      b.emplace_back(0);
    }
    return it->second;
  };

  for (const auto& transport : model.transports) {
    const int k = transport.k;
    ClassVector<Polynomial> target(size);
    for (std::size_t v = 0; v < size; ++v) target[v] = Polynomial(transport.forward[v][index]);
    target -= quantum.evaluate(chart_pullback(base, n, k));
    for (std::size_t v = 0; v < size; ++v) {
      for (const auto& t : target[v].terms()) b[row({k, v, t.monomial})] += Rational(t.coeff);
    }
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const auto image = quantum.evaluate(chart_pullback(Polynomial::monomial(monos[c]), n, k));
      for (std::size_t v = 0; v < size; ++v) {
        for (const auto& t : image[v].terms()) a[row({k, v, t.monomial})][c] += Rational(t.coeff);
      }
    }
  }

  const auto solution = solve_linear(a, b, monos.size());
  const std::string name = basis.at(index).to_string();
  if (!solution) {
    throw RepresentativeError(RepresentativeError::Kind::InconsistentSystem, "no representative for " + name);
  }
  Representative rep;
  rep.w = basis.at(index);
  rep.unknowns = monos.size();
  rep.rank = solution->rank;
  rep.poly = base;
  for (std::size_t c = 0; c < monos.size(); ++c) {
    const Rational& value = solution->values[c];
    if (value == 0) continue;
    if (!is_integral(value)) {
      throw RepresentativeError(RepresentativeError::Kind::NoIntegralSolution,
                                "non-integral correction for " + name + ": " + value.str());
    }
    rep.poly += Polynomial::monomial(monos[c], to_integer(value));
  }
  return rep;
}

std::vector<Representative> representative_table(const PeriodicModel& model) {
  std::vector<Representative> out(model.basis->size());
  parallel_for(out.size(), [&](std::size_t i) { out[i] = solve_representative(model, i); });
  return out;
}

bool satisfies_defining_property(const StarRing& ring, std::size_t index, const Polynomial& f) {
  return ring.evaluate(f) == ring.basis_vector(index);
}

std::vector<std::pair<std::string, Polynomial>> reference_representatives_n3() {
  return {{"123", Polynomial::parse("1")},
          {"213", Polynomial::parse("X1")},
          {"132", Polynomial::parse("X1 + X2")},
          {"231", Polynomial::parse("X1*X2 + q1")},
          {"312", Polynomial::parse("X1^2 - q1 - q3")},
          {"321", Polynomial::parse("X1^2*X2 + q1*X1 - q3*X2")}};
}

CheckResult verify_reference_table(const StarRing& ring) {
  return timed_check("repr.reference_table", "", [&](CheckResult& r) {
    if (ring.n() != 3) throw std::invalid_argument("reference table exists for n = 3 only");
    const auto& basis = ring.basis();
    for (const auto& [label, f] : reference_representatives_n3()) {
      ++r.cases;
      const std::size_t index = basis.index(Permutation::parse(label));
      if (!satisfies_defining_property(ring, index, f)) {
        r.fail({{"w", label},
                {"representative", f.to_string()},
                {"image", class_to_string(basis, ring.evaluate(f))}});
      }
    }
  });
}

CheckResult verify_representatives(const StarRing& ring, const std::vector<Representative>& reps) {
  return timed_check("repr.defining_property", "", [&](CheckResult& r) {
    const auto& basis = ring.basis();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ++r.cases;
      const auto& f = reps[i].poly;
      const Polynomial classical = rename_kind(basis.polynomial(i), VarKind::x, VarKind::X);
      if (!satisfies_defining_property(ring, i, f)) {
        r.fail({{"w", basis.at(i).to_string()}, {"representative", f.to_string()}, {"reason", "f(x*) . 1 != sigma_w"}});
      } else if (!(f.set_zero(VarKind::q) == classical)) {
        r.fail({{"w", basis.at(i).to_string()}, {"representative", f.to_string()}, {"reason", "q = 0 limit"}});
      } else if (!f.is_homogeneous(ring.n()) || f.degree(ring.n()) != 2 * basis.length(i)) {
        r.fail({{"w", basis.at(i).to_string()}, {"representative", f.to_string()}, {"reason", "degree"}});
      }
    }
  });
}

CheckResult verify_double_route(const StarRing& ring, const GroebnerBasis& ideal,
                                const std::vector<Representative>& reps) {
  return timed_check("repr.double_route", "", [&](CheckResult& r) {
    const auto& basis = ring.basis();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ++r.cases;
      const auto nf = ideal.normal_form(reps[i].poly - ring.lift(i));
      if (!nf.is_zero()) {
        r.fail({{"w", basis.at(i).to_string()},
                {"representative", reps[i].poly.to_string()},
                {"lift", ring.lift(i).to_string()},
                {"normal_form", nf.to_string()}});
      }
    }
  });
}

CheckResult orthogonality_check(const StarTable& table) {
  return timed_check("repr.orthogonality", "", [&](CheckResult& r) {
    const auto& basis = *table.basis;
    const std::size_t top = basis.longest_index();
    for (std::size_t v = 0; v < basis.size(); ++v) {
      for (std::size_t w = 0; w < basis.size(); ++w) {
        ++r.cases;
        const Integer alpha = table.constants[v][w][top].poly().constant_term();
        const int expected = pairing_index(basis.at(v), basis.at(w));
        if (alpha != expected) {
          r.fail({{"v", basis.at(v).to_string()},
                  {"w", basis.at(w).to_string()},
                  {"alpha", alpha.str()},
                  {"pairing", std::to_string(expected)}});
        }
      }
    }
  });
}

namespace {

// All q^d of total degree `degree` not divisible by q1...qn.
std::vector<Monomial> k_monomials(int n, int degree) {
  std::vector<Monomial> out;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int j, int left) {
    if (j == n - 1) {
      d[j] = left;
      Monomial m;
      for (int t = 0; t < n; ++t) {
        if (d[t]) m.set(Var::q(t + 1), d[t]);
      }
      if (!has_full_q_support(m, n)) out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      d[j] = e;
      go(j + 1, left - e);
    }
  };
  go(0, degree);
  return out;
}

}  // namespace

CheckResult orthogonality_groebner(const GroebnerBasis& ideal, const SchubertBasis& basis,
                                   const std::vector<Representative>& reps) {
  return timed_check("repr.orthogonality_groebner", "", [&](CheckResult& r) {
    const int n = basis.n();
    const std::size_t size = basis.size();
    std::vector<RationalPolynomial> reduced(size);
    for (std::size_t u = 0; u < size; ++u) reduced[u] = ideal.normal_form(reps[u].poly);

    for (std::size_t v = 0; v < size; ++v) {
      for (std::size_t w = 0; w < size; ++w) {
        ++r.cases;
        const int degree = basis.length(v) + basis.length(w);
        // Unknowns: coefficient of q^d f_u.
        std::vector<std::pair<std::size_t, Monomial>> unknowns;
        std::vector<RationalPolynomial> columns;
        for (std::size_t u = 0; u < size; ++u) {
          const int rest = degree - basis.length(u);
          if (rest < 0 || rest % 2 != 0) continue;
          for (const auto& d : k_monomials(n, rest / 2)) {
            unknowns.emplace_back(u, d);
            columns.push_back(ideal.normal_form(reps[u].poly.shifted(d)));
          }
        }
        const auto target = ideal.normal_form(reps[v].poly * reps[w].poly);
        std::map<Monomial, std::size_t, CanonicalLess> rows;
        RationalMatrix a;
        std::vector<Rational> b;
        auto row = [&](const Monomial& m) {
          auto [it, inserted] = rows.emplace(m, a.size());
          if (inserted) {
            a.emplace_back(unknowns.size());
            b.emplace_back(0);
          }
          return it->second;
        };
        for (std::size_t c = 0; c < columns.size(); ++c) {
          for (const auto& t : columns[c].terms()) a[row(t.monomial)][c] += t.coeff;
        }
        for (const auto& t : target.terms()) b[row(t.monomial)] += t.coeff;
        const auto solution = solve_linear(a, b, unknowns.size());
        if (!solution || !solution->free_columns.empty()) {
          r.fail({{"v", basis.at(v).to_string()}, {"w", basis.at(w).to_string()}, {"reason", "no unique expansion"}});
          continue;
        }
        Rational alpha = 0;
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
          if (unknowns[c].first == basis.longest_index() && unknowns[c].second.is_one()) alpha = solution->values[c];
        }
        const int expected = pairing_index(basis.at(v), basis.at(w));
        if (alpha != expected) {
          r.fail({{"v", basis.at(v).to_string()},
                  {"w", basis.at(w).to_string()},
                  {"alpha", alpha.str()},
                  {"pairing", std::to_string(expected)}});
        }
      }
    }
  });
}

std::string representatives_latex(const std::vector<Representative>& reps) {
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    os << "{}& \\mathfrak{S}_{" << reps[i].w.to_string() << "} \\ : \\ " << reps[i].poly.to_latex();
    os << (i + 1 < reps.size() ? "\\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
  return os.str();
}

}  // namespace flagstar
