#include "flagstar/toda.hpp"

#include <stdexcept>

namespace flagstar {

std::string to_string(Presentation p) { return p == Presentation::X ? "X" : "Y"; }

Polynomial x_in_y(int n, int i) {
  Polynomial out;
  if (i >= 1 && i <= n - 1) out += Polynomial::variable(Var::Y(i));
  if (i - 1 >= 1 && i - 1 <= n - 1) out -= Polynomial::variable(Var::Y(i - 1));
  return out;
}

namespace {

Polynomial diagonal_entry(int n, int i, Presentation p) {
  return p == Presentation::X ? Polynomial::variable(Var::X(i)) : x_in_y(n, i);
}

// Laplace expansion along rows with memoisation over the used-column mask.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Polynomial> memo(static_cast<size_t>(1) << n);
  std::vector<bool> done(memo.size(), false);
  // minor(mask): determinant of rows popcount(mask).. with columns not in mask.
  auto minor = [&](auto&& self, unsigned mask) -> Polynomial {
    const int row = __builtin_popcount(mask);
    if (row == n) return Polynomial(1);
    if (done[mask]) return memo[mask];
    Polynomial acc;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      if (!m[row][col].is_zero()) {
        Polynomial term = m[row][col] * self(self, mask | (1u << col));
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      sign = -sign;
    }
    done[mask] = true;
    memo[mask] = acc;
    return acc;
  };
  return minor(minor, 0u);
}

}  // namespace

std::vector<std::vector<Polynomial>> toda_matrix(int n, Presentation p) {
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("toda_matrix: n out of range");
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i) a[i][i] = diagonal_entry(n, i + 1, p);
  for (int i = 0; i + 1 < n; ++i) {
    a[i][i + 1] += Polynomial::variable(Var::q(i + 1));
    a[i + 1][i] += Polynomial(-1);
  }
  a[0][n - 1] -= Polynomial::variable(Var::z());
  a[n - 1][0] += Polynomial::monomial(Monomial::of(Var::q(n)) * Monomial::of(Var::z(), -1));
  return a;
}

Polynomial toda_determinant(int n, Presentation p) {
  auto a = toda_matrix(n, p);
  for (int i = 0; i < n; ++i) a[i][i] += Polynomial::variable(Var::mu());
  return determinant(a);
}

RelationSet periodic_relations(int n, Presentation p) {
  const Polynomial det = toda_determinant(n, p);
  const Var mu = Var::mu();
  const Var z = Var::z();

  for (const auto& t : det.terms()) {
    if (t.monomial.exponent(z) != 0 && t.monomial.exponent(mu) != 0) {
      throw std::logic_error("toda determinant: z appears together with mu");
    }
  }
  if (det.coefficient_of(z, 1) != Polynomial(-1)) {
    throw std::logic_error("toda determinant: z coefficient is not -1");
  }

  const Polynomial z_free = det.coefficient_of(z, 0);
  RelationSet out{n, p, std::nullopt, {}};
  for (int k = -1; k <= n - 1; ++k) out.relations.push_back(z_free.coefficient_of(mu, n - k - 1));
  out.relations.push_back(det.coefficient_of(z, -1));
  return out;
}

RelationSet chart_relations(int n, int k, Presentation p) {
  if (k < 1 || k > n) throw std::invalid_argument("chart_relations: k out of range");
  RelationSet full = periodic_relations(n, p);
  RelationSet out{n, p, k, {}};
  for (int j = -1; j <= n; ++j) {
    Polynomial r = full.R(j).set_zero(Var::q(k));
    if (j == n) {
      if (!r.is_zero()) throw std::logic_error("chart_relations: R_n does not vanish");
      break;
    }
    out.relations.push_back(std::move(r));
  }
  return out;
}

std::vector<Polynomial> RelationSet::ideal_generators() const {
  std::vector<Polynomial> gens;
  const int first = presentation == Presentation::X ? 0 : 1;
  for (int k = first; k <= top(); ++k) gens.push_back(R(k));
  return gens;
}

Polynomial closed_form_R1(int n, Presentation p) {
  Polynomial out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out += diagonal_entry(n, i, p) * diagonal_entry(n, j, p);
  }
  for (int j = 1; j <= n; ++j) out += Polynomial::variable(Var::q(j));
  return out;
}

CheckResult verify_relation_identities(int n) {
  return timed_check("toda.identities", "", [&](CheckResult& r) {
    Monomial all_q;
    for (int j = 1; j <= n; ++j) all_q.set(Var::q(j), 1);
    const Polynomial top = Polynomial::monomial(all_q, n % 2 == 1 ? 1 : -1);
    for (const Presentation p : {Presentation::Y, Presentation::X}) {
      const std::string tag = to_string(p);
      auto expect = [&](const std::string& what, const Polynomial& got, const Polynomial& want) {
        ++r.cases;
        if (!(got == want)) {
          r.fail({{"presentation", tag}, {"identity", what}, {"got", got.to_string()}, {"expected", want.to_string()}});
        }
      };
      const Polynomial det = toda_determinant(n, p);
      expect("z coefficient", det.coefficient_of(Var::z(), 1), Polynomial(-1));
      ++r.cases;
      if (!det.is_homogeneous(n) || det.degree(n) != 2 * n) {
        r.fail({{"presentation", tag}, {"identity", "expansion homogeneous of degree 2n"}, {"got", det.to_string()}});
      }
      const RelationSet rel = periodic_relations(n, p);
      expect("R-1", rel.R(-1), Polynomial(1));
      Polynomial trace;
      if (p == Presentation::X) {
        for (int i = 1; i <= n; ++i) trace += Polynomial::variable(Var::X(i));
      }
      expect("R0", rel.R(0), trace);
      expect("R1", rel.R(1), closed_form_R1(n, p));
      expect("Rn", rel.R(n), top);
      for (int k = -1; k <= n; ++k) {
        ++r.cases;
        const Polynomial& rk = rel.R(k);
        // R_n enters the expansion as R_n / z, so it carries degree 2n + deg z
        const int expected = k < n ? 2 * (k + 1) : 4 * n;
        if (!rk.is_zero() && (!rk.is_homogeneous(n) || rk.degree(n) != expected)) {
          r.fail({{"presentation", tag}, {"identity", "degree of R" + std::to_string(k)}, {"got", rk.to_string()}});
        }
      }
    }
  });
}

}  // namespace flagstar
