#pragma once

// Axiom checks shared by the quantum ring (coefficients in Z[Q]) and the
// periodic ring (coefficients in K). Each returns a CheckResult whose
// counterexample names the offending basis elements.

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "flagstar/operator_algebra.hpp"
#include "flagstar/report.hpp"

namespace flagstar::axioms {

using Payload = std::vector<std::pair<std::string, std::string>>;

/// First failure across a parallel sweep, chosen by smallest outer index so
/// that reports are reproducible.
class FirstFailure {
 public:
  explicit FirstFailure(std::size_t outer) : slots_(outer) {}
  void record(std::size_t outer, Payload payload) {
    if (!slots_[outer]) slots_[outer] = std::move(payload);
  }
  void apply(CheckResult& result) const {
    for (const auto& s : slots_) {
      if (s) {
        result.fail(*s);
        return;
      }
    }
  }

 private:
  std::vector<std::optional<Payload>> slots_;
};

template <class Coeff>
std::string coeff_string(const Coeff& c) {
  return CoeffTraits<Coeff>::to_poly(c).to_string();
}

/// Every monomial q^d in the coefficient of sigma_w in sigma_u * sigma_v
/// satisfies l(u) + l(v) = l(w) + 2|d|.
template <class Coeff>
CheckResult check_grading(const std::string& name, const SchubertBasis& basis, const ProductTable<Coeff>& table) {
  return timed_check(name, "(ii)", [&](CheckResult& r) {
    for (std::size_t u = 0; u < basis.size(); ++u) {
      for (std::size_t v = 0; v < basis.size(); ++v) {
        for (std::size_t w = 0; w < basis.size(); ++w) {
          ++r.cases;
          const auto& poly = CoeffTraits<Coeff>::to_poly(table[u][v][w]);
          for (const auto& t : poly.terms()) {
            if (2 * (basis.length(u) + basis.length(v)) != 2 * basis.length(w) + t.monomial.grading() ||
                !t.monomial.ring_part().is_one()) {
              r.fail({{"u", basis.at(u).to_string()},
                      {"v", basis.at(v).to_string()},
                      {"w", basis.at(w).to_string()},
                      {"coefficient", poly.to_string()}});
            }
          }
        }
      }
    }
  });
}

/// Parameter-free parts agree with the classical cup-product constants.
template <class Coeff>
CheckResult check_classical_limit(const std::string& name, const SchubertBasis& basis, const ProductTable<Coeff>& table,
                                  const std::vector<std::vector<std::vector<Integer>>>& classical) {
  return timed_check(name, "(iii)", [&](CheckResult& r) {
    for (std::size_t u = 0; u < basis.size(); ++u) {
      for (std::size_t v = 0; v < basis.size(); ++v) {
        for (std::size_t w = 0; w < basis.size(); ++w) {
          ++r.cases;
          const Integer got = CoeffTraits<Coeff>::to_poly(table[u][v][w]).constant_term();
          if (got != classical[u][v][w]) {
            r.fail({{"u", basis.at(u).to_string()},
                    {"v", basis.at(v).to_string()},
                    {"w", basis.at(w).to_string()},
                    {"deformed", got.str()},
                    {"classical", classical[u][v][w].str()}});
          }
        }
      }
    }
  });
}

template <class Coeff>
CheckResult check_commutativity(const std::string& name, const OperatorAlgebra<Coeff>& algebra,
                                const ProductTable<Coeff>& table) {
  const auto& basis = algebra.basis();
  return timed_check(name, "(iv)", [&](CheckResult& r) {
    for (std::size_t u = 0; u < basis.size(); ++u) {
      for (std::size_t v = u + 1; v < basis.size(); ++v) {
        ++r.cases;
        if (!(table[u][v] == table[v][u])) {
          r.fail({{"u", basis.at(u).to_string()}, {"v", basis.at(v).to_string()}});
        }
      }
    }
    const int n = algebra.n();
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ++r.cases;
        const auto& a = algebra.y_operator(i);
        const auto& b = algebra.y_operator(j);
        if (!(a * b == b * a)) r.fail({{"generators", "y" + std::to_string(i) + ",y" + std::to_string(j)}});
      }
    }
  });
}

/// (sigma_u sigma_v) sigma_w == sigma_u (sigma_v sigma_w) over every triple,
/// expanded through the table.
template <class Coeff>
CheckResult check_associativity(const std::string& name, const SchubertBasis& basis, const ProductTable<Coeff>& table) {
  return timed_check(name, "(v)", [&](CheckResult& r) {
    const std::size_t size = basis.size();
    FirstFailure first(size);
    parallel_for(size, [&](std::size_t u) {
      for (std::size_t v = 0; v < size; ++v) {
        for (std::size_t w = 0; w < size; ++w) {
          ClassVector<Coeff> left(size);
          const auto& uv = table[u][v];
          for (std::size_t a = 0; a < size; ++a) left.add_scaled(uv[a], table[a][w]);
          ClassVector<Coeff> right(size);
          const auto& vw = table[v][w];
          for (std::size_t b = 0; b < size; ++b) right.add_scaled(vw[b], table[u][b]);
          if (!(left == right)) {
            std::size_t at = 0;
            while (at < size && left[at] == right[at]) ++at;
            first.record(u, {{"u", basis.at(u).to_string()},
                             {"v", basis.at(v).to_string()},
                             {"w", basis.at(w).to_string()},
                             {"class", basis.at(at).to_string()},
                             {"left", coeff_string(left[at])},
                             {"right", coeff_string(right[at])}});
          }
        }
      }
    });
    r.cases = size * size * size;
    first.apply(r);
  });
}

/// sum_{i<j} x_i * x_j + (sum of all parameters) == 0.
template <class Coeff>
CheckResult check_quadratic_relation(const std::string& name, const OperatorAlgebra<Coeff>& algebra) {
  return timed_check(name, "(vi)", [&](CheckResult& r) {
    const int n = algebra.n();
    const int parameters = algebra.parameter_kind() == VarKind::Q ? n - 1 : n;
    Polynomial relation;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) relation += Polynomial::variable(Var::X(i)) * Polynomial::variable(Var::X(j));
    }
    for (int j = 1; j <= parameters; ++j) relation += Polynomial::variable(Var{algebra.parameter_kind(), j});
    const auto value = algebra.evaluate(relation);
    r.cases = value.size();
    for (std::size_t w = 0; w < value.size(); ++w) {
      if (!value[w].is_zero()) {
        r.fail({{"relation", relation.to_string()},
                {"class", algebra.basis().at(w).to_string()},
                {"coefficient", coeff_string(value[w])}});
        break;
      }
    }
  });
}

/// Flatness on the generators: for every basis w, generator pair (i, j) and
/// every parameter exponent d occurring in y_i * sigma_w or y_j * sigma_w,
///   weight(d, i) * (y_j * sigma_w)_d == weight(d, j) * (y_i * sigma_w)_d.
/// The weight is d_i for the quantum ring and d_i - d_n for the periodic one.
template <class Coeff, class Weight>
CheckResult check_flatness(const std::string& name, const OperatorAlgebra<Coeff>& algebra, Weight weight) {
  return timed_check(name, "(vii)", [&](CheckResult& r) {
    const auto& basis = algebra.basis();
    const int n = algebra.n();
    for (std::size_t w = 0; w < basis.size(); ++w) {
      std::vector<ClassVector<Coeff>> images;
      for (int i = 1; i < n; ++i) images.push_back(algebra.y_operator(i).apply(algebra.basis_vector(w)));
      std::set<Monomial, CanonicalLess> exponents;
      for (const auto& img : images) {
        for (std::size_t v = 0; v < img.size(); ++v) {
          for (const auto& t : CoeffTraits<Coeff>::to_poly(img[v]).terms()) exponents.insert(t.monomial);
        }
      }
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (const auto& d : exponents) {
            ++r.cases;
            const Integer wi = weight(d, i);
            const Integer wj = weight(d, j);
            for (std::size_t v = 0; v < basis.size(); ++v) {
              const Integer lhs = wi * CoeffTraits<Coeff>::to_poly(images[j - 1][v]).coefficient(d);
              const Integer rhs = wj * CoeffTraits<Coeff>::to_poly(images[i - 1][v]).coefficient(d);
              if (lhs != rhs) {
                r.fail({{"w", basis.at(w).to_string()},
                        {"i", std::to_string(i)},
                        {"j", std::to_string(j)},
                        {"d", d.to_string()},
                        {"class", basis.at(v).to_string()},
                        {"lhs", lhs.str()},
                        {"rhs", rhs.str()}});
              }
            }
          }
        }
      }
    }
  });
}

}  // namespace flagstar::axioms
