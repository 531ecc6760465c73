#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagstar/class_vector.hpp"
#include "flagstar/parallel.hpp"
#include "flagstar/schubert.hpp"

namespace flagstar {

template <class Coeff>
using ProductTable = std::vector<std::vector<ClassVector<Coeff>>>;

/// "(q1 + q3)*s123 + s312" style rendering of a class.
template <class Coeff>
std::string class_to_string(const SchubertBasis& basis, const ClassVector<Coeff>& v) {
  std::string out;
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const Polynomial& c = CoeffTraits<Coeff>::to_poly(v[w]);
    if (!(c == Polynomial(1))) out += "(" + c.to_string() + ")*";
    out += "s" + basis.at(w).to_string();
  }
  return out.empty() ? "0" : out;
}

/// Raised when the degree induction that writes a Schubert class as a
/// polynomial in the generator operators breaks down. This only happens if
/// the generator operators do not deform the classical Monk operators.
class LiftError : public std::runtime_error {
 public:
  LiftError(std::size_t index, const std::string& what) : std::runtime_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A commutative algebra H*(F_n) (x) R given by the multiplication operators
/// of the degree-two generators y_1..y_{n-1} on the Schubert basis. R is Z[Q]
/// for the quantum ring and K for the periodic ring.
///
/// Every Schubert class is lifted at construction to a polynomial g_w in
/// X1..Xn and the parameters with g_w(x*, params) . 1 = sigma_w, by induction
/// on degree: start from the Schubert polynomial and subtract the
/// parameter-weighted lifts of whatever lower classes it produces.
template <class Coeff>
class OperatorAlgebra {
 public:
  OperatorAlgebra(std::shared_ptr<const SchubertBasis> basis, VarKind parameter_kind,
                  std::vector<MultOperator<Coeff>> y_operators)
      : basis_(std::move(basis)), parameter_kind_(parameter_kind), y_ops_(std::move(y_operators)) {
    const int n = basis_->n();
    if (static_cast<int>(y_ops_.size()) != n - 1) {
      throw std::invalid_argument("OperatorAlgebra: expected n-1 generator operators");
    }
    for (int i = 1; i <= n; ++i) {
      MultOperator<Coeff> op(basis_->size());
      if (i <= n - 1) op += y_ops_[i - 1];
      if (i >= 2) op -= y_ops_[i - 2];
      x_ops_.push_back(std::move(op));
    }
    build_lifts();
  }

  int n() const { return basis_->n(); }
  const SchubertBasis& basis() const { return *basis_; }
  std::shared_ptr<const SchubertBasis> shared_basis() const { return basis_; }
  VarKind parameter_kind() const { return parameter_kind_; }

  /// Multiplication by y_i, 1 <= i <= n-1.
  const MultOperator<Coeff>& y_operator(int i) const { return y_ops_.at(i - 1); }
  /// Multiplication by x_i = y_i - y_{i-1}, 1 <= i <= n.
  const MultOperator<Coeff>& x_operator(int i) const { return x_ops_.at(i - 1); }
  const std::vector<MultOperator<Coeff>>& y_operators() const { return y_ops_; }

  Coeff coeff(const Polynomial& p) const { return CoeffTraits<Coeff>::from_poly(p, n()); }

  ClassVector<Coeff> basis_vector(std::size_t index) const {
    return ClassVector<Coeff>::unit(basis_->size(), index, coeff(Polynomial(1)));
  }
  ClassVector<Coeff> unit() const { return basis_vector(basis_->identity_index()); }

  /// g(x*, params) applied to v. g may use X_i or x_i for x_i*, Y_i for y_i*,
  /// and the parameter family of this algebra. Throws std::invalid_argument
  /// on any other variable.
  ClassVector<Coeff> apply(const Polynomial& g, const ClassVector<Coeff>& v) const {
    check_variables(g);
    ClassVector<Coeff> out(basis_->size());
    for (const auto& t : g.terms()) {
      const Coeff c = coeff(Polynomial::monomial(t.monomial.parameter_part(), t.coeff));
      if (c.is_zero()) continue;
      ClassVector<Coeff> acc = v;
      const Monomial ring = t.monomial.ring_part();
      for (const Var& var : ring.variables()) {
        const auto& op = ring_operator(var);
        for (int e = 0; e < ring.exponent(var); ++e) acc = op.apply(acc);
      }
      out.add_scaled(c, acc);
    }
    return out;
  }

  /// Schubert coordinates of the class g(x*, params) . 1.
  ClassVector<Coeff> evaluate(const Polynomial& g) const { return apply(g, unit()); }

  /// The lift g_w of sigma_w, in X1..Xn and the parameters.
  const Polynomial& lift(std::size_t index) const { return lifts_.at(index); }
  const std::vector<Polynomial>& lifts() const { return lifts_; }

  /// Multiplication by sigma_w: g_w evaluated on the generator operators.
  MultOperator<Coeff> lift_operator(std::size_t index) const {
    std::vector<ClassVector<Coeff>> columns;
    for (std::size_t v = 0; v < basis_->size(); ++v) columns.push_back(apply(lifts_[index], basis_vector(v)));
    return MultOperator<Coeff>::from_columns(columns);
  }

  /// table[u][v] = sigma_u * sigma_v = g_u(x*) sigma_v. Monomial operators
  /// are shared across all lifts; the sweep runs in parallel over v.
  ProductTable<Coeff> product_table() const {
    std::set<Monomial, CanonicalLess> needed;
    needed.insert(Monomial());
    for (const auto& g : lifts_) {
      for (const auto& t : g.terms()) {
        Monomial m = t.monomial.ring_part();
        while (needed.insert(m).second) {
          const Var first = m.variables().front();
          m.set(first, m.exponent(first) - 1);
        }
      }
    }
    const std::vector<Monomial> monos(needed.begin(), needed.end());
    std::map<Monomial, std::size_t, CanonicalLess> position;
    for (std::size_t i = 0; i < monos.size(); ++i) position.emplace(monos[i], i);

    struct Step {
      std::size_t source;
      const MultOperator<Coeff>* op;
    };
    std::vector<Step> steps(monos.size(), Step{0, nullptr});
    for (std::size_t i = 1; i < monos.size(); ++i) {
      Monomial m = monos[i];
      const Var first = m.variables().front();
      m.set(first, m.exponent(first) - 1);
      steps[i] = Step{position.at(m), &ring_operator(first)};
    }

    struct LiftTerm {
      std::size_t mono;
      Coeff coeff;
    };
    std::vector<std::vector<LiftTerm>> lift_terms(lifts_.size());
    for (std::size_t u = 0; u < lifts_.size(); ++u) {
      for (const auto& t : lifts_[u].terms()) {
        lift_terms[u].push_back(
            {position.at(t.monomial.ring_part()), coeff(Polynomial::monomial(t.monomial.parameter_part(), t.coeff))});
      }
    }

    const std::size_t size = basis_->size();
    ProductTable<Coeff> table(size, std::vector<ClassVector<Coeff>>(size));
    parallel_for(size, [&](std::size_t v) {
      std::vector<ClassVector<Coeff>> images(monos.size());
      images[0] = basis_vector(v);
      for (std::size_t i = 1; i < monos.size(); ++i) images[i] = steps[i].op->apply(images[steps[i].source]);
      for (std::size_t u = 0; u < size; ++u) {
        ClassVector<Coeff> out(size);
        for (const auto& term : lift_terms[u]) out.add_scaled(term.coeff, images[term.mono]);
        table[u][v] = std::move(out);
      }
    });
    return table;
  }

 private:
  const MultOperator<Coeff>& ring_operator(Var var) const {
    switch (var.kind) {
      case VarKind::X:
      case VarKind::x: return x_ops_.at(var.index - 1);
      case VarKind::Y: return y_ops_.at(var.index - 1);
      default: throw std::invalid_argument("not a ring variable: " + var.name());
    }
  }

  void check_variables(const Polynomial& g) const {
    const int n = basis_->n();
    const int parameter_count = parameter_kind_ == VarKind::Q ? n - 1 : n;
    for (const Var& v : g.variables()) {
      const bool ok = ((v.kind == VarKind::X || v.kind == VarKind::x) && v.index <= n) ||
                      (v.kind == VarKind::Y && v.index <= n - 1) ||
                      (v.kind == parameter_kind_ && v.index <= parameter_count);
      if (!ok) throw std::invalid_argument("variable mismatch: " + v.name() + " is not a generator of this ring");
    }
  }

  void build_lifts() {
    const std::size_t size = basis_->size();
    lifts_.resize(size);
    for (std::size_t u = 0; u < size; ++u) {
      Polynomial g = rename_kind(basis_->polynomial(u), VarKind::x, VarKind::X);
      const ClassVector<Coeff> image = evaluate(g);
      for (std::size_t v = 0; v < size; ++v) {
        const Coeff& c = image[v];
        if (v == u) {
          if (!(c == coeff(Polynomial(1)))) {
            throw LiftError(u, "lift of " + basis_->at(u).to_string() + ": leading coefficient is not 1");
          }
        } else if (basis_->length(v) >= basis_->length(u)) {
          if (!c.is_zero()) {
            throw LiftError(u, "lift of " + basis_->at(u).to_string() + ": unexpected term at " +
                                   basis_->at(v).to_string());
          }
        } else if (!c.is_zero()) {
          g -= CoeffTraits<Coeff>::to_poly(c) * lifts_[v];
        }
      }
      lifts_[u] = std::move(g);
    }
  }

  std::shared_ptr<const SchubertBasis> basis_;
  VarKind parameter_kind_;
  std::vector<MultOperator<Coeff>> y_ops_;
  std::vector<MultOperator<Coeff>> x_ops_;
  std::vector<Polynomial> lifts_;
};

}  // namespace flagstar
