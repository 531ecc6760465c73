#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "flagstar/integer.hpp"
#include "flagstar/operator_algebra.hpp"
#include "flagstar/polynomial.hpp"
#include "flagstar/report.hpp"
#include "flagstar/toda.hpp"

namespace flagstar {

/// Block order: blocks are compared in sequence, each by total degree and
/// then reverse lexicographically in the listed variable priority (first
/// listed variable is the largest).
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<std::vector<Var>> blocks);

  /// Ring variables before parameters, grevlex within each block.
  static MonomialOrder block_grevlex(const std::vector<Var>& ring, const std::vector<Var>& parameters);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool covers(const Monomial& m) const;
  const std::vector<std::vector<Var>>& blocks() const { return blocks_; }

 private:
  std::vector<std::vector<Var>> blocks_;
  std::vector<std::vector<int>> slots_;
  std::vector<bool> covered_;
};

/// Sparse polynomial over Q with terms kept in decreasing order for a given
/// MonomialOrder.
class RationalPolynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  RationalPolynomial() = default;
  RationalPolynomial(const Polynomial& p, const MonomialOrder& order);

  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  /// Integer polynomial with the same terms; throws std::domain_error if a
  /// coefficient is not integral.
  Polynomial to_polynomial() const;
  /// Scaled to a primitive integer polynomial with positive leading coefficient.
  Polynomial primitive() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<RationalPolynomial> generators, bool reduced)
      : order_(std::move(order)), generators_(std::move(generators)), reduced_(reduced) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<RationalPolynomial>& generators() const { return generators_; }
  bool is_reduced() const { return reduced_; }

  /// Complete reduction of f; zero iff f lies in the ideal.
  RationalPolynomial normal_form(const Polynomial& f) const;
  RationalPolynomial normal_form(RationalPolynomial f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Generators rescaled to primitive integer polynomials.
  std::vector<Polynomial> primitive_generators() const;
  std::vector<Monomial> leading_monomials() const;

  /// Monomials in `ring` that are standard over the fraction field of the
  /// remaining (parameter) variables: not divisible by the ring part of any
  /// leading monomial. nullopt if there are infinitely many.
  std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Var>& ring) const;

  /// Every S-polynomial of a generator pair reduces to zero.
  bool s_pairs_reduce_to_zero() const;

 private:
  MonomialOrder order_;
  std::vector<RationalPolynomial> generators_;
  bool reduced_;
};

/// Reduced Groebner basis of the ideal generated by `generators` (Buchberger
/// with the product and chain criteria, pairs taken by increasing lcm).
/// Throws std::invalid_argument if a generator uses a variable outside the
/// order's blocks.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

/// Order with ring variables listed in decreasing index (X_n > ... > X_1)
/// ahead of the q block, so that standard monomials are staircase-shaped.
MonomialOrder presentation_order(int n, VarKind ring_kind, bool with_parameters = true);

/// Elementary symmetric polynomial e_k in the given family, indices 1..n.
Polynomial elementary_symmetric(int n, int k, VarKind kind);

/// Groebner basis of S(v1..vn) = (e_1, ..., e_n) for the family `kind`.
GroebnerBasis classical_ideal_basis(int n, VarKind kind);

/// Groebner basis of the periodic ideal: (R_1..R_n) in Y1..Y_{n-1}, q, or
/// (R_0..R_n) in X1..Xn, q.
GroebnerBasis periodic_ideal_basis(int n, Presentation p);

/// Groebner basis of the chart ideal (q_k = 0) in the Y presentation.
GroebnerBasis chart_ideal_basis(int n, int k);

/// Each chart quotient has exactly n! standard Y-monomials over Q(q).
CheckResult verify_rank(int n);

/// The periodic ideal at q = 0 equals S(X1..Xn): mutual containment.
CheckResult verify_classical_ideal(int n);

/// f_u f_v - sum_w c^{uv}_w f_w lies in the ideal for every pair u <= v.
/// `ideal` must be the X-presentation periodic ideal.
CheckResult verify_presentation(const GroebnerBasis& ideal, const SchubertBasis& basis,
                                const std::vector<Polynomial>& representatives, const ProductTable<KElement>& star);

}  // namespace flagstar
