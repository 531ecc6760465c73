#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "flagstar/permutation.hpp"
#include "flagstar/polynomial.hpp"

namespace flagstar {

/// (f - s_i f) / (x_i - x_{i+1}), where s_i swaps x_i and x_{i+1}.
/// Throws std::invalid_argument unless 1 <= i and std::logic_error if the
/// division is inexact (impossible for polynomial input).
Polynomial divided_difference(int i, const Polynomial& f);

/// Schubert polynomial of w in x1..xn, from the staircase monomial
/// x1^{n-1} x2^{n-2} ... x_{n-1} along the reduced word of w^{-1} w0.
Polynomial schubert_polynomial(const Permutation& w);

/// Applies divided differences along `word` (rightmost letter first) to the
/// staircase monomial. For a reduced word of w^{-1} w0 this is the Schubert
/// polynomial of w.
Polynomial schubert_polynomial_from_word(int n, std::span<const int> word);

/// 1 if v = w0 * w, else 0: the Poincare pairing of sigma_v and sigma_w.
int pairing_index(const Permutation& v, const Permutation& w);

/// The Schubert basis of H*(F_n): all of S_n ordered by length, ties broken
/// lexicographically on one-line words. Schubert polynomials are computed
/// eagerly top-down over the weak order, so the object is immutable after
/// construction and safe to share.
class SchubertBasis {
 public:
  explicit SchubertBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<Permutation>& order() const { return order_; }
  const Permutation& at(std::size_t index) const { return order_[index]; }
  /// Throws std::out_of_range for permutations of the wrong size.
  std::size_t index(const Permutation& w) const;
  int length(std::size_t index) const { return lengths_[index]; }

  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return order_.size() - 1; }
  /// Index of s_r.
  std::size_t simple_index(int r) const;
  /// Index of w0 * w.
  std::size_t dual_index(std::size_t index) const { return dual_[index]; }

  /// Schubert polynomial in x1..xn.
  const Polynomial& polynomial(std::size_t index) const { return polynomials_[index]; }

  /// Top classical degree n(n-1)/2.
  int top_length() const { return n_ * (n_ - 1) / 2; }

 private:
  int n_;
  std::vector<Permutation> order_;
  std::vector<int> lengths_;
  std::vector<std::size_t> dual_;
  std::map<Permutation, std::size_t> index_;
  std::vector<Polynomial> polynomials_;
};

/// Coordinates of the class of f in H*(F_n) = Z[x]/S(x) in the Schubert
/// basis: the coefficient of sigma_w is the constant term of d_w f, with
/// d_w = d_{i_1} ... d_{i_l} for a reduced word of w. f must be in x1..xn.
std::vector<Integer> classical_expansion(const SchubertBasis& basis, const Polynomial& f);

/// Classical cup-product structure constants c^{uv}_w, indexed [u][v][w].
std::vector<std::vector<std::vector<Integer>>> classical_structure_constants(const SchubertBasis& basis);

}  // namespace flagstar
