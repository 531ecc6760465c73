#pragma once

#include <string>

#include "flagstar/polynomial.hpp"

namespace flagstar {

/// Coset in K = Z[q1..qn]/(q1*...*qn), stored in normal form: no monomial is
/// divisible by the full product q1*...*qn.
///
/// A default-constructed element is zero and carries no n; it adopts the n
/// of whatever it is combined with.
class KElement {
 public:
  KElement() = default;

  static KElement zero(int n) { return KElement(n, Polynomial()); }
  static KElement one(int n) { return KElement(n, Polynomial(1)); }

  int n() const { return n_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(const KElement& a, const KElement& b);
  KElement operator-() const { return KElement(n_, -poly_); }

  /// Formally replace q_k by zero.
  Polynomial restrict_to_chart(int k) const { return poly_.set_zero(Var::q(k)); }

  std::string to_string() const { return poly_.to_string(); }

  bool operator==(const KElement& other) const { return poly_ == other.poly_; }

 private:
  friend KElement normalize_K(int n, const Polynomial& p);
  KElement(int n, Polynomial p) : n_(n), poly_(std::move(p)) {}

  int n_ = 0;
  Polynomial poly_;
};

/// Drop every monomial divisible by q1*...*qn. Throws std::invalid_argument
/// if p involves anything other than q1..qn.
KElement normalize_K(int n, const Polynomial& p);

/// True if m is divisible by q1*...*qn.
bool has_full_q_support(const Monomial& m, int n);

}  // namespace flagstar
