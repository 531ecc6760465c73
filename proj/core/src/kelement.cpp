#include "flagstar/kelement.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagstar {

bool has_full_q_support(const Monomial& m, int n) {
  for (int i = 1; i <= n; ++i) {
    if (m.exponent(Var::q(i)) == 0) return false;
  }
  return true;
}

KElement normalize_K(int n, const Polynomial& p) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("normalize_K: bad n");
  for (const auto& t : p.terms()) {
    if (!t.monomial.uses_only({VarKind::q})) {
      throw std::invalid_argument("normalize_K: polynomial involves non-q variables: " + p.to_string());
    }
    for (const Var& v : t.monomial.variables()) {
      if (v.index > n) throw std::invalid_argument("normalize_K: q index exceeds n");
    }
  }
  return KElement(n, p.filter([n](const Monomial& m) { return !has_full_q_support(m, n); }));
}

namespace {

int merged_n(int a, int b) {
  if (a != 0 && b != 0 && a != b) throw std::invalid_argument("KElement: mismatched n");
  return std::max(a, b);
}

}  // namespace

KElement& KElement::operator+=(const KElement& other) {
  n_ = merged_n(n_, other.n_);
  poly_ += other.poly_;
  return *this;
}

KElement& KElement::operator-=(const KElement& other) {
  n_ = merged_n(n_, other.n_);
  poly_ -= other.poly_;
  return *this;
}

KElement operator*(const KElement& a, const KElement& b) {
  const int n = merged_n(a.n_, b.n_);
  if (a.is_zero() || b.is_zero()) return KElement(n, Polynomial());
  Polynomial product = a.poly_ * b.poly_;
  return KElement(n, product.filter([n](const Monomial& m) { return !has_full_q_support(m, n); }));
}

}  // namespace flagstar
