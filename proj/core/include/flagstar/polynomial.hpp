#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flagstar/integer.hpp"

namespace flagstar {

/// Largest n the fixed-slot monomial layout supports.
inline constexpr int kMaxRank = 6;

/// Variable families. The enumerator order is the canonical variable order
/// (X1 > ... > Xn > Y1 > ... > x1 > ... > Q1 > ... > q1 > ... > mu > z).
enum class VarKind : std::uint8_t { X, Y, x, Q, q, mu, z };

struct Var {
  VarKind kind = VarKind::X;
  int index = 0;  // 1-based; 0 for mu and z

  static Var X(int i) { return {VarKind::X, i}; }
  static Var Y(int i) { return {VarKind::Y, i}; }
  static Var x(int i) { return {VarKind::x, i}; }
  static Var Q(int i) { return {VarKind::Q, i}; }
  static Var q(int i) { return {VarKind::q, i}; }
  static Var mu() { return {VarKind::mu, 0}; }
  static Var z() { return {VarKind::z, 0}; }

  /// Position in the exponent array.
  int slot() const;
  static Var from_slot(int slot);
  /// ASCII name: X1, q3, mu, z.
  std::string name() const;
  /// Throws std::invalid_argument for unknown names.
  static Var parse(std::string_view name);

  /// Cohomological degree contribution of one power, excluding z.
  int weight() const;
  bool is_parameter() const { return kind == VarKind::Q || kind == VarKind::q; }

  auto operator<=>(const Var&) const = default;
};

inline constexpr int kSlots = 32;

/// Exponent vector over the fixed variable layout. Only z may carry a
/// negative exponent, and it is confined to {-1, 0, 1}.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial of(Var v, int exponent = 1);

  int exponent(Var v) const { return exps_[v.slot()]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  void set(Var v, int exponent);

  bool is_one() const;
  /// 2 per X/Y/x/mu power, 4 per Q/q power; z is excluded.
  int grading() const;
  /// Full grading with deg z = 2n.
  int weighted_degree(int n) const { return grading() + 2 * n * exponent(Var::z()); }
  int total_degree() const;
  std::vector<Var> variables() const;
  bool uses_only(std::initializer_list<VarKind> kinds) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Restriction to parameter (Q, q) variables, and to everything else.
  Monomial parameter_part() const;
  Monomial ring_part() const;

  /// "q1*X1^2"; parameters are printed first, "1" for the empty monomial.
  std::string to_string() const;
  /// "q_1X_1^2", empty for the empty monomial.
  std::string to_latex() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  const std::array<std::int8_t, kSlots>& exponents() const { return exps_; }

 private:
  std::array<std::int8_t, kSlots> exps_;
};

/// Canonical order: grading first, then lexicographic on the slot layout.
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_compare(a, b) == std::strong_ordering::less;
  }
};

/// Sparse multivariate polynomial with integer coefficients. Terms are kept
/// sorted in decreasing canonical order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Integer(constant)) {}  // NOLINT
  Polynomial(const Integer& constant);                         // NOLINT

  static Polynomial variable(Var v, int exponent = 1);
  static Polynomial monomial(const Monomial& m, const Integer& coeff = 1);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Parses the canonical grammar, e.g. "X1^2*X2 + q1*X1 - 3*q3*X2".
  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient(Monomial()); }
  const Term& leading_term() const { return terms_.front(); }

  bool uses_only(std::initializer_list<VarKind> kinds) const;
  std::vector<Var> variables() const;
  bool is_homogeneous(int n) const;
  /// Weighted degree of the leading term (0 for the zero polynomial).
  int degree(int n) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  Polynomial operator-() const;
  Polynomial pow(int exponent) const;

  /// Every term multiplied by m.
  Polynomial shifted(const Monomial& m) const;
  /// Substitute 0 for v.
  Polynomial set_zero(Var v) const;
  Polynomial set_zero(VarKind kind) const;
  /// Coefficient of v^exponent, as a polynomial free of v.
  Polynomial coefficient_of(Var v, int exponent) const;
  /// Simultaneous substitution; unmapped variables are kept.
  Polynomial substitute(const std::map<Var, Polynomial>& images) const;
  /// Terms whose monomial satisfies the predicate.
  template <class Pred>
  Polynomial filter(Pred pred) const {
    Polynomial out;
    for (const auto& t : terms_) {
      if (pred(t.monomial)) out.terms_.push_back(t);
    }
    return out;
  }

  std::string to_string() const;
  std::string to_latex() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<Term> terms_;
};

using VarMap = std::map<Var, Var>;

/// Rename variables. Every variable occurring in p must be mapped, and the
/// map must be injective on them; otherwise std::invalid_argument.
Polynomial relabel(const Polynomial& p, const VarMap& map);

/// Rename every variable of one family to another family, keeping indices.
Polynomial rename_kind(const Polynomial& p, VarKind from, VarKind to);

/// Exact quotient num / den. Throws std::domain_error on a nonzero remainder.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

}  // namespace flagstar
