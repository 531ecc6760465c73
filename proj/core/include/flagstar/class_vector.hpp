#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flagstar/kelement.hpp"
#include "flagstar/polynomial.hpp"

namespace flagstar {

/// Conversions between a coefficient domain and plain polynomials.
/// Polynomial is used for Z[Q1..Q_{n-1}] (and chart rings); KElement for K.
template <class Coeff>
struct CoeffTraits;

template <>
struct CoeffTraits<Polynomial> {
  static Polynomial from_poly(const Polynomial& p, int /*n*/) { return p; }
  static const Polynomial& to_poly(const Polynomial& c) { return c; }
};

template <>
struct CoeffTraits<KElement> {
  static KElement from_poly(const Polynomial& p, int n) { return normalize_K(n, p); }
  static const Polynomial& to_poly(const KElement& c) { return c.poly(); }
};

/// Coordinates of a class in the Schubert basis.
template <class Coeff>
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::size_t size) : coords_(size) {}
  explicit ClassVector(std::vector<Coeff> coords) : coords_(std::move(coords)) {}

  static ClassVector unit(std::size_t size, std::size_t index, const Coeff& one) {
    ClassVector v(size);
    v.coords_[index] = one;
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Coeff& operator[](std::size_t i) const { return coords_[i]; }
  Coeff& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Coeff>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  ClassVector& operator+=(const ClassVector& other) {
    check(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (!other.coords_[i].is_zero()) coords_[i] += other.coords_[i];
    }
    return *this;
  }
  ClassVector& operator-=(const ClassVector& other) {
    check(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (!other.coords_[i].is_zero()) coords_[i] -= other.coords_[i];
    }
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }

  /// this += scale * other.
  void add_scaled(const Coeff& scale, const ClassVector& other) {
    check(other);
    if (scale.is_zero()) return;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (!other.coords_[i].is_zero()) coords_[i] += scale * other.coords_[i];
    }
  }

  ClassVector scaled(const Coeff& scale) const {
    ClassVector out(coords_.size());
    out.add_scaled(scale, *this);
    return out;
  }

  bool operator==(const ClassVector& other) const { return coords_ == other.coords_; }

 private:
  void check(const ClassVector& other) const {
    if (other.coords_.size() != coords_.size()) throw std::invalid_argument("ClassVector: size mismatch");
  }

  std::vector<Coeff> coords_;
};

/// Square matrix over the coefficient domain acting on Schubert coordinates.
/// Column w holds the expansion of (class * sigma_w).
template <class Coeff>
class MultOperator {
 public:
  MultOperator() = default;
  explicit MultOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static MultOperator identity(std::size_t dim, const Coeff& one) {
    MultOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = one;
    return m;
  }

  static MultOperator from_columns(const std::vector<ClassVector<Coeff>>& columns) {
    MultOperator m(columns.size());
    for (std::size_t w = 0; w < columns.size(); ++w) {
      for (std::size_t v = 0; v < columns.size(); ++v) m.at(v, w) = columns[w][v];
    }
    return m;
  }

  std::size_t dim() const { return dim_; }
  const Coeff& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Coeff& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  ClassVector<Coeff> column(std::size_t col) const {
    ClassVector<Coeff> v(dim_);
    for (std::size_t row = 0; row < dim_; ++row) v[row] = at(row, col);
    return v;
  }

  ClassVector<Coeff> apply(const ClassVector<Coeff>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("MultOperator: size mismatch");
    ClassVector<Coeff> out(dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
      const Coeff& x = v[col];
      if (x.is_zero()) continue;
      for (std::size_t row = 0; row < dim_; ++row) {
        const Coeff& a = at(row, col);
        if (!a.is_zero()) out[row] += a * x;
      }
    }
    return out;
  }

  friend MultOperator operator*(const MultOperator& a, const MultOperator& b) {
    MultOperator out(a.dim_);
    for (std::size_t col = 0; col < a.dim_; ++col) {
      const auto c = a.apply(b.column(col));
      for (std::size_t row = 0; row < a.dim_; ++row) out.at(row, col) = c[row];
    }
    return out;
  }

  MultOperator& operator+=(const MultOperator& other) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }
  MultOperator& operator-=(const MultOperator& other) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }
  friend MultOperator operator+(MultOperator a, const MultOperator& b) { return a += b; }
  friend MultOperator operator-(MultOperator a, const MultOperator& b) { return a -= b; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  bool operator==(const MultOperator& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Coeff> entries_;
};

}  // namespace flagstar
