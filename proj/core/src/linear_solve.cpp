#include "flagstar/linear_solve.hpp"

#include <stdexcept>
#include <utility>

namespace flagstar {

std::optional<LinearSolution> solve_linear(RationalMatrix a, std::vector<Rational> b, std::size_t columns) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: right-hand side has the wrong length");
  for (const auto& row : a) {
    if (row.size() != columns) throw std::invalid_argument("solve_linear: ragged matrix");
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < columns; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < columns; ++k) {
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
      }
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  LinearSolution out;
  out.values.assign(columns, Rational(0));
  out.rank = r;
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t i = 0; i < r; ++i) {
    out.values[pivots[i]] = b[i];
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t c = 0; c < columns; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  return out;
}

std::optional<RationalMatrix> invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("invert: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& e : m[c]) e *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) {
        if (m[c][k] != 0) m[i][k] -= f * m[c][k];
      }
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  }
  return out;
}

}  // namespace flagstar
