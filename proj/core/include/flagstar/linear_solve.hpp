#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagstar/integer.hpp"

namespace flagstar {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  std::vector<Rational> values;  // free variables set to zero
  std::size_t rank = 0;
  std::vector<std::size_t> free_columns;
};

/// Solves A x = b by Gauss-Jordan elimination over Q. nullopt if the system
/// is inconsistent. A may be rectangular; `columns` is its width (needed when
/// A has no rows).
std::optional<LinearSolution> solve_linear(RationalMatrix a, std::vector<Rational> b, std::size_t columns);

/// Inverse of a square matrix, nullopt if singular.
std::optional<RationalMatrix> invert(const RationalMatrix& a);

}  // namespace flagstar
