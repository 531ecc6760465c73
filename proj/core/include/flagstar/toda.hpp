#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagstar/polynomial.hpp"
#include "flagstar/report.hpp"

namespace flagstar {

/// Generators of the degree-two ring: Y1..Y_{n-1}, or X1..Xn with
/// X_i = Y_i - Y_{i-1}.
enum class Presentation { Y, X };

std::string to_string(Presentation p);

/// R_{-1}, R_0, ..., R_top of the periodic Toda determinant expansion.
/// For the full periodic ring top = n; for a chart (q_k = 0) R_n vanishes and
/// top = n - 1.
struct RelationSet {
  int n = 0;
  Presentation presentation = Presentation::Y;
  std::optional<int> chart;
  std::vector<Polynomial> relations;  // relations[k + 1] holds R_k

  int top() const { return static_cast<int>(relations.size()) - 2; }
  /// R_k for -1 <= k <= top().
  const Polynomial& R(int k) const { return relations.at(static_cast<size_t>(k + 1)); }
  /// The ideal generators: R_1..R_top, preceded by R_0 in the X presentation.
  std::vector<Polynomial> ideal_generators() const;
};

/// The n x n periodic matrix with diagonal X_1..X_n (written in Y in the Y
/// presentation), q_i on the superdiagonal, -1 on the subdiagonal, -z in the
/// top-right and q_n/z in the bottom-left corner. For n = 2 the corner and
/// off-diagonal entries add.
std::vector<std::vector<Polynomial>> toda_matrix(int n, Presentation p);

/// det(A + mu I) as a polynomial in mu, z^{+-1}, the ring variables and q.
Polynomial toda_determinant(int n, Presentation p);

/// Reads R_{-1}..R_n off the determinant expansion. Throws std::logic_error
/// if the z coefficient is not exactly -1 or z appears together with mu.
RelationSet periodic_relations(int n, Presentation p);

/// periodic_relations with q_k = 0; R_n becomes zero and is dropped.
RelationSet chart_relations(int n, int k, Presentation p = Presentation::Y);

/// sum_{i<j} (Y_i - Y_{i-1})(Y_j - Y_{j-1}) + sum_j q_j, Y_0 = Y_n = 0.
Polynomial closed_form_R1(int n, Presentation p);

/// X_i = Y_i - Y_{i-1} written in Y variables.
Polynomial x_in_y(int n, int i);

/// R_{-1} = 1, R_0 = 0 (Y) or X1 + ... + Xn (X), the closed form of R_1,
/// R_n = (-1)^{n-1} q1...qn, z coefficient -1, R_k homogeneous of degree
/// 2(k + 1) for k < n and R_n of degree 4n, in both presentations.
CheckResult verify_relation_identities(int n);

}  // namespace flagstar
