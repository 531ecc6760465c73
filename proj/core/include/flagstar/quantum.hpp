#pragma once

#include <memory>
#include <vector>

#include "flagstar/operator_algebra.hpp"
#include "flagstar/report.hpp"
#include "flagstar/schubert.hpp"

namespace flagstar {

/// Small quantum cohomology qH*(F_n) over Z[Q1..Q_{n-1}].
using QuantumRing = OperatorAlgebra<Polynomial>;
using QuantumTable = ProductTable<Polynomial>;
using ClassicalConstants = std::vector<std::vector<std::vector<Integer>>>;

/// sigma_{s_r} o sigma_w for every w, by the quantum Monk rule: sigma_{w t_ab}
/// for a <= r < b when the length goes up by one, and Q_a...Q_{b-1} sigma_{w t_ab}
/// when it drops by 2(b - a) - 1.
MultOperator<Polynomial> monk_matrix(const SchubertBasis& basis, int r);

/// The ring generated by the Monk operators.
std::shared_ptr<const QuantumRing> make_quantum_ring(std::shared_ptr<const SchubertBasis> basis);

/// The ring generated by caller-supplied operators for Y1..Y_{n-1}; used for
/// negative controls. Throws LiftError if they do not deform the classical
/// Monk operators.
std::shared_ptr<const QuantumRing> make_quantum_ring(std::shared_ptr<const SchubertBasis> basis,
                                                     std::vector<MultOperator<Polynomial>> generators);

/// [u][v] = coordinates of sigma_u o sigma_v.
QuantumTable quantum_table(const QuantumRing& ring);

/// Classical constants from divided differences, each certified by a
/// Groebner normal form modulo S(x1..xn).
CheckResult certify_classical_constants(const SchubertBasis& basis, const ClassicalConstants& constants);

/// Axioms (i)-(vii) for the quantum product, plus nonnegativity of the
/// structure constants (observational).
Report verify_quantum_axioms(const QuantumRing& ring, const QuantumTable& table, const ClassicalConstants& classical);

}  // namespace flagstar
