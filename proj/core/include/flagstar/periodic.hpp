#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagstar/kelement.hpp"
#include "flagstar/operator_algebra.hpp"
#include "flagstar/quantum.hpp"
#include "flagstar/report.hpp"

namespace flagstar {

using StarRing = OperatorAlgebra<KElement>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Index i -> k - i + 1 reduced into 1..n. An involution.
int chart_reflect(int n, int k, int i);
/// Index j -> k - j reduced into 1..n.
int chart_shift(int n, int k, int j);

/// X_i -> x_{k-i+1}, Q_j -> q_{k-j}, indices mod n in 1..n.
VarMap chart_map(int n, int k);

/// Identification of the chart basis with the quantum basis. The chart class
/// sigma_u goes to the class of S_u(x_j -> X_{k-j+1}) in H*(F_n), expanded
/// classically. `forward` is indexed [quantum v][chart u]; `inverse` is its
/// inverse, computed over Q and certified integral.
struct ChartTransport {
  int k = 0;
  IntegerMatrix forward;
  IntegerMatrix inverse;
};

/// Throws std::logic_error if the inverse is not integral.
ChartTransport chart_transport(const SchubertBasis& basis, int k);

/// Structure constants of the chart ring (H*(F_n) (x) K)/(q_k): polynomials
/// in the q_j with j != k, indexed [u][v] -> coordinates.
struct ChartTable {
  int k = 0;
  ProductTable<Polynomial> constants;
};

ChartTable specialized_table(const SchubertBasis& basis, const QuantumTable& quantum, const ChartTransport& transport);

/// All n chart tables, built in parallel over k.
std::vector<ChartTable> chart_tables(const SchubertBasis& basis, const QuantumTable& quantum);

struct OverlapMismatch {
  std::string u;
  std::string v;
  std::string w;
  Monomial d;
  int chart = 0;
  int other_chart = 0;
  Integer value;
  Integer other_value;

  std::string describe() const;
};

/// Raised when two charts disagree on a coefficient both of them see.
class OverlapError : public std::runtime_error {
 public:
  explicit OverlapError(OverlapMismatch m) : std::runtime_error(m.describe()), mismatch_(std::move(m)) {}
  const OverlapMismatch& mismatch() const { return mismatch_; }

 private:
  OverlapMismatch mismatch_;
};

/// Every (u, v, w, d, k, k') where charts k and k' both omit the variables of
/// q^d but assign it different coefficients. Ordered by (u, v, w, k).
std::vector<OverlapMismatch> overlap_mismatches(const SchubertBasis& basis, const std::vector<ChartTable>& charts);

/// Structure constants of the periodic product over K.
struct StarTable {
  int n = 0;
  std::shared_ptr<const SchubertBasis> basis;
  ProductTable<KElement> constants;

  const ClassVector<KElement>& product(std::size_t u, std::size_t v) const { return constants[u][v]; }
};

/// Reads the coefficient of q^d from a chart omitting some variable of d.
/// Throws OverlapError on the first disagreement.
StarTable glue_tables(std::shared_ptr<const SchubertBasis> basis, const std::vector<ChartTable>& charts);

/// sigma_u * sigma_v by table lookup.
const ClassVector<KElement>& star_product(const StarTable& table, const Permutation& u, const Permutation& v);

/// The ring generated by y_i* (column w = sigma_{s_i} * sigma_w). Throws
/// LiftError if the table does not deform the cup product.
std::shared_ptr<const StarRing> make_star_ring(const StarTable& table);

/// Everything derived from one n: quantum ring and table, charts, glued
/// table and star ring.
struct PeriodicModel {
  std::shared_ptr<const SchubertBasis> basis;
  std::shared_ptr<const QuantumRing> quantum;
  QuantumTable quantum_table;
  ClassicalConstants classical;
  std::vector<ChartTransport> transports;
  std::vector<ChartTable> charts;
  StarTable star;
  std::shared_ptr<const StarRing> ring;
};

PeriodicModel build_periodic_model(int n);

/// Axioms (ii)-(vii) over K, with the glued table cross-checked against the
/// products rebuilt from the star ring's generator operators.
Report verify_star_axioms(const StarRing& ring, const StarTable& table, const ClassicalConstants& classical);

/// (a * b, c) == (a, b * c) on every basis triple.
CheckResult verify_frobenius(const StarTable& table);

/// Zero overlap mismatches across every chart pair.
CheckResult verify_gluing(const SchubertBasis& basis, const std::vector<ChartTable>& charts);

/// Setting q_k = 0 in the glued table recovers chart k exactly.
CheckResult verify_round_trip(const StarTable& table, const std::vector<ChartTable>& charts);

}  // namespace flagstar
