#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "flagstar/groebner.hpp"
#include "flagstar/periodic.hpp"

namespace flagstar {

/// A polynomial f_w(X, q) with f_w(x*, q) . 1 = sigma_w in the periodic ring.
struct Representative {
  Permutation w;
  Polynomial poly;
  std::size_t unknowns = 0;  // size of the correction space
  std::size_t rank = 0;      // rank of the chart conditions
};

class RepresentativeError : public std::runtime_error {
 public:
  enum class Kind { InconsistentSystem, NoIntegralSolution };
  RepresentativeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Pulls a periodic polynomial in X, q back to the quantum ring through
/// chart k: X_j -> X_{k-j+1}, q_m -> Q_{k-m}, q_k -> 0.
Polynomial chart_pullback(const Polynomial& f, int n, int k);

/// Correction monomials for a class of length `length`: X^a q^d with
/// a_i <= n - i, |d| >= 1, q^d not divisible by q1...qn, total degree 2*length.
std::vector<Monomial> correction_monomials(int n, int length);

/// Solves S_w(X) + sum c_m m for the chart conditions: for every k the
/// pullback evaluates in qH*(F_n) to the transported class of sigma_w. Over
/// the Artin monomials the solution is unique; free unknowns (if any) are set
/// to zero.
Representative solve_representative(const PeriodicModel& model, std::size_t index);

/// All n! representatives, solved in parallel.
std::vector<Representative> representative_table(const PeriodicModel& model);

/// f(x*, q) . 1 == sigma_w in the star ring.
bool satisfies_defining_property(const StarRing& ring, std::size_t index, const Polynomial& f);

/// The representatives printed in the worked n = 3 example, in printed order.
std::vector<std::pair<std::string, Polynomial>> reference_representatives_n3();

/// The printed n = 3 representatives satisfy the defining property.
CheckResult verify_reference_table(const StarRing& ring);

/// Every representative satisfies the defining property and reduces to the
/// Schubert polynomial at q = 0.
CheckResult verify_representatives(const StarRing& ring, const std::vector<Representative>& reps);

/// f_w and the star-ring lift g_w differ by an element of the ideal.
CheckResult verify_double_route(const StarRing& ring, const GroebnerBasis& ideal,
                                const std::vector<Representative>& reps);

/// ((f_v, f_w)) = constant part of the sigma_{w0} coefficient of
/// sigma_v * sigma_w, compared with the Poincare pairing.
CheckResult orthogonality_check(const StarTable& table);

/// The same pairing read off a Groebner expansion of f_v f_w in the
/// representative basis (independent of the star table).
CheckResult orthogonality_groebner(const GroebnerBasis& ideal, const SchubertBasis& basis,
                                   const std::vector<Representative>& reps);

/// "X_1^2X_2+q_1X_1-q_3X_2" style table in an align* environment.
std::string representatives_latex(const std::vector<Representative>& reps);

}  // namespace flagstar
