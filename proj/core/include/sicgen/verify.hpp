#pragma once

#include <optional>

#include "sicgen/lineset.hpp"

namespace sic {

/**
 * Outcome of an equiangularity check. Norm residuals are | ||v||^2 - 1 |,
 * angle residuals | |<u,v>|^2 - target |. In exact mode pass means the exact
 * equalities hold and the reported violations are exactly zero; in float mode
 * pass means every residual is within the tolerance.
 */
struct VerificationReport {
  int n_vectors = 0;
  int dim = 0;
  double max_norm_violation = 0.0;
  double max_angle_violation = 0.0;
  bool pass = false;
  std::string mode;
  std::optional<std::vector<double>> per_pair;  // n x n row-major; diagonal = norms
};

struct SweepResult {
  int grid_resolution = 0;
  Complex best_xi{1.0, 0.0};
  Complex best_zeta{1.0, 0.0};
  double min_max_violation = 0.0;
};

// Full SIC test: cardinality dim^2 (throws otherwise), unit norms, pairwise
// squared overlaps equal to 1/(dim+1).
template <class S>
VerificationReport check_sic(const LineSetT<S>& s, double tol);

// Pairwise test without the cardinality requirement (needs >= 2 vectors).
template <class S>
VerificationReport check_equiangular_partial(const LineSetT<S>& s, double tol);

// Same with an explicit squared-overlap target in place of 1/(dim+1).
template <class S>
VerificationReport check_equiangular_partial(const LineSetT<S>& s, double tol,
                                             const Rational& target_sq);

// Multiset { <v_j,v_k><v_k,v_l><v_l,v_j> } over all ordered triples, sorted
// lexicographically on rounded (re, im). Invariant under global unitaries and
// per-vector phases; used to compare line sets across constructions.
template <class S>
std::vector<Complex> triple_products(const LineSetT<S>& s);

/**
 * Grid search over diagonal phase pairs (xi, zeta) for a d=3 upper-triangular
 * circulant-Gram basis: each cell builds the 1+2+6 orbit family of
 * diag(1, xi, zeta) and records the worst deviation of the 9-vector set from
 * equiangularity at 1/4. One refinement pass re-scans around the best coarse
 * cell. Serial and deterministic; ties break toward the smaller grid index.
 */
SweepResult diagonal_extension_sweep(const std::vector<Vec<Complex>>& basis,
                                     int resolution);

extern template VerificationReport check_sic(const LineSetT<Complex>&, double);
extern template VerificationReport check_sic(const LineSetT<Cyclo>&, double);
extern template VerificationReport check_equiangular_partial(const LineSetT<Complex>&,
                                                             double);
extern template VerificationReport check_equiangular_partial(const LineSetT<Cyclo>&,
                                                             double);
extern template VerificationReport check_equiangular_partial(const LineSetT<Complex>&,
                                                             double, const Rational&);
extern template VerificationReport check_equiangular_partial(const LineSetT<Cyclo>&,
                                                             double, const Rational&);
extern template std::vector<Complex> triple_products(const LineSetT<Complex>&);
extern template std::vector<Complex> triple_products(const LineSetT<Cyclo>&);

}  // namespace sic
