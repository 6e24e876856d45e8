#pragma once

#include "sicgen/linalg.hpp"

namespace sic {

struct EigenPair2 {
  Complex lambda_plus, lambda_minus;
  Vec<Complex> vec_plus, vec_minus;
  bool degenerate = false;  // repeated eigenvalue; eigenvectors not independent
};

// Closed-form eigendecomposition of a 2x2 complex matrix. lambda_plus takes
// the principal branch of the discriminant square root.
EigenPair2 eigen_2x2(const Mat<Complex>& m);

// All four square roots Q with Q*Q = m, one per branch pair of eigenvalue
// roots. Requires distinct nonzero eigenvalues; throws otherwise.
std::vector<Mat<Complex>> sqrt_2x2_all(const Mat<Complex>& m);

// e^(i*theta*h) for Hermitian h of size 2 or 3, via spectral decomposition
// with closed-form eigenvalues. Result is unitary.
Mat<Complex> herm_exp(const Mat<Complex>& h, double theta);

}  // namespace sic
