#pragma once

#include <string>
#include <vector>

#include "sicgen/linalg.hpp"

namespace sic {

/**
 * Ordered collection of candidate equiangular-line vectors. Scalar mode is
 * carried by the template parameter; full SIC candidates have dim^2 vectors.
 */
template <class S>
struct LineSetT {
  int dim = 0;
  std::vector<Vec<S>> vectors;
  std::string label;
};

template <class S>
struct Orbit {
  int generator_index = 0;  // index of the generating vector in the basis
  std::vector<Vec<S>> vectors;
};

/**
 * One solution of the circulance cubic z^3 - sqrt(3) r e^(i(eta-y)) z^2 - 1/2
 * with z = e^(ix), plus the diagonal phases xi, zeta. kappa is fixed at zero;
 * it has no effect on the construction.
 */
struct BicyclicSolution {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
  double eta = 0.0;
  double kappa = 0.0;
  Complex xi{-1.0, 0.0};
  Complex zeta{1.0, 0.0};
};

// The closed-form d=3 solution: x = pi/9, y = 2*pi/9, r = 1/2, eta = pi/2,
// xi = -1, zeta = e^(2*pi*i/3).
BicyclicSolution bicyclic_d3_standard_solution();

inline LineSetT<Complex> embed_set(const LineSetT<Cyclo>& s) {
  LineSetT<Complex> out;
  out.dim = s.dim;
  out.label = s.label;
  out.vectors.reserve(s.vectors.size());
  for (const auto& v : s.vectors) out.vectors.push_back(embed_vec(v));
  return out;
}

inline const LineSetT<Complex>& embed_set(const LineSetT<Complex>& s) { return s; }

}  // namespace sic
