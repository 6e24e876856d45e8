#pragma once

#include <cstdint>

#include "sicgen/lineset.hpp"

namespace sic {

// The single 2x2 generator (1/sqrt3) [[1, (1/sqrt2) e^(i pi/3)], [sqrt2, -2 e^(i pi/3)]]
// whose powers applied to (1,0) trace out the power-d2 set. First column is the
// second SIC vector.
template <class Ops>
Mat<typename Ops::Scalar> power_d2_matrix(const Ops& ops);

// m^j v0 for j in [j_min, j_max]; negative j uses the inverse.
template <class S>
std::vector<Vec<S>> power_orbit(const Mat<S>& m, const Vec<S>& v0, long j_min,
                                long j_max);

// The four-vector set {v0, M v0, M^2 v0, M^3 v0}, label "power-d2".
template <class Ops>
LineSetT<typename Ops::Scalar> power_d2_sic(const Ops& ops);

// Companion set {u0, B u0, B^2 u0, B^3 u0} with u0 = (0,1), B = (M^dagger)^-1.
// Satisfies <u_j, v_j> = 0 against the power-d2 set.
template <class Ops>
LineSetT<typename Ops::Scalar> power_d2_dual_sic(const Ops& ops);

// Squared norms of the power orbit, exact integers. center=true walks outward
// from between the two central unit vectors (the published series 1,1,2,3,5,...);
// center=false lists ||M^j v0||^2 for j = 0..count-1. Each value is certified
// to be an exact integer; a float cross-embedding farther than 1e-6 (relative
// for large values) from that integer throws.
std::vector<std::int64_t> norm_sequence(bool center, int count);

template <class S>
struct BicyclicD2 {
  Mat<S> U, D;
  LineSetT<S> sic;
};

template <class S>
struct BicyclicD3 {
  Mat<S> U, D;
  LineSetT<S> sic;
  std::vector<Orbit<S>> orbits;
};

// d=2 two-orbit construction: U2 = (1/sqrt3)[[1,sqrt2],[sqrt2,-1]] swaps the
// first two vectors, D2 = diag(1, zeta3) fills in the rest.
template <class Ops>
BicyclicD2<typename Ops::Scalar> bicyclic_d2(const Ops& ops);

// Float d=3 construction from a validated solution: checks the cubic residual
// (<= 1e-10), xi = -1, zeta a primitive 3rd or 6th root, kappa = 0, then
// assembles orbits of sizes 1, 2, 6 and verifies the 9-vector union.
BicyclicD3<Complex> bicyclic_d3(const BicyclicSolution& sol);

// e^(2*pi*i*power/order); used to select the zeta entry of the exact D3.
struct RootSelector {
  int order = 3;
  long power = 1;
};

// Exact d=3 construction at the closed-form solution. zeta may be any
// primitive 3rd or 6th root of unity; the set is certified exactly.
BicyclicD3<Cyclo> bicyclic_d3_exact(const ExactOps& ops, RootSelector zeta = {3, 1});

// Unit-circle roots of z^3 - sqrt(3) r e^(i phase_diff) z^2 - 1/2 = 0
// (closed-form cubic, one Newton polish), sorted by (re, im). Roots farther
// than 1e-9 from the unit circle are dropped; may be empty.
std::vector<Complex> solve_phase_cubic(double r, double phase_diff);

enum class HadamardVariant { projector_chain, vector_chain };

// Magic-angle set: h = (1, -e^(i pi/3)), H = h h^dagger, E = e^(i theta_m H)
// with theta_m = arccos(1/sqrt3). projector_chain applies entrywise powers of
// H to E before acting on (1,0); vector_chain applies entrywise products of h
// to E(1,0). The variants agree entrywise.
template <class Ops>
LineSetT<typename Ops::Scalar> hadamard_d2(const Ops& ops,
                                           HadamardVariant variant);

// The d^2 vectors X^a Z^b f for a,b in 0..d-1, with X the cyclic shift and
// Z = diag(1, omega, ..). No deduplication; callers verify the result.
template <class Ops>
LineSetT<typename Ops::Scalar> weyl_orbit(const Ops& ops, int d,
                                          const Vec<typename Ops::Scalar>& fiducial);

extern template Mat<Complex> power_d2_matrix(const FloatOps&);
extern template Mat<Cyclo> power_d2_matrix(const ExactOps&);
extern template std::vector<Vec<Complex>> power_orbit(const Mat<Complex>&,
                                                      const Vec<Complex>&, long, long);
extern template std::vector<Vec<Cyclo>> power_orbit(const Mat<Cyclo>&,
                                                    const Vec<Cyclo>&, long, long);
extern template LineSetT<Complex> power_d2_sic(const FloatOps&);
extern template LineSetT<Cyclo> power_d2_sic(const ExactOps&);
extern template LineSetT<Complex> power_d2_dual_sic(const FloatOps&);
extern template LineSetT<Cyclo> power_d2_dual_sic(const ExactOps&);
extern template BicyclicD2<Complex> bicyclic_d2(const FloatOps&);
extern template BicyclicD2<Cyclo> bicyclic_d2(const ExactOps&);
extern template LineSetT<Complex> hadamard_d2(const FloatOps&, HadamardVariant);
extern template LineSetT<Cyclo> hadamard_d2(const ExactOps&, HadamardVariant);
extern template LineSetT<Complex> weyl_orbit(const FloatOps&, int, const Vec<Complex>&);
extern template LineSetT<Cyclo> weyl_orbit(const ExactOps&, int, const Vec<Cyclo>&);

}  // namespace sic
