#include "sicgen/constructions.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "sicgen/spectral.hpp"
#include "sicgen/verify.hpp"

namespace sic {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

template <class Ops>
Vec<typename Ops::Scalar> basis_vector(const Ops& ops, int dim, int index) {
  using S = typename Ops::Scalar;
  std::vector<S> e(static_cast<std::size_t>(dim), ops.rat(0));
  e[static_cast<std::size_t>(index)] = ops.rat(1);
  return Vec<S>(std::move(e));
}

}  // namespace

BicyclicSolution bicyclic_d3_standard_solution() {
  BicyclicSolution sol;
  sol.x = kPi / 9.0;
  sol.y = 2.0 * kPi / 9.0;
  sol.r = 0.5;
  sol.eta = kPi / 2.0;
  sol.kappa = 0.0;
  sol.xi = {-1.0, 0.0};
  sol.zeta = {std::cos(2.0 * kPi / 3.0), std::sin(2.0 * kPi / 3.0)};
  return sol;
}

template <class Ops>
Mat<typename Ops::Scalar> power_d2_matrix(const Ops& ops) {
  using S = typename Ops::Scalar;
  S inv_s3 = ops.sqrt_int(3) * ops.rat(1, 3);       // 1/sqrt3
  S inv_s2 = ops.sqrt_int(2) * ops.rat(1, 2);       // 1/sqrt2
  S phase = ops.root(6, 1);                         // e^(i pi/3)
  std::vector<S> e{inv_s3, inv_s3 * inv_s2 * phase, inv_s3 * ops.sqrt_int(2),
                   inv_s3 * ops.rat(-2) * phase};
  return Mat<S>(2, 2, std::move(e));
}

template <class S>
std::vector<Vec<S>> power_orbit(const Mat<S>& m, const Vec<S>& v0, long j_min,
                                long j_max) {
  if (j_min > j_max) throw std::invalid_argument("power_orbit: empty index range");
  std::vector<Vec<S>> out;
  out.reserve(static_cast<std::size_t>(j_max - j_min + 1));
  Vec<S> cur = j_min == 0 ? v0 : mat_vec(mat_power(m, j_min), v0);
  out.push_back(cur);
  for (long j = j_min + 1; j <= j_max; ++j) {
    cur = mat_vec(m, cur);
    out.push_back(cur);
  }
  return out;
}

template <class Ops>
LineSetT<typename Ops::Scalar> power_d2_sic(const Ops& ops) {
  using S = typename Ops::Scalar;
  LineSetT<S> set;
  set.dim = 2;
  set.label = "power-d2";
  set.vectors = power_orbit(power_d2_matrix(ops), basis_vector(ops, 2, 0), 0, 3);
  return set;
}

template <class Ops>
LineSetT<typename Ops::Scalar> power_d2_dual_sic(const Ops& ops) {
  using S = typename Ops::Scalar;
  Mat<S> b = inverse(adjoint(power_d2_matrix(ops)));
  LineSetT<S> set;
  set.dim = 2;
  set.label = "power-d2-dual";
  set.vectors = power_orbit(b, basis_vector(ops, 2, 1), 0, 3);
  return set;
}

std::vector<std::int64_t> norm_sequence(bool center, int count) {
  if (count < 1) throw std::invalid_argument("norm_sequence: count must be >= 1");
  ExactOps ops;
  Mat<Cyclo> m = power_d2_matrix(ops);
  Vec<Cyclo> v = basis_vector(ops, 2, 0);

  Mat<Complex> mf = embed_mat(m);
  Vec<Complex> vf = embed_vec(v);

  // center: start at ||M^2 v0||^2 and walk outward (the two directions agree
  // pairwise, so each value is listed once). Otherwise start at j = 0.
  int start = center ? 2 : 0;
  for (int j = 0; j < start; ++j) {
    v = mat_vec(m, v);
    vf = mat_vec(mf, vf);
  }

  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    if (t > 0) {
      v = mat_vec(m, v);
      vf = mat_vec(mf, vf);
    }
    auto exact = norm_sq(v).as_rational();
    if (!exact || !is_integer(*exact))
      throw std::logic_error("norm_sequence: squared norm is not an integer");
    std::int64_t n = to_int64(*exact);
    double flt = norm_sq(vf).real();
    double slack = std::max(1e-6, 1e-12 * static_cast<double>(n));
    if (std::abs(flt - static_cast<double>(n)) > slack)
      throw std::logic_error("norm_sequence: float cross-check drifted from integer");
    out.push_back(n);
  }
  return out;
}

template <class Ops>
BicyclicD2<typename Ops::Scalar> bicyclic_d2(const Ops& ops) {
  using S = typename Ops::Scalar;
  S inv_s3 = ops.sqrt_int(3) * ops.rat(1, 3);
  S s2 = ops.sqrt_int(2);
  BicyclicD2<S> out;
  out.U = Mat<S>(2, 2, {inv_s3, inv_s3 * s2, inv_s3 * s2, ops.rat(-1) * inv_s3});
  // D2 = diag(1, zeta3)
  out.D = Mat<S>(2, 2, {ops.rat(1), ops.rat(0), ops.rat(0), ops.root(3, 1)});
  Vec<S> v0 = basis_vector(ops, 2, 0);
  Vec<S> v1 = mat_vec(out.U, v0);
  out.sic.dim = 2;
  out.sic.label = "bicyclic-d2";
  out.sic.vectors = {v0, v1, mat_vec(out.D, v1),
                     mat_vec(out.D, mat_vec(out.D, v1))};
  return out;
}

namespace {

// Shared d=3 assembly: D = diag(1, xi, zeta), orbits {v0}, {v1, D v1},
// {D^t v2}. Validates circulance, D^6 = I, U^3 = I, and the SIC property in
// the caller's mode.
template <class S>
BicyclicD3<S> assemble_bicyclic_d3(Vec<S> v0, Vec<S> v1, Vec<S> v2, S xi, S zeta,
                                   double tol) {
  S one = one_like(xi);
  S zero = zero_like(xi);
  BicyclicD3<S> out;
  out.D = Mat<S>(3, 3, {one, zero, zero, zero, xi, zero, zero, zero, zeta});

  std::vector<Vec<S>> basis{v0, v1, v2};
  if (!is_circulant(gram(basis), tol))
    throw std::domain_error("bicyclic d3: basis Gram matrix is not circulant");

  out.U = cycling_matrix(basis);

  auto close_to_identity = [&](const Mat<S>& m) {
    Mat<S> diff = mat_sub(m, identity_like(m));
    if constexpr (is_exact_v<S>) {
      for (const auto& x : diff.a)
        if (!x.is_zero()) return false;
      return true;
    } else {
      double worst = 0.0;
      for (const auto& x : diff.a) worst = std::max(worst, std::abs(x));
      return worst <= 1e-12;
    }
  };
  if (!close_to_identity(mat_power(out.D, 6)))
    throw std::domain_error("bicyclic d3: D^6 != I");
  for (long k = 1; k < 6; ++k)
    if (close_to_identity(mat_power(out.D, k)))
      throw std::domain_error("bicyclic d3: D has order below 6");
  if (!close_to_identity(mat_power(out.U, 3)))
    throw std::domain_error("bicyclic d3: U^3 != I");
  if (!close_to_identity(matmul(adjoint(out.U), out.U)))
    throw std::domain_error("bicyclic d3: U is not unitary");

  Orbit<S> o0{0, {v0}};
  Orbit<S> o1{1, {v1, mat_vec(out.D, v1)}};
  Orbit<S> o2{2, {v2}};
  for (int t = 1; t < 6; ++t) o2.vectors.push_back(mat_vec(out.D, o2.vectors.back()));
  out.orbits = {o0, o1, o2};

  out.sic.dim = 3;
  out.sic.label = "bicyclic-d3";
  for (const auto& orbit : out.orbits)
    for (const auto& w : orbit.vectors) out.sic.vectors.push_back(w);

  VerificationReport rep = check_sic(out.sic, tol);
  if (!rep.pass)
    throw std::domain_error("bicyclic d3: resulting set fails SIC verification");
  return out;
}

bool is_primitive_root_float(Complex z, int order) {
  auto close_one = [](Complex w) { return std::abs(w - Complex{1.0, 0.0}) <= 1e-12; };
  Complex p = z;
  for (int k = 1; k < order; ++k) {
    if (close_one(p)) return false;
    p *= z;
  }
  return close_one(p);
}

}  // namespace

BicyclicD3<Complex> bicyclic_d3(const BicyclicSolution& sol) {
  if (sol.kappa != 0.0)
    throw std::invalid_argument("bicyclic d3: kappa is fixed at zero");
  if (sol.r < 0.0 || sol.r > std::sqrt(3.0) / 2.0)
    throw std::invalid_argument("bicyclic d3: r outside [0, sqrt(3)/2]");
  if (std::abs(sol.xi - Complex{-1.0, 0.0}) > 1e-12)
    throw std::invalid_argument("bicyclic d3: xi must be -1");
  if (!is_primitive_root_float(sol.zeta, 3) && !is_primitive_root_float(sol.zeta, 6))
    throw std::invalid_argument(
        "bicyclic d3: zeta must be a primitive 3rd or 6th root of unity");

  auto phase = [](double t) { return Complex{std::cos(t), std::sin(t)}; };
  Complex z = phase(sol.x);
  Complex middle = std::sqrt(3.0) * sol.r * phase(sol.eta - sol.y);
  Complex residual = z * z * z - middle * z * z - 0.5;
  if (std::abs(residual) > 1e-10)
    throw std::domain_error("bicyclic d3: solution fails the circulance cubic");

  double w = std::sqrt(0.75 - sol.r * sol.r);
  Vec<Complex> v0({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  Vec<Complex> v1({0.5 * phase(sol.x), 0.5 * std::sqrt(3.0) * phase(sol.y), {0.0, 0.0}});
  Vec<Complex> v2({0.5 * phase(-sol.x), sol.r * phase(sol.eta), w * phase(sol.kappa)});
  return assemble_bicyclic_d3(v0, v1, v2, sol.xi, sol.zeta, 1e-10);
}

BicyclicD3<Cyclo> bicyclic_d3_exact(const ExactOps& ops, RootSelector zeta) {
  if ((zeta.order != 3 && zeta.order != 6) ||
      std::gcd(static_cast<long>(zeta.order), zeta.power) != 1)
    throw std::invalid_argument(
        "bicyclic d3 exact: zeta must be a primitive 3rd or 6th root of unity");
  Cyclo half = ops.rat(1, 2);
  Cyclo zero = ops.rat(0);
  // x = pi/9, y = 2 pi/9, r = 1/2, eta = pi/2: the closed-form solution.
  Vec<Cyclo> v0({ops.rat(1), zero, zero});
  Vec<Cyclo> v1({half * ops.root(18, 1), half * ops.sqrt_int(3) * ops.root(9, 1), zero});
  Vec<Cyclo> v2({half * ops.root(18, -1), half * ops.root(4, 1),
                 half * ops.sqrt_int(2)});
  return assemble_bicyclic_d3(v0, v1, v2, ops.rat(-1),
                              ops.root(zeta.order, zeta.power), 0.0);
}

std::vector<Complex> solve_phase_cubic(double r, double phase_diff) {
  if (r < 0.0) throw std::invalid_argument("solve_phase_cubic: r must be nonnegative");
  Complex a = std::sqrt(3.0) * r *
              Complex{std::cos(phase_diff), std::sin(phase_diff)};
  // z^3 - a z^2 - 1/2: depressed via z = w + a/3.
  Complex p = -a * a / 3.0;
  Complex q = -2.0 * a * a * a / 27.0 - 0.5;
  Complex s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u3 = -q / 2.0 + s;
  if (std::abs(u3) < std::abs(-q / 2.0 - s)) u3 = -q / 2.0 - s;
  const Complex omega{-0.5, std::sqrt(3.0) / 2.0};

  std::vector<Complex> roots;
  if (std::abs(u3) < 1e-300) {
    roots.assign(3, a / 3.0);  // triple root of the depressed cubic at 0
  } else {
    Complex u = std::pow(u3, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
      roots.push_back(u - p / (3.0 * u) + a / 3.0);
      u *= omega;
    }
  }

  auto f = [&](Complex z) { return z * z * z - a * z * z - 0.5; };
  auto fp = [&](Complex z) { return 3.0 * z * z - 2.0 * a * z; };
  std::vector<Complex> unit_roots;
  for (Complex z : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex d = fp(z);
      if (std::abs(d) < 1e-14) break;
      z -= f(z) / d;
    }
    if (std::abs(std::abs(z) - 1.0) <= 1e-9 && std::abs(f(z)) <= 1e-9)
      unit_roots.push_back(z);
  }
  std::sort(unit_roots.begin(), unit_roots.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return unit_roots;
}

template <class Ops>
LineSetT<typename Ops::Scalar> hadamard_d2(const Ops& ops, HadamardVariant variant) {
  using S = typename Ops::Scalar;
  Vec<S> h({ops.rat(1), ops.rat(-1) * ops.root(6, 1)});
  Mat<S> big_h = outer(h, h);

  Mat<S> e = identity_like(big_h);
  if constexpr (is_exact_v<S>) {
    // e^(i theta_m H) = I + ((e^(2 i theta_m) - 1)/2) H for the rank-1,
    // trace-2 H; e^(2 i theta_m) = (-1 + 2 sqrt2 i)/3 at the magic angle.
    S exp2 = ops.rat(-1, 3) + ops.rat(2, 3) * ops.sqrt_int(2) * ops.root(4, 1);
    S coeff = (exp2 - ops.rat(1)) * ops.rat(1, 2);
    for (std::size_t i = 0; i < e.a.size(); ++i)
      e.a[i] = e.a[i] + coeff * big_h.a[i];
  } else {
    double theta_m = std::acos(1.0 / std::sqrt(3.0));
    e = herm_exp(embed_mat(big_h), theta_m);
  }

  Vec<S> v0 = basis_vector(ops, 2, 0);
  LineSetT<S> set;
  set.dim = 2;
  set.label = "hadamard-d2";
  set.vectors.push_back(v0);
  if (variant == HadamardVariant::projector_chain) {
    Mat<S> chain = e;
    for (int j = 0; j < 3; ++j) {
      set.vectors.push_back(mat_vec(chain, v0));
      if (j < 2) chain = hadamard_product(big_h, chain);
    }
  } else {
    Vec<S> w = mat_vec(e, v0);
    set.vectors.push_back(w);
    for (int j = 0; j < 2; ++j) {
      w = hadamard_product(h, w);
      set.vectors.push_back(w);
    }
  }
  return set;
}

template <class Ops>
LineSetT<typename Ops::Scalar> weyl_orbit(const Ops& ops, int d,
                                          const Vec<typename Ops::Scalar>& fiducial) {
  using S = typename Ops::Scalar;
  if (d != 2 && d != 3)
    throw std::invalid_argument("weyl_orbit: dimension must be 2 or 3");
  if (fiducial.dim() != d)
    throw std::invalid_argument("weyl_orbit: fiducial dimension mismatch");

  LineSetT<S> set;
  set.dim = d;
  set.label = d == 2 ? "weyl-d2" : "weyl-d3";
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec<S> w = fiducial;
      for (int i = 0; i < d; ++i)
        w[i] = w[i] * ops.root(d, static_cast<long>(b) * i);  // Z^b
      Vec<S> shifted = w;
      for (int i = 0; i < d; ++i)
        shifted[(i + a) % d] = w[i];  // X^a
      set.vectors.push_back(shifted);
    }
  return set;
}

template Mat<Complex> power_d2_matrix(const FloatOps&);
template Mat<Cyclo> power_d2_matrix(const ExactOps&);
template std::vector<Vec<Complex>> power_orbit(const Mat<Complex>&, const Vec<Complex>&,
                                               long, long);
template std::vector<Vec<Cyclo>> power_orbit(const Mat<Cyclo>&, const Vec<Cyclo>&, long,
                                             long);
template LineSetT<Complex> power_d2_sic(const FloatOps&);
template LineSetT<Cyclo> power_d2_sic(const ExactOps&);
template LineSetT<Complex> power_d2_dual_sic(const FloatOps&);
template LineSetT<Cyclo> power_d2_dual_sic(const ExactOps&);
template BicyclicD2<Complex> bicyclic_d2(const FloatOps&);
template BicyclicD2<Cyclo> bicyclic_d2(const ExactOps&);
template LineSetT<Complex> hadamard_d2(const FloatOps&, HadamardVariant);
template LineSetT<Cyclo> hadamard_d2(const ExactOps&, HadamardVariant);
template LineSetT<Complex> weyl_orbit(const FloatOps&, int, const Vec<Complex>&);
template LineSetT<Cyclo> weyl_orbit(const ExactOps&, int, const Vec<Cyclo>&);

}  // namespace sic
