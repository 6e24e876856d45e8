#include "sicgen/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace sic {
namespace {

// One residual in the current mode: exact difference when S is exact (so a
// passing value reports exactly zero), embedded float difference otherwise.
double norm_residual(const Cyclo& normsq) {
  Cyclo diff = normsq - Cyclo::one(normsq.context());
  if (diff.is_zero()) return 0.0;
  return std::abs(diff.embed());
}

double norm_residual(const Complex& normsq) { return std::abs(normsq - Complex{1.0, 0.0}); }

double angle_residual(const Cyclo& ip, const Rational& target_sq, bool& exact_ok) {
  Cyclo diff = ip.abs_sq() - Cyclo::from_rational(ip.context(), target_sq);
  if (diff.is_zero()) return 0.0;
  exact_ok = false;
  return std::abs(diff.embed());
}

double angle_residual(const Complex& ip, const Rational& target_sq, bool&) {
  return std::abs(std::norm(ip) - target_sq.get_d());
}

bool norm_exact_ok(const Cyclo& normsq) {
  return (normsq - Cyclo::one(normsq.context())).is_zero();
}
bool norm_exact_ok(const Complex&) { return true; }

template <class S>
VerificationReport run_check(const std::vector<Vec<S>>& vectors, int dim, double tol,
                             const Rational& target_sq) {
  int n = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (v.dim() != dim)
      throw std::invalid_argument("verification: vector dimension mismatch");

  VerificationReport rep;
  rep.n_vectors = n;
  rep.dim = dim;
  rep.mode = is_exact_v<S> ? "exact" : "float";
  std::vector<double> grid(static_cast<std::size_t>(n) * n, 0.0);
  bool exact_ok = true;

  for (int j = 0; j < n; ++j) {
    S ns = norm_sq(vectors[static_cast<std::size_t>(j)]);
    double res = norm_residual(ns);
    if constexpr (is_exact_v<S>) {
      if (!norm_exact_ok(ns)) exact_ok = false;
    }
    grid[static_cast<std::size_t>(j) * n + j] = res;
    rep.max_norm_violation = std::max(rep.max_norm_violation, res);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      S ip = inner(vectors[static_cast<std::size_t>(j)], vectors[static_cast<std::size_t>(k)]);
      double res = angle_residual(ip, target_sq, exact_ok);
      grid[static_cast<std::size_t>(j) * n + k] = res;
      grid[static_cast<std::size_t>(k) * n + j] = res;
      rep.max_angle_violation = std::max(rep.max_angle_violation, res);
    }

  if constexpr (is_exact_v<S>)
    rep.pass = exact_ok;
  else
    rep.pass = rep.max_norm_violation <= tol && rep.max_angle_violation <= tol;
  rep.per_pair = std::move(grid);
  return rep;
}

}  // namespace

template <class S>
VerificationReport check_sic(const LineSetT<S>& s, double tol) {
  long expected = static_cast<long>(s.dim) * s.dim;
  if (static_cast<long>(s.vectors.size()) != expected)
    throw std::invalid_argument("check_sic: expected dim^2 vectors");
  return run_check(s.vectors, s.dim, tol, rational(1, s.dim + 1));
}

template <class S>
VerificationReport check_equiangular_partial(const LineSetT<S>& s, double tol) {
  return check_equiangular_partial(s, tol, rational(1, s.dim + 1));
}

template <class S>
VerificationReport check_equiangular_partial(const LineSetT<S>& s, double tol,
                                             const Rational& target_sq) {
  if (s.vectors.size() < 2)
    throw std::invalid_argument("check_equiangular_partial: need at least 2 vectors");
  return run_check(s.vectors, s.dim, tol, target_sq);
}

template <class S>
std::vector<Complex> triple_products(const LineSetT<S>& s) {
  int n = static_cast<int>(s.vectors.size());
  std::vector<Vec<Complex>> v;
  v.reserve(static_cast<std::size_t>(n));
  for (const auto& x : s.vectors) v.push_back(embed_vec(x));
  Mat<Complex> g = gram(v);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        out.push_back(g.at(j, k) * g.at(k, l) * g.at(l, j));
  auto rounded = [](double x) { return std::round(x * 1e12) / 1e12; };
  std::sort(out.begin(), out.end(), [&](const Complex& a, const Complex& b) {
    double ra = rounded(a.real()), rb = rounded(b.real());
    if (ra != rb) return ra < rb;
    double ia = rounded(a.imag()), ib = rounded(b.imag());
    if (ia != ib) return ia < ib;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

namespace {

// Worst deviation from equiangularity at 1/4 for the 1+2+6 orbit family of
// diag(1, xi, zeta) over the given basis.
double sweep_cell(const std::vector<Vec<Complex>>& basis, Complex xi, Complex zeta,
                  double base_norm_violation) {
  const Vec<Complex>& v0 = basis[0];
  const Vec<Complex>& v1 = basis[1];
  const Vec<Complex>& v2 = basis[2];
  std::array<Vec<Complex>, 9> w;
  w[0] = v0;
  w[1] = v1;
  w[2] = Vec<Complex>({v1[0], xi * v1[1], zeta * v1[2]});
  w[3] = v2;
  Complex xp{1.0, 0.0}, zp{1.0, 0.0};
  for (int t = 1; t < 6; ++t) {
    xp *= xi;
    zp *= zeta;
    w[static_cast<std::size_t>(3 + t)] = Vec<Complex>({v2[0], xp * v2[1], zp * v2[2]});
  }
  double worst = base_norm_violation;
  for (int j = 0; j < 9; ++j)
    for (int k = j + 1; k < 9; ++k) {
      Complex ip = inner(w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(k)]);
      worst = std::max(worst, std::abs(std::norm(ip) - 0.25));
    }
  return worst;
}

}  // namespace

SweepResult diagonal_extension_sweep(const std::vector<Vec<Complex>>& basis,
                                     int resolution) {
  if (resolution < 90)
    throw std::invalid_argument("diagonal_extension_sweep: resolution must be >= 90");
  if (basis.size() != 3)
    throw std::invalid_argument("diagonal_extension_sweep: need a 3-vector basis");
  for (const auto& v : basis)
    if (v.dim() != 3)
      throw std::invalid_argument("diagonal_extension_sweep: need dimension 3");
  if (std::abs(basis[0][1]) > 1e-12 || std::abs(basis[0][2]) > 1e-12 ||
      std::abs(basis[1][2]) > 1e-12)
    throw std::invalid_argument("diagonal_extension_sweep: basis is not upper triangular");
  if (!is_circulant(gram(basis), 1e-8))
    throw std::invalid_argument("diagonal_extension_sweep: Gram matrix is not circulant");

  double base_norm_violation = 0.0;
  for (const auto& v : basis)
    base_norm_violation =
        std::max(base_norm_violation, std::abs(norm_sq(v) - Complex{1.0, 0.0}));

  const double two_pi = 2.0 * std::numbers::pi_v<double>;
  auto phase_at = [](double angle) { return Complex{std::cos(angle), std::sin(angle)}; };

  double best = std::numeric_limits<double>::infinity();
  double best_txi = 0.0, best_tzeta = 0.0;
  for (int a = 0; a < resolution; ++a) {
    double txi = two_pi * a / resolution;
    Complex xi = phase_at(txi);
    for (int b = 0; b < resolution; ++b) {
      double tzeta = two_pi * b / resolution;
      double viol = sweep_cell(basis, xi, phase_at(tzeta), base_norm_violation);
      if (viol < best) {
        best = viol;
        best_txi = txi;
        best_tzeta = tzeta;
      }
    }
  }

  // One refinement pass: same point count over the +-1 coarse-cell window.
  double delta = two_pi / resolution;
  double lo_xi = best_txi - delta, lo_zeta = best_tzeta - delta;
  double step = 2.0 * delta / resolution;
  for (int a = 0; a < resolution; ++a) {
    Complex xi = phase_at(lo_xi + step * a);
    for (int b = 0; b < resolution; ++b) {
      double viol = sweep_cell(basis, xi, phase_at(lo_zeta + step * b),
                               base_norm_violation);
      if (viol < best) {
        best = viol;
        best_txi = lo_xi + step * a;
        best_tzeta = lo_zeta + step * b;
      }
    }
  }

  SweepResult out;
  out.grid_resolution = resolution;
  out.best_xi = phase_at(best_txi);
  out.best_zeta = phase_at(best_tzeta);
  out.min_max_violation = best;
  return out;
}

template VerificationReport check_sic(const LineSetT<Complex>&, double);
template VerificationReport check_sic(const LineSetT<Cyclo>&, double);
template VerificationReport check_equiangular_partial(const LineSetT<Complex>&, double);
template VerificationReport check_equiangular_partial(const LineSetT<Cyclo>&, double);
template VerificationReport check_equiangular_partial(const LineSetT<Complex>&, double,
                                                      const Rational&);
template VerificationReport check_equiangular_partial(const LineSetT<Cyclo>&, double,
                                                      const Rational&);
template std::vector<Complex> triple_products(const LineSetT<Complex>&);
template std::vector<Complex> triple_products(const LineSetT<Cyclo>&);

}  // namespace sic
