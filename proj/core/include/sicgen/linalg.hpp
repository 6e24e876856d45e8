#pragma once

#include <stdexcept>
#include <vector>

#include "sicgen/scalar.hpp"

namespace sic {

template <class S>
struct Vec {
  std::vector<S> e;
  Vec() = default;
  explicit Vec(std::vector<S> entries) : e(std::move(entries)) {}
  int dim() const { return static_cast<int>(e.size()); }
  const S& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  S& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  bool operator==(const Vec& o) const { return e == o.e; }
};

template <class S>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<S> a;
  Mat() = default;
  Mat(int r, int c, std::vector<S> entries) : rows(r), cols(c), a(std::move(entries)) {
    if (static_cast<int>(a.size()) != r * c)
      throw std::invalid_argument("matrix entry count mismatch");
  }
  const S& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  S& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Conjugate-linear in the FIRST argument: inner(u, v) = sum conj(u_k) v_k.
// This convention is shared by every module.
template <class S>
S inner(const Vec<S>& u, const Vec<S>& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
  if (u.dim() == 0) throw std::invalid_argument("inner: empty vectors");
  S acc = conj_of(u[0]) * v[0];
  for (int k = 1; k < u.dim(); ++k) acc = acc + conj_of(u[k]) * v[k];
  return acc;
}

template <class S>
S norm_sq(const Vec<S>& v) {
  return inner(v, v);
}

template <class S>
Vec<S> scale(const S& c, const Vec<S>& v) {
  Vec<S> r = v;
  for (auto& x : r.e) x = c * x;
  return r;
}

template <class S>
Vec<S> vec_sub(const Vec<S>& u, const Vec<S>& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("vec_sub: dimension mismatch");
  Vec<S> r = u;
  for (int k = 0; k < r.dim(); ++k) r[k] = r[k] - v[k];
  return r;
}

template <class S>
Mat<S> matmul(const Mat<S>& x, const Mat<S>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  Mat<S> r;
  r.rows = x.rows;
  r.cols = y.cols;
  r.a.reserve(static_cast<std::size_t>(r.rows) * r.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      S acc = x.at(i, 0) * y.at(0, j);
      for (int k = 1; k < x.cols; ++k) acc = acc + x.at(i, k) * y.at(k, j);
      r.a.push_back(acc);
    }
  return r;
}

template <class S>
Vec<S> mat_vec(const Mat<S>& m, const Vec<S>& v) {
  if (m.cols != v.dim()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec<S> r;
  r.e.reserve(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    S acc = m.at(i, 0) * v[0];
    for (int k = 1; k < m.cols; ++k) acc = acc + m.at(i, k) * v[k];
    r.e.push_back(acc);
  }
  return r;
}

template <class S>
Mat<S> adjoint(const Mat<S>& m) {
  Mat<S> r;
  r.rows = m.cols;
  r.cols = m.rows;
  r.a.reserve(m.a.size());
  for (int i = 0; i < m.cols; ++i)
    for (int j = 0; j < m.rows; ++j) r.a.push_back(conj_of(m.at(j, i)));
  return r;
}

template <class S>
Mat<S> mat_sub(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("mat_sub: shape mismatch");
  Mat<S> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
  return r;
}

template <class S>
Mat<S> identity_like(const Mat<S>& m) {
  if (m.a.empty()) throw std::invalid_argument("identity_like: empty matrix");
  Mat<S> r;
  r.rows = m.rows;
  r.cols = m.cols;
  S z = zero_like(m.a[0]);
  S o = one_like(m.a[0]);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) r.a.push_back(i == j ? o : z);
  return r;
}

// Entrywise products on equal shapes.
template <class S>
Vec<S> hadamard_product(const Vec<S>& u, const Vec<S>& v) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("hadamard_product: dimension mismatch");
  Vec<S> r = u;
  for (int k = 0; k < r.dim(); ++k) r[k] = r[k] * v[k];
  return r;
}

template <class S>
Mat<S> hadamard_product(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("hadamard_product: shape mismatch");
  Mat<S> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] * y.a[i];
  return r;
}

// u (x) w^dagger: entry (i, j) = u_i * conj(w_j).
template <class S>
Mat<S> outer(const Vec<S>& u, const Vec<S>& w) {
  Mat<S> r;
  r.rows = u.dim();
  r.cols = w.dim();
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) r.a.push_back(u[i] * conj_of(w[j]));
  return r;
}

namespace detail {

inline double pivot_weight(const Complex& z) { return std::norm(z); }

}  // namespace detail

// Gauss-Jordan inverse. Float mode picks the largest remaining pivot and treats
// pivots below 1e-10 of the matrix scale as rank deficiency; exact mode picks
// the first nonzero pivot and is error-free.
template <class S>
Mat<S> inverse(const Mat<S>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: non-square matrix");
  int n = m.rows;
  Mat<S> a = m;
  Mat<S> r = identity_like(m);
  double scale = 1.0;
  if constexpr (!is_exact_v<S>) {
    for (const auto& z : m.a) scale = std::max(scale, std::abs(z));
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if constexpr (is_exact_v<S>) {
      for (int i = col; i < n; ++i)
        if (!exactly_zero(a.at(i, col))) {
          pivot = i;
          break;
        }
    } else {
      double best = -1.0;
      for (int i = col; i < n; ++i) {
        double w = detail::pivot_weight(a.at(i, col));
        if (w > best) {
          best = w;
          pivot = i;
        }
      }
      if (pivot >= 0 && std::sqrt(best) <= 1e-10 * scale) pivot = -1;
    }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(r.at(pivot, j), r.at(col, j));
      }
    }
    S d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / d;
      r.at(col, j) = r.at(col, j) / d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || exactly_zero(a.at(i, col))) continue;
      S f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        r.at(i, j) = r.at(i, j) - f * r.at(col, j);
      }
    }
  }
  return r;
}

// m^k by repeated multiplication; k < 0 inverts first, m^0 is the identity.
template <class S>
Mat<S> mat_power(const Mat<S>& m, long k) {
  if (m.rows != m.cols) throw std::invalid_argument("mat_power: non-square matrix");
  if (k == 0) return identity_like(m);
  Mat<S> base = k < 0 ? inverse(m) : m;
  long steps = k < 0 ? -k : k;
  Mat<S> acc = base;
  for (long i = 1; i < steps; ++i) acc = matmul(acc, base);
  return acc;
}

template <class S>
Mat<S> gram(const std::vector<Vec<S>>& basis) {
  if (basis.empty()) throw std::invalid_argument("gram: empty basis");
  int d = basis[0].dim();
  for (const auto& v : basis)
    if (v.dim() != d) throw std::invalid_argument("gram: dimension mismatch");
  int n = static_cast<int>(basis.size());
  Mat<S> g;
  g.rows = g.cols = n;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) g.a.push_back(inner(basis[j], basis[k]));
  return g;
}

// Wrapped-diagonal constancy: g(j,k) == g(j+1, k+1) indices mod n.
// Exact scalars compare exactly and ignore tol.
template <class S>
bool is_circulant(const Mat<S>& g, double tol) {
  if (g.rows != g.cols) throw std::invalid_argument("is_circulant: non-square");
  int n = g.rows;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const S& x = g.at(j, k);
      const S& y = g.at((j + 1) % n, (k + 1) % n);
      if constexpr (is_exact_v<S>) {
        if (!(x == y)) return false;
      } else {
        if (std::abs(x - y) > tol) return false;
      }
    }
  return true;
}

// Vectors w_k with <w_k, v_j> = delta_kj; columns of (A^-1)^dagger for A the
// basis-as-columns matrix.
template <class S>
std::vector<Vec<S>> dual_basis(const std::vector<Vec<S>>& basis) {
  int n = static_cast<int>(basis.size());
  if (n == 0 || basis[0].dim() != n)
    throw std::invalid_argument("dual_basis: need d vectors of dimension d");
  Mat<S> a;
  a.rows = a.cols = n;
  a.a.resize(static_cast<std::size_t>(n) * n, basis[0][0]);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a.at(i, j) = basis[j][i];
  Mat<S> w = adjoint(inverse(a));
  std::vector<Vec<S>> duals(n);
  for (int k = 0; k < n; ++k) {
    duals[k].e.resize(n, basis[0][0]);
    for (int i = 0; i < n; ++i) duals[k][i] = w.at(i, k);
  }
  return duals;
}

// A = sum_k v_k (x) w_(k-1)^dagger, which maps v_j to v_(j+1 mod d).
template <class S>
Mat<S> cycling_matrix(const std::vector<Vec<S>>& basis) {
  int n = static_cast<int>(basis.size());
  auto duals = dual_basis(basis);
  Mat<S> acc = outer(basis[0], duals[static_cast<std::size_t>(n - 1)]);
  for (int k = 1; k < n; ++k) {
    Mat<S> term = outer(basis[static_cast<std::size_t>(k)],
                        duals[static_cast<std::size_t>(k - 1)]);
    for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] = acc.a[i] + term.a[i];
  }
  return acc;
}

// arccos |<u,v>| in [0, pi/2]; phase invariant. Inputs must be unit vectors.
inline double hermitian_angle(const Vec<Complex>& u, const Vec<Complex>& v) {
  auto check_unit = [](const Vec<Complex>& x) {
    double n = std::sqrt(std::abs(norm_sq(x)));
    if (std::abs(n - 1.0) > 1e-12)
      throw std::invalid_argument("hermitian_angle: non-unit vector");
  };
  check_unit(u);
  check_unit(v);
  double c = std::abs(inner(u, v));
  if (c > 1.0) c = 1.0;
  return std::acos(c);
}

// arg <u,v> in (-pi, pi]; undefined (throws) for orthogonal inputs.
inline double pseudo_angle(const Vec<Complex>& u, const Vec<Complex>& v) {
  Complex ip = inner(u, v);
  if (std::abs(ip) < 1e-15)
    throw std::domain_error("pseudo_angle: orthogonal vectors");
  double a = std::arg(ip);
  if (a <= -std::numbers::pi_v<double>) a += 2.0 * std::numbers::pi_v<double>;
  return a;
}

inline Vec<Complex> embed_vec(const Vec<Cyclo>& v) {
  Vec<Complex> r;
  r.e.reserve(v.e.size());
  for (const auto& x : v.e) r.e.push_back(x.embed());
  return r;
}
inline const Vec<Complex>& embed_vec(const Vec<Complex>& v) { return v; }

inline Mat<Complex> embed_mat(const Mat<Cyclo>& m) {
  Mat<Complex> r;
  r.rows = m.rows;
  r.cols = m.cols;
  r.a.reserve(m.a.size());
  for (const auto& x : m.a) r.a.push_back(x.embed());
  return r;
}
inline const Mat<Complex>& embed_mat(const Mat<Complex>& m) { return m; }

}  // namespace sic
