#include "sicgen/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sic {
namespace {

double mat_scale(const Mat<Complex>& m) {
  double s = 0.0;
  for (const auto& z : m.a) s = std::max(s, std::abs(z));
  return std::max(s, 1.0);
}

double max_abs(const Mat<Complex>& m) {
  double s = 0.0;
  for (const auto& z : m.a) s = std::max(s, std::abs(z));
  return s;
}

Vec<Complex> normalized(Vec<Complex> v) {
  double n = std::sqrt(std::abs(norm_sq(v)));
  for (auto& x : v.e) x /= n;
  return v;
}

// Kernel vector of (m - lambda I) from the better-conditioned row.
Vec<Complex> eigenvector_2x2(const Mat<Complex>& m, Complex lambda, bool& degenerate_vec) {
  Complex r0a = m.at(0, 0) - lambda, r0b = m.at(0, 1);
  Complex r1a = m.at(1, 0), r1b = m.at(1, 1) - lambda;
  double w0 = std::abs(r0a) + std::abs(r0b);
  double w1 = std::abs(r1a) + std::abs(r1b);
  double tiny = 1e-14 * mat_scale(m);
  if (w0 < tiny && w1 < tiny) {
    degenerate_vec = true;
    return Vec<Complex>({{1.0, 0.0}, {0.0, 0.0}});
  }
  Vec<Complex> v = w0 >= w1 ? Vec<Complex>({-r0b, r0a}) : Vec<Complex>({-r1b, r1a});
  return normalized(v);
}

}  // namespace

EigenPair2 eigen_2x2(const Mat<Complex>& m) {
  if (m.rows != 2 || m.cols != 2) throw std::invalid_argument("eigen_2x2: need 2x2");
  Complex tr = m.at(0, 0) + m.at(1, 1);
  Complex det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Complex disc = std::sqrt(tr * tr - 4.0 * det);
  EigenPair2 out;
  out.lambda_plus = 0.5 * (tr + disc);
  out.lambda_minus = 0.5 * (tr - disc);
  double scl = mat_scale(m);
  out.degenerate = std::abs(out.lambda_plus - out.lambda_minus) <= 1e-12 * scl;
  bool dv = false;
  out.vec_plus = eigenvector_2x2(m, out.lambda_plus, dv);
  out.vec_minus = eigenvector_2x2(m, out.lambda_minus, dv);
  if (dv) out.degenerate = true;
  for (auto [lambda, vec] : {std::pair{out.lambda_plus, &out.vec_plus},
                             std::pair{out.lambda_minus, &out.vec_minus}}) {
    if (out.degenerate) break;
    Vec<Complex> resid = vec_sub(mat_vec(m, *vec), scale(lambda, *vec));
    double r = std::max(std::abs(resid[0]), std::abs(resid[1]));
    if (r > 1e-10 * scl)
      throw std::logic_error("eigen_2x2: residual exceeded tolerance");
  }
  return out;
}

std::vector<Mat<Complex>> sqrt_2x2_all(const Mat<Complex>& m) {
  if (m.rows != 2 || m.cols != 2) throw std::invalid_argument("sqrt_2x2_all: need 2x2");
  EigenPair2 ep = eigen_2x2(m);
  double scale = mat_scale(m);
  if (ep.degenerate)
    throw std::invalid_argument("sqrt_2x2_all: repeated eigenvalue rejected");
  if (std::abs(ep.lambda_plus) <= 1e-14 * scale ||
      std::abs(ep.lambda_minus) <= 1e-14 * scale)
    throw std::invalid_argument("sqrt_2x2_all: zero eigenvalue rejected");

  Mat<Complex> p(2, 2,
                 {ep.vec_plus[0], ep.vec_minus[0], ep.vec_plus[1], ep.vec_minus[1]});
  Mat<Complex> pinv = inverse(p);
  Complex sp = std::sqrt(ep.lambda_plus);
  Complex sm = std::sqrt(ep.lambda_minus);

  std::vector<Mat<Complex>> roots;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      Mat<Complex> d(2, 2, {s1 * sp, {0, 0}, {0, 0}, s2 * sm});
      Mat<Complex> q = matmul(matmul(p, d), pinv);
      if (max_abs(mat_sub(matmul(q, q), m)) > 1e-9 * scale)
        throw std::logic_error("sqrt_2x2_all: branch failed to square back");
      roots.push_back(std::move(q));
    }
  return roots;
}

namespace {

void require_hermitian(const Mat<Complex>& h) {
  double tol = 1e-12 * mat_scale(h);
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.cols; ++j)
      if (std::abs(h.at(i, j) - std::conj(h.at(j, i))) > tol)
        throw std::invalid_argument("herm_exp: matrix is not Hermitian");
}

// Real eigenvalues of a Hermitian matrix, closed form per size.
std::vector<double> hermitian_eigenvalues(const Mat<Complex>& h) {
  if (h.rows == 2) {
    double a = h.at(0, 0).real(), d = h.at(1, 1).real();
    double half = 0.5 * (a - d);
    double rad = std::sqrt(half * half + std::norm(h.at(0, 1)));
    double mid = 0.5 * (a + d);
    return {mid - rad, mid + rad};
  }
  // 3x3 trigonometric form on the shifted matrix.
  double q = (h.at(0, 0).real() + h.at(1, 1).real() + h.at(2, 2).real()) / 3.0;
  double p2 = 0.0;
  for (int i = 0; i < 3; ++i) p2 += (h.at(i, i).real() - q) * (h.at(i, i).real() - q);
  p2 += 2.0 * (std::norm(h.at(0, 1)) + std::norm(h.at(0, 2)) + std::norm(h.at(1, 2)));
  double p = std::sqrt(p2 / 6.0);
  if (p < 1e-300) return {q, q, q};
  Mat<Complex> b = h;
  for (int i = 0; i < 3; ++i) b.at(i, i) -= q;
  for (auto& z : b.a) z /= p;
  Complex detb = b.at(0, 0) * (b.at(1, 1) * b.at(2, 2) - b.at(1, 2) * b.at(2, 1)) -
                 b.at(0, 1) * (b.at(1, 0) * b.at(2, 2) - b.at(1, 2) * b.at(2, 0)) +
                 b.at(0, 2) * (b.at(1, 0) * b.at(2, 1) - b.at(1, 1) * b.at(2, 0));
  double r = std::clamp(detb.real() / 2.0, -1.0, 1.0);
  double phi = std::acos(r) / 3.0;
  double pi = std::numbers::pi_v<double>;
  double e0 = q + 2.0 * p * std::cos(phi);
  double e2 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
  double e1 = 3.0 * q - e0 - e2;
  std::vector<double> ev{e0, e1, e2};
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

Mat<Complex> herm_exp(const Mat<Complex>& h, double theta) {
  if (h.rows != h.cols || (h.rows != 2 && h.rows != 3))
    throw std::invalid_argument("herm_exp: supported sizes are 2x2 and 3x3");
  require_hermitian(h);
  int n = h.rows;
  std::vector<double> ev = hermitian_eigenvalues(h);
  double spread = std::max({std::abs(ev.front()), std::abs(ev.back()), 1.0});
  double cluster_tol = 1e-9 * spread;

  // Group near-equal eigenvalues so Lagrange projectors stay well conditioned.
  std::vector<std::pair<double, int>> groups;  // representative value, count
  for (double lambda : ev) {
    if (!groups.empty() && std::abs(lambda - groups.back().first) <= cluster_tol) {
      auto& [val, cnt] = groups.back();
      val = (val * cnt + lambda) / (cnt + 1);
      ++cnt;
    } else {
      groups.push_back({lambda, 1});
    }
  }

  Mat<Complex> id = identity_like(h);
  auto phase = [&](double lambda) {
    return Complex{std::cos(theta * lambda), std::sin(theta * lambda)};
  };
  Mat<Complex> result = id;
  if (groups.size() == 1) {
    for (auto& z : result.a) z *= phase(groups[0].first);
  } else {
    // P_g = prod over other groups of (h - mu I) / (lambda_g - mu).
    result = id;
    for (auto& z : result.a) z = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      Mat<Complex> proj = id;
      for (std::size_t o = 0; o < groups.size(); ++o) {
        if (o == g) continue;
        Mat<Complex> shifted = h;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= groups[o].first;
        for (auto& z : shifted.a) z /= (groups[g].first - groups[o].first);
        proj = matmul(proj, shifted);
      }
      Complex ph = phase(groups[g].first);
      for (std::size_t i = 0; i < result.a.size(); ++i)
        result.a[i] += ph * proj.a[i];
    }
  }

  Mat<Complex> gramm = matmul(adjoint(result), result);
  if (max_abs(mat_sub(gramm, id)) > 1e-10)
    throw std::logic_error("herm_exp: result failed the unitarity check");
  return result;
}

}  // namespace sic
