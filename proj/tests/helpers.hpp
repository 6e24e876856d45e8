#pragma once

// Shared test utilities: deterministic RNG, random unitaries, bases with
// circulant Gram matrices, and subprocess capture for driving the CLI binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sicgen/linalg.hpp"

namespace testutil {

using sic::Complex;
using sic::Mat;
using sic::Vec;

inline std::mt19937_64 make_rng(std::uint64_t seed = 20240815u) {
  return std::mt19937_64(seed);
}

inline Complex gauss(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  double re = n(g);
  double im = n(g);
  return {re, im};
}

inline Vec<Complex> random_vec(std::mt19937_64& g, int d) {
  std::vector<Complex> e;
  e.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) e.push_back(gauss(g));
  return Vec<Complex>(std::move(e));
}

inline Complex random_phase(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi_v<double>);
  double t = u(g);
  return {std::cos(t), std::sin(t)};
}

// Modified Gram-Schmidt on Gaussian columns.
inline Mat<Complex> random_unitary(std::mt19937_64& g, int d) {
  std::vector<Vec<Complex>> cols;
  for (int j = 0; j < d; ++j) {
    Vec<Complex> v = random_vec(g, d);
    for (int k = 0; k < j; ++k) {
      Complex c = inner(cols[static_cast<std::size_t>(k)], v);
      v = vec_sub(v, scale(c, cols[static_cast<std::size_t>(k)]));
    }
    double nrm = std::sqrt(norm_sq(v).real());
    v = scale(Complex{1.0 / nrm, 0.0}, v);
    cols.push_back(v);
  }
  std::vector<Complex> a(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      a[static_cast<std::size_t>(i) * d + j] = cols[static_cast<std::size_t>(j)][i];
  return Mat<Complex>(d, d, std::move(a));
}

/**
 * d vectors whose Gram matrix is circulant by construction: columns of
 * diag(sqrt(lambda)) F with F the unitary DFT and random lambda_k > 0. The
 * Gram is F^dagger diag(lambda) F, a positive-definite circulant.
 */
inline std::vector<Vec<Complex>> circulant_gram_basis(std::mt19937_64& g, int d) {
  std::uniform_real_distribution<double> u(0.2, 2.0);
  std::vector<double> lambda;
  for (int k = 0; k < d; ++k) lambda.push_back(u(g));
  std::vector<Vec<Complex>> basis;
  double tau = 2.0 * std::numbers::pi_v<double>;
  for (int j = 0; j < d; ++j) {
    std::vector<Complex> e;
    for (int k = 0; k < d; ++k) {
      double ang = tau * k * j / d;
      double amp = std::sqrt(lambda[static_cast<std::size_t>(k)] / d);
      e.push_back({amp * std::cos(ang), amp * std::sin(ang)});
    }
    basis.emplace_back(std::move(e));
  }
  return basis;
}

inline std::vector<Vec<Complex>> random_basis(std::mt19937_64& g, int d) {
  std::vector<Vec<Complex>> basis;
  for (int j = 0; j < d; ++j) basis.push_back(random_vec(g, d));
  return basis;
}

// Dual-basis reconstruction v_l = sum_k G_{kl} w_k, with G the Gram matrix of
// the basis and {w_k} its dual. Holds for every basis, circulant or not.
inline bool eq2_reconstructs(const std::vector<Vec<Complex>>& basis,
                             double tol = 1e-10) {
  std::vector<Vec<Complex>> dual = sic::dual_basis(basis);
  Mat<Complex> g = sic::gram(basis);
  int n = static_cast<int>(basis.size());
  for (int l = 0; l < n; ++l) {
    double acc = 0.0;
    for (int i = 0; i < basis[0].dim(); ++i) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        s += g.at(k, l) * dual[static_cast<std::size_t>(k)][i];
      acc += std::norm(s - basis[static_cast<std::size_t>(l)][i]);
    }
    if (std::sqrt(acc) > tol) return false;
  }
  return true;
}

inline double frob_dist_identity(const Mat<Complex>& m) {
  double acc = 0.0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Complex diff = m.at(i, j) - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0});
      acc += std::norm(diff);
    }
  return std::sqrt(acc);
}

// --- subprocess driving for CLI tests ---

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

// Runs through the shell, captures stdout; stderr is left alone so failures
// show up in the test log.
inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int rc = pclose(p);
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

inline std::string sicgen_bin() {
  const char* b = std::getenv("SICGEN_BIN");
  return b ? b : "sicgen";
}

inline std::string data_dir() {
  const char* d = std::getenv("SICGEN_DATA_DIR");
  return d ? d : "data";
}

inline std::string temp_dir() {
  const char* t = std::getenv("TMPDIR");
  return t ? t : "/tmp";
}

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return s;
}

}  // namespace testutil
