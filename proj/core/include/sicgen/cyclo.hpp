#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "sicgen/rational.hpp"

namespace sic {

using Complex = std::complex<double>;

/**
 * Shared immutable data for one cyclotomic field Q(zeta_n): the cyclotomic
 * polynomial Phi_n, reduction rows for the power basis 1, zeta, ..,
 * zeta^(phi(n)-1), and the coefficient vectors of zeta^j for every j < n.
 * Obtain through CycloContext::get(n); contexts are cached and thread-safe.
 */
class CycloContext {
 public:
  static std::shared_ptr<const CycloContext> get(int n);

  int conductor() const { return n_; }
  int degree() const { return phi_; }

  // zeta_n^j reduced to the power basis, j taken mod n.
  const std::vector<Rational>& root_power(long j) const;

  // Coefficient rows expressing x^(phi..2*phi-2) mod Phi_n.
  const std::vector<std::vector<Rational>>& reduction_rows() const { return reduce_; }

  // Monic Phi_n as integer coefficients, degree phi(n).
  const std::vector<mpz_class>& cyclotomic_poly() const { return poly_; }

  Complex unit_root(long j) const;  // float e^(2*pi*i*j/n)

 private:
  explicit CycloContext(int n);
  int n_ = 0;
  int phi_ = 0;
  std::vector<mpz_class> poly_;
  std::vector<std::vector<Rational>> reduce_;
  std::vector<std::vector<Rational>> zeta_pow_;
};

/**
 * Element of Q(zeta_n) held as phi(n) rational coefficients over the power
 * basis. Equality is coefficient-wise; arithmetic reduces modulo Phi_n, so the
 * representation stays canonical. Complex conjugation is the Galois map
 * zeta -> zeta^(n-1).
 */
class Cyclo {
 public:
  Cyclo() = default;

  static Cyclo zero(std::shared_ptr<const CycloContext> ctx);
  static Cyclo one(std::shared_ptr<const CycloContext> ctx);
  static Cyclo from_rational(std::shared_ptr<const CycloContext> ctx, const Rational& r);
  // e^(2*pi*i*k/m); m must divide the context conductor.
  static Cyclo root(std::shared_ptr<const CycloContext> ctx, int m, long k);
  // Positive real square root of m, for m in {2, 3, 6}.
  static Cyclo sqrt_int(std::shared_ptr<const CycloContext> ctx, int m);
  static Cyclo from_coeffs(std::shared_ptr<const CycloContext> ctx,
                           std::vector<Rational> coeffs);

  const std::shared_ptr<const CycloContext>& context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo inv() const;              // throws std::domain_error on zero
  Cyclo conj() const;
  Cyclo abs_sq() const;           // a * conj(a)
  Cyclo pow(long k) const;        // negative k via inv()

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  Complex embed() const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const CycloContext> ctx_;
  std::vector<Rational> c_;
  void require_same_field(const Cyclo& o) const;
};

}  // namespace sic
