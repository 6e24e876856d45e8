#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <type_traits>

#include "sicgen/cyclo.hpp"

namespace sic {

template <class S>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<Cyclo> : std::true_type {};
template <class S>
inline constexpr bool is_exact_v = is_exact_scalar<S>::value;

inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline Cyclo conj_of(const Cyclo& z) { return z.conj(); }

inline Complex zero_like(const Complex&) { return {0.0, 0.0}; }
inline Cyclo zero_like(const Cyclo& z) { return Cyclo::zero(z.context()); }

inline Complex one_like(const Complex&) { return {1.0, 0.0}; }
inline Cyclo one_like(const Cyclo& z) { return Cyclo::one(z.context()); }

inline bool exactly_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline bool exactly_zero(const Cyclo& z) { return z.is_zero(); }

inline Complex embed_scalar(const Complex& z) { return z; }
inline Complex embed_scalar(const Cyclo& z) { return z.embed(); }

inline Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

/**
 * Scalar factories for the two computation modes. Constructions are templated
 * over one of these, so each named set exists in float and exact form from a
 * single code path.
 */
struct FloatOps {
  using Scalar = Complex;
  Complex root(int m, long k) const {
    double angle = 2.0 * std::numbers::pi_v<double> * static_cast<double>(k) / m;
    return {std::cos(angle), std::sin(angle)};
  }
  Complex sqrt_int(int m) const { return {std::sqrt(static_cast<double>(m)), 0.0}; }
  Complex rat(long p, long q = 1) const {
    return {static_cast<double>(p) / static_cast<double>(q), 0.0};
  }
  Complex from_rational(const Rational& r) const { return {r.get_d(), 0.0}; }
  const char* mode_name() const { return "float"; }
};

struct ExactOps {
  using Scalar = Cyclo;
  std::shared_ptr<const CycloContext> ctx;
  ExactOps() : ctx(CycloContext::get(72)) {}
  explicit ExactOps(int conductor) : ctx(CycloContext::get(conductor)) {}
  Cyclo root(int m, long k) const { return Cyclo::root(ctx, m, k); }
  Cyclo sqrt_int(int m) const { return Cyclo::sqrt_int(ctx, m); }
  Cyclo rat(long p, long q = 1) const {
    return Cyclo::from_rational(ctx, rational(p, q));
  }
  Cyclo from_rational(const Rational& r) const { return Cyclo::from_rational(ctx, r); }
  const char* mode_name() const { return "exact"; }
};

}  // namespace sic
