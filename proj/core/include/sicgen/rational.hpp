#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sic {

// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_int64: not an integer");
  if (!r.get_num().fits_slong_p())
    throw std::overflow_error("to_int64: out of range");
  return static_cast<std::int64_t>(r.get_num().get_si());
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p/q", "-3", "0.25" (plain decimal) into an exact rational.
inline std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    // Base 10 everywhere: the default base 0 would read "025" as octal.
    if (slash != std::string::npos) {
      mpz_class num(text.substr(0, slash), 10);
      mpz_class den(text.substr(slash + 1), 10);
      if (den == 0) return std::nullopt;
      return rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return rational(mpz_class(text, 10), mpz_class(1));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) return std::nullopt;
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return rational(mpz_class(digits, 10), den);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace sic
