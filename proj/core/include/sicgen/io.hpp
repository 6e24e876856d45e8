#pragma once

#include <string>
#include <variant>

#include "sicgen/lineset.hpp"
#include "sicgen/verify.hpp"

namespace sic {

// A parsed or to-be-serialized vector set in either scalar mode. conductor is
// the cyclotomic conductor for exact sets and 0 for float sets.
struct VectorSetData {
  std::variant<LineSetT<Complex>, LineSetT<Cyclo>> set;
  int conductor = 0;

  bool is_exact() const { return set.index() == 1; }
  int dimension() const;
  int n_vectors() const;
  const std::string& label() const;
};

// %.17g. Serialized floats survive a parse round trip bit for bit.
std::string format_double(double x);

std::string set_to_json(const VectorSetData& d);
std::string report_to_json(const VerificationReport& r);
std::string sweep_to_json(const SweepResult& r);

// {"report": .., "set": ..}, the full output of a generate run.
std::string generate_output_json(const VectorSetData& d, const VerificationReport& r);

// Float embeddings only: a vectors section (index,component,re,im), a blank
// line, then a key,value report section.
std::string report_to_csv(const VerificationReport& r);
std::string generate_output_csv(const VectorSetData& d, const VerificationReport& r);

// Human-readable rendering of the same content.
std::string report_to_pretty(const VerificationReport& r);
std::string generate_output_pretty(const VectorSetData& d, const VerificationReport& r);

/**
 * Parse the JSON vector-set file format: an object with keys dimension, mode
 * ("float" | "exact"), vectors, optional label, and conductor in exact mode.
 * Float entries are [re, im]; exact entries are per-component coefficient
 * lists of [num, den] integer pairs over the power basis of Q(zeta_conductor).
 * Throws std::runtime_error with a line-free human message on any malformed
 * input, including exact coefficients outside the int64 range.
 */
VectorSetData parse_vector_set(const std::string& text);

}  // namespace sic
