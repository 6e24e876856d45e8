#include "sicgen/io.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace sic {

namespace {

const LineSetT<Complex>* as_float(const VectorSetData& d) {
  return std::get_if<LineSetT<Complex>>(&d.set);
}
const LineSetT<Cyclo>* as_exact(const VectorSetData& d) {
  return std::get_if<LineSetT<Cyclo>>(&d.set);
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

std::string complex_pair(Complex z) {
  return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

std::string cyclo_coeffs(const Cyclo& z) {
  std::string out = "[";
  bool first = true;
  for (const Rational& c : z.coeffs()) {
    if (!first) out += ",";
    first = false;
    out += "[" + c.get_num().get_str() + "," + c.get_den().get_str() + "]";
  }
  return out + "]";
}

// The set object without a trailing newline, starting at `indent`.
std::string render_set(const VectorSetData& d, int indent) {
  std::string in1 = pad(indent + 2), in2 = pad(indent + 4), in3 = pad(indent + 6);
  std::string out = "{\n";
  if (d.is_exact()) out += in1 + "\"conductor\": " + std::to_string(d.conductor) + ",\n";
  out += in1 + "\"dimension\": " + std::to_string(d.dimension()) + ",\n";
  out += in1 + "\"label\": \"" + escape_json(d.label()) + "\",\n";
  out += in1 + std::string("\"mode\": \"") + (d.is_exact() ? "exact" : "float") + "\",\n";
  out += in1 + "\"vectors\": [\n";
  int n = d.n_vectors();
  for (int v = 0; v < n; ++v) {
    out += in2 + "[\n";
    for (int i = 0; i < d.dimension(); ++i) {
      if (const auto* fl = as_float(d))
        out += in3 + complex_pair(fl->vectors[static_cast<std::size_t>(v)][i]);
      else
        out += in3 + cyclo_coeffs(as_exact(d)->vectors[static_cast<std::size_t>(v)][i]);
      out += i + 1 < d.dimension() ? ",\n" : "\n";
    }
    out += in2 + (v + 1 < n ? "],\n" : "]\n");
  }
  out += in1 + "]\n" + pad(indent) + "}";
  return out;
}

std::string render_report(const VerificationReport& r, int indent) {
  std::string in1 = pad(indent + 2), in2 = pad(indent + 4);
  std::string out = "{\n";
  out += in1 + "\"dim\": " + std::to_string(r.dim) + ",\n";
  out += in1 + "\"max_angle_violation\": " + format_double(r.max_angle_violation) + ",\n";
  out += in1 + "\"max_norm_violation\": " + format_double(r.max_norm_violation) + ",\n";
  out += in1 + "\"mode\": \"" + escape_json(r.mode) + "\",\n";
  out += in1 + "\"n_vectors\": " + std::to_string(r.n_vectors) + ",\n";
  out += in1 + std::string("\"pass\": ") + (r.pass ? "true" : "false");
  if (r.per_pair) {
    int n = r.n_vectors;
    out += ",\n" + in1 + "\"per_pair\": [\n";
    for (int i = 0; i < n; ++i) {
      out += in2 + "[";
      for (int j = 0; j < n; ++j) {
        if (j) out += ", ";
        out += format_double((*r.per_pair)[static_cast<std::size_t>(i) * n + j]);
      }
      out += i + 1 < n ? "],\n" : "]\n";
    }
    out += in1 + "]";
  }
  out += "\n" + pad(indent) + "}";
  return out;
}

std::string csv_key_rows(const VectorSetData* d, const VerificationReport& r) {
  std::string out = "key,value\n";
  if (d && d->is_exact()) out += "conductor," + std::to_string(d->conductor) + "\n";
  out += "dim," + std::to_string(r.dim) + "\n";
  if (d) out += "label," + d->label() + "\n";
  out += "max_angle_violation," + format_double(r.max_angle_violation) + "\n";
  out += "max_norm_violation," + format_double(r.max_norm_violation) + "\n";
  out += "mode," + r.mode + "\n";
  out += "n_vectors," + std::to_string(r.n_vectors) + "\n";
  out += std::string("pass,") + (r.pass ? "true" : "false") + "\n";
  return out;
}

std::string format_complex_pretty(Complex z) {
  std::string out = format_double(z.real());
  out += z.imag() < 0.0 ? "-" : "+";
  out += format_double(std::abs(z.imag())) + "i";
  return out;
}

std::string report_pretty_body(const VerificationReport& r) {
  std::string out;
  out += std::string("verification: ") + (r.pass ? "PASS" : "FAIL") + "\n";
  out += "  vectors:             " + std::to_string(r.n_vectors) + "\n";
  out += "  dimension:           " + std::to_string(r.dim) + "\n";
  out += "  mode:                " + r.mode + "\n";
  out += "  max norm violation:  " + format_double(r.max_norm_violation) + "\n";
  out += "  max angle violation: " + format_double(r.max_angle_violation) + "\n";
  return out;
}

long long int_in_range(const nlohmann::json& el, const char* what) {
  if (el.is_number_unsigned()) {
    auto u = el.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw std::runtime_error(std::string(what) + ": integer exceeds the int64 range");
    return static_cast<long long>(u);
  }
  if (el.is_number_integer()) return el.get<std::int64_t>();
  throw std::runtime_error(std::string(what) +
                           ": expected an integer in the int64 range (oversized or "
                           "fractional numbers are not accepted)");
}

}  // namespace

int VectorSetData::dimension() const {
  return std::visit([](const auto& s) { return s.dim; }, set);
}
int VectorSetData::n_vectors() const {
  return std::visit([](const auto& s) { return static_cast<int>(s.vectors.size()); },
                    set);
}
const std::string& VectorSetData::label() const {
  return std::visit([](const auto& s) -> const std::string& { return s.label; }, set);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string set_to_json(const VectorSetData& d) { return render_set(d, 0) + "\n"; }

std::string report_to_json(const VerificationReport& r) {
  return render_report(r, 0) + "\n";
}

std::string sweep_to_json(const SweepResult& r) {
  std::string out = "{\n";
  out += "  \"best_xi\": " + complex_pair(r.best_xi) + ",\n";
  out += "  \"best_zeta\": " + complex_pair(r.best_zeta) + ",\n";
  out += "  \"grid_resolution\": " + std::to_string(r.grid_resolution) + ",\n";
  out += "  \"min_max_violation\": " + format_double(r.min_max_violation) + "\n";
  return out + "}\n";
}

std::string generate_output_json(const VectorSetData& d, const VerificationReport& r) {
  return "{\n  \"report\": " + render_report(r, 2) + ",\n  \"set\": " +
         render_set(d, 2) + "\n}\n";
}

std::string report_to_csv(const VerificationReport& r) {
  return csv_key_rows(nullptr, r);
}

std::string generate_output_csv(const VectorSetData& d, const VerificationReport& r) {
  std::string out = "index,component,re,im\n";
  int n = d.n_vectors();
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d.dimension(); ++i) {
      Complex z = as_float(d) ? (*as_float(d)).vectors[static_cast<std::size_t>(v)][i]
                              : as_exact(d)
                                    ->vectors[static_cast<std::size_t>(v)][i]
                                    .embed();
      out += std::to_string(v) + "," + std::to_string(i) + "," +
             format_double(z.real()) + "," + format_double(z.imag()) + "\n";
    }
  return out + "\n" + csv_key_rows(&d, r);
}

std::string report_to_pretty(const VerificationReport& r) {
  return report_pretty_body(r);
}

std::string generate_output_pretty(const VectorSetData& d, const VerificationReport& r) {
  std::string out = d.label().empty() ? std::string("vector set") : d.label();
  out += ": " + std::to_string(d.n_vectors()) + " vectors in dimension " +
         std::to_string(d.dimension());
  out += d.is_exact() ? " (exact, conductor " + std::to_string(d.conductor) + ")"
                      : " (float)";
  out += "\n";
  for (int v = 0; v < d.n_vectors(); ++v) {
    out += "  v" + std::to_string(v) + " = (";
    for (int i = 0; i < d.dimension(); ++i) {
      if (i) out += ", ";
      Complex z = as_float(d) ? (*as_float(d)).vectors[static_cast<std::size_t>(v)][i]
                              : as_exact(d)
                                    ->vectors[static_cast<std::size_t>(v)][i]
                                    .embed();
      out += format_complex_pretty(z);
    }
    out += ")\n";
  }
  return out + report_pretty_body(r);
}

VectorSetData parse_vector_set(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("vector set file: top level must be an object");

  // Accept a full generate document by descending into its "set" member.
  if (j.contains("set") && j["set"].is_object()) j = j["set"];

  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw std::runtime_error("vector set file: missing integer field 'dimension'");
  int dim = j["dimension"].get<int>();
  if (dim < 1) throw std::runtime_error("vector set file: dimension must be >= 1");

  if (!j.contains("mode") || !j["mode"].is_string())
    throw std::runtime_error("vector set file: missing string field 'mode'");
  std::string mode = j["mode"].get<std::string>();
  if (mode != "float" && mode != "exact")
    throw std::runtime_error("vector set file: mode must be \"float\" or \"exact\"");

  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw std::runtime_error("vector set file: label must be a string");
    label = j["label"].get<std::string>();
  }

  if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].empty())
    throw std::runtime_error("vector set file: missing non-empty array 'vectors'");
  const auto& jv = j["vectors"];

  if (mode == "float") {
    LineSetT<Complex> s;
    s.dim = dim;
    s.label = label;
    for (const auto& row : jv) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw std::runtime_error("vector set file: every vector must have 'dimension' components");
      std::vector<Complex> comps;
      for (const auto& el : row) {
        if (!el.is_array() || el.size() != 2 || !el[0].is_number() || !el[1].is_number())
          throw std::runtime_error("vector set file: float components must be [re, im]");
        comps.push_back({el[0].get<double>(), el[1].get<double>()});
      }
      s.vectors.emplace_back(std::move(comps));
    }
    return {std::move(s), 0};
  }

  if (!j.contains("conductor") || !j["conductor"].is_number_integer())
    throw std::runtime_error("vector set file: exact mode requires integer 'conductor'");
  int conductor = j["conductor"].get<int>();
  if (conductor < 1 || conductor > 100000)
    throw std::runtime_error("vector set file: conductor out of range");
  auto ctx = CycloContext::get(conductor);
  int deg = ctx->degree();

  LineSetT<Cyclo> s;
  s.dim = dim;
  s.label = label;
  for (const auto& row : jv) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::runtime_error("vector set file: every vector must have 'dimension' components");
    std::vector<Cyclo> comps;
    for (const auto& el : row) {
      if (!el.is_array() || static_cast<int>(el.size()) != deg)
        throw std::runtime_error(
            "vector set file: exact components must list phi(conductor) coefficient pairs");
      std::vector<Rational> coeffs;
      coeffs.reserve(static_cast<std::size_t>(deg));
      for (const auto& pair : el) {
        if (!pair.is_array() || pair.size() != 2)
          throw std::runtime_error("vector set file: coefficients must be [num, den] pairs");
        long long num = int_in_range(pair[0], "coefficient numerator");
        long long den = int_in_range(pair[1], "coefficient denominator");
        if (den == 0) throw std::runtime_error("vector set file: coefficient denominator is zero");
        coeffs.push_back(rational(static_cast<long>(num), static_cast<long>(den)));
      }
      comps.push_back(Cyclo::from_coeffs(ctx, std::move(coeffs)));
    }
    s.vectors.emplace_back(std::move(comps));
  }
  return {std::move(s), conductor};
}

}  // namespace sic
