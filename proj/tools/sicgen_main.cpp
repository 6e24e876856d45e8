// sicgen: generate named equiangular-line constructions, verify vector-set
// files, print the power-orbit norm sequence, and sweep diagonal phase pairs.
// Exit codes: 0 verified true, 1 verified false, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sicgen/constructions.hpp"
#include "sicgen/io.hpp"
#include "sicgen/verify.hpp"

namespace {

using namespace sic;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int conductor_from_env() {
  const char* env = std::getenv("SICGEN_CONDUCTOR");
  if (!env || !*env) return 72;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 100000)
    throw UsageError("SICGEN_CONDUCTOR must be a positive integer");
  return static_cast<int>(v);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file: " + path);
  out << content;
  if (!out) throw UsageError("short write: " + path);
}

VectorSetData load_set_file(const std::string& path) {
  return parse_vector_set(slurp(path));
}

Vec<Complex> fiducial_float(const std::string& path, int d) {
  VectorSetData data = load_set_file(path);
  if (data.n_vectors() != 1)
    throw UsageError("fiducial file must contain exactly one vector");
  if (data.dimension() != d)
    throw UsageError("fiducial has dimension " + std::to_string(data.dimension()) +
                     ", construction needs " + std::to_string(d));
  LineSetT<Complex> s = std::visit([](const auto& v) { return embed_set(v); }, data.set);
  return s.vectors[0];
}

Vec<Cyclo> fiducial_exact(const std::string& path, int d, int conductor) {
  VectorSetData data = load_set_file(path);
  if (data.n_vectors() != 1)
    throw UsageError("fiducial file must contain exactly one vector");
  if (data.dimension() != d)
    throw UsageError("fiducial has dimension " + std::to_string(data.dimension()) +
                     ", construction needs " + std::to_string(d));
  if (!data.is_exact())
    throw UsageError("exact-mode generation needs an exact-mode fiducial file");
  if (data.conductor != conductor)
    throw UsageError("fiducial conductor " + std::to_string(data.conductor) +
                     " does not match the generation conductor " +
                     std::to_string(conductor));
  return std::get<LineSetT<Cyclo>>(data.set).vectors[0];
}

VectorSetData generate_named(const std::string& name, bool exact,
                             const std::string& fiducial_path) {
  bool weyl = name == "weyl-d2" || name == "weyl-d3";
  if (weyl && fiducial_path.empty())
    throw UsageError(name + " requires --fiducial <file>");

  if (exact) {
    ExactOps ops(conductor_from_env());
    LineSetT<Cyclo> s;
    if (name == "power-d2")
      s = power_d2_sic(ops);
    else if (name == "bicyclic-d2")
      s = bicyclic_d2(ops).sic;
    else if (name == "bicyclic-d3")
      s = bicyclic_d3_exact(ops).sic;
    else if (name == "hadamard-d2")
      s = hadamard_d2(ops, HadamardVariant::projector_chain);
    else if (weyl) {
      int d = name == "weyl-d2" ? 2 : 3;
      s = weyl_orbit(ops, d, fiducial_exact(fiducial_path, d, ops.ctx->conductor()));
    } else {
      throw UsageError("unknown construction: " + name);
    }
    return {std::move(s), ops.ctx->conductor()};
  }

  FloatOps ops;
  LineSetT<Complex> s;
  if (name == "power-d2")
    s = power_d2_sic(ops);
  else if (name == "bicyclic-d2")
    s = bicyclic_d2(ops).sic;
  else if (name == "bicyclic-d3")
    s = bicyclic_d3(bicyclic_d3_standard_solution()).sic;
  else if (name == "hadamard-d2")
    s = hadamard_d2(ops, HadamardVariant::projector_chain);
  else if (weyl) {
    int d = name == "weyl-d2" ? 2 : 3;
    s = weyl_orbit(ops, d, fiducial_float(fiducial_path, d));
  } else {
    throw UsageError("unknown construction: " + name);
  }
  return {std::move(s), 0};
}

std::string document_text(const VectorSetData& d, const VerificationReport& r,
                          const std::string& format) {
  if (format == "csv") return generate_output_csv(d, r);
  if (format == "pretty") return generate_output_pretty(d, r);
  return generate_output_json(d, r);
}

std::string report_text(const VerificationReport& r, const std::string& format) {
  if (format == "csv") return report_to_csv(r);
  if (format == "pretty") return report_to_pretty(r);
  return report_to_json(r);
}

struct GenerateArgs {
  std::string name;
  std::string mode = "exact";
  std::string format = "json";
  std::string out;
  std::string fiducial;
  double tolerance = 1e-10;
};

int run_generate(const GenerateArgs& a) {
  VectorSetData data = generate_named(a.name, a.mode == "exact", a.fiducial);
  VerificationReport rep =
      std::visit([&](const auto& s) { return check_sic(s, a.tolerance); }, data.set);
  if (a.out.empty()) {
    std::cout << document_text(data, rep, a.format);
  } else {
    write_file(a.out, document_text(data, rep, a.format));
    std::cout << report_text(rep, a.format);
  }
  return rep.pass ? 0 : 1;
}

struct VerifyArgs {
  std::string path;
  std::string mode = "float";
  std::string format = "json";
  std::string target_angle;
  double tolerance = 1e-10;
  bool partial = false;
};

int run_verify(const VerifyArgs& a) {
  VectorSetData data = load_set_file(a.path);
  if (a.mode == "exact" && !data.is_exact())
    throw UsageError("cannot run an exact check on a float-mode file");

  std::optional<Rational> target_sq;
  if (!a.target_angle.empty()) {
    if (!a.partial) throw UsageError("--target-angle requires --partial");
    auto r = parse_rational(a.target_angle);
    if (!r || *r < 0 || *r > 1)
      throw UsageError("--target-angle must be a rational cosine value in [0, 1]");
    target_sq = (*r) * (*r);
  }

  auto run = [&](const auto& s) {
    if (a.partial) {
      if (target_sq) return check_equiangular_partial(s, a.tolerance, *target_sq);
      return check_equiangular_partial(s, a.tolerance);
    }
    return check_sic(s, a.tolerance);
  };

  VerificationReport rep;
  if (a.mode == "exact")
    rep = run(std::get<LineSetT<Cyclo>>(data.set));
  else
    rep = run(std::visit([](const auto& s) { return embed_set(s); }, data.set));

  std::cout << report_text(rep, a.format);
  return rep.pass ? 0 : 1;
}

int run_sequence(int count, const std::string& format) {
  auto terms = norm_sequence(true, count);
  std::string out;
  if (format == "csv") {
    out = "index,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
      out += std::to_string(i) + "," + std::to_string(terms[i]) + "\n";
  } else if (format == "pretty") {
    for (std::size_t i = 0; i < terms.size(); ++i)
      out += (i ? ", " : "") + std::to_string(terms[i]);
    out += "\n";
  } else {
    out = "[";
    for (std::size_t i = 0; i < terms.size(); ++i)
      out += (i ? ", " : "") + std::to_string(terms[i]);
    out += "]\n";
  }
  std::cout << out;
  return 0;
}

int run_sweep(const std::string& path, int resolution) {
  VectorSetData data = load_set_file(path);
  if (data.dimension() != 3 || data.n_vectors() != 3)
    throw UsageError("sweep needs a basis file with exactly 3 vectors of dimension 3");
  LineSetT<Complex> s = std::visit([](const auto& b) { return embed_set(b); }, data.set);
  SweepResult res = diagonal_extension_sweep(s.vectors, resolution);
  std::cout << sweep_to_json(res);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify maximal sets of complex equiangular lines"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "Build a named construction");
  cmd_gen->add_option("name", gen.name, "Construction name")->required();
  cmd_gen->add_option("--mode", gen.mode, "Scalar mode (default exact)")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd_gen->add_option("--tolerance", gen.tolerance, "Float verification tolerance")
      ->check(CLI::PositiveNumber);
  cmd_gen->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd_gen->add_option("--out", gen.out, "Write the full document here");
  cmd_gen->add_option("--fiducial", gen.fiducial, "Fiducial vector file (weyl-*)");

  VerifyArgs ver;
  CLI::App* cmd_ver = app.add_subcommand("verify", "Check a vector-set file");
  cmd_ver->add_option("path", ver.path, "Vector-set file")->required();
  cmd_ver->add_option("--mode", ver.mode, "Check mode (default float)")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd_ver->add_option("--tolerance", ver.tolerance, "Float verification tolerance")
      ->check(CLI::PositiveNumber);
  cmd_ver->add_option("--format", ver.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd_ver->add_flag("--partial", ver.partial, "Skip the cardinality requirement");
  cmd_ver->add_option("--target-angle", ver.target_angle,
                      "Rational |<u,v>| target instead of 1/sqrt(d+1); needs --partial");

  int seq_count = 0;
  std::string seq_format = "json";
  CLI::App* cmd_seq = app.add_subcommand("sequence", "Print the squared-norm sequence");
  cmd_seq->add_option("count", seq_count, "Number of terms (1..64)")
      ->required()
      ->check(CLI::Range(1, 64));
  cmd_seq->add_option("--format", seq_format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::string sweep_path;
  int sweep_resolution = 180;
  CLI::App* cmd_sw = app.add_subcommand("sweep", "Scan diagonal phase pairs for a basis");
  cmd_sw->add_option("path", sweep_path, "Basis file (3 vectors, dimension 3)")
      ->required();
  cmd_sw->add_option("--resolution", sweep_resolution, "Grid points per phase (>= 90)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_ver->parsed()) return run_verify(ver);
    if (cmd_seq->parsed()) return run_sequence(seq_count, seq_format);
    if (cmd_sw->parsed()) return run_sweep(sweep_path, sweep_resolution);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
