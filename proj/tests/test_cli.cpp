// End-to-end checks of the sicgen binary: exit-code contract, output shapes,
// determinism. The binary path arrives via SICGEN_BIN, sample inputs via
// SICGEN_DATA_DIR.

#include <string>

#include "doctest.h"
#include "helpers.hpp"

using namespace testutil;

namespace {

std::string bin() { return sicgen_bin(); }

std::string tmp_path(const std::string& name) { return temp_dir() + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: generate defaults to an exact certified document") {
  CmdResult r = run_cmd(bin() + " generate power-d2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pass\": true"));
  CHECK(contains(r.out, "\"mode\": \"exact\""));
  CHECK(contains(r.out, "\"conductor\": 72"));
  CHECK(contains(r.out, "\"max_angle_violation\": 0"));
  CHECK(contains(r.out, "\"set\""));
}

TEST_CASE("cli: float mode generates and passes at tolerance") {
  CmdResult r = run_cmd(bin() + " generate power-d2 --mode float");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"mode\": \"float\""));
  CHECK_FALSE(contains(r.out, "conductor"));
}

TEST_CASE("cli: every non-fiducial construction generates in both modes") {
  for (std::string name : {"power-d2", "bicyclic-d2", "bicyclic-d3", "hadamard-d2"}) {
    for (std::string mode : {"exact", "float"}) {
      CmdResult r = run_cmd(bin() + " generate " + name + " --mode " + mode);
      CHECK_MESSAGE(r.exit_code == 0, name, " --mode ", mode);
      CHECK(contains(r.out, "\"pass\": true"));
    }
  }
}

TEST_CASE("cli: fiducial-driven constructions") {
  std::string d3 = data_dir() + "/fiducial-weyl-d3.json";
  std::string d2 = data_dir() + "/fiducial-weyl-d2.json";

  CmdResult r = run_cmd(bin() + " generate weyl-d3 --fiducial " + d3);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"max_angle_violation\": 0"));

  // A float run embeds the exact fiducial.
  CHECK(run_cmd(bin() + " generate weyl-d3 --mode float --fiducial " + d3).exit_code == 0);
  CHECK(run_cmd(bin() + " generate weyl-d2 --mode float --fiducial " + d2).exit_code == 0);

  // Exact mode cannot lift a float fiducial file.
  CHECK(run_cmd(bin() + " generate weyl-d2 --mode exact --fiducial " + d2).exit_code == 2);
  // Missing --fiducial is a usage error.
  CHECK(run_cmd(bin() + " generate weyl-d3").exit_code == 2);
}

TEST_CASE("cli: unknown construction and bad flags are usage errors") {
  CHECK(run_cmd(bin() + " generate no-such-set").exit_code == 2);
  CHECK(run_cmd(bin() + " generate power-d2 --mode approximate").exit_code == 2);
  CHECK(run_cmd(bin() + " generate").exit_code == 2);
  CHECK(run_cmd(bin()).exit_code == 2);
  CHECK(run_cmd(bin() + " --help").exit_code == 0);
}

TEST_CASE("cli: --out splits document and report") {
  std::string file = tmp_path("sicgen-cli-out.json");
  CmdResult r = run_cmd(bin() + " generate bicyclic-d3 --out " + file);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pass\": true"));
  CHECK_FALSE(contains(r.out, "\"set\""));

  std::string doc = read_text(file);
  CHECK(contains(doc, "\"report\""));
  CHECK(contains(doc, "\"set\""));
  CHECK(contains(doc, "\"label\": \"bicyclic-d3\""));

  // The written document verifies in both check modes.
  CHECK(run_cmd(bin() + " verify " + file).exit_code == 0);
  CHECK(run_cmd(bin() + " verify " + file + " --mode exact").exit_code == 0);
}

TEST_CASE("cli: generate output is byte-deterministic") {
  std::string a = tmp_path("sicgen-det-a.json");
  std::string b = tmp_path("sicgen-det-b.json");
  CmdResult ra = run_cmd(bin() + " generate hadamard-d2 --out " + a);
  CmdResult rb = run_cmd(bin() + " generate hadamard-d2 --out " + b);
  CHECK(ra.exit_code == 0);
  CHECK(rb.exit_code == 0);
  CHECK(ra.out == rb.out);
  CHECK(read_text(a) == read_text(b));
  CHECK_FALSE(read_text(a).empty());
}

TEST_CASE("cli: verify error paths") {
  CHECK(run_cmd(bin() + " verify /no/such/file.json").exit_code == 2);

  std::string floatfile = tmp_path("sicgen-float-set.json");
  CmdResult gen = run_cmd(bin() + " generate power-d2 --mode float --out " + floatfile);
  REQUIRE(gen.exit_code == 0);
  // Exact verification of a float file cannot be honest, so it is refused.
  CHECK(run_cmd(bin() + " verify " + floatfile + " --mode exact").exit_code == 2);
  CHECK(run_cmd(bin() + " verify " + floatfile).exit_code == 0);

  std::string garbage = tmp_path("sicgen-garbage.json");
  write_text(garbage, "{broken");
  CHECK(run_cmd(bin() + " verify " + garbage).exit_code == 2);
}

TEST_CASE("cli: partial verification with an explicit target angle") {
  std::string tri = data_dir() + "/triangle-r2.json";
  // Three unit vectors at mutual cosine 1/2: not a full d=2 set.
  CHECK(run_cmd(bin() + " verify " + tri).exit_code == 2);
  // As a partial set they miss the SIC angle...
  CHECK(run_cmd(bin() + " verify " + tri + " --partial").exit_code == 1);
  // ...but match an explicit target of 1/2.
  CHECK(run_cmd(bin() + " verify " + tri + " --partial --target-angle 1/2").exit_code == 0);
  CHECK(run_cmd(bin() + " verify " + tri + " --target-angle 1/2").exit_code == 2);
  CHECK(run_cmd(bin() + " verify " + tri + " --partial --target-angle 7/2").exit_code == 2);
}

TEST_CASE("cli: norm sequence output formats") {
  CmdResult r = run_cmd(bin() + " sequence 18");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "[1, 1, 2, 3, 5, 9, 15, 26, 45, 77, 133, 229, 394, 679, 1169, 2013, 3467, "
        "5970]\n");

  CmdResult csv = run_cmd(bin() + " sequence 5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.out, "index,value\n"));
  CHECK(contains(csv.out, "4,5\n"));

  CmdResult pretty = run_cmd(bin() + " sequence 4 --format pretty");
  CHECK(pretty.out == "1, 1, 2, 3\n");

  CHECK(run_cmd(bin() + " sequence 0").exit_code == 2);
  CHECK(run_cmd(bin() + " sequence 65").exit_code == 2);
  CHECK(run_cmd(bin() + " sequence 64").exit_code == 0);
}

TEST_CASE("cli: phase sweep") {
  std::string basis = data_dir() + "/basis-standard.json";
  CmdResult r = run_cmd(bin() + " sweep " + basis + " --resolution 90");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"best_xi\": [-1"));
  CHECK(contains(r.out, "best_zeta"));
  CHECK(contains(r.out, "\"grid_resolution\": 90"));
  CHECK(contains(r.out, "e-1"));  // the violation floor is numerically zero

  CHECK(run_cmd(bin() + " sweep " + basis + " --resolution 10").exit_code == 2);
  CHECK(run_cmd(bin() + " sweep " + data_dir() + "/triangle-r2.json").exit_code == 2);
}

TEST_CASE("cli: conductor override") {
  // 24 = lcm(8, 12) is the smallest field holding sqrt2, sqrt3, and the
  // sixth roots, enough for every d=2 construction.
  CmdResult ok = run_cmd("SICGEN_CONDUCTOR=24 " + bin() + " generate bicyclic-d2");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "\"conductor\": 24"));

  CmdResult ok144 = run_cmd("SICGEN_CONDUCTOR=144 " + bin() + " generate power-d2");
  CHECK(ok144.exit_code == 0);
  CHECK(contains(ok144.out, "\"conductor\": 144"));

  // 12 and 36 lack the 8th roots behind sqrt2; 7 lacks every needed order.
  CHECK(run_cmd("SICGEN_CONDUCTOR=12 " + bin() + " generate power-d2").exit_code == 2);
  CHECK(run_cmd("SICGEN_CONDUCTOR=36 " + bin() + " generate bicyclic-d2").exit_code == 2);
  CHECK(run_cmd("SICGEN_CONDUCTOR=7 " + bin() + " generate power-d2").exit_code == 2);
  CHECK(run_cmd("SICGEN_CONDUCTOR=0 " + bin() + " generate power-d2").exit_code == 2);
  CHECK(run_cmd("SICGEN_CONDUCTOR=abc " + bin() + " generate power-d2").exit_code == 2);
}

TEST_CASE("cli: alternate output formats") {
  CmdResult pretty = run_cmd(bin() + " generate bicyclic-d3 --format pretty");
  CHECK(pretty.exit_code == 0);
  CHECK(contains(pretty.out, "bicyclic-d3: 9 vectors in dimension 3"));
  CHECK(contains(pretty.out, "verification: PASS"));

  CmdResult csv = run_cmd(bin() + " generate power-d2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("index,component,re,im\n", 0) == 0);
  CHECK(contains(csv.out, "pass,true"));
}
