#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "sicgen/constructions.hpp"
#include "sicgen/verify.hpp"

using namespace sic;
using namespace testutil;

namespace {

const double kPi = std::numbers::pi_v<double>;

LineSetT<Complex> phase_twisted(const LineSetT<Complex>& s, std::mt19937_64& g) {
  LineSetT<Complex> out = s;
  for (auto& v : out.vectors) v = scale(random_phase(g), v);
  return out;
}

LineSetT<Complex> rotated(const LineSetT<Complex>& s, const Mat<Complex>& u) {
  LineSetT<Complex> out = s;
  for (auto& v : out.vectors) v = mat_vec(u, v);
  return out;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("full check enforces the cardinality contract") {
  LineSetT<Complex> s = power_d2_sic(FloatOps{});
  s.vectors.pop_back();
  CHECK_THROWS_AS(check_sic(s, 1e-9), std::invalid_argument);

  LineSetT<Complex> mixed = power_d2_sic(FloatOps{});
  mixed.vectors[2] = Vec<Complex>({{1, 0}, {0, 0}, {0, 0}});
  CHECK_THROWS_AS(check_sic(mixed, 1e-9), std::invalid_argument);
}

TEST_CASE("appending the collapsed next vector breaks equiangularity by exactly 1/3") {
  LineSetT<Complex> s = power_d2_sic(FloatOps{});
  // Normalized continuation (0, 1): orthogonal to v0, overlap 2/3 with v1.
  s.vectors.push_back(Vec<Complex>({{0, 0}, {1, 0}}));
  VerificationReport rep = check_equiangular_partial(s, 1e-9);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_angle_violation == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  REQUIRE(rep.per_pair.has_value());
  REQUIRE(rep.per_pair->size() == 25);
  // Worst entry sits at the (v1, appended) pair: |2/3 - 1/3|.
  CHECK((*rep.per_pair)[1 * 5 + 4] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK((*rep.per_pair)[0 * 5 + 4] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("verification is phase-gauge and unitary invariant") {
  auto g = make_rng(41);
  LineSetT<Complex> s = embed_set(bicyclic_d3_exact(ExactOps{}).sic);
  CHECK(check_sic(s, 1e-12).pass);
  for (int trial = 0; trial < 5; ++trial) {
    LineSetT<Complex> t = rotated(phase_twisted(s, g), random_unitary(g, 3));
    CHECK(check_sic(t, 1e-10).pass);
  }
}

TEST_CASE("partial check covers subsets and explicit targets") {
  ExactOps ops;
  BicyclicD3<Cyclo> b = bicyclic_d3_exact(ops);
  LineSetT<Cyclo> part;
  part.dim = 3;
  part.label = "partial";
  part.vectors = {b.orbits[0].vectors[0], b.orbits[1].vectors[0],
                  b.orbits[1].vectors[1], b.orbits[2].vectors[0]};
  VerificationReport rep = check_equiangular_partial(part, 0.0);
  CHECK(rep.pass);
  CHECK(rep.max_angle_violation == 0.0);

  // A lone pair at 60 degrees: squared overlap 1/4 misses the d=2 SIC value
  // 1/3 but matches an explicit target of 1/4.
  LineSetT<Complex> pair;
  pair.dim = 2;
  pair.vectors = {Vec<Complex>({{1, 0}, {0, 0}}),
                  Vec<Complex>({{0.5, 0}, {std::sqrt(3.0) / 2.0, 0}})};
  VerificationReport miss = check_equiangular_partial(pair, 1e-9);
  CHECK_FALSE(miss.pass);
  CHECK(miss.max_angle_violation == doctest::Approx(1.0 / 12.0));
  VerificationReport hit = check_equiangular_partial(pair, 1e-9, rational(1, 4));
  CHECK(hit.pass);

  LineSetT<Complex> lone;
  lone.dim = 2;
  lone.vectors = {Vec<Complex>({{1, 0}, {0, 0}})};
  CHECK_THROWS_AS(check_equiangular_partial(lone, 1e-9), std::invalid_argument);
}

TEST_CASE("exact pass embeds to a float pass") {
  CHECK(check_sic(embed_set(power_d2_sic(ExactOps{})), 1e-12).pass);
  CHECK(check_sic(embed_set(bicyclic_d3_exact(ExactOps{}).sic), 1e-12).pass);
}

TEST_CASE("triple products are a unitary and phase invariant") {
  auto g = make_rng(43);
  LineSetT<Complex> s = power_d2_sic(FloatOps{});
  auto base = triple_products(s);
  REQUIRE(base.size() == 64);

  // Diagonal triples (j,j,j) contribute unit products.
  int units = 0;
  for (const auto& z : base)
    if (std::abs(z - Complex{1.0, 0.0}) < 1e-12) ++units;
  CHECK(units >= 4);

  // Sorted ascending by rounded real part.
  for (std::size_t i = 1; i < base.size(); ++i)
    CHECK(base[i - 1].real() <= base[i].real() + 1e-9);

  for (int trial = 0; trial < 50; ++trial) {
    LineSetT<Complex> t = rotated(phase_twisted(s, g), random_unitary(g, 2));
    CHECK(max_diff(triple_products(t), base) < 1e-10);
  }
}

TEST_CASE("triple products separate inequivalent sets and match equivalent ones") {
  // Two different d=2 constructions give the same multiset.
  auto a = triple_products(power_d2_sic(ExactOps{}));
  auto b = triple_products(bicyclic_d2(ExactOps{}).sic);
  CHECK(max_diff(a, b) < 1e-8);

  // The shift-and-phase set from (0,1,-1)/sqrt2 is a different d=3 SIC than
  // the three-orbit one: the multisets disagree in a visible way.
  ExactOps ops;
  Cyclo half_s2 = ops.sqrt_int(2) * ops.rat(1, 2);
  Vec<Cyclo> hesse({Cyclo::zero(ops.ctx), half_s2, ops.rat(-1) * half_s2});
  auto c = triple_products(weyl_orbit(ops, 3, hesse));
  auto d = triple_products(bicyclic_d3_exact(ops).sic);
  REQUIRE(c.size() == d.size());
  CHECK(max_diff(c, d) > 0.2);
}

TEST_CASE("diagonal phase sweep finds the closed-form extension") {
  BicyclicD3<Complex> b = bicyclic_d3(bicyclic_d3_standard_solution());
  std::vector<Vec<Complex>> basis = {b.orbits[0].vectors[0], b.orbits[1].vectors[0],
                                     b.orbits[2].vectors[0]};
  SweepResult r90 = diagonal_extension_sweep(basis, 90);
  CHECK(r90.min_max_violation < 1e-9);
  CHECK(std::abs(r90.best_xi - Complex{-1.0, 0.0}) < 1e-9);
  // Two phases tie at the minimum; the scan keeps the first grid hit.
  CHECK(std::abs(r90.best_zeta - std::polar(1.0, kPi / 3.0)) < 1e-9);

  SweepResult r180 = diagonal_extension_sweep(basis, 180);
  CHECK(std::abs(r180.best_xi - r90.best_xi) < 1e-9);
  CHECK(std::abs(r180.best_zeta - r90.best_zeta) < 1e-9);
}

TEST_CASE("sweep reports an honest floor for the real circulant triple") {
  double s3 = std::sqrt(3.0);
  std::vector<Vec<Complex>> basis = {
      Vec<Complex>({{1, 0}, {0, 0}, {0, 0}}),
      Vec<Complex>({{0.5, 0}, {s3 / 2.0, 0}, {0, 0}}),
      Vec<Complex>({{0.5, 0}, {1.0 / (2.0 * s3), 0}, {std::sqrt(2.0 / 3.0), 0}})};
  SweepResult r = diagonal_extension_sweep(basis, 120);
  CHECK(r.min_max_violation > 1e-3);
  CHECK(r.min_max_violation < 0.5);
}

TEST_CASE("sweep input validation") {
  BicyclicD3<Complex> b = bicyclic_d3(bicyclic_d3_standard_solution());
  std::vector<Vec<Complex>> basis = {b.orbits[0].vectors[0], b.orbits[1].vectors[0],
                                     b.orbits[2].vectors[0]};
  CHECK_THROWS_AS(diagonal_extension_sweep(basis, 89), std::invalid_argument);

  auto g = make_rng(47);
  CHECK_THROWS_AS(diagonal_extension_sweep(random_basis(g, 3), 90),
                  std::invalid_argument);

  std::vector<Vec<Complex>> two(basis.begin(), basis.begin() + 2);
  CHECK_THROWS_AS(diagonal_extension_sweep(two, 90), std::invalid_argument);

  // Circulant Gram but not upper triangular: reject rather than silently fix.
  auto circ = circulant_gram_basis(g, 3);
  CHECK_THROWS_AS(diagonal_extension_sweep(circ, 90), std::invalid_argument);
}
