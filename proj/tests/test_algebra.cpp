#include <doctest.h>

#include "ercd/algebra.hpp"

using namespace ercd;

namespace {

const GammaBasis& gammas() {
  static const GammaBasis g = build_gammas();
  return g;
}

const SpinTensor& spins() {
  static const SpinTensor t = build_spin_tensor(gammas());
  return t;
}

CMat4 zero4() { return CMat4::Zero(); }

}  // namespace

TEST_CASE("base orts have the standard block form") {
  const GammaBasis& g = gammas();

  CMat4 g0 = zero4();
  g0(0, 0) = 1.0;
  g0(1, 1) = 1.0;
  g0(2, 2) = -1.0;
  g0(3, 3) = -1.0;
  CHECK(op_norm_diff(g.gamma[0], RLinOp::from_linear(g0)) == 0.0);

  // First spatial ort: off-diagonal first Pauli blocks.
  CMat4 g1 = zero4();
  g1(0, 3) = 1.0;
  g1(1, 2) = 1.0;
  g1(2, 1) = -1.0;
  g1(3, 0) = -1.0;
  CHECK(op_norm_diff(g.gamma[1], RLinOp::from_linear(g1)) == 0.0);

  // Conjugation ort: pure antilinear identity; imaginary ort: i * id.
  CHECK(op_norm_diff(g.conj, RLinOp::from_antilinear(CMat4::Identity())) == 0.0);
  CHECK(op_norm_diff(g.imag, RLinOp::from_linear(Complex(0, 1) * CMat4::Identity())) ==
        0.0);
}

TEST_CASE("composite orts match independently derived matrices") {
  const GammaBasis& g = gammas();

  // Product of the four base orts in order: constant off-diagonal blocks.
  CMat4 g4 = zero4();
  g4(0, 2) = Complex(0, -1);
  g4(1, 3) = Complex(0, -1);
  g4(2, 0) = Complex(0, -1);
  g4(3, 1) = Complex(0, -1);
  CHECK(op_norm_diff(g.gamma[4], RLinOp::from_linear(g4)) <= 1e-15);

  // Fifth ort: antilinear with real rotation blocks.
  CMat4 a5 = zero4();
  a5(0, 1) = 1.0;
  a5(1, 0) = -1.0;
  a5(2, 3) = 1.0;
  a5(3, 2) = -1.0;
  CHECK(op_norm_diff(g.gamma[5], RLinOp::from_antilinear(a5)) <= 1e-15);

  // Sixth ort: i times the fifth.
  CHECK(op_norm_diff(g.gamma[6], scale(Complex(0, 1), g.gamma[5])) <= 1e-15);
  CMat4 a6 = Complex(0, 1) * a5;
  CHECK(op_norm_diff(g.gamma[6], RLinOp::from_antilinear(a6)) <= 1e-15);

  // Seventh ort: i gamma0.
  CMat4 g7 = zero4();
  g7(0, 0) = Complex(0, 1);
  g7(1, 1) = Complex(0, 1);
  g7(2, 2) = Complex(0, -1);
  g7(3, 3) = Complex(0, -1);
  CHECK(op_norm_diff(g.gamma[7], RLinOp::from_linear(g7)) <= 1e-15);
}

TEST_CASE("each ort squares to minus the identity") {
  const GammaBasis& g = gammas();
  const RLinOp minus_id = RLinOp::from_linear(-CMat4::Identity());
  for (int a = 1; a <= 7; ++a)
    CHECK(op_norm_diff(compose(g.gamma[a], g.gamma[a]), minus_id) <= 1e-15);
}

TEST_CASE("all 28 anticommutation pairs close") {
  const auto rows = check_anticommutation(gammas(), 1e-12);
  CHECK(rows.size() == 28);
  CHECK(all_pass(rows));
  CHECK(max_residual(rows) <= 1e-12);
}

TEST_CASE("spin tensor entries") {
  const SpinTensor& t = spins();
  const GammaBasis& g = gammas();

  // Independently derived: half the product of the first two orts.
  CMat4 s12 = zero4();
  s12(0, 0) = Complex(0, -0.5);
  s12(1, 1) = Complex(0, 0.5);
  s12(2, 2) = Complex(0, -0.5);
  s12(3, 3) = Complex(0, 0.5);
  CHECK(op_norm_diff(t.s[1][2], RLinOp::from_linear(s12)) <= 1e-15);

  // Eighth-index rows are half-orts with antisymmetry.
  CHECK(op_norm_diff(t.s[3][8], scale(0.5, g.gamma[3])) <= 1e-15);
  CHECK(op_norm_diff(t.s[8][3], scale(-0.5, g.gamma[3])) <= 1e-15);

  // Anticommuting pairs: quarter-commutator equals half-product.
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b) {
      if (a == b) continue;
      CHECK(op_norm_diff(t.s[a][b], scale(0.5, compose(g.gamma[a], g.gamma[b]))) <=
            1e-15);
    }

  CHECK(op_norm_diff(t.unit, RLinOp::identity()) == 0.0);
}

TEST_CASE("so(8) commutation closes over every index quadruple") {
  const auto rows = check_so8(spins(), 1e-12);
  CHECK(rows.size() == 4096);
  CHECK(all_pass(rows));
  CHECK(max_residual(rows) <= 1e-12);
}

TEST_CASE("the 29 orts are linearly independent of rank exactly 29") {
  CHECK(ort_rank(spins(), 1e-8) == 29);
}

TEST_CASE("the rotation-block generators form the documented list") {
  const auto gens = so6_generators(spins());
  CHECK(gens.size() == 16);  // 15 generators plus the unit ort
  CHECK(op_norm_diff(gens.back(), RLinOp::identity()) == 0.0);
  CHECK(op_norm_diff(gens.front(), spins().s[1][2]) == 0.0);
}

TEST_CASE("diagonal-evolution invariance of the rotation-block generators") {
  const auto gens = so6_generators(spins());
  std::vector<std::string> names(gens.size(), "op");
  std::vector<MomentumSample> samples;
  samples.emplace_back(Eigen::Vector3d(0, 0, 0), 1.0);
  samples.emplace_back(Eigen::Vector3d(1, 2, 3), 1.0);
  samples.emplace_back(Eigen::Vector3d(-2, 0.5, 4), 0.7);
  const std::vector<double> times = {0.1, 1.0};
  const auto rows = check_fw_invariance(gens, names, samples, times, 1e-12);
  CHECK(rows.size() == gens.size() * samples.size() * times.size());
  CHECK(all_pass(rows));
}

TEST_CASE("negative control: a non-invariant ort fails the invariance check") {
  // The first spatial ort anticommutes with the diagonal one, so it cannot
  // commute with a generic diagonal evolution.
  std::vector<RLinOp> ops = {gammas().gamma[1]};
  std::vector<std::string> names = {"g1"};
  std::vector<MomentumSample> samples;
  samples.emplace_back(Eigen::Vector3d(1, 2, 3), 1.0);
  const auto rows = check_fw_invariance(ops, names, samples, {1.0}, 1e-12);
  CHECK(rows.size() == 1);
  CHECK_FALSE(rows[0].pass);
  CHECK(rows[0].residual >= 1e-2);
}

TEST_CASE("relation report plumbing") {
  const auto ok = make_relation("x", 1e-13, 1e-12);
  CHECK(ok.pass);
  const auto bad = make_relation("y", 1e-11, 1e-12);
  CHECK_FALSE(bad.pass);
  CHECK(max_residual({ok, bad}) == doctest::Approx(1e-11));
  CHECK_FALSE(all_pass({ok, bad}));
}
