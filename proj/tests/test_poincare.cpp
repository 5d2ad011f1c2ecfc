#include <doctest.h>

#include <cmath>
#include <string>

#include "ercd/poincare.hpp"

using namespace ercd;

namespace {

const MomentumGrid& grid43() {
  static const MomentumGrid g(43, 0.5, 1.0);
  return g;
}

const SpinorFieldK& probe() {
  static const SpinorFieldK f = make_test_field(grid43(), 1, 0.0);
  return f;
}

void axpy(SpinorFieldK& acc, double c, const SpinorFieldK& x) {
  for (std::size_t i = 0; i < acc.pos.size(); ++i) {
    acc.pos[i] += c * x.pos[i];
    acc.neg[i] += c * x.neg[i];
  }
}

SpinorFieldK scaled(const SpinorFieldK& f, double c) {
  SpinorFieldK out = f;
  for (std::size_t i = 0; i < out.pos.size(); ++i) {
    out.pos[i] *= c;
    out.neg[i] *= c;
  }
  return out;
}

// || [a,b]f - recorded combination f || / ||f||, built from the public
// one-generator entry point. The smoothness gate is absolute, so nesting
// public calls requires the intermediate field to stay below it; the
// residual is relative, so shrinking the probe leaves it unchanged.
double bracket_residual(GeneratorId a, GeneratorId b, const SpinorFieldK& f0) {
  const SpinorFieldK f = scaled(f0, 1e-4);
  SpinorFieldK lhs = apply_generator(a, apply_generator(b, f));
  axpy(lhs, -1.0, apply_generator(b, apply_generator(a, f)));
  for (const StructureTerm& t : structure_bracket(a, b))
    axpy(lhs, -t.coeff, apply_generator(t.gid, f));
  return field_norm(lhs) / field_norm(f);
}

}  // namespace

TEST_CASE("generator naming and derivative classification") {
  CHECK(std::string(generator_name(GeneratorId::p0)) == "p0");
  CHECK(std::string(generator_name(GeneratorId::j23)) == "j23");
  CHECK(std::string(generator_name(GeneratorId::j03)) == "j03");
  for (GeneratorId g : {GeneratorId::p0, GeneratorId::p1, GeneratorId::p2, GeneratorId::p3})
    CHECK_FALSE(generator_needs_derivative(g));
  for (GeneratorId g : {GeneratorId::j23, GeneratorId::j31, GeneratorId::j12,
                        GeneratorId::j01, GeneratorId::j02, GeneratorId::j03})
    CHECK(generator_needs_derivative(g));
}

TEST_CASE("recorded structure table: spot values") {
  CHECK(bracket_description(GeneratorId::j23, GeneratorId::j31) == "[j23,j31] = j12");
  CHECK(bracket_description(GeneratorId::p1, GeneratorId::j01) == "[p1,j01] = p0");
  CHECK(bracket_description(GeneratorId::j01, GeneratorId::j02) == "[j01,j02] = -j12");
  CHECK(bracket_description(GeneratorId::j23, GeneratorId::p2) == "[j23,p2] = p3");
  CHECK(bracket_description(GeneratorId::p0, GeneratorId::j01) == "[p0,j01] = p1");
  CHECK(bracket_description(GeneratorId::p0, GeneratorId::j23) == "[p0,j23] = 0");
  CHECK(bracket_description(GeneratorId::p1, GeneratorId::p2) == "[p1,p2] = 0");
  CHECK(bracket_description(GeneratorId::p2, GeneratorId::j02) == "[p2,j02] = p0");
}

TEST_CASE("recorded structure table: antisymmetry") {
  const auto gens = all_generators();
  for (GeneratorId a : gens)
    for (GeneratorId b : gens) {
      const auto ab = structure_bracket(a, b);
      const auto ba = structure_bracket(b, a);
      REQUIRE(ab.size() == ba.size());
      for (std::size_t i = 0; i < ab.size(); ++i) {
        CHECK(ab[i].gid == ba[i].gid);
        CHECK(ab[i].coeff == doctest::Approx(-ba[i].coeff));
      }
    }
}

TEST_CASE("recorded structure table is exactly self-consistent") {
  const auto rows = check_table_jacobi();
  CHECK(rows.size() == 120);
  CHECK(all_pass(rows));
  CHECK(max_residual(rows) == 0.0);
}

TEST_CASE("derivative matrices are cached and schemes differ") {
  const Eigen::MatrixXd& a = diff_matrix(9, 0.5, DerivScheme::spectral);
  const Eigen::MatrixXd& b = diff_matrix(9, 0.5, DerivScheme::spectral);
  CHECK(&a == &b);
  const Eigen::MatrixXd& c = diff_matrix(9, 0.5, DerivScheme::stencil4);
  CHECK((a - c).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("trigonometric derivative is exact on resolved periodic modes") {
  const MomentumGrid g(9, 0.5, 1.0);
  const double period = 9 * 0.5;
  SpinorFieldK f = SpinorFieldK::zero(g, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double kz = g.node_k(i).z();
    f.pos[i](0) = std::sin(4.0 * M_PI * kz / period);
    f.neg[i](2) = std::cos(2.0 * M_PI * kz / period);
  }
  const SpinorFieldK d = axis_derivative(f, 2, DerivScheme::spectral);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double kz = g.node_k(i).z();
    const double expect_pos = (4.0 * M_PI / period) * std::cos(4.0 * M_PI * kz / period);
    const double expect_neg = -(2.0 * M_PI / period) * std::sin(2.0 * M_PI * kz / period);
    worst = std::max(worst, std::abs(d.pos[i](0).real() - expect_pos));
    worst = std::max(worst, std::abs(d.neg[i](2).real() - expect_neg));
    worst = std::max(worst, std::abs(d.pos[i](0).imag()));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("stencil derivative is exact on cubic polynomials") {
  const MomentumGrid g(9, 0.5, 1.0);
  SpinorFieldK f = SpinorFieldK::zero(g, 0.0);
  auto poly = [](double k) { return k * k * k - 2.0 * k * k + 0.5 * k; };
  auto dpoly = [](double k) { return 3.0 * k * k - 4.0 * k + 0.5; };
  for (std::size_t i = 0; i < g.size(); ++i) f.pos[i](1) = poly(g.node_k(i).x());
  const SpinorFieldK d = axis_derivative(f, 0, DerivScheme::stencil4);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(d.pos[i](1) - Complex(dpoly(g.node_k(i).x()), 0)));
  CHECK(worst <= 1e-11);
}

TEST_CASE("test profile is deterministic, smooth at the boundary, and guarded") {
  const SpinorFieldK a = make_test_field(grid43(), 5, 0.0);
  const SpinorFieldK b = make_test_field(grid43(), 5, 0.0);
  const SpinorFieldK c = make_test_field(grid43(), 6, 0.0);
  CHECK(field_max_diff(a, b) == 0.0);
  CHECK(field_max_diff(a, c) > 1e-3);
  CHECK(boundary_magnitude(a) <= 1e-8);
  CHECK(field_norm(a) > 0.1);
  CHECK_THROWS_AS(make_test_field(MomentumGrid(3, 0.5, 1.0), 1), std::invalid_argument);
}

TEST_CASE("time-translation generator is the diagonal energy multiplication") {
  const MomentumGrid g(5, 0.5, 1.0);
  SpinorFieldK f = SpinorFieldK::zero(g, 0.0);
  const std::size_t idx = 37;
  f.pos[idx](0) = 1.0;
  f.neg[idx](2) = 1.0;
  const double w = omega(g.sample(idx));
  const SpinorFieldK out = apply_generator(GeneratorId::p0, f);
  // gamma0 weights the upper slots with +1 and the lower with -1.
  CHECK(std::abs(out.pos[idx](0) - Complex(0, -w)) <= 1e-14);
  CHECK(std::abs(out.neg[idx](2) - Complex(0, w)) <= 1e-14);
  CHECK(out.time == f.time);
}

TEST_CASE("momentum generators are branch-signed multiplications") {
  const MomentumGrid g(5, 0.5, 1.0);
  SpinorFieldK f = SpinorFieldK::zero(g, 0.0);
  const std::size_t idx = 6;  // k = (-1, -0.5, -0.5)
  f.pos[idx](3) = 1.0;
  f.neg[idx](3) = 1.0;
  const double k2 = g.node_k(idx).y();
  REQUIRE(k2 != 0.0);
  const SpinorFieldK out = apply_generator(GeneratorId::p2, f);
  CHECK(std::abs(out.pos[idx](3) - Complex(0, -k2)) <= 1e-15);
  CHECK(std::abs(out.neg[idx](3) - Complex(0, k2)) <= 1e-15);
}

TEST_CASE("rough fields are rejected by derivative-bearing generators only") {
  const MomentumGrid g(9, 0.5, 1.0);
  SpinorFieldK rough = SpinorFieldK::zero(g, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) rough.pos[i](0) = 1.0;
  CHECK(boundary_magnitude(rough) >= 1e-2);
  CHECK_THROWS_AS(apply_generator(GeneratorId::j12, rough), std::invalid_argument);
  CHECK_THROWS_AS(apply_generator(GeneratorId::j01, rough), std::invalid_argument);
  CHECK_NOTHROW(apply_generator(GeneratorId::p0, rough));
  CHECK_NOTHROW(apply_generator(GeneratorId::p3, rough));
}

TEST_CASE("rotation about an axis annihilates a radial zero-spin profile") {
  const MomentumGrid& g = grid43();
  const double sigma = g.extent() / 7.0;
  SpinorFieldK f = SpinorFieldK::zero(g, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double gauss = std::exp(-g.node_k(i).squaredNorm() / (2.0 * sigma * sigma));
    f.pos[i](3) = gauss;  // fourth slot: annihilated by the multiplet spin
    f.neg[i](3) = gauss;
  }
  const SpinorFieldK out = apply_generator(GeneratorId::j12, f);
  CHECK(field_norm(out) / field_norm(f) <= 1e-10);
}

TEST_CASE("commutators on fields reproduce the recorded table") {
  // Multiplication-only pair: exact to rounding.
  CHECK(bracket_residual(GeneratorId::p1, GeneratorId::p2, probe()) <= 1e-12);
  // Rotation-rotation, rotation-translation, boost rows: derivative-bearing.
  CHECK(bracket_residual(GeneratorId::j23, GeneratorId::j31, probe()) <= 1e-6);
  CHECK(bracket_residual(GeneratorId::p1, GeneratorId::j01, probe()) <= 1e-6);
  CHECK(bracket_residual(GeneratorId::p0, GeneratorId::j01, probe()) <= 1e-6);
  CHECK(bracket_residual(GeneratorId::j01, GeneratorId::j02, probe()) <= 1e-6);
}

TEST_CASE("negative control: a wrong structure coefficient is detected") {
  // [j23,j31] = j12; check against -j12 instead and expect an O(1) residual.
  const SpinorFieldK f = scaled(probe(), 1e-4);
  SpinorFieldK lhs = apply_generator(GeneratorId::j23, apply_generator(GeneratorId::j31, f));
  axpy(lhs, -1.0, apply_generator(GeneratorId::j31, apply_generator(GeneratorId::j23, f)));
  axpy(lhs, 1.0, apply_generator(GeneratorId::j12, f));  // sign flipped on purpose
  CHECK(field_norm(lhs) / field_norm(f) >= 1e-2);
}

TEST_CASE("generators commute with the diagonal evolution") {
  CHECK(check_fw_commutation(GeneratorId::p0, probe(), 1.0) <= 1e-12);
  CHECK(check_fw_commutation(GeneratorId::p2, probe(), 1.0) <= 1e-12);
  CHECK(check_fw_commutation(GeneratorId::j23, probe(), 0.5) <= 1e-6);
  CHECK(check_fw_commutation(GeneratorId::j01, probe(), 0.5) <= 1e-6);
}

TEST_CASE("numerical double-commutator cancellation on a random triple") {
  const auto rows = check_field_jacobi(probe(), 1e-6, 1, 7);
  CHECK(rows.size() == 1);
  CHECK(all_pass(rows));
}

TEST_CASE("boost factor orderings coincide to rounding") {
  const MomentumGrid g(21, 0.5, 1.0);
  const SpinorFieldK f = make_test_field(g, 3, 0.0);
  CHECK(ordering_discrepancy(f, DerivScheme::spectral) <= 1e-14);
}

TEST_CASE("invariant operators take their stated values") {
  const CasimirResult c = casimir_check(probe());
  CHECK(c.c1_residual <= 1e-10);
  CHECK(c.c2_residual <= 1e-12);
}
