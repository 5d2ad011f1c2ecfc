#include <doctest.h>

#include <cmath>
#include <map>

#include "ercd/bosonic.hpp"
#include "ercd/charges.hpp"

using namespace ercd;

namespace {

// 3x3x3 grid; single unit amplitude planted at the center node.
AmplitudeSet point_amp(AmpKind kind, int slot) {
  const MomentumGrid g(3, 0.5, 1.0);
  AmplitudeSet a = AmplitudeSet::zero(g, kind);
  a.amp[13](slot) = 1.0;
  return a;
}

}  // namespace

TEST_CASE("spin families have the documented matrix forms") {
  // Third component spectra distinguish the two fermionic conventions: the
  // raised-branch slots flip sign between them.
  const RLinOp field3 = spin_op(SpinChoice::fermi_field, 3);
  const RLinOp qm3 = spin_op(SpinChoice::fermi_qm, 3);
  CMat4 d_field = CMat4::Zero();
  d_field.diagonal() << 0.5, -0.5, 0.5, -0.5;
  CMat4 d_qm = CMat4::Zero();
  d_qm.diagonal() << 0.5, -0.5, -0.5, 0.5;
  CHECK(op_norm_diff(field3, RLinOp::from_linear(d_field)) <= 1e-15);
  CHECK(op_norm_diff(qm3, RLinOp::from_linear(d_qm)) <= 1e-15);

  // Second components agree between the fermionic conventions.
  CHECK(op_norm_diff(spin_op(SpinChoice::fermi_field, 2),
                     spin_op(SpinChoice::fermi_qm, 2)) <= 1e-15);

  // The bosonic family is the spin-(1,0) triple.
  const BreveSpin sp = build_breve_spin();
  for (int c = 1; c <= 3; ++c)
    CHECK(op_norm_diff(spin_op(SpinChoice::bose, c), sp.s[c - 1]) <= 1e-15);

  CHECK_THROWS_AS(spin_op(SpinChoice::bose, 0), std::invalid_argument);
  CHECK_THROWS_AS(spin_op(SpinChoice::bose, 4), std::invalid_argument);
}

TEST_CASE("charge column conjugates the raised-branch slots") {
  CVec4 stored;
  stored << Complex(1, 2), Complex(3, -1), Complex(0, 5), Complex(-2, 1);
  const CVec4 col = charge_column(stored);
  CHECK(col(0) == stored(0));
  CHECK(col(1) == stored(1));
  CHECK(col(2) == std::conj(stored(2)));
  CHECK(col(3) == std::conj(stored(3)));
}

TEST_CASE("point-amplitude charges match hand-computed values") {
  const double w = 0.125;  // quadrature weight of the 0.5-spaced grid

  // First slot / third component: +w/2 in the field convention.
  const Complex q1 = charge(point_amp(AmpKind::fermionic, 0), SpinChoice::fermi_field, 3);
  CHECK(std::abs(q1 - Complex(0.5 * w, 0)) <= 1e-15);

  // Fourth slot: -w/2 in the field convention, +w/2 in the other one.
  const Complex q4f = charge(point_amp(AmpKind::fermionic, 3), SpinChoice::fermi_field, 3);
  const Complex q4q = charge(point_amp(AmpKind::fermionic, 3), SpinChoice::fermi_qm, 3);
  CHECK(std::abs(q4f - Complex(-0.5 * w, 0)) <= 1e-15);
  CHECK(std::abs(q4q - Complex(0.5 * w, 0)) <= 1e-15);

  // Bosonic family, first slot, third component: -i w (antisymmetric value
  // of an anti-Hermitian generator).
  const Complex qb = charge(point_amp(AmpKind::bosonic_b, 0), SpinChoice::bose, 3);
  CHECK(std::abs(qb - Complex(0, -w)) <= 1e-15);

  // The fourth bosonic slot carries no spin charge in any component.
  for (int c = 1; c <= 3; ++c)
    CHECK(std::abs(charge(point_amp(AmpKind::bosonic_b, 3), SpinChoice::bose, c)) <=
          1e-15);
}

TEST_CASE("bosonic charges accept either bosonic coordinate kind") {
  const MomentumGrid g(3, 0.5, 1.0);
  const AmplitudeSet b = random_amplitudes(g, AmpKind::bosonic_b, 3);
  const AmplitudeSet xi = xi_from_b(b);
  for (int c = 1; c <= 3; ++c)
    CHECK(std::abs(charge(b, SpinChoice::bose, c) - charge(xi, SpinChoice::bose, c)) <=
          1e-13);
  CHECK_THROWS_AS(charge(b, SpinChoice::fermi_field, 3), std::invalid_argument);
  CHECK_THROWS_AS(
      charge(random_amplitudes(g, AmpKind::fermionic, 3), SpinChoice::bose, 3),
      std::invalid_argument);
}

TEST_CASE("charges are conserved along the evolution") {
  const MomentumGrid g(5, 0.5, 1.0);
  const std::vector<double> times = {0.0, 0.5, 1.0, 2.5, 10.0};

  for (SpinChoice choice :
       {SpinChoice::fermi_field, SpinChoice::fermi_qm, SpinChoice::bose}) {
    const AmpKind kind =
        choice == SpinChoice::bose ? AmpKind::bosonic_b : AmpKind::fermionic;
    const AmplitudeSet amps = random_amplitudes(g, kind, 2024);
    const auto reports = conservation_sweep(amps, choice, times);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
      CHECK(r.times == times);
      CHECK(r.values.size() == times.size());
      CHECK(r.max_drift <= 1e-10);
    }
  }
}

TEST_CASE("charge sums are bit-reproducible") {
  const MomentumGrid g(5, 0.5, 1.0);
  const AmplitudeSet amps = random_amplitudes(g, AmpKind::fermionic, 99);
  const Complex q1 = charge(amps, SpinChoice::fermi_field, 2);
  const Complex q2 = charge(amps, SpinChoice::fermi_field, 2);
  CHECK(q1.real() == q2.real());
  CHECK(q1.imag() == q2.imag());
}

TEST_CASE("conserved-quantity tally covers both families completely") {
  const auto rows = charge_total_count_report();
  CHECK(rows.size() == 44);

  std::map<std::string, int> family_count;
  std::map<std::string, int> status_count;
  for (const auto& r : rows) {
    family_count[r.family]++;
    status_count[r.status]++;
    CHECK_FALSE(r.name.empty());
    if (r.status == "out-of-scope") CHECK_FALSE(r.note.empty());
  }
  CHECK(family_count["fermionic"] == 22);
  CHECK(family_count["bosonic"] == 22);
  CHECK(status_count["charge-computed"] == 6);
  CHECK(status_count["generator-verified"] == 14);
  CHECK(status_count["out-of-scope"] == 24);
}

TEST_CASE("negative control: a tampered evolution breaks conservation") {
  const MomentumGrid g(3, 0.5, 1.0);
  AmplitudeSet amps = random_amplitudes(g, AmpKind::fermionic, 5);
  const Complex before = charge(amps, SpinChoice::fermi_field, 1);
  // Corrupt one amplitude as a stand-in for a non-unitary evolution step.
  amps.amp[0](0) += Complex(0.1, 0.0);
  const Complex after = charge(amps, SpinChoice::fermi_field, 1);
  CHECK(std::abs(after - before) >= 1e-4);
}
