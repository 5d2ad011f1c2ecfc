#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ercd/spectral.hpp"

namespace ercd {

// Which amplitude coordinates a set is expressed in.
//   fermionic : (a-_+, a-_-, a+_-, a+_+)
//   bosonic_b : (b+, b-, b0, b0_) = (b1, b2, b3, b4)
//   bosonic_xi: (xi1..xi4), the Cartesian-ort coefficients
enum class AmpKind { fermionic, bosonic_b, bosonic_xi };

const char* amp_kind_name(AmpKind k);
AmpKind amp_kind_from_name(const std::string& name);

// Four complex amplitudes per grid node, stored unconjugated; every
// conjugation demanded by a synthesis or charge formula is applied at the
// point of use. Node order matches MomentumGrid order.
struct AmplitudeSet {
  MomentumGrid grid;
  AmpKind kind = AmpKind::fermionic;
  std::vector<CVec4> amp;

  static AmplitudeSet zero(const MomentumGrid& g, AmpKind kind);
};

// Quadrature sum of squared amplitude norms (preserved by the unitary maps).
double amp_norm2(const AmplitudeSet& a);

// Nodewise 4x4 coordinate maps between the amplitude kinds. The xi<->b pair
// and the a<->b pair are mutual inverses; a_from_b is unitary.
CMat4 xi_from_b_matrix();
CMat4 b_from_xi_matrix();
CMat4 a_from_b_matrix();
CMat4 b_from_a_matrix();

AmplitudeSet xi_from_b(const AmplitudeSet& b);
AmplitudeSet b_from_xi(const AmplitudeSet& xi);
AmplitudeSet a_from_b(const AmplitudeSet& b);
AmplitudeSet b_from_a(const AmplitudeSet& a);

// Diagonal-mode synthesis: decaying branch a1*d1 + a2*d2, raised branch
// conj(a3)*d3 + conj(a4)*d4 at each node.
SpinorFieldK synth_fw_fermionic(const AmplitudeSet& a);

// Plane-wave spinor synthesis: decaying branch a1*v1- + a2*v2-, raised
// branch conj(a3)*v1+ + conj(a4)*v2+ (spinors at the node momentum).
// Equals the nodewise spectral transform of synth_fw_fermionic(a).
SpinorFieldK synth_dirac_fermionic(const AmplitudeSet& a);

// Bosonic synthesis accepts either bosonic kind: b input is first mapped to
// xi coordinates, then expanded over the Cartesian orts like the diagonal
// family (xi1, xi2 decaying; conj(xi3), conj(xi4) raised).
SpinorFieldK synth_fw_bosonic(const AmplitudeSet& b);

// Spinor-basis form of the bosonic family:
//   decaying: b1*v1- - (b3+b4)/sqrt2 * v2-
//   raised:   i*conj(b2)*v1+ + (conj(b3)-conj(b4))/sqrt2 * v2+
SpinorFieldK synth_dirac_bosonic(const AmplitudeSet& b);

// Inverse of synthesis: branch-wise orthonormal projection onto the
// Cartesian orts (picture fw) or the unit spinor pairs (picture dirac),
// then conversion into the requested amplitude kind.
AmplitudeSet analyze(const SpinorFieldK& field, AmpKind kind, EqKind picture);

// Max node-value distance between the field propagated by t (closed-form
// propagator of the given picture) and the field with the analytic scalar
// phases exp(-iwt) / exp(+iwt) applied to the decaying / raised branches.
// Zero (to rounding) exactly when the snapshot is a solution of the picture
// equation with the stated branch split.
double equation_residual(const SpinorFieldK& f, EqKind which, double t);

// Deterministic standard-normal amplitudes (fixed generator and mapping, so
// byte-identical across platforms for a given seed).
AmplitudeSet random_amplitudes(const MomentumGrid& g, AmpKind kind, std::uint64_t seed);

// JSON round trip. Layout:
//   {"grid": {"counts":[n,n,n], "dk":d, "mass":m}, "kind": "...",
//    "nodes": [{"k":[kx,ky,kz], "amp":[[re,im],[re,im],[re,im],[re,im]]}, ...]}
// Writing then reading reproduces the set bit-exactly.
std::string amplitudes_to_json(const AmplitudeSet& a);
AmplitudeSet amplitudes_from_json(const std::string& text);

// Field layout is the same with "time" and per-node "pos"/"neg" arrays.
std::string field_to_json(const SpinorFieldK& f);
SpinorFieldK field_from_json(const std::string& text);

}  // namespace ercd
