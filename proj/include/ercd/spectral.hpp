#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ercd/momentum.hpp"
#include "ercd/rlinear.hpp"

namespace ercd {

// Uniform cubic momentum grid, symmetric about k = 0 (odd per-axis count).
// Quadrature weight dk^3 per node. Node order: x index outermost, z fastest.
struct MomentumGrid {
  int count = 0;
  double dk = 0.0;
  double mass = 0.0;

  MomentumGrid() = default;
  MomentumGrid(int count_, double dk_, double mass_);

  std::size_t size() const { return static_cast<std::size_t>(count) * count * count; }
  double weight() const { return dk * dk * dk; }
  double extent() const { return 0.5 * (count - 1) * dk; }

  Eigen::Vector3d node_k(std::size_t idx) const;
  MomentumSample sample(std::size_t idx) const;
  // Index of the node at -k. Exists because the grid is symmetric about 0.
  std::size_t mirror(std::size_t idx) const;

  bool operator==(const MomentumGrid& o) const {
    return count == o.count && dk == o.dk && mass == o.mass;
  }
};

// Momentum-space snapshot of a spinor field at a fixed time. Node values are
// split into the two frequency branches; `pos` multiplies the decaying
// exponential mode at +k, `neg` the raised one.
struct SpinorFieldK {
  MomentumGrid grid;
  double time = 0.0;
  std::vector<CVec4> pos;
  std::vector<CVec4> neg;

  static SpinorFieldK zero(const MomentumGrid& g, double time = 0.0);
};

// L2 norm under the grid quadrature, both branches.
double field_norm(const SpinorFieldK& f);
double field_norm_diff(const SpinorFieldK& a, const SpinorFieldK& b);
// Max Euclidean node-value difference over both branches.
double field_max_diff(const SpinorFieldK& a, const SpinorFieldK& b);

// Pointwise action of a real-linear operator on the two-branch field.
// Conjugation swaps branch content:
//   pos' = L pos + A conj(neg),  neg' = L neg + A conj(pos).
SpinorFieldK apply_field(const RLinOp& op, const SpinorFieldK& f);

CMat4 dirac_hamiltonian(const MomentumSample& s);

// Spectral transform pair: V± = (∓ gamma·k + w + m) / sqrt(2 w (w + m)).
// V+ V- = id, V+ (gamma^0 w) V- = H(k), and V+ maps the canonical basis
// columns d1, d2 to the decaying-branch unit spinors at k.
CMat4 v_plus(const MomentumSample& s);
CMat4 v_minus(const MomentumSample& s);

// Unit spinors (v1-, v2-, v1+, v2+) at the stored k, normalized by
// 1/sqrt(2 w (w + m)). The "+" pair is an eigenbasis of H at the mirrored
// momentum, matching the raised-branch pairing.
std::array<CVec4, 4> dirac_spinors(const MomentumSample& s);

CMat4 fw_propagator(const MomentumSample& s, double t);     // exp(-i gamma^0 w t)
CMat4 dirac_propagator(const MomentumSample& s, double t);  // exp(-i H(k) t)

SpinorFieldK fw_propagate(const SpinorFieldK& f, double t);
// Branch-aware: H(k) on the decaying branch, H(-k) on the raised branch.
SpinorFieldK dirac_propagate(const SpinorFieldK& f, double t);

enum class EqKind { fw, dirac };

// Classical 4th-order time stepping of the same evolution; convergence
// oracle for the closed-form propagators.
SpinorFieldK rk4_propagate(const SpinorFieldK& f, EqKind kind, double t, int steps);

// Nodewise V+ (branch-aware) and its inverse.
SpinorFieldK to_dirac(const SpinorFieldK& f);
SpinorFieldK to_fw(const SpinorFieldK& f);

// The involutive block operator diag(id, conj) appearing in the spectral
// transform's definition; kept as a named constant.
RLinOp charge_conj_v();

}  // namespace ercd
