#include "ercd/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace ercd {

namespace {

const Complex kI(0.0, 1.0);

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& k) {
  Eigen::Matrix2cd m;
  m << k.z(), Complex(k.x(), -k.y()), Complex(k.x(), k.y()), -k.z();
  return m;
}

CMat4 gamma0() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = -1.0;
  m(3, 3) = -1.0;
  return m;
}

}  // namespace

MomentumGrid::MomentumGrid(int count_, double dk_, double mass_)
    : count(count_), dk(dk_), mass(mass_) {
  if (count < 1 || count % 2 == 0)
    throw std::invalid_argument("MomentumGrid: per-axis count must be odd and positive");
  if (!(dk > 0.0)) throw std::invalid_argument("MomentumGrid: spacing must be positive");
  if (!(mass > 0.0)) throw std::invalid_argument("MomentumGrid: mass must be positive");
}

Eigen::Vector3d MomentumGrid::node_k(std::size_t idx) const {
  const int c = count / 2;
  const int iz = static_cast<int>(idx % count);
  const int iy = static_cast<int>((idx / count) % count);
  const int ix = static_cast<int>(idx / (static_cast<std::size_t>(count) * count));
  return {(ix - c) * dk, (iy - c) * dk, (iz - c) * dk};
}

MomentumSample MomentumGrid::sample(std::size_t idx) const { return {node_k(idx), mass}; }

std::size_t MomentumGrid::mirror(std::size_t idx) const {
  const int iz = static_cast<int>(idx % count);
  const int iy = static_cast<int>((idx / count) % count);
  const int ix = static_cast<int>(idx / (static_cast<std::size_t>(count) * count));
  const int last = count - 1;
  return (static_cast<std::size_t>(last - ix) * count + (last - iy)) * count + (last - iz);
}

SpinorFieldK SpinorFieldK::zero(const MomentumGrid& g, double time) {
  SpinorFieldK f;
  f.grid = g;
  f.time = time;
  f.pos.assign(g.size(), CVec4::Zero());
  f.neg.assign(g.size(), CVec4::Zero());
  return f;
}

double field_norm(const SpinorFieldK& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.pos.size(); ++i)
    s += f.pos[i].squaredNorm() + f.neg[i].squaredNorm();
  return std::sqrt(f.grid.weight() * s);
}

double field_norm_diff(const SpinorFieldK& a, const SpinorFieldK& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.pos.size(); ++i)
    s += (a.pos[i] - b.pos[i]).squaredNorm() + (a.neg[i] - b.neg[i]).squaredNorm();
  return std::sqrt(a.grid.weight() * s);
}

double field_max_diff(const SpinorFieldK& a, const SpinorFieldK& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.pos.size(); ++i) {
    m = std::max(m, (a.pos[i] - b.pos[i]).norm());
    m = std::max(m, (a.neg[i] - b.neg[i]).norm());
  }
  return m;
}

SpinorFieldK apply_field(const RLinOp& op, const SpinorFieldK& f) {
  SpinorFieldK out = f;
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    out.pos[i] = op.linear * f.pos[i] + op.antilinear * f.neg[i].conjugate();
    out.neg[i] = op.linear * f.neg[i] + op.antilinear * f.pos[i].conjugate();
  }
  return out;
}

CMat4 dirac_hamiltonian(const MomentumSample& s) {
  const Eigen::Matrix2cd sk = pauli_dot(s.k);
  CMat4 h = CMat4::Zero();
  h.block<2, 2>(0, 0) = s.m * Eigen::Matrix2cd::Identity();
  h.block<2, 2>(1 * 2, 1 * 2) = -s.m * Eigen::Matrix2cd::Identity();
  h.block<2, 2>(0, 2) = sk;
  h.block<2, 2>(2, 0) = sk;
  return h;
}

namespace {

CMat4 v_mat(const MomentumSample& s, double sign) {
  const double w = omega(s);
  const double n = 1.0 / std::sqrt(2.0 * w * (w + s.m));
  const Eigen::Matrix2cd sk = pauli_dot(s.k);
  CMat4 v = CMat4::Zero();
  v.block<2, 2>(0, 0) = (w + s.m) * Eigen::Matrix2cd::Identity();
  v.block<2, 2>(2, 2) = (w + s.m) * Eigen::Matrix2cd::Identity();
  v.block<2, 2>(0, 2) = sign * sk;
  v.block<2, 2>(2, 0) = -sign * sk;
  return n * v;
}

}  // namespace

CMat4 v_plus(const MomentumSample& s) { return v_mat(s, -1.0); }
CMat4 v_minus(const MomentumSample& s) { return v_mat(s, 1.0); }

std::array<CVec4, 4> dirac_spinors(const MomentumSample& s) {
  const double w = omega(s);
  const double n = 1.0 / std::sqrt(2.0 * w * (w + s.m));
  const Eigen::Matrix2cd sk = pauli_dot(s.k);
  std::array<CVec4, 4> out;
  for (int r = 0; r < 2; ++r) {
    Eigen::Vector2cd d = Eigen::Vector2cd::Zero();
    d(r) = 1.0;
    CVec4 vm, vp;
    vm.head<2>() = (w + s.m) * d;
    vm.tail<2>() = sk * d;
    vp.head<2>() = sk * d;
    vp.tail<2>() = (w + s.m) * d;
    out[r] = n * vm;
    out[2 + r] = n * vp;
  }
  return out;
}

CMat4 fw_propagator(const MomentumSample& s, double t) {
  const double w = omega(s);
  return std::cos(w * t) * CMat4::Identity() - kI * std::sin(w * t) * gamma0();
}

CMat4 dirac_propagator(const MomentumSample& s, double t) {
  const double w = omega(s);
  // H^2 = w^2, so exp(-iHt) = cos(wt) - i sin(wt) H / w.
  return std::cos(w * t) * CMat4::Identity() -
         kI * (std::sin(w * t) / w) * dirac_hamiltonian(s);
}

SpinorFieldK fw_propagate(const SpinorFieldK& f, double t) {
  SpinorFieldK out = f;
  out.time = f.time + t;
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    const CMat4 u = fw_propagator(f.grid.sample(i), t);
    out.pos[i] = u * f.pos[i];
    out.neg[i] = u * f.neg[i];
  }
  return out;
}

SpinorFieldK dirac_propagate(const SpinorFieldK& f, double t) {
  SpinorFieldK out = f;
  out.time = f.time + t;
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    const MomentumSample s = f.grid.sample(i);
    const MomentumSample sm(-s.k, s.m);
    out.pos[i] = dirac_propagator(s, t) * f.pos[i];
    out.neg[i] = dirac_propagator(sm, t) * f.neg[i];
  }
  return out;
}

SpinorFieldK rk4_propagate(const SpinorFieldK& f, EqKind kind, double t, int steps) {
  if (steps < 1) throw std::invalid_argument("rk4_propagate: steps must be >= 1");
  SpinorFieldK out = f;
  out.time = f.time + t;
  const double h = t / steps;
  const CMat4 g0 = gamma0();
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    const MomentumSample s = f.grid.sample(i);
    const double w = omega(s);
    CMat4 gen_pos, gen_neg;
    if (kind == EqKind::fw) {
      gen_pos = -kI * w * g0;
      gen_neg = gen_pos;
    } else {
      gen_pos = -kI * dirac_hamiltonian(s);
      gen_neg = -kI * dirac_hamiltonian(MomentumSample(-s.k, s.m));
    }
    auto step = [&](const CMat4& gen, CVec4 v) {
      for (int n = 0; n < steps; ++n) {
        const CVec4 k1 = gen * v;
        const CVec4 k2 = gen * (v + 0.5 * h * k1);
        const CVec4 k3 = gen * (v + 0.5 * h * k2);
        const CVec4 k4 = gen * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      return v;
    };
    out.pos[i] = step(gen_pos, f.pos[i]);
    out.neg[i] = step(gen_neg, f.neg[i]);
  }
  return out;
}

namespace {

SpinorFieldK transform(const SpinorFieldK& f, bool forward) {
  SpinorFieldK out = f;
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    const MomentumSample s = f.grid.sample(i);
    const MomentumSample sm(-s.k, s.m);
    if (forward) {
      out.pos[i] = v_plus(s) * f.pos[i];
      out.neg[i] = v_plus(sm) * f.neg[i];
    } else {
      out.pos[i] = v_minus(s) * f.pos[i];
      out.neg[i] = v_minus(sm) * f.neg[i];
    }
  }
  return out;
}

}  // namespace

SpinorFieldK to_dirac(const SpinorFieldK& f) { return transform(f, true); }

SpinorFieldK to_fw(const SpinorFieldK& f) { return transform(f, false); }

RLinOp charge_conj_v() {
  CMat4 l = CMat4::Zero();
  l(0, 0) = 1.0;
  l(1, 1) = 1.0;
  CMat4 a = CMat4::Zero();
  a(2, 2) = 1.0;
  a(3, 3) = 1.0;
  return {l, a};
}

}  // namespace ercd
