#include "ercd/algebra.hpp"

#include <cmath>

#include "ercd/parallel.hpp"

namespace ercd {

namespace {

const Complex kI(0.0, 1.0);

CMat4 gamma0_matrix() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = -1.0;
  m(3, 3) = -1.0;
  return m;
}

// Off-diagonal Pauli blocks: gamma^j = [[0, s^j], [-s^j, 0]].
CMat4 gamma_spatial(int j) {
  Eigen::Matrix2cd s;
  switch (j) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  CMat4 m = CMat4::Zero();
  m.block<2, 2>(0, 2) = s;
  m.block<2, 2>(2, 0) = -s;
  return m;
}

}  // namespace

RelationReport make_relation(const std::string& id, double residual, double tol) {
  return {id, residual, tol, residual <= tol};
}

bool all_pass(const std::vector<RelationReport>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

double max_residual(const std::vector<RelationReport>& rows) {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.residual);
  return m;
}

GammaBasis build_gammas() {
  GammaBasis g;
  g.conj = RLinOp::from_antilinear(CMat4::Identity());
  g.imag = RLinOp::from_linear(kI * CMat4::Identity());
  g.gamma[0] = RLinOp::from_linear(gamma0_matrix());
  for (int j = 1; j <= 3; ++j) g.gamma[j] = RLinOp::from_linear(gamma_spatial(j));
  g.gamma[4] = compose(compose(g.gamma[0], g.gamma[1]), compose(g.gamma[2], g.gamma[3]));
  g.gamma[5] = compose(compose(g.gamma[1], g.gamma[3]), g.conj);
  g.gamma[6] = compose(g.imag, g.gamma[5]);
  g.gamma[7] = compose(g.imag, g.gamma[0]);
  return g;
}

std::vector<RelationReport> check_anticommutation(const GammaBasis& g, double tol) {
  std::vector<RelationReport> rows;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a; b <= 7; ++b) {
      const RLinOp lhs = anticommutator(g.gamma[a], g.gamma[b]);
      const RLinOp rhs = scale(a == b ? -2.0 : 0.0, RLinOp::identity());
      rows.push_back(make_relation("anticomm(" + std::to_string(a) + "," + std::to_string(b) + ")",
                                   op_norm_diff(lhs, rhs), tol));
    }
  }
  return rows;
}

SpinTensor build_spin_tensor(const GammaBasis& g) {
  SpinTensor t;
  t.unit = RLinOp::identity();
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) t.s[a][b] = RLinOp::zero();
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 7; ++b) {
      t.s[a][b] = scale(0.25, commutator(g.gamma[a], g.gamma[b]));
    }
    t.s[a][8] = scale(0.5, g.gamma[a]);
    t.s[8][a] = scale(-0.5, g.gamma[a]);
  }
  return t;
}

std::vector<RelationReport> check_so8(const SpinTensor& t, double tol) {
  std::vector<RelationReport> rows(8 * 8 * 8 * 8);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int a = static_cast<int>(idx / 512) % 8 + 1;
    const int b = static_cast<int>(idx / 64) % 8 + 1;
    const int c = static_cast<int>(idx / 8) % 8 + 1;
    const int d = static_cast<int>(idx) % 8 + 1;
    const RLinOp lhs = commutator(t.s[a][b], t.s[c][d]);
    RLinOp rhs = RLinOp::zero();
    if (a == c) rhs = add(rhs, t.s[b][d]);
    if (c == b) rhs = add(rhs, t.s[d][a]);
    if (b == d) rhs = add(rhs, t.s[a][c]);
    if (d == a) rhs = add(rhs, t.s[c][b]);
    rows[idx] = make_relation("so8(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + "," + std::to_string(d) + ")",
                              op_norm_diff(lhs, rhs), tol);
  });
  return rows;
}

int ort_rank(const SpinTensor& t, double cutoff) {
  Eigen::MatrixXd m(29, 64);
  int row = 0;
  auto put = [&](const RLinOp& op) {
    const RMat8 r8 = to_real8(op);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m(row, i * 8 + j) = r8(i, j);
    ++row;
  };
  put(t.unit);
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) put(t.s[a][b]);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  return rank;
}

std::vector<RLinOp> so6_generators(const SpinTensor& t) {
  std::vector<RLinOp> ops;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) ops.push_back(t.s[a][b]);
  ops.push_back(t.unit);
  return ops;
}

std::vector<RelationReport> check_fw_invariance(const std::vector<RLinOp>& ops,
                                                const std::vector<std::string>& op_names,
                                                const std::vector<MomentumSample>& samples,
                                                const std::vector<double>& times,
                                                double tol) {
  std::vector<RelationReport> rows;
  const CMat4 g0 = gamma0_matrix();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (const auto& s : samples) {
      const double w = omega(s);
      for (double t : times) {
        // exp(-i gamma^0 w t) = cos(wt) - i sin(wt) gamma^0, since (gamma^0)^2 = 1.
        const CMat4 u = std::cos(w * t) * CMat4::Identity() - kI * std::sin(w * t) * g0;
        const RLinOp prop = RLinOp::from_linear(u);
        const double res = op_norm_diff(compose(ops[i], prop), compose(prop, ops[i]));
        rows.push_back(make_relation("fw_invariance(" + op_names[i] + ",|k|=" +
                                         std::to_string(s.k.norm()) + ",t=" + std::to_string(t) +
                                         ")",
                                     res, tol));
      }
    }
  }
  return rows;
}

}  // namespace ercd
