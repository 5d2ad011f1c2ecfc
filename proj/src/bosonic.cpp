#include "ercd/bosonic.hpp"

#include <cmath>

namespace ercd {

namespace {

const Complex kI(0.0, 1.0);
const double kR2 = std::sqrt(2.0);

}  // namespace

WPair build_w() {
  const double h = 1.0 / kR2;
  CMat4 lw = CMat4::Zero();
  lw(0, 0) = 1.0;
  lw(2, 3) = h;
  lw(3, 3) = -h;
  CMat4 aw = CMat4::Zero();
  aw(1, 2) = kI;
  aw(2, 1) = -h;
  aw(3, 1) = -h;

  CMat4 lv = CMat4::Zero();
  lv(0, 0) = 1.0;
  lv(3, 2) = h;
  lv(3, 3) = -h;
  CMat4 av = CMat4::Zero();
  av(1, 2) = -h;
  av(1, 3) = -h;
  av(2, 1) = kI;

  return {{lw, aw}, {lv, av}};
}

BreveBasis build_breve_basis() {
  const double h = 1.0 / kR2;
  BreveBasis b;

  CMat4 g0 = CMat4::Zero();
  g0(0, 0) = 1.0;
  g0(1, 1) = -1.0;
  g0(2, 3) = 1.0;
  g0(3, 2) = 1.0;
  b.gamma[0] = RLinOp::from_linear(g0);

  CMat4 g1;
  g1 << 0, 0, 1, -1, 0, 0, kI, kI, -1, kI, 0, 0, 1, kI, 0, 0;
  b.gamma[1] = RLinOp::from_linear(h * g1);

  CMat4 g2;
  g2 << 0, 0, -kI, kI, 0, 0, -1, -1, -kI, 1, 0, 0, kI, 1, 0, 0;
  b.gamma[2] = RLinOp::from_linear(h * g2);

  CMat4 a3;
  a3 << 0, kI, 0, 0, -kI, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0;
  b.gamma[3] = RLinOp::from_antilinear(a3);

  CMat4 a4;
  a4 << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, kI, 0, 0, -kI, 0;
  b.gamma[4] = RLinOp::from_antilinear(a4);

  CMat4 g5;
  g5 << 0, 0, -1, -1, 0, 0, kI, -kI, 1, kI, 0, 0, 1, -kI, 0, 0;
  b.gamma[5] = RLinOp::from_linear(h * g5);

  CMat4 g6;
  g6 << 0, 0, -kI, -kI, 0, 0, 1, -1, -kI, -1, 0, 0, -kI, 1, 0, 0;
  b.gamma[6] = RLinOp::from_linear(h * g6);

  CMat4 g7 = CMat4::Zero();
  g7(0, 0) = kI;
  g7(1, 1) = kI;
  g7(2, 2) = -kI;
  g7(3, 3) = -kI;
  b.gamma[7] = RLinOp::from_linear(g7);

  CMat4 im = CMat4::Zero();
  im(0, 0) = kI;
  im(1, 1) = -kI;
  im(2, 3) = -kI;
  im(3, 2) = -kI;
  b.imag = RLinOp::from_linear(im);

  CMat4 ac = CMat4::Zero();
  ac(0, 0) = 1.0;
  ac(1, 1) = -1.0;
  ac(2, 2) = 1.0;
  ac(3, 3) = 1.0;
  b.conj = RLinOp::from_antilinear(ac);

  return b;
}

std::vector<RelationReport> check_w_identities(const WPair& wp, double tol) {
  std::vector<RelationReport> rows;
  rows.push_back(make_relation("w_winv", op_norm_diff(compose(wp.w, wp.w_inv), RLinOp::identity()), tol));
  rows.push_back(make_relation("winv_w", op_norm_diff(compose(wp.w_inv, wp.w), RLinOp::identity()), tol));
  // The real 8x8 picture of W must be orthogonal: R^T R = I.
  const Eigen::Matrix<double, 8, 8> r = to_real8(wp.w);
  const double ortho =
      (r.transpose() * r - Eigen::Matrix<double, 8, 8>::Identity()).cwiseAbs().maxCoeff();
  rows.push_back(make_relation("w_orthogonal", ortho, tol));
  return rows;
}

std::vector<RelationReport> check_conjugation(const WPair& wp, const GammaBasis& g,
                                              const BreveBasis& b, double tol) {
  std::vector<RelationReport> rows;
  auto conj = [&](const RLinOp& q) { return compose(compose(wp.w, q), wp.w_inv); };
  for (int a = 0; a <= 7; ++a) {
    rows.push_back(make_relation("conjugation(gamma" + std::to_string(a) + ")",
                                 op_norm_diff(conj(g.gamma[a]), b.gamma[a]), tol));
  }
  rows.push_back(make_relation("conjugation(imag)", op_norm_diff(conj(g.imag), b.imag), tol));
  rows.push_back(make_relation("conjugation(conj)", op_norm_diff(conj(g.conj), b.conj), tol));
  return rows;
}

BreveSpin build_breve_spin() {
  const double h = 1.0 / kR2;
  BreveSpin sp;

  CMat4 a1 = CMat4::Zero();
  a1(0, 2) = kI;
  a1(1, 2) = -1.0;
  a1(2, 0) = -kI;
  a1(2, 1) = 1.0;
  sp.s[0] = RLinOp::from_antilinear(h * a1);

  CMat4 a2 = CMat4::Zero();
  a2(0, 2) = 1.0;
  a2(1, 2) = -kI;
  a2(2, 0) = -1.0;
  a2(2, 1) = kI;
  sp.s[1] = RLinOp::from_antilinear(h * a2);

  CMat4 l3 = CMat4::Zero();
  l3(0, 0) = -kI;
  l3(1, 1) = kI;
  sp.s[2] = RLinOp::from_linear(l3);

  return sp;
}

BreveSpin build_breve_spin_composed(const BreveBasis& b) {
  BreveSpin sp;
  const RLinOp g0g2c = compose(compose(b.gamma[0], b.gamma[2]), b.conj);
  sp.s[0] = scale(0.5, sub(compose(b.gamma[2], b.gamma[3]), g0g2c));
  sp.s[1] = scale(0.5, add(compose(b.gamma[3], b.gamma[1]), compose(b.imag, g0g2c)));
  sp.s[2] = scale(0.5, sub(compose(b.gamma[1], b.gamma[2]), b.imag));
  return sp;
}

std::vector<RelationReport> check_su2_closure(const BreveSpin& sp, double tol) {
  std::vector<RelationReport> rows;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    rows.push_back(make_relation(
        "su2(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")",
        op_norm_diff(commutator(sp.s[a], sp.s[b]), sp.s[c]), tol));
  }
  RLinOp cas = RLinOp::zero();
  for (int a = 0; a < 3; ++a) cas = add(cas, compose(sp.s[a], sp.s[a]));
  CMat4 expect = CMat4::Zero();
  expect(0, 0) = -2.0;
  expect(1, 1) = -2.0;
  expect(2, 2) = -2.0;
  rows.push_back(make_relation("casimir", op_norm_diff(cas, RLinOp::from_linear(expect)), tol));
  return rows;
}

}  // namespace ercd
