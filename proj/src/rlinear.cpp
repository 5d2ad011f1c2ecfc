#include "ercd/rlinear.hpp"

namespace ercd {

RLinOp RLinOp::zero() { return {CMat4::Zero(), CMat4::Zero()}; }

RLinOp RLinOp::identity() { return {CMat4::Identity(), CMat4::Zero()}; }

RLinOp RLinOp::from_linear(const CMat4& l) { return {l, CMat4::Zero()}; }

RLinOp RLinOp::from_antilinear(const CMat4& a) { return {CMat4::Zero(), a}; }

CVec4 apply(const RLinOp& op, const CVec4& v) {
  return op.linear * v + op.antilinear * v.conjugate();
}

RLinOp compose(const RLinOp& a, const RLinOp& b) {
  return {a.linear * b.linear + a.antilinear * b.antilinear.conjugate(),
          a.linear * b.antilinear + a.antilinear * b.linear.conjugate()};
}

RLinOp add(const RLinOp& a, const RLinOp& b) {
  return {a.linear + b.linear, a.antilinear + b.antilinear};
}

RLinOp sub(const RLinOp& a, const RLinOp& b) {
  return {a.linear - b.linear, a.antilinear - b.antilinear};
}

RLinOp scale(const Complex& c, const RLinOp& op) {
  return {c * op.linear, c * op.antilinear};
}

RLinOp commutator(const RLinOp& a, const RLinOp& b) {
  return sub(compose(a, b), compose(b, a));
}

RLinOp anticommutator(const RLinOp& a, const RLinOp& b) {
  return add(compose(a, b), compose(b, a));
}

RMat8 to_real8(const RLinOp& op) {
  const Eigen::Matrix4d rl = op.linear.real();
  const Eigen::Matrix4d il = op.linear.imag();
  const Eigen::Matrix4d ra = op.antilinear.real();
  const Eigen::Matrix4d ia = op.antilinear.imag();
  RMat8 m;
  m.block<4, 4>(0, 0) = rl + ra;
  m.block<4, 4>(0, 4) = -il + ia;
  m.block<4, 4>(4, 0) = il + ia;
  m.block<4, 4>(4, 4) = rl - ra;
  return m;
}

RLinOp from_real8(const RMat8& m) {
  const Eigen::Matrix4d p = m.block<4, 4>(0, 0);
  const Eigen::Matrix4d q = m.block<4, 4>(0, 4);
  const Eigen::Matrix4d r = m.block<4, 4>(4, 0);
  const Eigen::Matrix4d s = m.block<4, 4>(4, 4);
  const Complex i(0.0, 1.0);
  RLinOp op;
  op.linear = 0.5 * ((p + s).cast<Complex>() + i * (r - q).cast<Complex>());
  op.antilinear = 0.5 * ((p - s).cast<Complex>() + i * (r + q).cast<Complex>());
  return op;
}

RVec8 embed_real8(const CVec4& v) {
  RVec8 e;
  e.head<4>() = v.real();
  e.tail<4>() = v.imag();
  return e;
}

double op_norm_diff(const RLinOp& a, const RLinOp& b) {
  return (to_real8(a) - to_real8(b)).cwiseAbs().maxCoeff();
}

double op_norm(const RLinOp& a) { return to_real8(a).cwiseAbs().maxCoeff(); }

}  // namespace ercd
