#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ercd {

using Complex = std::complex<double>;
using CVec4 = Eigen::Vector4cd;
using CMat4 = Eigen::Matrix4cd;
using RMat8 = Eigen::Matrix<double, 8, 8>;
using RVec8 = Eigen::Matrix<double, 8, 1>;

// Real-linear operator on C^4, stored as the canonical pair (linear, antilinear):
//
//   op(v) = linear * v + antilinear * conj(v).
//
// The decomposition is unique, so two operators are equal iff both parts agree.
struct RLinOp {
  CMat4 linear;
  CMat4 antilinear;

  static RLinOp zero();
  static RLinOp identity();
  static RLinOp from_linear(const CMat4& l);
  // v -> a * conj(v)
  static RLinOp from_antilinear(const CMat4& a);
};

CVec4 apply(const RLinOp& op, const CVec4& v);

// a∘b, b acting first:
//   (La,Aa)∘(Lb,Ab) = (La Lb + Aa conj(Ab), La Ab + Aa conj(Lb)).
RLinOp compose(const RLinOp& a, const RLinOp& b);

RLinOp add(const RLinOp& a, const RLinOp& b);
RLinOp sub(const RLinOp& a, const RLinOp& b);

// Post-scale: (c*op)(v) = c * op(v). Not the same as op∘(c*id) when the
// antilinear part is nonzero.
RLinOp scale(const Complex& c, const RLinOp& op);

RLinOp commutator(const RLinOp& a, const RLinOp& b);
RLinOp anticommutator(const RLinOp& a, const RLinOp& b);

// C^4 ≅ R^8 with v -> (Re v; Im v). Real-linear operators on C^4 correspond
// one-to-one to all of R^{8x8}; composition maps to matrix product.
RMat8 to_real8(const RLinOp& op);
RLinOp from_real8(const RMat8& m);
RVec8 embed_real8(const CVec4& v);

// Max-abs entry of to_real8(a) - to_real8(b): the equality metric used by
// every relation check.
double op_norm_diff(const RLinOp& a, const RLinOp& b);
double op_norm(const RLinOp& a);

}  // namespace ercd
