#include <doctest.h>

#include <random>

#include "ercd/rlinear.hpp"

using namespace ercd;

namespace {

// Deterministic uniform in [-1, 1).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double real() { return 2.0 * ((eng() >> 11) * 0x1.0p-53) - 1.0; }
  Complex cplx() { return Complex(real(), real()); }
  CMat4 mat() {
    CMat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = cplx();
    return m;
  }
  RLinOp op() { return {mat(), mat()}; }
  CVec4 vec() {
    CVec4 v;
    for (int r = 0; r < 4; ++r) v(r) = cplx();
    return v;
  }
};

}  // namespace

TEST_CASE("apply splits into linear plus conjugated-antilinear parts") {
  Rng rng(7);
  const RLinOp op = rng.op();
  const CVec4 v = rng.vec();
  const CVec4 expect = op.linear * v + op.antilinear * v.conjugate();
  CHECK((apply(op, v) - expect).norm() == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("composition matches the 8x8 real-matrix oracle on random products") {
  Rng rng(2026);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const RLinOp a = rng.op();
    const RLinOp b = rng.op();
    const RMat8 direct = to_real8(compose(a, b));
    const RMat8 oracle = to_real8(a) * to_real8(b);
    worst = std::max(worst, (direct - oracle).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("real embedding is a vector-space isomorphism") {
  Rng rng(11);
  const RLinOp a = rng.op();
  const RLinOp b = rng.op();
  const Complex c = rng.cplx();

  CHECK((to_real8(add(a, b)) - (to_real8(a) + to_real8(b))).cwiseAbs().maxCoeff() <=
        1e-14);
  CHECK(op_norm_diff(from_real8(to_real8(a)), a) <= 1e-14);

  // Post-scaling by a complex number is itself a real-linear operator
  // composed on the left.
  const RLinOp c_id = RLinOp::from_linear(c * CMat4::Identity());
  CHECK(op_norm_diff(scale(c, a), compose(c_id, a)) <= 1e-14);
}

TEST_CASE("apply agrees with the real-matrix picture") {
  Rng rng(23);
  const RLinOp a = rng.op();
  const CVec4 v = rng.vec();
  const RVec8 lhs = embed_real8(apply(a, v));
  const RVec8 rhs = to_real8(a) * embed_real8(v);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("antilinear parts conjugate scalars moving past them") {
  Rng rng(5);
  const CMat4 am = rng.mat();
  const RLinOp anti = RLinOp::from_antilinear(am);
  const Complex c(0.3, -1.2);
  // anti(c v) = conj(c) anti(v): compose with c*id on the right.
  const RLinOp c_id = RLinOp::from_linear(c * CMat4::Identity());
  const RLinOp lhs = compose(anti, c_id);
  const RLinOp rhs = scale(std::conj(c), anti);
  CHECK(op_norm_diff(lhs, rhs) <= 1e-14);
}

TEST_CASE("commutator and anticommutator identities") {
  Rng rng(31);
  const RLinOp a = rng.op();
  const RLinOp b = rng.op();
  // [a,b] + {a,b} = 2 a b
  const RLinOp lhs = add(commutator(a, b), anticommutator(a, b));
  const RLinOp rhs = scale(2.0, compose(a, b));
  CHECK(op_norm_diff(lhs, rhs) <= 1e-13);
  // [a,a] = 0
  CHECK(op_norm(commutator(a, a)) <= 1e-13);
}

TEST_CASE("zero and identity behave as expected") {
  Rng rng(43);
  const RLinOp a = rng.op();
  CHECK(op_norm_diff(compose(RLinOp::identity(), a), a) == 0.0);
  CHECK(op_norm_diff(compose(a, RLinOp::identity()), a) == 0.0);
  CHECK(op_norm(RLinOp::zero()) == 0.0);
  CHECK(op_norm_diff(add(a, RLinOp::zero()), a) == 0.0);
  CHECK(op_norm_diff(sub(a, a), RLinOp::zero()) == 0.0);
}
