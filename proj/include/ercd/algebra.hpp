#pragma once

#include <array>
#include <string>
#include <vector>

#include "ercd/momentum.hpp"
#include "ercd/rlinear.hpp"

namespace ercd {

// One checked operator identity: max-abs residual in the R^{8x8} picture.
struct RelationReport {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

RelationReport make_relation(const std::string& id, double residual, double tol);
bool all_pass(const std::vector<RelationReport>& rows);
double max_residual(const std::vector<RelationReport>& rows);

// The seven anticommuting orts gamma[1..7] plus gamma[0], the conjugation
// ort C (v -> conj v) and the imaginary unit ort i·id. gamma[4..7] are built
// by composition from gamma[0..3], C and i; they are not free parameters.
struct GammaBasis {
  std::array<RLinOp, 8> gamma;
  RLinOp conj;
  RLinOp imag;
};

GammaBasis build_gammas();

// {gamma^A, gamma^B} = -2 delta^{AB}, A,B in 1..7 (28 unordered pairs).
std::vector<RelationReport> check_anticommutation(const GammaBasis& g, double tol);

// Antisymmetric tensor of the 28 generators over indices 1..8:
//   s[a][b] = (1/4)[gamma^a, gamma^b]  for a,b in 1..7,
//   s[a][8] = -s[8][a] = (1/2) gamma^a,
// plus the unit ort. Together: 29 orts.
struct SpinTensor {
  std::array<std::array<RLinOp, 9>, 9> s;  // 1-based; index 0 unused
  RLinOp unit;
};

SpinTensor build_spin_tensor(const GammaBasis& g);

// [s^{ab}, s^{cd}] = d_ac s^{bd} + d_cb s^{da} + d_bd s^{ac} + d_da s^{cb},
// checked for all 8^4 index quadruples.
std::vector<RelationReport> check_so8(const SpinTensor& t, double tol);

// Rank of the 29 orts as vectors in R^64 (singular values above cutoff).
int ort_rank(const SpinTensor& t, double cutoff);

// The 15 generators s[a][b], 1 <= a < b <= 6, followed by the unit ort.
std::vector<RLinOp> so6_generators(const SpinTensor& t);

// Residual of q∘U(t,k) - U(t,k)∘q with U(t,k) = exp(-i gamma^0 w t),
// w = sqrt(k^2 + m^2), for every op, sample and time.
std::vector<RelationReport> check_fw_invariance(const std::vector<RLinOp>& ops,
                                                const std::vector<std::string>& op_names,
                                                const std::vector<MomentumSample>& samples,
                                                const std::vector<double>& times,
                                                double tol);

}  // namespace ercd
