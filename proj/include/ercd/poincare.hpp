#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ercd/algebra.hpp"
#include "ercd/spectral.hpp"

namespace ercd {

// The ten spacetime-symmetry generators realized on momentum-space fields.
// Rotation components are named by their antisymmetric index pair; boosts
// pair the time axis with a spatial axis.
enum class GeneratorId { p0, p1, p2, p3, j23, j31, j12, j01, j02, j03 };

constexpr std::array<GeneratorId, 10> all_generators() {
  return {GeneratorId::p0,  GeneratorId::p1,  GeneratorId::p2,  GeneratorId::p3,
          GeneratorId::j23, GeneratorId::j31, GeneratorId::j12, GeneratorId::j01,
          GeneratorId::j02, GeneratorId::j03};
}

const char* generator_name(GeneratorId g);

// True for the six j generators, whose position parts differentiate in k.
bool generator_needs_derivative(GeneratorId g);

// k-derivative evaluation scheme. `spectral` applies the trigonometric
// (Fourier) differentiation matrix of the odd-count periodic grid, which is
// exponentially accurate on fields that decay below rounding at the grid
// boundary. `stencil4` is the 4th-order centered stencil with one-sided
// closures; it is kept for convergence-order measurements but cannot reach
// the derivative-check tolerance at the default spacing.
enum class DerivScheme { spectral, stencil4 };

// Operator grouping of the boost's momentum-over-energy term. Both factors
// are multiplication operators, so the groupings coincide up to rounding;
// all are implemented and compared in the report.
enum class BoostOrdering { left, right, sym };

struct GenOptions {
  DerivScheme scheme = DerivScheme::spectral;
  BoostOrdering ordering = BoostOrdering::sym;
};

// Dense derivative matrix acting along one axis of the grid (cached per
// (count, spacing, scheme)).
const Eigen::MatrixXd& diff_matrix(int count, double dk, DerivScheme scheme);

// Derivative of every component of both branches along the given axis
// (0..2) of the grid.
SpinorFieldK axis_derivative(const SpinorFieldK& f, int axis, DerivScheme scheme);

// Smooth deterministic test profile: a k-space Gaussian bump placed away
// from the coordinate planes (center and width tied to the grid extent,
// boundary values a few 1e-9) times a random degree-<=2 polynomial per
// component and branch. Dense-subspace stand-in for a smooth
// rapidly-decreasing field, positioned so that derivative checks of
// energy-weighted expressions stay clear of the energy function's
// branch-point aliasing tail.
SpinorFieldK make_test_field(const MomentumGrid& g, std::uint64_t seed, double time = 0.0);

// Max node-value norm over the six boundary faces of the grid.
double boundary_magnitude(const SpinorFieldK& f);

// Applies one generator. Branch realization (decaying / raised):
//   position:    x_l = +i d/dk_l   /   -i d/dk_l
//   derivative:  d_n = -i k_n      /   +i k_n
//   p0 = -i gamma0 w on both branches
//   j_ln = x_l d_n - x_n d_l + multiplet spin s_ln
//   j_0k = x0 d_k + i gamma0 { x_k w + d_k/(2w) + (s x d)_k/(w+m) },
//          x0 = the field's time stamp.
// The j generators require a smooth input: fields whose boundary magnitude
// exceeds 1e-8 (absolute; test profiles are O(1)-scaled) are rejected with
// std::invalid_argument. Composite checks below validate their input once
// and compose internally.
SpinorFieldK apply_generator(GeneratorId gid, const SpinorFieldK& f,
                             const GenOptions& opt = {});

// Relative defect of generator/evolution commutation:
//   || gid(propagate(f, t)) - propagate(gid(f), t) || / ||f||.
double check_fw_commutation(GeneratorId gid, const SpinorFieldK& f, double t,
                            const GenOptions& opt = {});

// One term of a recorded commutator: coeff * generator.
struct StructureTerm {
  double coeff;
  GeneratorId gid;
};

// The recorded structure-constant table: [a, b] as a sum of generators.
// All algebra assertions are relative to this table, and the report prints
// it in full.
std::vector<StructureTerm> structure_bracket(GeneratorId a, GeneratorId b);

// Human-readable "[a,b] = ..." rendering of the recorded table entry.
std::string bracket_description(GeneratorId a, GeneratorId b);

// For every generator pair: || [g1,g2]f - recorded combination applied to f ||
// / ||f||. Pairs free of k-derivatives are held to tol_mult, the rest to
// tol_deriv.
std::vector<RelationReport> check_poincare_algebra(const SpinorFieldK& f, double tol_mult,
                                                   double tol_deriv,
                                                   const GenOptions& opt = {});

// Exact self-consistency of the recorded table: the double-bracket cyclic
// sum expanded through the table must cancel for every generator triple.
// Returns one report per triple with the max residual coefficient.
std::vector<RelationReport> check_table_jacobi();

// Numerical cyclic double-commutator residual on random generator triples:
// || [[g1,g2],g3]f + [[g2,g3],g1]f + [[g3,g1],g2]f || / ||f||.
std::vector<RelationReport> check_field_jacobi(const SpinorFieldK& f, double tol,
                                               int triples, std::uint64_t seed,
                                               const GenOptions& opt = {});

// Max over boosts of ||K_left f - K_right f|| / ||f|| for the two groupings
// of the momentum-over-energy term (expected at rounding level: both factors
// are multiplications).
double ordering_discrepancy(const SpinorFieldK& f, DerivScheme scheme);

struct CasimirResult {
  double c1_residual;  // ||(p0^2 - sum p_n^2)f + m^2 f|| / ||f||
  double c2_residual;  // operator distance of m^2 * (spin Casimir) from -2m^2 diag(1,1,1,0)
};

CasimirResult casimir_check(const SpinorFieldK& f, const GenOptions& opt = {});

}  // namespace ercd
