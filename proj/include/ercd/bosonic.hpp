#pragma once

#include <array>
#include <vector>

#include "ercd/algebra.hpp"
#include "ercd/rlinear.hpp"

namespace ercd {

// Transition operator between the fermionic and bosonic representations,
// together with its inverse. Both carry antilinear entries, so they are
// stored as explicit (linear, antilinear) pairs and validated by
// check_w_identities rather than by numeric inversion.
struct WPair {
  RLinOp w;
  RLinOp w_inv;
};

WPair build_w();

// The bosonic-representation orts: breve gamma[0..7], breve imaginary unit
// and breve conjugation, as explicit matrix data.
struct BreveBasis {
  std::array<RLinOp, 8> gamma;
  RLinOp imag;
  RLinOp conj;
};

BreveBasis build_breve_basis();

// W W^{-1} = W^{-1} W = id.
std::vector<RelationReport> check_w_identities(const WPair& wp, double tol);

// Residual of W q W^{-1} vs the tabulated breve ort, for each ort q.
// Reported faithfully; callers decide whether rows gate anything.
std::vector<RelationReport> check_conjugation(const WPair& wp, const GammaBasis& g,
                                              const BreveBasis& b, double tol);

// Spin-1 triple of the bosonic representation.
struct BreveSpin {
  std::array<RLinOp, 3> s;  // s[0] = first component
};

// Explicit matrix form.
BreveSpin build_breve_spin();
// Same triple assembled by composing breve orts; must agree with the
// explicit form entry for entry.
BreveSpin build_breve_spin_composed(const BreveBasis& b);

// [s1,s2] = s3 and cyclic, plus the Casimir s^2 = -2 diag(1,1,1,0).
std::vector<RelationReport> check_su2_closure(const BreveSpin& sp, double tol);

}  // namespace ercd
