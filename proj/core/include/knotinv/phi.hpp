#pragma once

#include <map>
#include <vector>

#include "knotinv/knot_expression.hpp"
#include "knotinv/phi_sequence.hpp"
#include "knotinv/semigroup.hpp"

namespace knotinv {

// phi of an L-space knot is the gap-count sequence of its formal semigroup.
PhiSequence phi_lspace(const NumericalSemigroup& s);

// phi(T_{p,p+1}): p-1 ones followed by zeros.
PhiSequence phi_torus_basis(const Int& p);

// phi of a torus knot computed purely by the recursion
//   phi(T_{p,kp+r}) = (k+1) phi(T_{r,p}) + k phi(T_{p-r,p})
//                     + k (phi(T_{p,p+1}) - phi(T_{p-1,p})),
// with base cases phi(T_{1,n}) = 0 and the closed form for T_{n,n+1}.
// Agrees with phi_lspace(<p,q>) exactly.
PhiSequence phi_torus_recursive(const Int& p, const Int& q);

PhiSequence phi_atom(const KnotAtom& atom);
PhiSequence phi_expression(const KnotExpression& e);

// Checks of the coarse structure of phi(T_{p,kp+r}):
//   (i)   phi_j = 0 for j >= p,
//   (ii)  phi_j = 0 for max{r,p-r} <= j <= p-2 when 2 <= r <= p-2,
//   (iii) phi_{p-1} = k.
struct CoarseStructureReport {
  Int p, r, k;
  PhiSequence phi;
  bool vanishing_above;   // (i)
  bool middle_window;     // (ii); true when the window is empty
  bool top_entry;         // (iii)
  bool pass;
};

CoarseStructureReport check_coarse_structure(const Int& p, const Int& r, const Int& k);

// Unique integers c_p with  s = sum_p c_p * phi(T_{p,p+1});
// concretely c_{j+1} = s_j - s_{j+1}.  Keys with zero coefficient are absent.
std::map<Int, Int> basis_decompose(const PhiSequence& s);
PhiSequence basis_reconstruct(const std::map<Int, Int>& coeffs);

// max{ j : s_j != 0 }, or 0 for the zero sequence.
Int n_invariant(const PhiSequence& s);

}  // namespace knotinv
