#pragma once

#include "knotinv/knot_expression.hpp"
#include "knotinv/pl_function.hpp"
#include "knotinv/semigroup.hpp"

namespace knotinv {

// Upsilon of an L-space knot with semigroup S and genus g:
//   Upsilon(t) = -2 * min_{m in S, 0 <= m <= 2g} [ #(S cap (0,m]) + (t/2)(g-m) ],
// the scaled lower envelope of one line per member.  The convention is pinned
// by: the Feller-Krcatovich recursion, the slope jump of T_{p-1,p} at
// 2/(p-1), symmetry about t = 1, and Upsilon(0) = 0.
PLFunction upsilon_lspace(const NumericalSemigroup& s);

// Upsilon of a torus knot via the recursion
//   Upsilon(T_{p,kp+r}) = Upsilon(T_{r,p}) + k Upsilon(T_{p,p+1}),
// reaching T_{n,n+1} (computed directly) and T_{1,n} (zero).
PLFunction upsilon_torus_fk(const Int& p, const Int& q);

PLFunction upsilon_atom(const KnotAtom& atom);
PLFunction upsilon_expression(const KnotExpression& e);

// lambda_j(K) = (1/(2j-1)) [ dU'(2/(2j-1)) - dU'(4/(2j-1)) ] where dU' is the
// slope jump of Upsilon_K.  Arguments outside (0,2) contribute 0; this only
// happens for j <= 2, which the integrality results do not cover.
Rat lambda_hom(const KnotExpression& e, const Int& j);

// xi_p(K) = (1/(p-1)) dU'(2/(p-1)), p >= 2.
Rat xi_hom(const KnotExpression& e, const Int& p);

// Reciprocal of the first slope discontinuity, or 0 for the zero function.
Rat t_invariant(const PLFunction& f);

}  // namespace knotinv
