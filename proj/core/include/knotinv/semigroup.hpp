#pragma once

#include <string>
#include <vector>

#include "knotinv/arith.hpp"
#include "knotinv/int_set.hpp"
#include "knotinv/phi_sequence.hpp"

namespace knotinv {

// A numerical semigroup: a cofinite subset of Z_{>=0} containing 0 and closed
// under addition.  Membership below the conductor is a bit table; everything
// from the conductor on is a member.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<Int> generators);
  static NumericalSemigroup natural_numbers();

  bool contains(const Int& n) const;
  // Least c >= 0 with [c, infinity) contained in the semigroup.
  const Int& conductor() const { return conductor_; }
  // Number of gaps (nonmembers).  Equals conductor/2 exactly when the
  // semigroup is symmetric, which holds for every semigroup of an L-space
  // knot.
  Int genus() const;
  const std::vector<Int>& generators() const { return generators_; }

  std::vector<Int> members_upto(const Int& bound) const;
  std::vector<Int> gaps() const;
  IntSet as_int_set() const;

  // Exhaustive closure check for sums of members below the conductor;
  // intended for validation in tests.
  bool closed_under_addition() const;

  bool operator==(const NumericalSemigroup& rhs) const {
    return conductor_ == rhs.conductor_ && table_ == rhs.table_;
  }

  std::string to_string() const { return as_int_set().to_string(); }

  // Internal constructor from an explicit membership table over [0, c].
  static NumericalSemigroup from_table(std::vector<bool> table, Int conductor,
                                       std::vector<Int> generators);

 private:
  NumericalSemigroup() = default;

  std::vector<Int> generators_;
  Int conductor_ = 0;
  std::vector<bool> table_;  // membership on [0, conductor]
};

// The semigroup <p,q> of the torus knot T_{p,q}.  Requires coprime positive
// arguments; the conductor is (p-1)(q-1).
NumericalSemigroup torus_semigroup(const Int& p, const Int& q);

// a*S + b*Z_{>=0}, the semigroup of the (a,b)-cable of an L-space knot with
// semigroup S.  Requires gcd(a,b) = 1 and b >= a(2g - 1) where g is the
// genus of S.
NumericalSemigroup cable_semigroup(const NumericalSemigroup& s, const Int& a,
                                   const Int& b);

// The Apery data of S with respect to a member p: minimal members beta_i in
// each residue class mod p, their sorted order omega, the residues kappa in
// that order, and the blocks A_i = S cap [floor(w_{i-1}/p)p, floor(w_i/p)p].
struct AperyData {
  Int base;
  std::vector<Int> beta;      // beta[i] = min member congruent to i mod p
  std::vector<Int> omega;     // sorted Apery set, omega[0] = 0
  std::vector<Int> kappa;     // kappa[i] = omega[i] mod p
  std::vector<IntSet> blocks; // blocks[i-1] = A_i for i = 1..p-1
};

AperyData apery(const NumericalSemigroup& s, const Int& p);

// Per-block comparison of Phi(A_i) against
// (floor(w_i/p) - floor(w_{i-1}/p)) * Phi({kappa_0,...,kappa_{i-1}, p}).
struct BlockCheck {
  Int index;
  PhiSequence block_phi;
  Int multiplier;
  PhiSequence pattern_phi;
  bool equal;
};

struct BlockDecompositionReport {
  Int base;
  std::vector<BlockCheck> checks;
  bool pass;
};

BlockDecompositionReport verify_block_decomposition(const NumericalSemigroup& s, const Int& p);

}  // namespace knotinv
