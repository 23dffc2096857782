#pragma once

#include <string>
#include <vector>

#include "knotinv/int_set.hpp"
#include "knotinv/semigroup.hpp"

namespace knotinv {

// The step-length encoding St(b_1,...,b_{2m}) of an L-space knot complex:
// a palindromic vector of positive integers, read off a formal semigroup as
// alternating run lengths of members and gaps from 0 to the conductor.  The
// empty staircase is the unknot.
class Staircase {
 public:
  Staircase() = default;
  explicit Staircase(std::vector<Int> steps);  // validates shape

  const std::vector<Int>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

  // Partial sums alpha_0 = 0 < alpha_1 < ... < alpha_{2m}; these are the
  // exponents of the Alexander polynomial.
  std::vector<Int> alexander_exponents() const;
  Int genus() const;  // alpha_{2m} / 2

  bool operator==(const Staircase&) const = default;
  std::string to_string() const;

 private:
  std::vector<Int> steps_;
};

// Alternating run lengths of s and its complement, from 0 to the point where
// s becomes a full ray.  Requires an upper-tailed set containing its minimum
// at 0; throws if the resulting vector is not palindromic.
Staircase staircase_from_set(const IntSet& s);
Staircase staircase_from_semigroup(const NumericalSemigroup& s);

// {alpha_0,...,alpha_1 - 1} u {alpha_2,...,alpha_3 - 1} u ... u
// {alpha_{2m}} u Z_{>alpha_{2m}}.  Need not be closed under addition.
IntSet set_from_staircase(const Staircase& st);

Staircase torus_staircase(const Int& p, const Int& q);

}  // namespace knotinv
