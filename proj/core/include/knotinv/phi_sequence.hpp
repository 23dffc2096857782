#pragma once

#include <map>
#include <string>

#include "knotinv/arith.hpp"
#include "knotinv/int_set.hpp"

namespace knotinv {

// A finitely supported integer sequence (s_j)_{j>=1}.  Gap-count sequences of
// actual sets are nonnegative; formal differences may carry negative entries.
class PhiSequence {
 public:
  PhiSequence() = default;

  const Int& at(const Int& j) const;
  void add(const Int& j, const Int& value);  // accumulate, dropping zeros
  bool is_zero() const { return entries_.empty(); }
  Int max_index() const;  // 0 for the zero sequence
  const std::map<Int, Int>& entries() const { return entries_; }

  PhiSequence& operator+=(const PhiSequence& rhs);
  PhiSequence& operator-=(const PhiSequence& rhs);
  PhiSequence operator+(const PhiSequence& rhs) const;
  PhiSequence operator-(const PhiSequence& rhs) const;
  PhiSequence operator-() const;
  PhiSequence scaled(const Int& c) const;

  bool operator==(const PhiSequence&) const = default;

  // "(12,6,0,1,0,0,1)"; prints at least min_len entries.
  std::string to_string(const Int& min_len = 0) const;

 private:
  std::map<Int, Int> entries_;  // j -> s_j, zero entries absent
};

// Number of j-gaps of A for each j: a j-gap is a block of j consecutive
// integers disjoint from A whose two neighbours both lie in A.
PhiSequence phi_of_set(const IntSet& a);

}  // namespace knotinv
