#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotinv/arith.hpp"

namespace knotinv {

// A subset of Z in canonical form: a finite sorted list of elements, plus an
// optional lower tail Z_{<=lo} and/or upper tail Z_{>=hi}.  Elements adjacent
// to a tail are absorbed into it, so two IntSets are equal as sets iff they
// are structurally equal.
class IntSet {
 public:
  IntSet() = default;  // empty set

  static IntSet finite(std::vector<Int> elems);
  static IntSet singleton(Int n);
  // elems together with all integers >= tail_start
  static IntSet with_upper_tail(std::vector<Int> elems, Int tail_start);
  // all integers <= tail_end together with elems
  static IntSet with_lower_tail(Int tail_end, std::vector<Int> elems);
  static IntSet all_at_least(Int n) { return with_upper_tail({}, std::move(n)); }
  static IntSet all_at_most(Int n) { return with_lower_tail(std::move(n), {}); }

  bool empty() const { return elems_.empty() && !lower_ && !upper_; }
  bool is_finite() const { return !lower_ && !upper_; }
  bool contains(const Int& n) const;

  // Finite elements strictly between the tails.
  const std::vector<Int>& elements() const { return elems_; }
  const std::optional<Int>& lower_tail_end() const { return lower_; }
  const std::optional<Int>& upper_tail_start() const { return upper_; }

  IntSet translated(const Int& b) const;  // b + A
  IntSet reflected(const Int& b) const;   // b - A
  IntSet intersect_le(const Int& a) const;
  IntSet intersect_ge(const Int& a) const;

  // Smallest element; only defined when there is no lower tail.
  std::optional<Int> min() const;

  bool operator==(const IntSet&) const = default;

  std::string to_string() const;

 private:
  std::vector<Int> elems_;
  std::optional<Int> lower_;
  std::optional<Int> upper_;

  void canonicalize();
};

}  // namespace knotinv
