#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotinv/arith.hpp"
#include "knotinv/staircase.hpp"

namespace knotinv {

// The order-equivalence class of a staircase complex, named by its step
// vector.  The empty bracket is the identity class.
class BracketClass {
 public:
  BracketClass() = default;
  explicit BracketClass(std::vector<Int> steps)
      : steps_(Staircase(std::move(steps)).steps()) {}
  explicit BracketClass(const Staircase& st) : steps_(st.steps()) {}

  const std::vector<Int>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

  auto operator<=>(const BracketClass&) const = default;
  std::string to_string() const;  // "[1,4,4,1]"

 private:
  std::vector<Int> steps_;
};

// Result of stripping the maximal prefix of (1,n) pairs (and the mirrored
// suffix): b = (1,n)^k ++ core ++ (n,1)^k with core palindromic.  This
// identifies [b] with k*[1,n,n,1] + [core] when every core entry is <= n.
struct SplitResult {
  Int copies;
  BracketClass core;
};

// Throws std::invalid_argument when a core entry exceeds n, where the
// identity above does not apply.
SplitResult split_prefix(const BracketClass& b, const Int& n);

enum class CompareResult { much_less, much_greater, equal, unknown };

std::string compare_result_name(CompareResult r);

// Sound comparison of single brackets: first-entry rule (b_1 > b_1' forces
// strict domination by the primed class), second-entry rule (equal first
// entries, larger second entry dominates), structural equality; anything
// else is unknown.
CompareResult compare_brackets(const BracketClass& x, const BracketClass& y);

// A formal combination of bracket classes, optionally carrying a bounded
// remainder: a term O known only up to sign with 0 <= +-O strictly dominated
// by the bound class.
class ClassExpr {
 public:
  ClassExpr() = default;
  static ClassExpr bracket(BracketClass b, Int coeff = 1);
  // An unevaluated remainder, strictly dominated by `bound`.
  static ClassExpr remainder(BracketClass bound);

  const std::map<BracketClass, Int>& terms() const { return terms_; }
  const std::optional<BracketClass>& remainder_bound() const {
    return remainder_bound_;
  }
  // The concrete bracket behind the remainder when it is known (fresh out of
  // a torus-class decomposition); arithmetic discards it.
  const std::optional<BracketClass>& remainder_core() const {
    return remainder_core_;
  }
  bool bounds_comparable() const { return bounds_comparable_; }

  ClassExpr operator+(const ClassExpr& rhs) const;
  ClassExpr operator-(const ClassExpr& rhs) const;
  ClassExpr scaled(const Int& c) const;

  bool operator==(const ClassExpr& rhs) const {
    return terms_ == rhs.terms_ && remainder_bound_ == rhs.remainder_bound_ &&
           bounds_comparable_ == rhs.bounds_comparable_;
  }

  std::string to_string() const;

 private:
  std::map<BracketClass, Int> terms_;
  std::optional<BracketClass> remainder_bound_;
  std::optional<BracketClass> remainder_core_;
  // Cleared when two remainder bounds could not be merged under the
  // comparison rules; such expressions compare as unknown.
  bool bounds_comparable_ = true;

  friend ClassExpr torus_class(const Int& p, const Int& q);
};

// Sound partial comparison of class expressions; unknown is always a safe
// answer and no strict relation is reported unless the rules force it.
CompareResult compare(const ClassExpr& x, const ClassExpr& y);

struct ExplainedCompare {
  CompareResult relation;
  std::string rule;  // which rule decided, or why the answer is unknown
};

ExplainedCompare compare_explained(const ClassExpr& x, const ClassExpr& y);

// The class of T_{p,q}: for p >= 3 and q = kp + r this is
// k*[1,p-1,p-1,1] + O with O the split core, strictly dominated by
// [1,r,r,1]; for p = 2 it is the explicit all-ones bracket.
ClassExpr torus_class(const Int& p, const Int& q);

// The class of the phi-killing family knot with parameters (p,r,k):
// k*[1,p-2,p-2,1] +- O with O strictly dominated by [1,p-2,p-2,1].
ClassExpr family_upsilon_class(const Int& p, const Int& r, const Int& k);

struct DominanceStep {
  size_t index;  // position of the dominated expression
  CompareResult relation;
  std::string rule;
};

struct DominanceCertificate {
  std::vector<std::string> exprs;
  std::vector<DominanceStep> steps;
  bool certified = false;
  std::optional<size_t> failing_index;
};

// Certifies expr_1 << expr_2 << ... for expressions of the shape
// k*[1,a,a,1] +- O with O dominated by the lead bracket: strictly growing a
// forces each step, and a certified chain of positive classes is linearly
// independent.
DominanceCertificate dominance_chain(const std::vector<ClassExpr>& exprs);

std::string dominance_certificate_to_json(const DominanceCertificate& cert);

}  // namespace knotinv
