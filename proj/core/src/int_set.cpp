#include "knotinv/int_set.hpp"

#include <algorithm>
#include <sstream>

namespace knotinv {

void IntSet::canonicalize() {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (lower_) {
    auto it = elems_.begin();
    while (it != elems_.end() && *it <= *lower_ + 1) {
      if (*it == *lower_ + 1) *lower_ = *it;
      it = elems_.erase(it);
    }
  }
  if (upper_) {
    while (!elems_.empty() && elems_.back() >= *upper_ - 1) {
      if (elems_.back() == *upper_ - 1) *upper_ = elems_.back();
      elems_.pop_back();
    }
  }
  // Tails meeting or overlapping means the set is all of Z; pick one form.
  if (lower_ && upper_ && *lower_ + 1 >= *upper_) {
    lower_ = Int(-1);
    upper_ = Int(0);
    elems_.clear();
  }
}

IntSet IntSet::finite(std::vector<Int> elems) {
  IntSet s;
  s.elems_ = std::move(elems);
  s.canonicalize();
  return s;
}

IntSet IntSet::singleton(Int n) { return finite({std::move(n)}); }

IntSet IntSet::with_upper_tail(std::vector<Int> elems, Int tail_start) {
  IntSet s;
  s.elems_ = std::move(elems);
  s.upper_ = std::move(tail_start);
  s.canonicalize();
  return s;
}

IntSet IntSet::with_lower_tail(Int tail_end, std::vector<Int> elems) {
  IntSet s;
  s.elems_ = std::move(elems);
  s.lower_ = std::move(tail_end);
  s.canonicalize();
  return s;
}

bool IntSet::contains(const Int& n) const {
  if (lower_ && n <= *lower_) return true;
  if (upper_ && n >= *upper_) return true;
  return std::binary_search(elems_.begin(), elems_.end(), n);
}

IntSet IntSet::translated(const Int& b) const {
  IntSet s;
  s.elems_.reserve(elems_.size());
  for (const Int& e : elems_) s.elems_.push_back(e + b);
  if (lower_) s.lower_ = *lower_ + b;
  if (upper_) s.upper_ = *upper_ + b;
  return s;  // order and adjacency are preserved, already canonical
}

IntSet IntSet::reflected(const Int& b) const {
  IntSet s;
  s.elems_.reserve(elems_.size());
  for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) {
    s.elems_.push_back(b - *it);
  }
  // b - Z_{<=lo} = Z_{>=b-lo}, and symmetrically for the upper tail.
  if (lower_) s.upper_ = b - *lower_;
  if (upper_) s.lower_ = b - *upper_;
  return s;
}

IntSet IntSet::intersect_le(const Int& a) const {
  IntSet s;
  if (lower_) {
    if (a <= *lower_) return all_at_most(a);
    s.lower_ = lower_;
  }
  for (const Int& e : elems_) {
    if (e <= a) s.elems_.push_back(e);
  }
  if (upper_ && a >= *upper_) {
    for (Int n = *upper_; n <= a; ++n) s.elems_.push_back(n);
  }
  s.canonicalize();
  return s;
}

IntSet IntSet::intersect_ge(const Int& a) const {
  IntSet s;
  if (upper_) {
    if (a >= *upper_) return all_at_least(a);
    s.upper_ = upper_;
  }
  for (const Int& e : elems_) {
    if (e >= a) s.elems_.push_back(e);
  }
  if (lower_ && a <= *lower_) {
    for (Int n = a; n <= *lower_; ++n) s.elems_.push_back(n);
  }
  s.canonicalize();
  return s;
}

std::optional<Int> IntSet::min() const {
  if (lower_) return std::nullopt;
  if (!elems_.empty()) return elems_.front();
  if (upper_) return *upper_;
  return std::nullopt;
}

std::string IntSet::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  if (lower_) {
    out << "...," << *lower_;
    first = false;
  }
  for (const Int& e : elems_) {
    if (!first) out << ",";
    out << e;
    first = false;
  }
  if (upper_) {
    if (!first) out << ",";
    out << *upper_ << ",...";
  }
  out << "}";
  return out.str();
}

}  // namespace knotinv
