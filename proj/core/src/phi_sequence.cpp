#include "knotinv/phi_sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace knotinv {

const Int& PhiSequence::at(const Int& j) const {
  static const Int zero = 0;
  auto it = entries_.find(j);
  return it == entries_.end() ? zero : it->second;
}

void PhiSequence::add(const Int& j, const Int& value) {
  if (j < 1) throw std::invalid_argument("sequence index must be >= 1");
  if (value == 0) return;
  auto [it, inserted] = entries_.emplace(j, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Int PhiSequence::max_index() const {
  return entries_.empty() ? Int(0) : entries_.rbegin()->first;
}

PhiSequence& PhiSequence::operator+=(const PhiSequence& rhs) {
  for (const auto& [j, v] : rhs.entries_) add(j, v);
  return *this;
}

PhiSequence& PhiSequence::operator-=(const PhiSequence& rhs) {
  for (const auto& [j, v] : rhs.entries_) add(j, -v);
  return *this;
}

PhiSequence PhiSequence::operator+(const PhiSequence& rhs) const {
  PhiSequence out = *this;
  out += rhs;
  return out;
}

PhiSequence PhiSequence::operator-(const PhiSequence& rhs) const {
  PhiSequence out = *this;
  out -= rhs;
  return out;
}

PhiSequence PhiSequence::operator-() const { return scaled(-1); }

PhiSequence PhiSequence::scaled(const Int& c) const {
  PhiSequence out;
  if (c == 0) return out;
  for (const auto& [j, v] : entries_) out.entries_.emplace(j, c * v);
  return out;
}

std::string PhiSequence::to_string(const Int& min_len) const {
  Int len = max_index();
  if (len < min_len) len = min_len;
  std::ostringstream out;
  out << "(";
  for (Int j = 1; j <= len; ++j) {
    if (j > 1) out << ",";
    out << at(j);
  }
  out << ")";
  return out.str();
}

PhiSequence phi_of_set(const IntSet& a) {
  // Walk consecutive members; a run of missing integers between two members
  // is a gap.  Tails act as members at their boundary, and nothing beyond an
  // extreme element is flanked, so only interior runs count.
  PhiSequence phi;
  std::optional<Int> prev = a.lower_tail_end();
  for (const Int& e : a.elements()) {
    if (prev && e - *prev > 1) phi.add(e - *prev - 1, 1);
    prev = e;
  }
  if (a.upper_tail_start() && prev) {
    const Int& t = *a.upper_tail_start();
    if (t - *prev > 1) phi.add(t - *prev - 1, 1);
  }
  return phi;
}

}  // namespace knotinv
