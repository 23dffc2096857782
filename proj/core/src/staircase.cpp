#include "knotinv/staircase.hpp"

#include <sstream>
#include <stdexcept>

namespace knotinv {

Staircase::Staircase(std::vector<Int> steps) : steps_(std::move(steps)) {
  size_t n = steps_.size();
  if (n % 2 != 0) {
    throw std::invalid_argument("staircase needs an even number of steps");
  }
  for (size_t i = 0; i < n; ++i) {
    if (steps_[i] < 1) {
      throw std::invalid_argument("staircase steps must be positive");
    }
    if (steps_[i] != steps_[n - 1 - i]) {
      throw std::invalid_argument("staircase steps must be palindromic");
    }
  }
}

std::vector<Int> Staircase::alexander_exponents() const {
  std::vector<Int> alpha{0};
  alpha.reserve(steps_.size() + 1);
  for (const Int& b : steps_) alpha.push_back(alpha.back() + b);
  return alpha;
}

Int Staircase::genus() const {
  Int total = 0;
  for (const Int& b : steps_) total += b;
  return total / 2;
}

std::string Staircase::to_string() const {
  std::ostringstream out;
  out << "St(";
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (i) out << ",";
    out << steps_[i];
  }
  out << ")";
  return out.str();
}

Staircase staircase_from_set(const IntSet& s) {
  if (s.lower_tail_end() || !s.upper_tail_start()) {
    throw std::invalid_argument(
        "staircase reading needs a set of the form F u Z_{>=c}");
  }
  if (!s.contains(0)) {
    throw std::invalid_argument("staircase reading needs 0 as a member");
  }
  const Int& tail = *s.upper_tail_start();
  std::vector<Int> steps;
  Int run_start = 0;
  bool in_run = true;  // 0 is a member
  for (Int n = 1; n < tail; ++n) {
    bool member = s.contains(n);
    if (member != in_run) {
      steps.push_back(n - run_start);
      run_start = n;
      in_run = member;
    }
  }
  if (tail > 0) {
    if (in_run) {
      // Trailing member run merges with the tail; a semigroup-shaped set
      // ends with a gap run, so this only happens for Z_{>=0} itself.
      if (!steps.empty()) {
        throw std::invalid_argument("set is not staircase-shaped");
      }
    } else {
      steps.push_back(tail - run_start);
    }
  }
  return Staircase(std::move(steps));  // palindromicity checked here
}

Staircase staircase_from_semigroup(const NumericalSemigroup& s) {
  return staircase_from_set(s.as_int_set());
}

IntSet set_from_staircase(const Staircase& st) {
  std::vector<Int> alpha = st.alexander_exponents();
  std::vector<Int> elems;
  for (size_t i = 0; i + 1 < alpha.size(); i += 2) {
    for (Int n = alpha[i]; n < alpha[i + 1]; ++n) elems.push_back(n);
  }
  return IntSet::with_upper_tail(std::move(elems), alpha.back());
}

Staircase torus_staircase(const Int& p, const Int& q) {
  return staircase_from_semigroup(torus_semigroup(p, q));
}

}  // namespace knotinv
