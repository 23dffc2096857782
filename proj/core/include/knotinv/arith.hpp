#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotinv {

// Arbitrary-precision integers and rationals. Every quantity the library
// exposes (set elements, gap counts, breakpoints, slopes) is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Checked narrowing for bitmap indices and JSON emission.
inline std::size_t to_index(const Int& n) {
  if (n < 0 || n > std::numeric_limits<std::size_t>::max()) {
    throw std::overflow_error("index out of range: " + n.str());
  }
  return n.convert_to<std::size_t>();
}

inline long long to_i64(const Int& n) {
  if (n < std::numeric_limits<long long>::min() ||
      n > std::numeric_limits<long long>::max()) {
    throw std::overflow_error("value out of 64-bit range: " + n.str());
  }
  return n.convert_to<long long>();
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace knotinv
