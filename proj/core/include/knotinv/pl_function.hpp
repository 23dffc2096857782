#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotinv/arith.hpp"

namespace knotinv {

// A continuous piecewise-linear function on [0,2] with exact rational
// breakpoints and values.  Canonical form: no interior breakpoint where the
// left and right slopes agree, so equality of functions is structural
// equality.
class PLFunction {
 public:
  PLFunction();  // identically zero

  static PLFunction from_breakpoints(std::vector<Rat> ts, std::vector<Rat> vs);

  const std::vector<Rat>& breakpoints() const { return ts_; }
  const std::vector<Rat>& values() const { return vs_; }

  Rat operator()(const Rat& t) const;

  PLFunction operator+(const PLFunction& rhs) const;
  PLFunction operator-(const PLFunction& rhs) const;
  PLFunction operator-() const { return scaled(-1); }
  PLFunction scaled(const Rat& c) const;

  bool is_zero() const;
  bool operator==(const PLFunction&) const = default;

  PLFunction reflected() const;  // t -> f(2 - t)

  // Right slope minus left slope at t; zero off breakpoints.  Throws unless
  // 0 < t < 2.
  Rat delta_prime(const Rat& t) const;

  // Interior breakpoints with their slope jumps; in canonical form every
  // interior breakpoint carries a nonzero jump.
  std::vector<std::pair<Rat, Rat>> singularities() const;
  std::optional<Rat> first_singularity() const;

  std::string to_string() const;

 private:
  std::vector<Rat> ts_;  // 0 = t_0 < ... < t_n = 2
  std::vector<Rat> vs_;

  void canonicalize();
};

// Pointwise minimum of the lines y = intercept + slope * t over [0,2].
// Lines must be sorted by strictly decreasing slope.
PLFunction lower_envelope(const std::vector<std::pair<Rat, Rat>>& lines);

std::string pl_to_json(const PLFunction& f);
std::string pl_to_csv(const PLFunction& f);  // header t_num,t_den,v_num,v_den

}  // namespace knotinv
