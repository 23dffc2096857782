#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "knotinv/arith.hpp"
#include "knotinv/semigroup.hpp"

namespace knotinv {

// Torus-knot atom T_{p,q}, normalized 2 <= p < q with gcd(p,q) = 1.
// T_{1,n} is the unknot and never stored.
struct TorusAtom {
  long long p = 2;
  long long q = 3;
  auto operator<=>(const TorusAtom&) const = default;
};

// (a,b)-cable of a torus knot, gcd(a,b) = 1 and b >= a(2g - 1) for the genus
// g of the companion.
struct CableAtom {
  TorusAtom inner;
  long long a = 1;
  long long b = 1;
  auto operator<=>(const CableAtom&) const = default;
};

using KnotAtom = std::variant<TorusAtom, CableAtom>;

struct AtomOrder {
  bool operator()(const KnotAtom& x, const KnotAtom& y) const;
};

// Returns the normalized atom, or nullopt when (p,q) is an unknot
// presentation.  Throws on non-coprime or non-positive input.
std::optional<KnotAtom> make_torus_atom(long long p, long long q);
KnotAtom make_cable_atom(long long p, long long q, long long a, long long b);

NumericalSemigroup atom_semigroup(const KnotAtom& atom);
Int atom_genus(const KnotAtom& atom);
std::string atom_to_string(const KnotAtom& atom);

// A formal Z-linear combination of atoms: an element of the free abelian
// group on torus and cable knots.  Mirrors are negative coefficients.
class KnotExpression {
 public:
  KnotExpression() = default;
  static KnotExpression unknot() { return {}; }
  static KnotExpression atom(const KnotAtom& a, const Int& coeff = 1);
  static KnotExpression torus(long long p, long long q, const Int& coeff = 1);

  void add_term(const KnotAtom& a, const Int& coeff);
  bool empty() const { return terms_.empty(); }
  const std::map<KnotAtom, Int, AtomOrder>& terms() const { return terms_; }

  KnotExpression operator+(const KnotExpression& rhs) const;
  KnotExpression operator-(const KnotExpression& rhs) const;
  KnotExpression operator-() const;
  KnotExpression scaled(const Int& c) const;

  bool operator==(const KnotExpression& rhs) const {
    return terms_ == rhs.terms_;
  }

  // Canonical printer; parse_expression round-trips its output.
  std::string to_string() const;

 private:
  std::map<KnotAtom, Int, AtomOrder> terms_;
};

// Parse failure with the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Grammar: EXPR := TERM (('#'|'+') TERM)*
//          TERM := [INT '*'] ('-')? ATOM
//          ATOM := 'T(p,q)' | 'C(T(p,q);a,b)'
// "0" is accepted for the empty expression.  Whitespace is ignored.
KnotExpression parse_expression(std::string_view text);

}  // namespace knotinv
