#include "knotinv/upsilon.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace knotinv {

PLFunction upsilon_lspace(const NumericalSemigroup& s) {
  Int g = s.genus();
  std::vector<std::pair<Rat, Rat>> lines;  // (intercept, slope)
  Int members_so_far = 0;                  // #(S cap (0,m])
  for (Int m = 0; m <= 2 * g; ++m) {
    if (!s.contains(m)) continue;
    if (m > 0) ++members_so_far;
    lines.emplace_back(Rat(members_so_far), Rat(g - m) / 2);
  }
  return lower_envelope(lines).scaled(-2);
}

namespace {

void validate_torus_pair(const Int& p, const Int& q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("torus parameters must be positive, got (" +
                                p.str() + "," + q.str() + ")");
  }
  if (int_gcd(p, q) != 1) {
    throw std::invalid_argument("torus parameters (" + p.str() + "," +
                                q.str() + ") are not coprime");
  }
}

using Memo = std::map<std::pair<Int, Int>, PLFunction>;

// Arguments normalized to p < q.
const PLFunction& fk_recurse(const Int& p, const Int& q, Memo& memo) {
  auto key = std::make_pair(p, q);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  PLFunction result;
  if (p == 1) {
    // unknot
  } else if (q == p + 1) {
    result = upsilon_lspace(torus_semigroup(p, q));
  } else {
    Int k = q / p;
    Int r = q % p;
    const PLFunction& head = fk_recurse(r, p, memo);
    const PLFunction& tail = fk_recurse(p, p + 1, memo);
    result = head + tail.scaled(Rat(k));
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

PLFunction upsilon_torus_fk(const Int& p, const Int& q) {
  validate_torus_pair(p, q);
  Int a = p, b = q;
  if (a > b) std::swap(a, b);
  Memo memo;
  return fk_recurse(a, b, memo);
}

PLFunction upsilon_atom(const KnotAtom& atom) {
  return upsilon_lspace(atom_semigroup(atom));
}

PLFunction upsilon_expression(const KnotExpression& e) {
  PLFunction out;
  for (const auto& [atom, coeff] : e.terms()) {
    out = out + upsilon_atom(atom).scaled(Rat(coeff));
  }
  return out;
}

namespace {

Rat jump_or_zero(const PLFunction& f, const Rat& t) {
  if (t <= 0 || t >= 2) return 0;
  return f.delta_prime(t);
}

}  // namespace

Rat lambda_hom(const KnotExpression& e, const Int& j) {
  if (j < 1) throw std::invalid_argument("lambda index must be >= 1");
  PLFunction f = upsilon_expression(e);
  Rat d = Rat(2 * j - 1);
  return (jump_or_zero(f, 2 / d) - jump_or_zero(f, 4 / d)) / d;
}

Rat xi_hom(const KnotExpression& e, const Int& p) {
  if (p < 2) throw std::invalid_argument("xi index must be >= 2");
  PLFunction f = upsilon_expression(e);
  Rat d = Rat(p - 1);
  return jump_or_zero(f, 2 / d) / d;
}

Rat t_invariant(const PLFunction& f) {
  auto first = f.first_singularity();
  if (!first) return 0;
  return 1 / *first;
}

}  // namespace knotinv
