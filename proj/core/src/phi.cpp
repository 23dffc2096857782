#include "knotinv/phi.hpp"

#include <stdexcept>
#include <utility>

namespace knotinv {

PhiSequence phi_lspace(const NumericalSemigroup& s) {
  return phi_of_set(s.as_int_set());
}

PhiSequence phi_torus_basis(const Int& p) {
  PhiSequence out;
  for (Int j = 1; j < p; ++j) out.add(j, 1);
  return out;
}

namespace {

void validate_torus(const Int& p, const Int& q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("torus parameters must be positive, got (" +
                                p.str() + "," + q.str() + ")");
  }
  if (int_gcd(p, q) != 1) {
    throw std::invalid_argument("torus parameters (" + p.str() + "," +
                                q.str() + ") are not coprime");
  }
}

using Memo = std::map<std::pair<Int, Int>, PhiSequence>;

// Arguments normalized to p < q.  The expansion q = kp + r strictly reduces
// max(p,q), so the recursion terminates; T_{p,p+1} must be handled by the
// closed form since expanding it reproduces itself.
const PhiSequence& phi_recurse(const Int& p, const Int& q, Memo& memo) {
  auto key = std::make_pair(p, q);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  PhiSequence result;
  if (p == 1) {
    // unknot, zero sequence
  } else if (q == p + 1) {
    result = phi_torus_basis(p);
  } else {
    Int k = q / p;
    Int r = q % p;
    PhiSequence a = phi_recurse(r, p, memo);
    PhiSequence b = phi_recurse(p - r, p, memo);
    result = a.scaled(k + 1) + b.scaled(k);
    // k (phi(T_{p,p+1}) - phi(T_{p-1,p})) is k at index p-1 and 0 elsewhere.
    result.add(p - 1, k);
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

PhiSequence phi_torus_recursive(const Int& p, const Int& q) {
  validate_torus(p, q);
  Int a = p, b = q;
  if (a > b) std::swap(a, b);
  Memo memo;  // confined to this call
  return phi_recurse(a, b, memo);
}

PhiSequence phi_atom(const KnotAtom& atom) {
  return phi_lspace(atom_semigroup(atom));
}

PhiSequence phi_expression(const KnotExpression& e) {
  PhiSequence out;
  for (const auto& [atom, coeff] : e.terms()) {
    out += phi_atom(atom).scaled(coeff);
  }
  return out;
}

CoarseStructureReport check_coarse_structure(const Int& p, const Int& r, const Int& k) {
  if (r >= p || r < 1 || k < 1) {
    throw std::invalid_argument("need 1 <= r < p and k >= 1");
  }
  validate_torus(p, r);
  CoarseStructureReport report;
  report.p = p;
  report.r = r;
  report.k = k;
  report.phi = phi_lspace(torus_semigroup(p, k * p + r));

  report.vanishing_above = report.phi.max_index() < p;
  report.middle_window = true;
  if (r >= 2 && r <= p - 2) {
    Int lo = r > p - r ? r : p - r;
    for (Int j = lo; j <= p - 2; ++j) {
      if (report.phi.at(j) != 0) report.middle_window = false;
    }
  }
  report.top_entry = report.phi.at(p - 1) == k;
  report.pass =
      report.vanishing_above && report.middle_window && report.top_entry;
  return report;
}

std::map<Int, Int> basis_decompose(const PhiSequence& s) {
  std::map<Int, Int> coeffs;
  Int top = s.max_index();
  for (Int j = 1; j <= top; ++j) {
    Int c = s.at(j) - s.at(j + 1);
    if (c != 0) coeffs.emplace(j + 1, c);
  }
  return coeffs;
}

PhiSequence basis_reconstruct(const std::map<Int, Int>& coeffs) {
  PhiSequence out;
  for (const auto& [p, c] : coeffs) out += phi_torus_basis(p).scaled(c);
  return out;
}

Int n_invariant(const PhiSequence& s) { return s.max_index(); }

}  // namespace knotinv
