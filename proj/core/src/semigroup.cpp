#include "knotinv/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotinv {

namespace {

std::string join(const std::vector<Int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

// Sieve membership of the semigroup generated by gens over [0, bound].
std::vector<bool> sieve(const std::vector<Int>& gens, size_t bound) {
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (const Int& g : gens) {
    if (g > bound) continue;
    size_t step = to_index(g);
    for (size_t n = step; n <= bound; ++n) {
      if (in[n - step]) in[n] = true;
    }
  }
  return in;
}

// Least c such that [c, bound] is fully marked; requires in[bound] = true.
size_t conductor_in(const std::vector<bool>& in) {
  size_t c = in.size() - 1;
  while (c > 0 && in[c - 1]) --c;
  return c;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_table(std::vector<bool> table,
                                                  Int conductor,
                                                  std::vector<Int> generators) {
  NumericalSemigroup s;
  s.table_ = std::move(table);
  s.conductor_ = std::move(conductor);
  s.generators_ = std::move(generators);
  return s;
}

NumericalSemigroup NumericalSemigroup::natural_numbers() {
  return from_table({true}, 0, {1});
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) {
    throw std::invalid_argument("semigroup needs at least one generator");
  }
  Int g = 0;
  for (const Int& x : gens) {
    if (x < 1) {
      throw std::invalid_argument("generators must be positive, got " + x.str());
    }
    g = int_gcd(g, x);
  }
  if (g != 1) {
    throw std::invalid_argument("generators {" + join(gens) +
                                "} have gcd " + g.str() +
                                " != 1, complement would be infinite");
  }
  if (gens.front() == 1) return natural_numbers();

  // Sieve with a growing bound until a run of min-gen consecutive members
  // appears; from there on every integer is a member.
  Int lo = gens.front(), hi = gens.back();
  Int bound = (lo - 1) * (hi - 1) + lo;
  for (;;) {
    std::vector<bool> in = sieve(gens, to_index(bound));
    size_t run = 0;
    for (size_t n = 0; n < in.size(); ++n) {
      run = in[n] ? run + 1 : 0;
      if (run == to_index(lo)) {
        size_t c = n + 1 - run;
        std::vector<bool> table(in.begin(), in.begin() + c + 1);
        return from_table(std::move(table), Int(c), std::move(gens));
      }
    }
    bound *= 2;
  }
}

bool NumericalSemigroup::contains(const Int& n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return table_[to_index(n)];
}

Int NumericalSemigroup::genus() const {
  Int g = 0;
  for (size_t n = 0; n < table_.size(); ++n) {
    if (!table_[n]) ++g;
  }
  return g;
}

std::vector<Int> NumericalSemigroup::members_upto(const Int& bound) const {
  std::vector<Int> out;
  for (Int n = 0; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (size_t n = 0; n < table_.size(); ++n) {
    if (!table_[n]) out.push_back(Int(n));
  }
  return out;
}

IntSet NumericalSemigroup::as_int_set() const {
  std::vector<Int> elems;
  for (size_t n = 0; n + 1 < table_.size(); ++n) {
    if (table_[n]) elems.push_back(Int(n));
  }
  return IntSet::with_upper_tail(std::move(elems), conductor_);
}

bool NumericalSemigroup::closed_under_addition() const {
  std::vector<Int> m = members_upto(conductor_);
  for (const Int& a : m) {
    for (const Int& b : m) {
      if (!contains(a + b)) return false;
    }
  }
  return contains(0);
}

NumericalSemigroup torus_semigroup(const Int& p, const Int& q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("torus parameters must be positive, got (" +
                                p.str() + "," + q.str() + ")");
  }
  if (int_gcd(p, q) != 1) {
    throw std::invalid_argument("torus parameters (" + p.str() + "," +
                                q.str() + ") are not coprime");
  }
  if (p == 1 || q == 1) return NumericalSemigroup::natural_numbers();
  Int conductor = (p - 1) * (q - 1);
  std::vector<bool> in = sieve({p, q}, to_index(conductor));
  return NumericalSemigroup::from_table(std::move(in), conductor, {p, q});
}

NumericalSemigroup cable_semigroup(const NumericalSemigroup& s, const Int& a,
                                   const Int& b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("cable parameters must be positive, got (" +
                                a.str() + "," + b.str() + ")");
  }
  if (int_gcd(a, b) != 1) {
    throw std::invalid_argument("cable parameters (" + a.str() + "," +
                                b.str() + ") are not coprime");
  }
  Int g = s.genus();
  if (b < a * (2 * g - 1)) {
    throw std::invalid_argument(
        "cable condition violated: b = " + b.str() + " < a(2g-1) = " +
        Int(a * (2 * g - 1)).str() + " for genus " + g.str() +
        "; the cable would not be an L-space knot");
  }

  // Every n >= a*conductor(S) + b*(a-1) is of the form a*s + b*t: choose the
  // unique t in [0, a-1] with b*t = n mod a, which leaves a*s >= a*conductor.
  Int bound = a * s.conductor() + b * (a - 1);
  size_t nb = to_index(bound);
  std::vector<bool> in(nb + 1, false);
  for (Int m = 0; a * m <= bound; ++m) {
    if (!s.contains(m)) continue;
    for (Int n = a * m; n <= bound; n += b) in[to_index(n)] = true;
  }
  size_t c = conductor_in(in);
  in.resize(c + 1);

  std::vector<Int> gens;
  for (const Int& g0 : s.generators()) gens.push_back(a * g0);
  gens.push_back(b);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return NumericalSemigroup::from_table(std::move(in), Int(c), std::move(gens));
}

AperyData apery(const NumericalSemigroup& s, const Int& p) {
  if (p < 1 || !s.contains(p)) {
    throw std::invalid_argument("Apery base " + p.str() +
                                " is not a member of the semigroup");
  }
  AperyData data;
  data.base = p;
  data.beta.resize(to_index(p));
  for (Int i = 0; i < p; ++i) {
    Int n = i;
    while (!s.contains(n)) n += p;
    data.beta[to_index(i)] = n;
  }
  data.omega = data.beta;
  std::sort(data.omega.begin(), data.omega.end());
  data.kappa.reserve(data.omega.size());
  for (const Int& w : data.omega) data.kappa.push_back(w % p);

  for (size_t i = 1; i < data.omega.size(); ++i) {
    Int lo = (data.omega[i - 1] / p) * p;
    Int hi = (data.omega[i] / p) * p;
    std::vector<Int> elems;
    for (Int n = lo; n <= hi; ++n) {
      if (s.contains(n)) elems.push_back(n);
    }
    data.blocks.push_back(IntSet::finite(std::move(elems)));
  }
  return data;
}

BlockDecompositionReport verify_block_decomposition(const NumericalSemigroup& s, const Int& p) {
  AperyData data = apery(s, p);
  BlockDecompositionReport report;
  report.base = p;
  report.pass = true;
  for (size_t i = 1; i < data.omega.size(); ++i) {
    BlockCheck check;
    check.index = Int(i);
    check.block_phi = phi_of_set(data.blocks[i - 1]);
    check.multiplier = data.omega[i] / p - data.omega[i - 1] / p;
    std::vector<Int> pattern(data.kappa.begin(), data.kappa.begin() + i);
    pattern.push_back(p);
    check.pattern_phi = phi_of_set(IntSet::finite(std::move(pattern)));
    check.equal = check.block_phi == check.pattern_phi.scaled(check.multiplier);
    report.pass = report.pass && check.equal;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace knotinv
