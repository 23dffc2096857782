#include "knotinv/epsilon_order.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace knotinv {

std::string BracketClass::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (i) out << ",";
    out << steps_[i];
  }
  out << "]";
  return out.str();
}

SplitResult split_prefix(const BracketClass& b, const Int& n) {
  if (n < 1) throw std::invalid_argument("split base must be positive");
  const auto& s = b.steps();
  size_t m = s.size() / 2;
  size_t k = 0;
  // Prefix pairs (1,n); palindromicity mirrors them at the end, and the
  // prefix and suffix regions must not overlap.
  while (2 * (k + 1) <= m && s[2 * k] == 1 && s[2 * k + 1] == n) ++k;
  std::vector<Int> core(s.begin() + 2 * k, s.end() - 2 * k);
  for (const Int& c : core) {
    if (c > n) {
      throw std::invalid_argument("split with base " + n.str() +
                                  " does not apply: core entry " + c.str() +
                                  " exceeds the base");
    }
  }
  return SplitResult{Int(k), BracketClass(std::move(core))};
}

std::string compare_result_name(CompareResult r) {
  switch (r) {
    case CompareResult::much_less: return "much-less";
    case CompareResult::much_greater: return "much-greater";
    case CompareResult::equal: return "equal";
    case CompareResult::unknown: return "unknown";
  }
  return "unknown";
}

CompareResult compare_brackets(const BracketClass& x, const BracketClass& y) {
  if (x == y) return CompareResult::equal;
  if (x.empty() || y.empty()) return CompareResult::unknown;
  const auto& a = x.steps();
  const auto& b = y.steps();
  // First-entry rule: a larger leading step is strictly dominated.
  if (a[0] > b[0]) return CompareResult::much_less;
  if (a[0] < b[0]) return CompareResult::much_greater;
  // Second-entry rule: equal leading steps, a larger second step dominates.
  if (a[1] > b[1]) return CompareResult::much_greater;
  if (a[1] < b[1]) return CompareResult::much_less;
  return CompareResult::unknown;
}

namespace {

// b1 <= b2 in the sense usable for weakening remainder bounds: equal, or b1
// strictly dominated by b2.
bool bound_subsumed_by(const BracketClass& b1, const BracketClass& b2) {
  CompareResult r = compare_brackets(b1, b2);
  return r == CompareResult::equal || r == CompareResult::much_less;
}

}  // namespace

ClassExpr ClassExpr::bracket(BracketClass b, Int coeff) {
  ClassExpr e;
  if (coeff != 0 && !b.empty()) e.terms_.emplace(std::move(b), std::move(coeff));
  return e;
}

ClassExpr ClassExpr::remainder(BracketClass bound) {
  ClassExpr e;
  e.remainder_bound_ = std::move(bound);
  return e;
}

ClassExpr ClassExpr::operator+(const ClassExpr& rhs) const {
  ClassExpr out = *this;
  out.remainder_core_.reset();
  for (const auto& [b, c] : rhs.terms_) {
    auto [it, inserted] = out.terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  out.bounds_comparable_ = bounds_comparable_ && rhs.bounds_comparable_;
  if (rhs.remainder_bound_) {
    if (!out.remainder_bound_) {
      out.remainder_bound_ = rhs.remainder_bound_;
    } else if (bound_subsumed_by(*out.remainder_bound_,
                                 *rhs.remainder_bound_)) {
      out.remainder_bound_ = rhs.remainder_bound_;
    } else if (!bound_subsumed_by(*rhs.remainder_bound_,
                                  *out.remainder_bound_)) {
      out.bounds_comparable_ = false;  // incomparable bounds
    }
  }
  return out;
}

ClassExpr ClassExpr::operator-(const ClassExpr& rhs) const {
  // Remainders are sign-agnostic, so subtraction only flips the terms.
  return *this + rhs.scaled(-1);
}

ClassExpr ClassExpr::scaled(const Int& c) const {
  ClassExpr out;
  if (c == 0) {
    // The remainder survives with its bound: c*O of a dominated O need not
    // vanish symbolically, but 0*x = 0 for the named terms.
    out.remainder_bound_ = remainder_bound_;
    out.bounds_comparable_ = bounds_comparable_;
    return out;
  }
  for (const auto& [b, k] : terms_) out.terms_.emplace(b, c * k);
  out.remainder_bound_ = remainder_bound_;
  out.bounds_comparable_ = bounds_comparable_;
  return out;
}

std::string ClassExpr::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c << "*";
    out << b.to_string();
  }
  if (first) out << "0";
  if (remainder_bound_) {
    out << " + O, 0<=O<<" << remainder_bound_->to_string();
    if (!bounds_comparable_) out << " (bound not certified)";
  }
  return out.str();
}

namespace {

// Shape k*[1,a,a,1] (+ dominated remainder): returns a when it matches.
std::optional<Int> dominant_form(const ClassExpr& e) {
  if (!e.bounds_comparable()) return std::nullopt;
  if (e.terms().size() != 1) return std::nullopt;
  const auto& [b, c] = *e.terms().begin();
  if (c < 1) return std::nullopt;
  const auto& s = b.steps();
  if (s.size() != 4 || s[0] != 1 || s[1] != s[2] || s[3] != 1) {
    return std::nullopt;
  }
  if (e.remainder_bound() &&
      !bound_subsumed_by(*e.remainder_bound(), b)) {
    return std::nullopt;
  }
  return s[1];
}

}  // namespace

ExplainedCompare compare_explained(const ClassExpr& x, const ClassExpr& y) {
  if (x == y) return {CompareResult::equal, "structural-identity"};

  // Pure single brackets with positive multiplicity: the bracket rules
  // decide, and strict domination absorbs the multiplicities.
  bool x_pure = x.terms().size() == 1 && !x.remainder_bound() &&
                x.terms().begin()->second >= 1;
  bool y_pure = y.terms().size() == 1 && !y.remainder_bound() &&
                y.terms().begin()->second >= 1;
  if (x_pure && y_pure) {
    const auto& a = x.terms().begin()->first;
    const auto& b = y.terms().begin()->first;
    CompareResult r = compare_brackets(a, b);
    if (r == CompareResult::equal) {
      return x.terms().begin()->second == y.terms().begin()->second
                 ? ExplainedCompare{CompareResult::equal, "identical brackets"}
                 : ExplainedCompare{CompareResult::unknown,
                                    "same bracket, different multiplicity"};
    }
    if (r == CompareResult::unknown) {
      return {r, "neither first-entry nor second-entry rule applies"};
    }
    std::string rule = a.steps()[0] != b.steps()[0] ? "first-entry-rule"
                                                    : "second-entry-rule";
    return {r, rule};
  }

  // Dominant-form expressions: the lead brackets decide.
  auto ax = dominant_form(x);
  auto ay = dominant_form(y);
  if (ax && ay) {
    if (*ax == *ay) {
      return {CompareResult::unknown, "equal lead brackets"};
    }
    return {*ax < *ay ? CompareResult::much_less : CompareResult::much_greater,
            "second-entry-rule on lead brackets; remainders dominated by "
            "their bounds"};
  }

  return {CompareResult::unknown, "expressions outside the rule fragment"};
}

CompareResult compare(const ClassExpr& x, const ClassExpr& y) {
  return compare_explained(x, y).relation;
}

ClassExpr torus_class(const Int& p, const Int& q) {
  Int a = p, b = q;
  if (a > b) std::swap(a, b);
  Staircase st = torus_staircase(a, b);  // validates the pair
  if (a == 1) return ClassExpr();
  if (a == 2) return ClassExpr::bracket(BracketClass(st));
  SplitResult split = split_prefix(BracketClass(st), a - 1);
  Int r = b % a;
  ClassExpr e = ClassExpr::bracket(
      BracketClass(std::vector<Int>{1, a - 1, a - 1, 1}), split.copies);
  if (!split.core.empty()) {
    e.remainder_bound_ = BracketClass(std::vector<Int>{1, r, r, 1});
    e.remainder_core_ = split.core;
  }
  return e;
}

ClassExpr family_upsilon_class(const Int& p, const Int& r, const Int& k) {
  if (r < 2 || r > p - 2 || int_gcd(p, r) != 1 || k < 1) {
    throw std::invalid_argument(
        "need coprime (p,r) with 2 <= r <= p-2 and k >= 1");
  }
  // Whole classes of the subtracted torus knots enter as bounded remainders;
  // the lead brackets of T_{p,kp+r} and -k T_{p,p+1} cancel, leaving the
  // k-fold bracket of T_{p-1,p}.
  ClassExpr e = torus_class(p, k * p + r);
  e = e - ClassExpr::remainder(
              BracketClass(std::vector<Int>{1, r, r, 1})).scaled(k + 1);
  e = e - ClassExpr::remainder(
              BracketClass(std::vector<Int>{1, p - r, p - r, 1})).scaled(k);
  e = e - torus_class(p, p + 1).scaled(k);
  e = e + torus_class(p - 1, p).scaled(k);
  return e;
}

DominanceCertificate dominance_chain(const std::vector<ClassExpr>& exprs) {
  DominanceCertificate cert;
  for (const auto& e : exprs) cert.exprs.push_back(e.to_string());
  cert.certified = true;
  for (size_t i = 0; i + 1 < exprs.size(); ++i) {
    DominanceStep step;
    step.index = i;
    if (!dominant_form(exprs[i]) || !dominant_form(exprs[i + 1])) {
      step.relation = CompareResult::unknown;
      step.rule = "shape-mismatch: expected k*[1,a,a,1] with dominated remainder";
    } else {
      ExplainedCompare c = compare_explained(exprs[i], exprs[i + 1]);
      step.relation = c.relation;
      step.rule = c.rule;
    }
    if (step.relation != CompareResult::much_less) {
      cert.certified = false;
      if (!cert.failing_index) cert.failing_index = i;
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::string dominance_certificate_to_json(const DominanceCertificate& cert) {
  nlohmann::json j;
  j["classes"] = cert.exprs;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : cert.steps) {
    j["steps"].push_back({{"index", s.index},
                          {"relation", compare_result_name(s.relation)},
                          {"rule", s.rule}});
  }
  j["certified"] = cert.certified;
  j["conclusion"] =
      cert.certified
          ? "strictly dominated chain of positive classes: the classes are "
            "linearly independent"
          : "chain not certified";
  if (cert.failing_index) j["failing_index"] = *cert.failing_index;
  return j.dump(2);
}

}  // namespace knotinv
