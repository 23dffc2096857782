#include "knotinv/knot_expression.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace knotinv {

bool AtomOrder::operator()(const KnotAtom& x, const KnotAtom& y) const {
  if (x.index() != y.index()) return x.index() < y.index();
  if (std::holds_alternative<TorusAtom>(x)) {
    return std::get<TorusAtom>(x) < std::get<TorusAtom>(y);
  }
  return std::get<CableAtom>(x) < std::get<CableAtom>(y);
}

std::optional<KnotAtom> make_torus_atom(long long p, long long q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("torus parameters must be positive, got T(" +
                                std::to_string(p) + "," + std::to_string(q) +
                                ")");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus parameters T(" + std::to_string(p) +
                                "," + std::to_string(q) + ") are not coprime");
  }
  if (p > q) std::swap(p, q);
  if (p == 1) return std::nullopt;  // unknot
  return TorusAtom{p, q};
}

KnotAtom make_cable_atom(long long p, long long q, long long a, long long b) {
  auto inner = make_torus_atom(p, q);
  NumericalSemigroup companion =
      inner ? torus_semigroup(std::get<TorusAtom>(*inner).p,
                              std::get<TorusAtom>(*inner).q)
            : NumericalSemigroup::natural_numbers();
  // Validates gcd(a,b) = 1 and the L-space cabling condition.
  cable_semigroup(companion, a, b);
  if (!inner) {
    // A cable of the unknot is the torus knot T_{a,b}; normalize it away.
    auto t = make_torus_atom(a, b);
    if (!t) throw std::invalid_argument("cable of unknot with a = 1 is trivial");
    return *t;
  }
  return CableAtom{std::get<TorusAtom>(*inner), a, b};
}

NumericalSemigroup atom_semigroup(const KnotAtom& atom) {
  if (const auto* t = std::get_if<TorusAtom>(&atom)) {
    return torus_semigroup(t->p, t->q);
  }
  const auto& c = std::get<CableAtom>(atom);
  return cable_semigroup(torus_semigroup(c.inner.p, c.inner.q), c.a, c.b);
}

Int atom_genus(const KnotAtom& atom) { return atom_semigroup(atom).genus(); }

std::string atom_to_string(const KnotAtom& atom) {
  std::ostringstream out;
  if (const auto* t = std::get_if<TorusAtom>(&atom)) {
    out << "T(" << t->p << "," << t->q << ")";
  } else {
    const auto& c = std::get<CableAtom>(atom);
    out << "C(T(" << c.inner.p << "," << c.inner.q << ");" << c.a << "," << c.b
        << ")";
  }
  return out.str();
}

KnotExpression KnotExpression::atom(const KnotAtom& a, const Int& coeff) {
  KnotExpression e;
  e.add_term(a, coeff);
  return e;
}

KnotExpression KnotExpression::torus(long long p, long long q,
                                     const Int& coeff) {
  KnotExpression e;
  if (auto a = make_torus_atom(p, q)) e.add_term(*a, coeff);
  return e;
}

void KnotExpression::add_term(const KnotAtom& a, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(a, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

KnotExpression KnotExpression::operator+(const KnotExpression& rhs) const {
  KnotExpression out = *this;
  for (const auto& [a, c] : rhs.terms_) out.add_term(a, c);
  return out;
}

KnotExpression KnotExpression::operator-(const KnotExpression& rhs) const {
  KnotExpression out = *this;
  for (const auto& [a, c] : rhs.terms_) out.add_term(a, -c);
  return out;
}

KnotExpression KnotExpression::operator-() const { return scaled(-1); }

KnotExpression KnotExpression::scaled(const Int& c) const {
  KnotExpression out;
  if (c == 0) return out;
  for (const auto& [a, k] : terms_) out.terms_.emplace(a, c * k);
  return out;
}

std::string KnotExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out << " # ";
    first = false;
    if (c == -1) {
      out << "-";
    } else if (c != 1) {
      out << c << "*";
    }
    out << atom_to_string(a);
  }
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpression parse() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) fail("trailing input after '0'");
      return KnotExpression::unknot();
    }
    KnotExpression e = parse_term();
    skip_ws();
    while (pos_ < text_.size()) {
      char c = peek();
      if (c != '#' && c != '+') fail("expected '#' or '+' between terms");
      ++pos_;
      e = e + parse_term();
      skip_ws();
    }
    return e;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v < 0) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  bool at_integer() const {
    if (std::isdigit(static_cast<unsigned char>(peek()))) return true;
    return peek() == '-' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  KnotExpression parse_term() {
    skip_ws();
    Int coeff = 1;
    if (at_integer()) {
      coeff = parse_int();
      expect('*');
    }
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      coeff = -coeff;
      skip_ws();
    }
    return parse_atom(coeff);
  }

  KnotExpression parse_atom(const Int& coeff) {
    skip_ws();
    size_t start = pos_;
    char c = peek();
    if (c == 'T') {
      ++pos_;
      expect('(');
      long long p = parse_int();
      expect(',');
      long long q = parse_int();
      expect(')');
      return make_atom_checked(start, [&] { return make_torus_atom(p, q); },
                               coeff);
    }
    if (c == 'C') {
      ++pos_;
      expect('(');
      skip_ws();
      if (peek() != 'T') fail("cable companion must be a torus atom T(p,q)");
      ++pos_;
      expect('(');
      long long p = parse_int();
      expect(',');
      long long q = parse_int();
      expect(')');
      expect(';');
      long long a = parse_int();
      expect(',');
      long long b = parse_int();
      expect(')');
      return make_atom_checked(
          start,
          [&]() -> std::optional<KnotAtom> { return make_cable_atom(p, q, a, b); },
          coeff);
    }
    fail("expected atom 'T(p,q)' or 'C(T(p,q);a,b)'");
  }

  template <typename F>
  KnotExpression make_atom_checked(size_t start, F&& build, const Int& coeff) {
    try {
      std::optional<KnotAtom> a = build();
      if (!a) return KnotExpression::unknot();
      return KnotExpression::atom(*a, coeff);
    } catch (const std::invalid_argument& e) {
      std::string atom_text(text_.substr(start, pos_ - start));
      throw std::invalid_argument(std::string(e.what()) + " in '" + atom_text +
                                  "'");
    }
  }
};

}  // namespace

KnotExpression parse_expression(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace knotinv
