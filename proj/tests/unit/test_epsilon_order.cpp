#include <doctest.h>

#include <numeric>
#include <random>

#include "knotinv/epsilon_order.hpp"

using namespace knotinv;

namespace {

BracketClass bracket(std::initializer_list<long long> v) {
  return BracketClass(std::vector<Int>(v.begin(), v.end()));
}

// Random palindromic bracket of length 2m with entries in [1,5].
BracketClass random_bracket(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 4), entry(1, 5);
  int m = len(rng);
  std::vector<Int> half;
  for (int i = 0; i < m; ++i) half.push_back(entry(rng));
  std::vector<Int> full(half);
  for (int i = m - 1; i >= 0; --i) full.push_back(half[i]);
  return BracketClass(std::move(full));
}

}  // namespace

TEST_SUITE_BEGIN("epsilon_order");

TEST_CASE("split of a single pattern") {
  SplitResult s = split_prefix(bracket({1, 4, 4, 1}), 4);
  CHECK(s.copies == 1);
  CHECK(s.core.empty());
}

TEST_CASE("split with no prefix") {
  SplitResult s = split_prefix(bracket({2, 2}), 3);
  CHECK(s.copies == 0);
  CHECK(s.core == bracket({2, 2}));
}

TEST_CASE("split is inapplicable when the core is too tall") {
  CHECK_THROWS_WITH_AS(split_prefix(bracket({1, 3, 3, 1}), 2),
                       doctest::Contains("does not apply"),
                       std::invalid_argument);
}

TEST_CASE("split of torus staircases finds the expansion depth") {
  for (long long p = 3; p <= 10; ++p) {
    for (long long r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= 4; ++k) {
        Staircase st = torus_staircase(p, k * p + r);
        SplitResult s = split_prefix(BracketClass(st), p - 1);
        REQUIRE(s.copies == k);
        for (const Int& c : s.core.steps()) REQUIRE(c < p);
      }
    }
  }
}

TEST_CASE("split reassembles to the input") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> base(1, 5), copies(0, 3);
  for (int iter = 0; iter < 300; ++iter) {
    Int n = base(rng);
    BracketClass core = random_bracket(rng);
    bool ok = true;
    for (const Int& c : core.steps()) ok = ok && c <= n;
    if (!ok) continue;
    int k = copies(rng);
    std::vector<Int> b;
    for (int i = 0; i < k; ++i) {
      b.push_back(1);
      b.push_back(n);
    }
    b.insert(b.end(), core.steps().begin(), core.steps().end());
    for (int i = 0; i < k; ++i) {
      b.push_back(n);
      b.push_back(1);
    }
    SplitResult s = split_prefix(BracketClass(b), n);
    // maximal decomposition: at least k copies, and reassembly is exact
    REQUIRE(s.copies >= k);
    std::vector<Int> re;
    for (Int i = 0; i < s.copies; ++i) {
      re.push_back(1);
      re.push_back(n);
    }
    re.insert(re.end(), s.core.steps().begin(), s.core.steps().end());
    for (Int i = 0; i < s.copies; ++i) {
      re.push_back(n);
      re.push_back(1);
    }
    REQUIRE(re == b);
  }
}

TEST_CASE("bracket comparison rules") {
  CHECK(compare_brackets(bracket({2, 1, 1, 2}), bracket({1, 1})) ==
        CompareResult::much_less);
  CHECK(compare_brackets(bracket({1, 3, 3, 1}), bracket({1, 2, 2, 1})) ==
        CompareResult::much_greater);
  CHECK(compare_brackets(bracket({1, 1}), bracket({1, 1})) ==
        CompareResult::equal);
  CHECK(compare_brackets(bracket({2, 2}), bracket({2, 2, 2, 2})) ==
        CompareResult::unknown);
  CHECK(compare_brackets(bracket({1, 1, 1, 1}), bracket({1, 2, 2, 1})) ==
        CompareResult::much_less);
}

TEST_CASE("comparison is antisymmetric") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 500; ++iter) {
    BracketClass x = random_bracket(rng);
    BracketClass y = random_bracket(rng);
    CompareResult xy = compare_brackets(x, y);
    CompareResult yx = compare_brackets(y, x);
    if (xy == CompareResult::much_less) {
      REQUIRE(yx == CompareResult::much_greater);
    } else if (xy == CompareResult::much_greater) {
      REQUIRE(yx == CompareResult::much_less);
    } else {
      REQUIRE(xy == yx);
    }
  }
}

TEST_CASE("strict torus-class comparisons agree with the T invariant") {
  // Torus staircases all start with 1, so only the second-entry rule can
  // fire, and a strict relation must be consistent with the reciprocal
  // first-singularity invariant.
  for (long long p1 = 2; p1 <= 7; ++p1) {
    for (long long q1 = p1 + 1; q1 <= 16; ++q1) {
      if (std::gcd(p1, q1) != 1) continue;
      for (long long p2 = 2; p2 <= 7; ++p2) {
        for (long long q2 = p2 + 1; q2 <= 16; ++q2) {
          if (std::gcd(p2, q2) != 1) continue;
          CompareResult r = compare_brackets(BracketClass(torus_staircase(p1, q1)),
                                             BracketClass(torus_staircase(p2, q2)));
          if (r == CompareResult::much_less) {
            REQUIRE(p1 < p2);  // T invariant p1/2 < p2/2 is consistent
          } else if (r == CompareResult::much_greater) {
            REQUIRE(p1 > p2);
          }
        }
      }
    }
  }
}

TEST_CASE("explained comparisons cite a rule") {
  ExplainedCompare c1 = compare_explained(ClassExpr::bracket(bracket({2, 2})),
                                          ClassExpr::bracket(bracket({1, 1})));
  CHECK(c1.relation == CompareResult::much_less);
  CHECK(c1.rule == "first-entry-rule");
  ExplainedCompare c2 =
      compare_explained(ClassExpr::bracket(bracket({1, 3, 3, 1})),
                        ClassExpr::bracket(bracket({1, 2, 2, 1})));
  CHECK(c2.relation == CompareResult::much_greater);
  CHECK(c2.rule == "second-entry-rule");
}

TEST_CASE("class expressions compare through the rules") {
  ClassExpr x = ClassExpr::bracket(bracket({2, 1, 1, 2}));
  ClassExpr y = ClassExpr::bracket(bracket({1, 1}));
  CHECK(compare(x, y) == CompareResult::much_less);
  CHECK(compare(y, x) == CompareResult::much_greater);
  CHECK(compare(x, x) == CompareResult::equal);
  CHECK(compare(ClassExpr::bracket(bracket({1, 1}), 2),
                ClassExpr::bracket(bracket({1, 1}), 3)) ==
        CompareResult::unknown);
}

TEST_CASE("torus class of T(5,8)") {
  ClassExpr e = torus_class(5, 8);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first == bracket({1, 4, 4, 1}));
  CHECK(e.terms().begin()->second == 1);
  REQUIRE(e.remainder_bound().has_value());
  CHECK(*e.remainder_bound() == bracket({1, 3, 3, 1}));
  REQUIRE(e.remainder_core().has_value());
  SplitResult s = split_prefix(BracketClass(torus_staircase(5, 8)), 4);
  CHECK(*e.remainder_core() == s.core);
}

TEST_CASE("torus class for p = 2 is the all-ones bracket") {
  for (long long k = 1; k <= 5; ++k) {
    ClassExpr e = torus_class(2, 2 * k + 1);
    REQUIRE(e.terms().size() == 1);
    const auto& b = e.terms().begin()->first;
    REQUIRE(b.steps().size() == static_cast<size_t>(2 * k));
    for (const Int& x : b.steps()) REQUIRE(x == 1);
    CHECK(!e.remainder_bound().has_value());
    CHECK(compare(e, ClassExpr::bracket(bracket({1, 2, 2, 1}))) ==
          CompareResult::much_less);
  }
}

TEST_CASE("torus class of T(3,4) has no remainder") {
  ClassExpr e = torus_class(3, 4);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first == bracket({1, 2, 2, 1}));
  CHECK(!e.remainder_bound().has_value());
}

TEST_CASE("torus class decomposition depth matches the quotient") {
  for (long long p = 3; p <= 9; ++p) {
    for (long long r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= 3; ++k) {
        ClassExpr e = torus_class(p, k * p + r);
        std::vector<Int> lead{1, p - 1, p - 1, 1};
        REQUIRE(e.terms().at(BracketClass(lead)) == k);
      }
    }
  }
}

TEST_CASE("family classes have the dominated shape") {
  ClassExpr e = family_upsilon_class(5, 2, 1);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first == bracket({1, 3, 3, 1}));
  CHECK(e.terms().begin()->second == 1);
  REQUIRE(e.remainder_bound().has_value());
  CHECK(e.bounds_comparable());
}

TEST_CASE("dominance chain certifies the family") {
  std::vector<ClassExpr> exprs = {
      family_upsilon_class(5, 2, 1),
      family_upsilon_class(7, 2, 1),
      family_upsilon_class(9, 2, 1),
  };
  DominanceCertificate cert = dominance_chain(exprs);
  CHECK(cert.certified);
  REQUIRE(cert.steps.size() == 2);
  for (const auto& s : cert.steps) {
    CHECK(s.relation == CompareResult::much_less);
  }
  std::string j = dominance_certificate_to_json(cert);
  CHECK(j.find("\"certified\": true") != std::string::npos);
}

TEST_CASE("single class chain is trivially certified") {
  DominanceCertificate cert = dominance_chain({family_upsilon_class(5, 2, 1)});
  CHECK(cert.certified);
  CHECK(cert.steps.empty());
}

TEST_CASE("equal classes do not chain") {
  std::vector<ClassExpr> exprs = {
      family_upsilon_class(5, 2, 1),
      family_upsilon_class(5, 2, 1),
  };
  DominanceCertificate cert = dominance_chain(exprs);
  CHECK(!cert.certified);
  REQUIRE(cert.failing_index.has_value());
  CHECK(*cert.failing_index == 0);
  // no strict domination between equal classes
  CHECK(cert.steps[0].relation != CompareResult::much_less);
}

TEST_SUITE_END();
