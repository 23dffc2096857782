#include <doctest.h>

#include <numeric>

#include "knotinv/staircase.hpp"

using namespace knotinv;

namespace {

std::vector<Int> ints(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_SUITE_BEGIN("staircase");

TEST_CASE("trefoil staircase") {
  Staircase st = torus_staircase(2, 3);
  CHECK(st.steps() == ints({1, 1}));
  CHECK(st.genus() == 1);
  CHECK(st.alexander_exponents() == ints({0, 1, 2}));
}

TEST_CASE("T(3,4) staircase") {
  CHECK(torus_staircase(3, 4).steps() == ints({1, 2, 2, 1}));
}

TEST_CASE("unknot staircase is empty") {
  Staircase st = torus_staircase(1, 9);
  CHECK(st.empty());
  CHECK(st.genus() == 0);
  CHECK(set_from_staircase(st) == IntSet::all_at_least(0));
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(Staircase(ints({1, 2})), std::invalid_argument);     // not palindromic
  CHECK_THROWS_AS(Staircase(ints({1, 1, 1})), std::invalid_argument);  // odd length
  CHECK_THROWS_AS(Staircase(ints({0, 0})), std::invalid_argument);     // nonpositive
}

TEST_CASE("set of a staircase") {
  CHECK(set_from_staircase(Staircase(ints({1, 1}))) ==
        IntSet::with_upper_tail({0}, 2));
  CHECK(set_from_staircase(Staircase(ints({1, 2, 2, 1}))) ==
        IntSet::with_upper_tail({0, 3, 4}, 6));
}

TEST_CASE("round trips over coprime pairs") {
  for (long long p = 1; p <= 30; ++p) {
    for (long long q = p + 1; q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      NumericalSemigroup s = torus_semigroup(p, q);
      Staircase st = staircase_from_semigroup(s);
      REQUIRE(set_from_staircase(st) == s.as_int_set());
      REQUIRE(staircase_from_set(set_from_staircase(st)) == st);
      REQUIRE(2 * st.genus() == Int(p - 1) * (q - 1));
    }
  }
}

TEST_CASE("prefix structure of T(p,kp+r)") {
  // the staircase starts with k copies of (1, p-1)
  for (long long p = 3; p <= 9; ++p) {
    for (long long r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= 3; ++k) {
        Staircase st = torus_staircase(p, k * p + r);
        const auto& b = st.steps();
        REQUIRE(b.size() >= static_cast<size_t>(2 * k));
        for (long long i = 0; i < k; ++i) {
          REQUIRE(b[2 * i] == 1);
          REQUIRE(b[2 * i + 1] == p - 1);
        }
      }
    }
  }
}

TEST_CASE("abstract staircases round trip through sets") {
  Staircase st(ints({2, 1, 4, 4, 1, 2}));
  // the associated set need not be closed under addition
  IntSet a = set_from_staircase(st);
  CHECK(staircase_from_set(a) == st);
}

TEST_SUITE_END();
