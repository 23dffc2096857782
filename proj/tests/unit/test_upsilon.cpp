#include <doctest.h>

#include <numeric>

#include "knotinv/phi.hpp"
#include "knotinv/upsilon.hpp"

using namespace knotinv;

namespace {

Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

}  // namespace

TEST_SUITE_BEGIN("upsilon");

TEST_CASE("trefoil: -t then t-2") {
  PLFunction f = upsilon_lspace(torus_semigroup(2, 3));
  CHECK(f.breakpoints() == std::vector<Rat>{rat(0), rat(1), rat(2)});
  CHECK(f.values() == std::vector<Rat>{rat(0), rat(-1), rat(0)});
  CHECK(f(rat(1, 2)) == rat(-1, 2));
  CHECK(f(rat(3, 2)) == rat(-1, 2));
  CHECK(f.delta_prime(rat(1)) == 2);
  CHECK(f.delta_prime(rat(1, 3)) == 0);
}

TEST_CASE("unknot is identically zero") {
  PLFunction f = upsilon_lspace(NumericalSemigroup::natural_numbers());
  CHECK(f.is_zero());
  CHECK(t_invariant(f) == 0);
}

TEST_CASE("T(p-1,p) first jump at 2/(p-1) of size p-1") {
  for (long long p = 3; p <= 20; ++p) {
    PLFunction f = upsilon_lspace(torus_semigroup(p - 1, p));
    Rat t = rat(2, p - 1);
    REQUIRE(f.first_singularity() == t);
    REQUIRE(f.delta_prime(t) == p - 1);
  }
}

TEST_CASE("first singularity of a torus knot sits at 2/min(p,q)") {
  for (long long r = 2; r <= 12; ++r) {
    for (long long q = r + 1; q <= 30; ++q) {
      if (std::gcd(r, q) != 1) continue;
      PLFunction f = upsilon_lspace(torus_semigroup(r, q));
      REQUIRE_MESSAGE(f.first_singularity() == rat(2, r),
                      "(r,q)=(" << r << "," << q << ")");
    }
  }
}

TEST_CASE("initial slope is minus the genus") {
  for (long long p = 2; p <= 10; ++p) {
    for (long long q = p + 1; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      PLFunction f = upsilon_lspace(torus_semigroup(p, q));
      Rat slope = (f.values()[1] - f.values()[0]) /
                  (f.breakpoints()[1] - f.breakpoints()[0]);
      REQUIRE(slope == -rat((p - 1) * (q - 1), 2));
    }
  }
}

TEST_CASE("recursion agrees with the envelope") {
  for (long long p = 2; p <= 12; ++p) {
    for (long long q = p + 1; q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      REQUIRE_MESSAGE(
          upsilon_torus_fk(p, q) == upsilon_lspace(torus_semigroup(p, q)),
          "(p,q)=(" << p << "," << q << ")");
    }
  }
  CHECK(upsilon_torus_fk(1, 12).is_zero());
}

TEST_CASE("symmetry about t = 1") {
  for (long long p = 2; p <= 10; ++p) {
    for (long long q = p + 1; q <= 40; ++q) {
      if (std::gcd(p, q) != 1) continue;
      PLFunction f = upsilon_lspace(torus_semigroup(p, q));
      REQUIRE(f == f.reflected());
      REQUIRE(f(rat(0)) == 0);
      REQUIRE(f(rat(2)) == 0);
    }
  }
}

TEST_CASE("vanishing combinations from the Upsilon recursion") {
  for (long long p = 2; p <= 8; ++p) {
    for (long long r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= 3; ++k) {
        KnotExpression e = KnotExpression::torus(p, k * p + r);
        e = e - KnotExpression::torus(r, p);
        e = e - KnotExpression::torus(p, p + 1).scaled(k);
        REQUIRE(upsilon_expression(e).is_zero());
      }
    }
  }
}

TEST_CASE("delta prime needs an interior point") {
  PLFunction f = upsilon_lspace(torus_semigroup(2, 3));
  CHECK_THROWS_AS(f.delta_prime(rat(0)), std::domain_error);
  CHECK_THROWS_AS(f.delta_prime(rat(2)), std::domain_error);
  CHECK_THROWS_AS(f.delta_prime(rat(5, 2)), std::domain_error);
}

TEST_CASE("lambda on the trefoil cables") {
  for (long long k = 3; k <= 6; ++k) {
    KnotExpression jk = KnotExpression::atom(make_cable_atom(2, 3, k, 2 * k - 1));
    REQUIRE(lambda_hom(jk, k) == 1);
    for (long long j = k + 1; j <= 2 * k; ++j) {
      REQUIRE(lambda_hom(jk, j) == 0);
    }
  }
  CHECK(lambda_hom(KnotExpression::unknot(), 3) == 0);
}

TEST_CASE("lambda kills the basis knots") {
  for (long long p = 2; p <= 9; ++p) {
    KnotExpression e = KnotExpression::torus(p, p + 1);
    for (long long j = 1; j <= 8; ++j) {
      REQUIRE(lambda_hom(e, j) == 0);
    }
  }
}

TEST_CASE("xi on the vanishing-phi family") {
  // K = T(5,7) # -2*T(2,5) # -T(3,5) # -T(5,6) # T(4,5): jump 4 at 1/2
  KnotExpression e =
      parse_expression("T(5,7) # -2*T(2,5) # -T(3,5) # -T(5,6) # T(4,5)");
  PLFunction f = upsilon_expression(e);
  CHECK(f.delta_prime(rat(1, 2)) == 4);
  CHECK(xi_hom(e, 5) == 1);
  CHECK(xi_hom(e, 7) == 0);
  CHECK(t_invariant(f) == 2);
  CHECK(xi_hom(KnotExpression::unknot(), 4) == 0);
}

TEST_CASE("t invariant of torus knots") {
  CHECK(t_invariant(upsilon_lspace(torus_semigroup(2, 3))) == 1);
  CHECK(t_invariant(upsilon_lspace(torus_semigroup(8, 11))) == 4);
}

TEST_CASE("integrality of lambda and xi on sample expressions") {
  std::vector<KnotExpression> samples = {
      KnotExpression::torus(3, 5),
      KnotExpression::torus(4, 7) - KnotExpression::torus(2, 9).scaled(3),
      KnotExpression::atom(make_cable_atom(2, 3, 4, 7)),
  };
  for (const auto& e : samples) {
    for (long long j = 3; j <= 7; ++j) {
      REQUIRE(rat_den(lambda_hom(e, j)) == 1);
    }
    for (long long p = 3; p <= 7; ++p) {
      REQUIRE(rat_den(xi_hom(e, p)) == 1);
    }
  }
}

TEST_CASE("serialization") {
  PLFunction f = upsilon_lspace(torus_semigroup(2, 3));
  CHECK(pl_to_json(f) ==
        R"({"breakpoints":[[0,1],[1,1],[2,1]],"values":[[0,1],[-1,1],[0,1]]})");
  CHECK(pl_to_csv(f) == "t_num,t_den,v_num,v_den\n0,1,0,1\n1,1,-1,1\n2,1,0,1\n");
}

TEST_SUITE_END();
