#include <doctest.h>

#include <numeric>

#include "knotinv/knot_algebra.hpp"

using namespace knotinv;

namespace {

Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

std::vector<FamilyParams> params(
    std::initializer_list<std::array<long long, 3>> v) {
  std::vector<FamilyParams> out;
  for (const auto& [p, r, k] : v) out.push_back({Int(p), Int(r), Int(k)});
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("knot_algebra");

TEST_CASE("group laws") {
  KnotExpression a = parse_expression("T(2,3) # 2*T(3,5)");
  KnotExpression b = parse_expression("-T(3,5) # C(T(2,3);3,5)");
  KnotExpression c = parse_expression("4*T(2,7)");
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a - a).empty());
  CHECK(a + KnotExpression::unknot() == a);
  CHECK(a.scaled(3) == a + a + a);
}

TEST_CASE("phi-family values") {
  auto knots = family_phi(params({{5, 2, 1}, {7, 2, 1}}));
  REQUIRE(knots.size() == 2);
  PhiSequence phi1 = phi_expression(knots[0]);
  PhiSequence phi2 = phi_expression(knots[1]);
  CHECK(phi1.at(3) == -1);   // phi_{p_1-2}(K_1) = -k_1
  CHECK(phi2.at(5) == -1);   // phi_{p_2-2}(K_2) = -k_2
  CHECK(phi1.at(5) == 0);    // phi_{p_2-2}(K_1) = 0
  CHECK(upsilon_expression(knots[0]).is_zero());
  CHECK(upsilon_expression(knots[1]).is_zero());
}

TEST_CASE("phi-family spacing precondition") {
  CHECK_THROWS_WITH_AS(family_phi(params({{5, 2, 1}, {6, 1, 1}})),
                       doctest::Contains("params[1]"), std::invalid_argument);
  CHECK_THROWS_AS(family_phi(params({{5, 2, 1}, {6, 5, 1}})),
                  std::invalid_argument);
}

TEST_CASE("phi-family sweep: Upsilon vanishes, phi does not") {
  for (long long p = 4; p <= 15; ++p) {
    for (long long r = 2; r <= p - 2; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= 2; ++k) {
        auto knots = family_phi(params({{p, r, k}}));
        REQUIRE(upsilon_expression(knots[0]).is_zero());
        REQUIRE(!phi_expression(knots[0]).is_zero());
        REQUIRE(phi_expression(knots[0]).at(p - 2) == -k);
      }
    }
  }
}

TEST_CASE("upsilon-family values") {
  auto knots = family_upsilon(params({{5, 2, 1}}));
  REQUIRE(knots.size() == 1);
  CHECK(phi_expression(knots[0]).is_zero());
  CHECK(upsilon_expression(knots[0]).delta_prime(rat(1, 2)) == 4);
  CHECK(xi_hom(knots[0], 5) == 1);
}

TEST_CASE("upsilon-family preconditions") {
  CHECK_THROWS_WITH_AS(family_upsilon(params({{4, 3, 1}})),
                       doctest::Contains("2 <= r <= p-2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(family_upsilon(params({{7, 2, 1}, {5, 2, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_upsilon(params({{5, 2, 0}})), std::invalid_argument);
}

TEST_CASE("upsilon-family sweep: phi vanishes, Upsilon does not") {
  for (long long p = 4; p <= 15; ++p) {
    for (long long r = 2; r <= p - 2; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= 2; ++k) {
        auto knots = family_upsilon(params({{p, r, k}}));
        REQUIRE(phi_expression(knots[0]).is_zero());
        REQUIRE(!upsilon_expression(knots[0]).is_zero());
      }
    }
  }
}

TEST_CASE("cable family J_k # -L_k") {
  auto knots = family_jk_lk({3, 4});
  REQUIRE(knots.size() == 2);
  CHECK(phi_expression(knots[0]).is_zero());
  CHECK(lambda_hom(knots[0], 3) == 1);
  CHECK(lambda_hom(knots[1], 5) == 0);
  CHECK(lambda_hom(knots[1], 4) == 1);
  CHECK_THROWS_AS(family_jk_lk({2}), std::invalid_argument);
}

TEST_CASE("L_k reproduces the phi of the cable") {
  for (long long k = 3; k <= 6; ++k) {
    CHECK(phi_expression(lk_torus_sum(k)) == phi_expression(jk_cable(k)));
  }
}

TEST_CASE("homomorphism labels round trip") {
  std::vector<Homomorphism> homs = {
      {Homomorphism::Kind::phi_entry, 3, -1},
      {Homomorphism::Kind::lambda, 4, 1},
      {Homomorphism::Kind::xi, 5, 1},
  };
  CHECK(homs[0].label() == "-phi_3");
  CHECK(homs[1].label() == "lambda_4");
  CHECK(homs[2].label() == "xi_5");
  for (const auto& h : homs) {
    Homomorphism back = Homomorphism::from_label(h.label());
    CHECK(back.kind == h.kind);
    CHECK(back.index == h.index);
    CHECK(back.sign == h.sign);
  }
  CHECK_THROWS_AS(Homomorphism::from_label("nu_2"), std::invalid_argument);
}

TEST_CASE("certificate for the phi family") {
  auto knots = family_phi(params({{5, 2, 1}, {7, 2, 1}, {9, 2, 1}}));
  std::vector<Homomorphism> homs = {
      {Homomorphism::Kind::phi_entry, 3, -1},
      {Homomorphism::Kind::phi_entry, 5, -1},
      {Homomorphism::Kind::phi_entry, 7, -1},
  };
  IndependenceCertificate cert = independence_certificate(knots, homs);
  CHECK(cert.verdict);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(cert.matrix[i][i] == 1);
    for (size_t j = i + 1; j < 3; ++j) CHECK(cert.matrix[i][j] == 0);
  }
  std::string json_text = certificate_to_json(cert);
  CHECK(reverify_certificate_json(json_text));

  IndependenceCertificate back = certificate_from_json(json_text);
  CHECK(back.matrix == cert.matrix);
  CHECK(back.knots == cert.knots);
}

TEST_CASE("certificate fails on the unknot") {
  IndependenceCertificate cert = independence_certificate(
      {KnotExpression::unknot()}, {{Homomorphism::Kind::phi_entry, 1, 1}});
  CHECK(!cert.verdict);
  CHECK(cert.matrix[0][0] == 0);
}

TEST_CASE("certificate needs square shape") {
  CHECK_THROWS_AS(independence_certificate({KnotExpression::torus(2, 3)}, {}),
                  std::invalid_argument);
}

TEST_CASE("genus bounds") {
  GenusBounds b1 = genus_bounds(parse_expression("T(8,11)"));
  CHECK(b1.half_n == rat(7, 2));
  CHECK(b1.t_bound == 4);

  // phi-killing knot with p = 7, r = 2, k = 1: N/2 useless, T = 3
  auto knots = family_upsilon(params({{7, 2, 1}}));
  GenusBounds b2 = genus_bounds(knots[0]);
  CHECK(b2.half_n == 0);
  CHECK(b2.t_bound == 3);

  GenusBounds b3 = genus_bounds(KnotExpression::unknot());
  CHECK(b3.half_n == 0);
  CHECK(b3.t_bound == 0);
}

TEST_SUITE_END();
