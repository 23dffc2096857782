#pragma once

#include <string>
#include <vector>

#include "knotinv/knot_expression.hpp"
#include "knotinv/phi.hpp"
#include "knotinv/upsilon.hpp"

namespace knotinv {

struct FamilyParams {
  Int p, r, k;
};

// K_i = T_{p_i, k_i p_i + r_i} # -T_{r_i,p_i} # -k_i T_{p_i,p_i+1}.
// Requires coprime (p_i,r_i), 2 <= r_i <= p_i - 2, k_i >= 1 and
// p_i <= p_{i+1} - 2.  Each K_i has identically zero Upsilon and
// phi_{p_i-2}(K_i) = -k_i.
std::vector<KnotExpression> family_phi(const std::vector<FamilyParams>& params);

// K_i = T_{p,kp+r} # -(k+1)T_{r,p} # -kT_{p-r,p} # -k(T_{p,p+1} # -T_{p-1,p}).
// Requires coprime (p_i,r_i), 2 <= r_i <= p_i - 2, k_i >= 1 and
// p_i <= p_{i+1}.  Each K_i has identically zero phi and
// xi_{p_i}(K_i) = k_i.
std::vector<KnotExpression> family_upsilon(
    const std::vector<FamilyParams>& params);

// J_k = (k,2k-1)-cable of T_{2,3}; L_k is the T_{p,p+1} combination with the
// same phi.  Returns the differences J_k # -L_k, which kill phi while
// lambda_k stays 1.  Requires every k >= 3.
std::vector<KnotExpression> family_jk_lk(const std::vector<Int>& ks);
KnotExpression jk_cable(const Int& k);
KnotExpression lk_torus_sum(const Int& k);

// A labeled concordance functional used in independence certificates.
struct Homomorphism {
  enum class Kind { phi_entry, lambda, xi };
  Kind kind;
  Int index;
  int sign = 1;  // -1 for the negated functional

  std::string label() const;            // "phi_3", "-phi_3", "lambda_4", "xi_5"
  static Homomorphism from_label(const std::string& label);
};

Rat evaluate_hom(const Homomorphism& h, const KnotExpression& e);

// Evaluation matrix M[i][j] = h_j(K_i); the verdict is pass iff M is lower
// triangular in the given order with nonzero diagonal, which certifies
// linear independence of the family.
struct IndependenceCertificate {
  std::vector<KnotExpression> knots;
  std::vector<Homomorphism> homs;
  std::vector<std::vector<Rat>> matrix;
  bool verdict = false;
};

IndependenceCertificate independence_certificate(
    std::vector<KnotExpression> knots, std::vector<Homomorphism> homs);

bool matrix_lower_triangular(const std::vector<std::vector<Rat>>& m);

std::string certificate_to_json(const IndependenceCertificate& cert);
IndependenceCertificate certificate_from_json(const std::string& text);
// Parses the JSON, recomputes every entry from the knot and hom labels, and
// checks both the matrix and the verdict.
bool reverify_certificate_json(const std::string& text);

// Lower bounds for the splitting concordance genus: half the top phi index
// and the reciprocal first Upsilon singularity.
struct GenusBounds {
  Rat half_n;
  Rat t_bound;
};

GenusBounds genus_bounds(const KnotExpression& e);

}  // namespace knotinv
