#include "knotinv/knot_algebra.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace knotinv {

namespace {

void check_family_common(const std::vector<FamilyParams>& params) {
  for (size_t i = 0; i < params.size(); ++i) {
    const auto& [p, r, k] = params[i];
    std::string where = "params[" + std::to_string(i) + "]";
    if (k < 1) {
      throw std::invalid_argument(where + ": k = " + k.str() + " must be >= 1");
    }
    if (r < 2 || r > p - 2) {
      throw std::invalid_argument(where + ": need 2 <= r <= p-2, got r = " +
                                  r.str() + ", p = " + p.str());
    }
    if (int_gcd(p, r) != 1) {
      throw std::invalid_argument(where + ": (p,r) = (" + p.str() + "," +
                                  r.str() + ") not coprime");
    }
  }
}

}  // namespace

std::vector<KnotExpression> family_phi(
    const std::vector<FamilyParams>& params) {
  check_family_common(params);
  for (size_t i = 0; i + 1 < params.size(); ++i) {
    if (params[i].p > params[i + 1].p - 2) {
      throw std::invalid_argument(
          "params[" + std::to_string(i + 1) + "]: need p_{i} <= p_{i+1} - 2, got " +
          params[i].p.str() + " > " + Int(params[i + 1].p - 2).str());
    }
  }
  std::vector<KnotExpression> out;
  for (const auto& [p, r, k] : params) {
    KnotExpression e = KnotExpression::torus(to_i64(p), to_i64(k * p + r));
    e = e - KnotExpression::torus(to_i64(r), to_i64(p));
    e = e - KnotExpression::torus(to_i64(p), to_i64(p + 1)).scaled(k);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<KnotExpression> family_upsilon(
    const std::vector<FamilyParams>& params) {
  check_family_common(params);
  for (size_t i = 0; i + 1 < params.size(); ++i) {
    if (params[i].p > params[i + 1].p) {
      throw std::invalid_argument(
          "params[" + std::to_string(i + 1) + "]: need p_{i} <= p_{i+1}, got " +
          params[i].p.str() + " > " + params[i + 1].p.str());
    }
  }
  std::vector<KnotExpression> out;
  for (const auto& [p, r, k] : params) {
    KnotExpression e = KnotExpression::torus(to_i64(p), to_i64(k * p + r));
    e = e - KnotExpression::torus(to_i64(r), to_i64(p)).scaled(k + 1);
    e = e - KnotExpression::torus(to_i64(p - r), to_i64(p)).scaled(k);
    e = e - KnotExpression::torus(to_i64(p), to_i64(p + 1)).scaled(k);
    e = e + KnotExpression::torus(to_i64(p - 1), to_i64(p)).scaled(k);
    out.push_back(std::move(e));
  }
  return out;
}

KnotExpression jk_cable(const Int& k) {
  if (k < 3) {
    throw std::invalid_argument("cable family needs k >= 3, got " + k.str());
  }
  return KnotExpression::atom(
      make_cable_atom(2, 3, to_i64(k), to_i64(2 * k - 1)));
}

KnotExpression lk_torus_sum(const Int& k) {
  KnotExpression e;
  for (const auto& [p, c] : basis_decompose(phi_expression(jk_cable(k)))) {
    e = e + KnotExpression::torus(to_i64(p), to_i64(p + 1)).scaled(c);
  }
  return e;
}

std::vector<KnotExpression> family_jk_lk(const std::vector<Int>& ks) {
  std::vector<KnotExpression> out;
  for (const Int& k : ks) out.push_back(jk_cable(k) - lk_torus_sum(k));
  return out;
}

std::string Homomorphism::label() const {
  std::string name;
  switch (kind) {
    case Kind::phi_entry: name = "phi_"; break;
    case Kind::lambda: name = "lambda_"; break;
    case Kind::xi: name = "xi_"; break;
  }
  return (sign < 0 ? "-" : "") + name + index.str();
}

Homomorphism Homomorphism::from_label(const std::string& label) {
  Homomorphism h;
  std::string body = label;
  h.sign = 1;
  if (!body.empty() && body[0] == '-') {
    h.sign = -1;
    body = body.substr(1);
  }
  auto us = body.find('_');
  if (us == std::string::npos) {
    throw std::invalid_argument("bad homomorphism label: " + label);
  }
  std::string name = body.substr(0, us);
  if (name == "phi") {
    h.kind = Kind::phi_entry;
  } else if (name == "lambda") {
    h.kind = Kind::lambda;
  } else if (name == "xi") {
    h.kind = Kind::xi;
  } else {
    throw std::invalid_argument("bad homomorphism label: " + label);
  }
  h.index = Int(body.substr(us + 1));
  return h;
}

Rat evaluate_hom(const Homomorphism& h, const KnotExpression& e) {
  Rat v;
  switch (h.kind) {
    case Homomorphism::Kind::phi_entry:
      v = Rat(phi_expression(e).at(h.index));
      break;
    case Homomorphism::Kind::lambda:
      v = lambda_hom(e, h.index);
      break;
    case Homomorphism::Kind::xi:
      v = xi_hom(e, h.index);
      break;
  }
  return h.sign < 0 ? -v : v;
}

bool matrix_lower_triangular(const std::vector<std::vector<Rat>>& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    if (m[i][i] == 0) return false;
    for (size_t j = i + 1; j < m[i].size(); ++j) {
      if (m[i][j] != 0) return false;
    }
  }
  return !m.empty();
}

IndependenceCertificate independence_certificate(
    std::vector<KnotExpression> knots, std::vector<Homomorphism> homs) {
  if (knots.size() != homs.size()) {
    throw std::invalid_argument("need as many homomorphisms as knots");
  }
  IndependenceCertificate cert;
  cert.knots = std::move(knots);
  cert.homs = std::move(homs);
  for (const auto& knot : cert.knots) {
    std::vector<Rat> row;
    row.reserve(cert.homs.size());
    for (const auto& hom : cert.homs) row.push_back(evaluate_hom(hom, knot));
    cert.matrix.push_back(std::move(row));
  }
  cert.verdict = matrix_lower_triangular(cert.matrix);
  return cert;
}

std::string certificate_to_json(const IndependenceCertificate& cert) {
  nlohmann::json j;
  j["knots"] = nlohmann::json::array();
  for (const auto& k : cert.knots) j["knots"].push_back(k.to_string());
  j["homs"] = nlohmann::json::array();
  for (const auto& h : cert.homs) j["homs"].push_back(h.label());
  j["matrix"] = nlohmann::json::array();
  for (const auto& row : cert.matrix) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Rat& v : row) {
      jrow.push_back({to_i64(rat_num(v)), to_i64(rat_den(v))});
    }
    j["matrix"].push_back(jrow);
  }
  j["verdict"] = cert.verdict;
  return j.dump(2);
}

IndependenceCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  IndependenceCertificate cert;
  for (const auto& k : j.at("knots")) {
    cert.knots.push_back(parse_expression(k.get<std::string>()));
  }
  for (const auto& h : j.at("homs")) {
    cert.homs.push_back(Homomorphism::from_label(h.get<std::string>()));
  }
  for (const auto& jrow : j.at("matrix")) {
    std::vector<Rat> row;
    for (const auto& entry : jrow) {
      row.emplace_back(Int(entry.at(0).get<long long>()),
                       Int(entry.at(1).get<long long>()));
    }
    cert.matrix.push_back(std::move(row));
  }
  cert.verdict = j.at("verdict").get<bool>();
  return cert;
}

bool reverify_certificate_json(const std::string& text) {
  IndependenceCertificate stored = certificate_from_json(text);
  IndependenceCertificate fresh =
      independence_certificate(stored.knots, stored.homs);
  return fresh.matrix == stored.matrix && fresh.verdict == stored.verdict &&
         stored.verdict == matrix_lower_triangular(stored.matrix);
}

GenusBounds genus_bounds(const KnotExpression& e) {
  GenusBounds b;
  b.half_n = Rat(n_invariant(phi_expression(e))) / 2;
  b.t_bound = t_invariant(upsilon_expression(e));
  return b;
}

}  // namespace knotinv
