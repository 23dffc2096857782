// Batch front end for the semigroup / phi / upsilon / epsilon-order
// computations.  Exit codes: 0 success or verified, 1 verification mismatch,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotinv/epsilon_order.hpp"
#include "knotinv/knot_algebra.hpp"
#include "knotinv/phi.hpp"
#include "knotinv/staircase.hpp"
#include "knotinv/upsilon.hpp"

namespace {

using namespace knotinv;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

std::string fmt;  // "text" | "json" | "csv"

double approx(const Rat& r) { return r.convert_to<double>(); }

std::string rat_text(const Rat& r) {
  std::ostringstream out;
  out << rat_str(r);
  if (rat_den(r) != 1) out << " (" << approx(r) << ")";
  return out.str();
}

json rat_json(const Rat& r) {
  return json{to_i64(rat_num(r)), to_i64(rat_den(r))};
}

json sequence_json(const PhiSequence& s) {
  json arr = json::array();
  Int top = s.max_index();
  for (Int j = 1; j <= top; ++j) arr.push_back(to_i64(s.at(j)));
  return arr;
}

json int_vector_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(to_i64(x));
  return arr;
}

std::vector<Int> parse_triple_list(const std::vector<std::string>& args,
                                   std::vector<FamilyParams>& out) {
  std::vector<Int> singles;
  for (const std::string& a : args) {
    std::vector<Int> parts;
    std::string cur;
    std::istringstream in(a);
    while (std::getline(in, cur, ',')) parts.emplace_back(cur);
    if (parts.size() == 1) {
      singles.push_back(parts[0]);
    } else if (parts.size() == 3) {
      out.push_back({parts[0], parts[1], parts[2]});
    } else {
      throw std::invalid_argument("expected 'p,r,k' or a single integer: " + a);
    }
  }
  return singles;
}

// ---------------------------------------------------------------------------

int run_semigroup(long long p, long long q) {
  NumericalSemigroup s = torus_semigroup(p, q);
  Staircase st = staircase_from_semigroup(s);
  if (fmt == "json") {
    json j;
    j["generators"] = int_vector_json(s.generators());
    j["conductor"] = to_i64(s.conductor());
    j["genus"] = to_i64(s.genus());
    j["members_below_conductor"] = int_vector_json(s.members_upto(s.conductor() - 1));
    j["gaps"] = int_vector_json(s.gaps());
    j["staircase"] = int_vector_json(st.steps());
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "member\n";
    for (const Int& m : s.members_upto(s.conductor())) std::cout << m << "\n";
  } else {
    std::cout << "S = " << s.to_string() << "\n";
    std::cout << "conductor = " << s.conductor() << "\n";
    std::cout << "genus = " << s.genus() << "\n";
    std::cout << "staircase = " << st.to_string() << "\n";
  }
  return kExitOk;
}

int run_apery(long long p, long long q, long long base) {
  NumericalSemigroup s = torus_semigroup(p, q);
  BlockDecompositionReport report = verify_block_decomposition(s, base);
  AperyData data = apery(s, base);
  if (fmt == "json") {
    json j;
    j["base"] = base;
    j["beta"] = int_vector_json(data.beta);
    j["omega"] = int_vector_json(data.omega);
    j["kappa"] = int_vector_json(data.kappa);
    j["blocks"] = json::array();
    for (const auto& blk : data.blocks) j["blocks"].push_back(blk.to_string());
    j["block_identity_pass"] = report.pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Apery data of <" << p << "," << q << "> with base " << base
              << ":\n";
    for (size_t i = 0; i < data.omega.size(); ++i) {
      std::cout << "  omega_" << i << " = " << data.omega[i] << "  kappa_" << i
                << " = " << data.kappa[i] << "\n";
    }
    for (size_t i = 0; i < data.blocks.size(); ++i) {
      std::cout << "  A_" << (i + 1) << " = " << data.blocks[i].to_string()
                << "\n";
    }
    for (const auto& c : report.checks) {
      std::cout << "  Phi(A_" << c.index << ") = " << c.block_phi.to_string()
                << " vs " << c.multiplier << " * "
                << c.pattern_phi.to_string() << " : "
                << (c.equal ? "equal" : "DIFFER") << "\n";
    }
    std::cout << (report.pass ? "block decomposition verified" : "MISMATCH")
              << "\n";
  }
  return report.pass ? kExitOk : kExitMismatch;
}

int run_phi(long long p, long long q, const std::string& method) {
  Int min_len = std::min(p, q) - 1;
  PhiSequence direct, recursive;
  bool have_direct = method != "recursive";
  bool have_recursive = method != "direct";
  if (have_direct) direct = phi_lspace(torus_semigroup(p, q));
  if (have_recursive) recursive = phi_torus_recursive(p, q);
  bool match = !(have_direct && have_recursive) || direct == recursive;

  if (fmt == "json") {
    json j;
    j["p"] = p;
    j["q"] = q;
    if (have_direct) j["direct"] = sequence_json(direct);
    if (have_recursive) j["recursive"] = sequence_json(recursive);
    if (have_direct && have_recursive) j["match"] = match;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    const PhiSequence& s = have_direct ? direct : recursive;
    std::cout << "j,phi_j\n";
    Int top = s.max_index();
    for (Int j = 1; j <= top; ++j) std::cout << j << "," << s.at(j) << "\n";
  } else {
    if (have_direct) {
      std::cout << "phi(T(" << p << "," << q << ")) direct:    "
                << direct.to_string(min_len) << "\n";
    }
    if (have_recursive) {
      std::cout << "phi(T(" << p << "," << q << ")) recursive: "
                << recursive.to_string(min_len) << "\n";
    }
    if (have_direct && have_recursive) {
      std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    }
  }
  return match ? kExitOk : kExitMismatch;
}

int run_upsilon(const std::string& expr_text, const std::string& plot_path) {
  KnotExpression e = parse_expression(expr_text);
  PLFunction f = upsilon_expression(e);
  if (!plot_path.empty()) {
    std::ofstream out(plot_path);
    if (!out) throw std::invalid_argument("cannot open " + plot_path);
    out << pl_to_csv(f);
  }
  if (fmt == "json") {
    json j = json::parse(pl_to_json(f));
    j["expression"] = e.to_string();
    j["singularities"] = json::array();
    for (const auto& [t, jump] : f.singularities()) {
      j["singularities"].push_back({{"t", rat_json(t)}, {"jump", rat_json(jump)}});
    }
    j["t_invariant"] = rat_json(t_invariant(f));
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << pl_to_csv(f);
  } else {
    std::cout << "Upsilon(" << e.to_string() << "):\n";
    std::cout << "  breakpoints: " << f.to_string() << "\n";
    if (f.is_zero()) {
      std::cout << "  identically zero\n";
    }
    for (const auto& [t, jump] : f.singularities()) {
      std::cout << "  jump at t = " << rat_text(t) << ": " << rat_text(jump)
                << "\n";
    }
    std::cout << "  T-invariant = " << rat_text(t_invariant(f)) << "\n";
  }
  return kExitOk;
}

int run_verify_main(long long pmax, long long kmax) {
  long long checked = 0, failures = 0;
  for (long long p = 2; p <= pmax; ++p) {
    for (long long r = 1; r < p; ++r) {
      if (std::gcd(p, r) != 1) continue;
      for (long long k = 1; k <= kmax; ++k) {
        Int q = Int(k) * p + r;
        PhiSequence direct = phi_lspace(torus_semigroup(p, q));
        PhiSequence rec = phi_torus_recursive(p, q);
        ++checked;
        if (direct != rec) {
          ++failures;
          std::cout << "MISMATCH at (p,r,k) = (" << p << "," << r << "," << k
                    << "): direct " << direct.to_string() << " vs recursive "
                    << rec.to_string() << "\n";
        }
      }
    }
  }
  std::cout << "checked " << checked << " torus knots up to p = " << pmax
            << ", k = " << kmax << ": "
            << (failures == 0 ? "all match" : std::to_string(failures) + " mismatches")
            << "\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

int run_verify_fk(long long pmax, long long qmax) {
  if (qmax == 0) qmax = 5 * pmax;
  long long checked = 0, failures = 0;
  for (long long p = 2; p <= pmax; ++p) {
    for (long long q = p + 1; q <= qmax; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++checked;
      if (upsilon_torus_fk(p, q) != upsilon_lspace(torus_semigroup(p, q))) {
        ++failures;
        std::cout << "MISMATCH at (p,q) = (" << p << "," << q << ")\n";
      }
    }
  }
  std::cout << "checked " << checked << " torus knots up to p = " << pmax
            << ", q = " << qmax << ": "
            << (failures == 0 ? "all match" : std::to_string(failures) + " mismatches")
            << "\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

int run_family(const std::string& which, const std::vector<std::string>& args,
               const std::string& cert_path) {
  std::vector<FamilyParams> triples;
  std::vector<Int> singles = parse_triple_list(args, triples);

  std::vector<KnotExpression> knots;
  std::vector<Homomorphism> homs;
  if (which == "phi") {
    if (!singles.empty() || triples.empty()) {
      throw std::invalid_argument("family phi expects p,r,k triples");
    }
    knots = family_phi(triples);
    for (const auto& t : triples) {
      homs.push_back({Homomorphism::Kind::phi_entry, t.p - 2, -1});
    }
  } else if (which == "upsilon") {
    if (!singles.empty() || triples.empty()) {
      throw std::invalid_argument("family upsilon expects p,r,k triples");
    }
    knots = family_upsilon(triples);
    for (const auto& t : triples) {
      homs.push_back({Homomorphism::Kind::xi, t.p, 1});
    }
  } else if (which == "jk") {
    if (!triples.empty() || singles.empty()) {
      throw std::invalid_argument("family jk expects a list of integers k >= 3");
    }
    knots = family_jk_lk(singles);
    for (const Int& k : singles) {
      homs.push_back({Homomorphism::Kind::lambda, k, 1});
    }
  } else {
    throw std::invalid_argument("unknown family '" + which + "'");
  }

  IndependenceCertificate cert = independence_certificate(knots, homs);
  std::string serialized = certificate_to_json(cert);
  if (!cert_path.empty()) {
    std::ofstream out(cert_path);
    if (!out) throw std::invalid_argument("cannot open " + cert_path);
    out << serialized << "\n";
  }
  if (fmt == "json") {
    std::cout << serialized << "\n";
  } else {
    for (size_t i = 0; i < cert.knots.size(); ++i) {
      std::cout << "K_" << (i + 1) << " = " << cert.knots[i].to_string() << "\n";
    }
    std::cout << "matrix rows (";
    for (size_t h = 0; h < cert.homs.size(); ++h) {
      if (h) std::cout << ", ";
      std::cout << cert.homs[h].label();
    }
    std::cout << "):\n";
    for (const auto& row : cert.matrix) {
      std::cout << "  ";
      for (size_t h = 0; h < row.size(); ++h) {
        if (h) std::cout << " ";
        std::cout << rat_str(row[h]);
      }
      std::cout << "\n";
    }
    std::cout << "verdict: "
              << (cert.verdict ? "pass (lower triangular, nonzero diagonal)"
                               : "FAIL")
              << "\n";
  }
  return cert.verdict ? kExitOk : kExitMismatch;
}

// Accepts a bracket literal "[1,4,4,1]" or an expression denoting a single
// L-space atom with positive multiplicity.
ClassExpr parse_class(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed[0] == '[') {
    auto close = trimmed.find(']');
    if (close == std::string::npos ||
        trimmed.find_first_not_of(" \t", close + 1) != std::string::npos) {
      throw std::invalid_argument("malformed bracket literal: " + text);
    }
    std::vector<Int> steps;
    std::string body = trimmed.substr(1, close - 1);
    std::istringstream in(body);
    std::string cur;
    while (std::getline(in, cur, ',')) {
      if (!cur.empty()) steps.emplace_back(cur);
    }
    return ClassExpr::bracket(BracketClass(std::move(steps)));
  }
  KnotExpression e = parse_expression(text);
  if (e.empty()) return ClassExpr();
  if (e.terms().size() != 1 || e.terms().begin()->second < 1) {
    throw std::invalid_argument(
        "order comparison needs a single atom with positive multiplicity or "
        "a bracket literal; the order rules do not evaluate mixed sums");
  }
  const auto& [atom, coeff] = *e.terms().begin();
  Staircase st = staircase_from_semigroup(atom_semigroup(atom));
  return ClassExpr::bracket(BracketClass(st), coeff);
}

int run_eps_compare(const std::string& lhs, const std::string& rhs) {
  ClassExpr x = parse_class(lhs);
  ClassExpr y = parse_class(rhs);
  ExplainedCompare c = compare_explained(x, y);
  if (fmt == "json") {
    json j;
    j["lhs"] = x.to_string();
    j["rhs"] = y.to_string();
    j["relation"] = compare_result_name(c.relation);
    j["rule"] = c.rule;
    std::cout << j.dump(2) << "\n";
  } else {
    const char* rel = c.relation == CompareResult::much_less      ? "<<"
                      : c.relation == CompareResult::much_greater ? ">>"
                      : c.relation == CompareResult::equal        ? "=="
                                                                  : "? (unknown)";
    std::cout << x.to_string() << " " << rel << " " << y.to_string() << "   ["
              << c.rule << "]\n";
  }
  return kExitOk;
}

int run_genus_bounds(const std::string& expr_text) {
  KnotExpression e = parse_expression(expr_text);
  GenusBounds b = genus_bounds(e);
  if (fmt == "json") {
    json j;
    j["expression"] = e.to_string();
    j["half_n"] = rat_json(b.half_n);
    j["t_bound"] = rat_json(b.t_bound);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "splitting concordance genus of " << e.to_string()
              << " is bounded below by:\n";
    std::cout << "  N/2 = " << rat_text(b.half_n) << "\n";
    std::cout << "  T   = " << rat_text(b.t_bound) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact concordance invariants of L-space knots"};
  app.require_subcommand(1);

  long long p = 0, q = 0, base = 0, pmax = 0, qmax = 0, kmax = 0;
  std::string expr, expr2, method = "both", plot_path, cert_path, which;
  std::vector<std::string> fam_args;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");
  };

  auto* c_semigroup = app.add_subcommand("semigroup", "torus knot semigroup <p,q>");
  c_semigroup->add_option("p", p)->required();
  c_semigroup->add_option("q", q)->required();
  add_format(c_semigroup);

  auto* c_apery = app.add_subcommand("apery", "Apery set and block decomposition");
  c_apery->add_option("p", p)->required();
  c_apery->add_option("q", q)->required();
  c_apery->add_option("--base", base, "member of the semigroup")->required();
  add_format(c_apery);

  auto* c_phi = app.add_subcommand("phi", "phi invariant of a torus knot");
  c_phi->add_option("p", p)->required();
  c_phi->add_option("q", q)->required();
  bool f_rec = false, f_dir = false, f_both = false;
  c_phi->add_flag("--recursive", f_rec, "recursion only");
  c_phi->add_flag("--direct", f_dir, "semigroup gap counting only");
  c_phi->add_flag("--both", f_both, "both methods, compare (default)");
  add_format(c_phi);

  auto* c_upsilon = app.add_subcommand("upsilon", "Upsilon of a knot expression");
  c_upsilon->add_option("expr", expr, "e.g. 'T(5,7) # -2*T(2,5)'")->required();
  c_upsilon->add_option("--plot", plot_path, "write breakpoint CSV here");
  add_format(c_upsilon);

  auto* c_vmain = app.add_subcommand(
      "verify-main", "recursion vs gap counting for phi over a sweep");
  c_vmain->add_option("--pmax", pmax)->required();
  c_vmain->add_option("--kmax", kmax)->required();

  auto* c_vfk = app.add_subcommand(
      "verify-fk", "recursion vs envelope for Upsilon over a sweep");
  c_vfk->add_option("--pmax", pmax)->required();
  c_vfk->add_option("--qmax", qmax, "default 5*pmax");

  auto* c_family = app.add_subcommand(
      "family", "build a knot family and its independence certificate");
  c_family->add_option("which", which, "phi | upsilon | jk")->required();
  c_family->add_option("params", fam_args, "p,r,k triples or k values")
      ->required();
  c_family->add_option("--certificate", cert_path, "write certificate JSON here");
  add_format(c_family);

  auto* c_eps = app.add_subcommand("eps-compare",
                                   "order comparison of staircase classes");
  c_eps->add_option("lhs", expr)->required();
  c_eps->add_option("rhs", expr2)->required();
  add_format(c_eps);

  auto* c_genus = app.add_subcommand("genus-bounds",
                                     "splitting concordance genus bounds");
  c_genus->add_option("expr", expr)->required();
  add_format(c_genus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (c_semigroup->parsed()) return run_semigroup(p, q);
    if (c_apery->parsed()) return run_apery(p, q, base);
    if (c_phi->parsed()) {
      if (f_rec) method = "recursive";
      if (f_dir) method = "direct";
      if (f_both) method = "both";
      return run_phi(p, q, method);
    }
    if (c_upsilon->parsed()) return run_upsilon(expr, plot_path);
    if (c_vmain->parsed()) return run_verify_main(pmax, kmax);
    if (c_vfk->parsed()) return run_verify_fk(pmax, qmax);
    if (c_family->parsed()) return run_family(which, fam_args, cert_path);
    if (c_eps->parsed()) return run_eps_compare(expr, expr2);
    if (c_genus->parsed()) return run_genus_bounds(expr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
