// Command-line surface: parse textual identities, verify them exactly in
// cyclotomic fields, print Gauss sum tables, regenerate the identity
// families, and run discovery searches.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotrig/discover.hpp"
#include "cyclotrig/parse.hpp"
#include "cyclotrig/reduction.hpp"

using json = nlohmann::json;
using namespace cyclotrig;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& s) {
  std::vector<unsigned> out;
  for (const auto& item : split_list(s)) out.push_back(std::stoul(item));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split_list(s)) out.push_back(Rational::from_string(item));
  return out;
}

Identity parse_equation(const std::string& text) {
  size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw ParseError(text.size(), "expected an equation with '='");
  if (text.find('=', eq + 1) != std::string::npos)
    throw ParseError(text.find('=', eq + 1), "more than one '='");
  LinearForm lhs = lower(*parse(text.substr(0, eq)));
  LinearForm rhs = lower(*parse(text.substr(eq + 1)));
  return make_identity(lhs, rhs);
}

json term_json(const TrigTerm& t) {
  const char* kind = t.kind == TrigKind::Tan   ? "tan"
                     : t.kind == TrigKind::Sin ? "sin"
                                               : "cos";
  return json{{"coeff", t.coeff.str()},
              {"kind", kind},
              {"angle_num", t.angle_num},
              {"angle_den", t.angle_den}};
}

json identity_json(const Identity& id) {
  json terms = json::array();
  for (const auto& t : id.lhs) terms.push_back(term_json(t));
  return json{{"identity", render(id)},
              {"lhs", terms},
              {"rhs", {{"q", id.rhs.q.str()}, {"m", id.rhs.m}}}};
}

int cmd_verify(const std::string& equation, bool as_json) {
  Identity id = parse_equation(equation);
  VerifyResult res = verify(id);
  if (as_json) {
    json j = {{"holds", res.holds},
              {"field_order", res.field_order},
              {"lhs", render(Identity{id.lhs, id.lhs_constant, {0, 1}})},
              {"rhs", render_surd(id.rhs)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (res.holds ? "HOLDS" : "FAILS") << "\n";
    std::cout << "field_order: " << res.field_order << "\n";
    std::cout << "residual_zero: " << (res.residual.is_zero() ? "true" : "false")
              << "\n";
    if (!res.holds)
      std::cout << "residual: " << res.residual.str()
                << "  (numeric " << res.numeric_residual << ")\n";
  }
  return res.holds ? 0 : 1;
}

int cmd_sign(const std::string& lhs_text, unsigned m, const std::string& q_text) {
  LinearForm lhs = lower(*parse(lhs_text));
  if (!lhs.is_rational() && (!lhs.constant.is_zero() || !lhs.surds.empty()))
    throw LowerError("sign expects a sum of trig terms only");
  Sign s = resolve_sign(lhs.terms, cyclotrig::abs(Rational::from_string(q_text)), m);
  std::cout << sign_str(s) << "\n";
  return s == Sign::None ? 1 : 0;
}

int cmd_gauss(unsigned n, unsigned table_max, bool as_json) {
  unsigned lo = n, hi = n;
  if (table_max > 0) {
    lo = 1;
    hi = table_max;
  }
  int rc = 0;
  for (unsigned k = lo; k <= hi; ++k) {
    GaussValue gv = gauss_value(k);
    bool exact = gv.sum.embed(lcm_u(4, k)) == gauss_closed_form(k);
    if (!exact) rc = 1;
    if (as_json) {
      json j = {{"n", k},
                {"sum", gv.sum.str()},
                {"class", gauss_class_str(gv.closed_class)},
                {"exact", exact}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "G_" << k << " = " << gv.sum.str() << "\n  class: "
                << gauss_class_str(gv.closed_class)
                << "  closed form exact: " << (exact ? "yes" : "NO") << "\n";
    }
  }
  return rc;
}

int cmd_residues(unsigned n) {
  bool first = true;
  for (unsigned r : quadratic_residues(n)) {
    std::cout << (first ? "" : " ") << r;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

int print_family(const IdentityFamily& fam, bool with_table) {
  int rc = 0;
  std::cout << fam.description << "\n";
  for (const auto& id : fam.members) {
    bool ok = verify(id).holds;
    if (!ok) rc = 1;
    std::cout << "  " << render(id) << "  [" << (ok ? "verified" : "FAILED")
              << "]\n";
  }
  if (with_table) {
    std::cout << "  sign table:";
    for (const auto& p : fam.parameterization)
      std::cout << " " << p.k << ":" << sign_str(p.sign);
    std::cout << "\n";
  }
  return rc;
}

int cmd_families() {
  int rc = print_family(family_eleven(), true);
  rc |= print_family(family_nine(), true);
  return rc;
}

int cmd_discover(const std::string& ns, const std::string& coeffs,
                 unsigned max_sin, const std::string& surds,
                 const std::string& qs, double tol) {
  DiscoveryConfig cfg;
  cfg.denominators = parse_unsigned_list(ns);
  cfg.coeff_set = parse_rational_list(coeffs);
  cfg.max_sin_terms = max_sin;
  cfg.surd_candidates = parse_unsigned_list(surds);
  if (!qs.empty()) cfg.q_candidates = parse_rational_list(qs);
  cfg.prefilter_tol = tol;
  DiscoveryReport report = discover(cfg);
  for (const auto& id : report.found) std::cout << identity_json(id).dump() << "\n";
  json summary = {{"candidates_scanned", report.candidates_scanned},
                  {"prefilter_pass", report.prefilter_pass},
                  {"found", report.found.size()},
                  {"elapsed_s", report.elapsed.count()}};
  std::cout << summary.dump() << "\n";
  return 0;
}

int cmd_eval(const std::string& text) {
  double v = eval_numeric(*parse(text));
  std::cout.precision(15);
  std::cout << v << "  (numeric, not certified)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and discovery of tan/sin surd identities"};
  app.require_subcommand(1);

  std::string equation, lhs_text, expr_text;
  std::string q_text = "1";
  unsigned surd_m = 1, gauss_n = 0, table_max = 0, residues_n = 2;
  bool as_json = false;
  std::string disc_n, disc_coeffs = "4,-4", disc_surd, disc_q;
  unsigned disc_max_sin = 1;
  double disc_tol = 1e-9;

  auto* verify_cmd = app.add_subcommand("verify", "exactly verify '<lhs> = <rhs>'");
  verify_cmd->add_option("equation", equation)->required();
  verify_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* sign_cmd = app.add_subcommand("sign", "resolve the sign of lhs = +-q sqrt(m)");
  sign_cmd->add_option("lhs", lhs_text)->required();
  sign_cmd->add_option("--surd", surd_m, "radicand m")->required();
  sign_cmd->add_option("--q", q_text, "|q| (default 1)");

  auto* gauss_cmd = app.add_subcommand("gauss", "exact Gauss sum and closed-form class");
  gauss_cmd->add_option("--n", gauss_n);
  gauss_cmd->add_option("--table", table_max, "print n = 1..MAX");
  gauss_cmd->add_flag("--json", as_json);

  auto* residues_cmd = app.add_subcommand("residues", "quadratic residues mod n");
  residues_cmd->add_option("--n", residues_n)->required();

  app.add_subcommand("families", "regenerate and verify both identity families");

  auto* disc_cmd = app.add_subcommand("discover", "search for identities (JSON lines)");
  disc_cmd->add_option("--n", disc_n, "denominators, comma separated")->required();
  disc_cmd->add_option("--coeffs", disc_coeffs, "sin coefficient set");
  disc_cmd->add_option("--max-sin", disc_max_sin, "max sin terms");
  disc_cmd->add_option("--surd", disc_surd, "surd radicands")->required();
  disc_cmd->add_option("--q", disc_q, "q candidates (default 1,-1)");
  disc_cmd->add_option("--tol", disc_tol, "numeric prefilter tolerance");

  auto* eval_cmd = app.add_subcommand("eval", "double-precision value (diagnostic)");
  eval_cmd->add_option("expr", expr_text)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("verify")) return cmd_verify(equation, as_json);
    if (app.got_subcommand("sign")) return cmd_sign(lhs_text, surd_m, q_text);
    if (app.got_subcommand("gauss")) {
      if (gauss_n == 0 && table_max == 0) {
        std::cerr << "gauss: need --n or --table\n";
        return 2;
      }
      return cmd_gauss(gauss_n, table_max, as_json);
    }
    if (app.got_subcommand("residues")) return cmd_residues(residues_n);
    if (app.got_subcommand("families")) return cmd_families();
    if (app.got_subcommand("discover"))
      return cmd_discover(disc_n, disc_coeffs, disc_max_sin, disc_surd, disc_q,
                          disc_tol);
    if (app.got_subcommand("eval")) return cmd_eval(expr_text);
  } catch (const ParseError& e) {
    std::cerr << "syntax error " << e.what() << "\n";
    return 2;
  } catch (const LowerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
