#include "moorekit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "moorekit/addpoly.hpp"
#include "moorekit/error.hpp"
#include "moorekit/etale.hpp"
#include "moorekit/forms.hpp"
#include "moorekit/gf.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/pairing.hpp"
#include "moorekit/report.hpp"
#include "moorekit/suite.hpp"
#include "moorekit/symid.hpp"

namespace moorekit::cli {

namespace {

using gf::Field;
using gf::FieldPtr;
using gf::GfElement;
using report::json;

struct FieldArgs {
  std::uint32_t p = 2;
  std::uint32_t s = 1;
  std::uint32_t t = 1;
};

struct Global {
  std::string format = "text";
  bool json_flag = false;
  std::uint64_t field_cap = 0;
  std::uint64_t term_budget = 0;

  bool as_json() const { return json_flag || format == "json"; }
};

// What a command produced: a JSON payload, its text rendering and a verdict.
struct Outcome {
  json payload = json::object();
  std::string text;
  bool passed = true;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<GfElement> parse_elements(const Field& F, const std::string& text) {
  std::vector<GfElement> out;
  for (const auto& item : split_list(text)) out.push_back(F.parse(item));
  return out;
}

json elements_json(const Field& F, const std::vector<GfElement>& a) {
  json j = json::array();
  for (const GfElement x : a) j.push_back(F.format(x));
  return j;
}

std::string elements_text(const Field& F, const std::vector<GfElement>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + F.pretty(a[i]);
  return out;
}

// Sum c_i var^{e_i} with pretty coefficients, highest degree first.
std::string poly_text(const Field& F, const std::vector<GfElement>& c, const std::function<std::string(std::size_t)>& mono) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const std::string m = mono(k);
    const std::string coeff = F.pretty(c[k]);
    std::string term;
    if (m.empty()) term = coeff;
    else if (c[k] == F.one()) term = m;
    else if (coeff.find('+') != std::string::npos) term = "(" + coeff + ")*" + m;
    else term = coeff + "*" + m;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string additive_text(const addpoly::AdditivePoly& P) {
  const std::uint64_t q = P.ctx->q();
  return poly_text(*P.ctx, P.coeffs, [q](std::size_t k) {
    if (k == 0) return std::string("X");
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < k; ++i) e *= q;
    return "X^" + std::to_string(e);
  });
}

std::string classical_text(const Field& F, const upoly::Poly& P, const std::string& var) {
  return poly_text(F, P, [&](std::size_t k) {
    if (k == 0) return std::string();
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
  });
}

std::string matrix_text(const Field& F, const gf::Matrix& m) {
  std::string out;
  for (const auto& row : m) out += "  [" + elements_text(F, row) + "]\n";
  return out;
}

json matrix_json(const Field& F, const gf::Matrix& m) {
  json j = json::array();
  for (const auto& row : m) j.push_back(elements_json(F, row));
  return j;
}

void add_field_options(CLI::App* sub, FieldArgs& f) {
  sub->add_option("--p", f.p, "characteristic")->capture_default_str();
  sub->add_option("--s", f.s, "q = p^s")->capture_default_str();
  sub->add_option("--t", f.t, "K = F_{q^t}")->capture_default_str();
}

FieldPtr make_field(const FieldArgs& f) { return gf::cached_field(f.p, f.s, f.t); }

json field_json(const Field& F) {
  return {{"p", F.p()}, {"s", F.s()}, {"d", F.d()}, {"q", F.q()}, {"modulus", F.modulus()}};
}

// ----- moore -----

Outcome moore_cmd(const std::string& op, const FieldArgs& fa, const std::string& tuple, bool signed_minors) {
  const FieldPtr K = make_field(fa);
  const auto a = parse_elements(*K, tuple);
  Outcome o;
  o.payload["field"] = field_json(*K);
  o.payload["tuple"] = elements_json(*K, a);
  if (op == "det") {
    const GfElement d = moore::moore_det(*K, a);
    if (d != moore::moore_det_product(*K, a)) fail(ErrorCode::InternalMismatch, "determinant algorithms disagree");
    o.payload["det"] = K->format(d);
    o.text = K->pretty(d);
  } else if (op == "cofactors") {
    const auto c = moore::cofactor_row(*K, a, signed_minors);
    o.payload["signed"] = signed_minors;
    o.payload["cofactors"] = elements_json(*K, c);
    o.text = elements_text(*K, c);
  } else {
    const bool indep = moore::is_fq_independent(*K, a);
    o.payload["independent"] = indep;
    o.text = indep ? "independent" : "dependent";
  }
  return o;
}

// ----- addpoly -----

struct AddpolyArgs {
  std::string basis, alpha, coeffs, other;
};

addpoly::AdditivePoly parse_additive(const FieldPtr& K, const std::string& text) {
  return addpoly::make_additive(K, parse_elements(*K, text));
}

json additive_json(const addpoly::AdditivePoly& P) { return elements_json(*P.ctx, P.coeffs); }

Outcome addpoly_cmd(const std::string& op, const FieldArgs& fa, const AddpolyArgs& a) {
  const FieldPtr K = make_field(fa);
  Outcome o;
  o.payload["field"] = field_json(*K);
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) fail(ErrorCode::ParseError, std::string("missing ") + flag);
  };
  auto emit = [&](const addpoly::AdditivePoly& P) {
    o.payload["coeffs"] = additive_json(P);
    o.text = additive_text(P);
  };
  if (op == "subspace") {
    need(a.basis, "--basis");
    emit(addpoly::subspace_poly(addpoly::make_basis(K, parse_elements(*K, a.basis))));
  } else if (op == "hyperplane") {
    need(a.basis, "--basis");
    need(a.alpha, "--alpha");
    const auto h = addpoly::hyperplane_poly(addpoly::make_basis(K, parse_elements(*K, a.basis)),
                                            parse_elements(*K, a.alpha));
    emit(h.poly);
    o.payload["delta_phi"] = K->format(h.delta_phi);
    o.text += "\ndelta_phi = " + K->pretty(h.delta_phi);
  } else if (op == "reverse") {
    need(a.coeffs, "--coeffs");
    emit(addpoly::reverse(parse_additive(K, a.coeffs)));
  } else if (op == "compose") {
    need(a.coeffs, "--coeffs");
    need(a.other, "--with");
    emit(addpoly::compose(parse_additive(K, a.coeffs), parse_additive(K, a.other)));
  } else if (op == "divide") {
    need(a.coeffs, "--coeffs");
    need(a.other, "--with");
    emit(addpoly::right_divide(parse_additive(K, a.coeffs), parse_additive(K, a.other)));
  } else {
    need(a.coeffs, "--coeffs");
    const auto k = addpoly::kernel_in(parse_additive(K, a.coeffs));
    o.payload["kernel_basis"] = elements_json(*K, k);
    o.text = "[" + elements_text(*K, k) + "]";
  }
  return o;
}

// ----- forms -----

json residue_pairs(const forms::SimplePoleForm& f) {
  json j = json::array();
  for (const auto& [pole, res] : f.residues) j.push_back({f.ctx->format(pole), f.ctx->format(res)});
  return j;
}

std::string residue_text(const forms::SimplePoleForm& f) {
  std::string out;
  for (const auto& [pole, res] : f.residues) out += "  " + f.ctx->pretty(pole) + " -> " + f.ctx->pretty(res) + "\n";
  return out;
}

Outcome forms_cmd(const std::string& op, const FieldArgs& fa, const std::string& basis, const std::string& alpha) {
  const FieldPtr K = make_field(fa);
  if (basis.empty()) fail(ErrorCode::ParseError, "missing --basis");
  const auto b = addpoly::make_basis(K, parse_elements(*K, basis));
  Outcome o;
  o.payload["field"] = field_json(*K);
  o.payload["basis"] = elements_json(*K, b.w);
  if (op == "build") {
    const auto space = forms::build_lq_space(b);
    const auto v = forms::validate_lq_space(space);
    json forms_j = json::array();
    std::ostringstream text;
    for (std::size_t j = 0; j < space.basis_forms.size(); ++j) {
      forms_j.push_back({{"j", j + 1}, {"residues", residue_pairs(space.basis_forms[j])}});
      text << "omega_" << j + 1 << " (" << space.basis_forms[j].pole_count() << " poles)\n"
           << residue_text(space.basis_forms[j]);
    }
    o.payload["mu_plus_1"] = space.mu_plus_1;
    o.payload["forms"] = forms_j;
    o.payload["validation"] = {{"combinations", v.combinations}, {"failures", v.failures}, {"ok", v.ok()}};
    text << "mu+1 = " << space.mu_plus_1 << "; " << v.combinations << " combinations checked, "
         << v.failures.size() << " failures";
    o.text = text.str();
    o.passed = v.ok();
  } else if (op == "residues") {
    if (alpha.empty()) fail(ErrorCode::ParseError, "missing --alpha");
    const auto f = forms::omega_phi(b, parse_elements(*K, alpha));
    o.payload["alpha"] = elements_json(*K, parse_elements(*K, alpha));
    o.payload["residues"] = residue_pairs(f);
    o.text = std::to_string(f.pole_count()) + " poles\n" + residue_text(f);
    if (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
  } else {
    const GfElement gamma = forms::pagot_gamma(forms::build_lq_space(b));
    const GfElement predicted = forms::predicted_gamma(b);
    o.payload["gamma"] = K->format(gamma);
    o.payload["predicted"] = K->format(predicted);
    o.payload["matches"] = gamma == predicted;
    o.text = "gamma = " + K->pretty(gamma) + " (predicted " + K->pretty(predicted) + ")";
    o.passed = gamma == predicted;
  }
  return o;
}

// ----- pairing -----

Outcome pairing_cmd(const std::string& op, const FieldArgs& fa, const std::string& basis) {
  const FieldPtr K = make_field(fa);
  if (basis.empty()) fail(ErrorCode::ParseError, "missing --basis");
  const auto pc = pairing::make_context(addpoly::make_basis(K, parse_elements(*K, basis)));
  Outcome o;
  o.payload["field"] = field_json(*K);
  o.payload["basis"] = elements_json(*K, pc.b.w);
  o.payload["u_basis"] = elements_json(*K, pc.u_basis);
  if (op == "gram") {
    const auto gE = pairing::gram_matrix(pc, pairing::Which::E);
    const auto gF = pairing::gram_matrix(pc, pairing::Which::F);
    const bool ok = gE == gF && pairing::is_invertible(*K, gE) && pairing::is_invertible(*K, gF);
    o.payload["gram_E"] = matrix_json(*K, gE);
    o.payload["gram_f"] = matrix_json(*K, gF);
    o.payload["verdict"] = ok ? "pass" : "fail";
    o.text = "E:\n" + matrix_text(*K, gE) + "f:\n" + matrix_text(*K, gF) + (ok ? "pass" : "fail");
    o.passed = ok;
  } else {
    const auto c = pairing::check_exhaustive(pc);
    o.payload["pairs"] = c.pairs;
    o.payload["mismatches"] = c.mismatches;
    o.payload["not_in_fq"] = c.not_in_fq;
    o.payload["bilinear_failures"] = c.bilinear_failures;
    o.payload["gram_E_invertible"] = c.gram_E_invertible;
    o.payload["gram_f_invertible"] = c.gram_f_invertible;
    o.payload["grams_equal"] = c.grams_equal;
    o.payload["verdict"] = c.ok() ? "pass" : "fail";
    o.text = std::to_string(c.pairs) + " pairs, " + std::to_string(c.mismatches) + " mismatches: " +
             (c.ok() ? "pass" : "fail");
    o.passed = c.ok();
  }
  return o;
}

// ----- verify -----

struct VerifyArgs {
  std::string id;
  int n = 2;
  int m = 0;
  std::uint64_t q = 2;
  std::string mode = "randomized";
  std::uint64_t trials = 100;
  std::uint64_t seed = symid::kDefaultSeed;
  std::string suite;
};

std::string report_line(const json& r) {
  std::ostringstream s;
  const auto& par = r["parameters"];
  s << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["identity_id"].get<std::string>() << " n=" << par["n"]
    << " m=" << par["m"] << " q=" << par["q"] << " mode=" << r["mode"].get<std::string>() << " trials=" << r["trials"]
    << " failures=" << r["failures"];
  for (const auto& note : r["notes"]) s << "\n    note: " << note.get<std::string>();
  if (r.contains("witness")) s << "\n    witness: " << r["witness"].dump();
  return s.str();
}

Outcome verify_cmd(const VerifyArgs& v) {
  Outcome o;
  if (v.id == "all") {
    if (v.suite != "desk") fail(ErrorCode::ParseError, "verify all requires --suite desk");
    const json desk = suite::run_desk(v.seed);
    o.payload = desk;
    std::ostringstream s;
    for (const auto& c : desk["reports"]) {
      s << "criterion " << c["criterion"] << ": " << c["status"].get<std::string>() << " (" << c["checks"]
        << " checks, " << c["failures"] << " failures) " << c["title"].get<std::string>() << "\n";
      if (c.contains("failure_messages"))
        for (const auto& m : c["failure_messages"]) s << "    " << m.get<std::string>() << "\n";
    }
    s << "suite: " << desk["status"].get<std::string>();
    o.text = s.str();
    o.passed = desk["status"] == "pass";
    return o;
  }
  symid::CampaignOptions opt;
  opt.n = v.n;
  opt.m = v.m;
  opt.q = v.q;
  opt.mode = v.mode == "exact" ? symid::Mode::Exact : symid::Mode::Randomized;
  opt.trials = v.trials;
  opt.seed = v.seed;
  report::VerificationReport rep;
  if (v.id == "thm1") rep = symid::verify_thm1(opt);
  else if (v.id == "cofactor-matrix") rep = symid::verify_cofactor_matrix(opt);
  else if (v.id == "thm2") rep = symid::verify_thm2(opt);
  else if (v.id == "ore") rep = symid::verify_ore_coeff_formulas(opt);
  else rep = symid::verify_phi_map(opt);
  const json r = report::to_json(rep);
  o.payload["seed"] = v.seed;
  o.payload["reports"] = json::array({r});
  o.text = report_line(r);
  o.passed = rep.passed();
  return o;
}

// ----- etale -----

json poly_json(const Field& F, const upoly::Poly& P) { return elements_json(F, P); }

Outcome etale_cmd(const std::string& op, std::uint32_t p, std::uint32_t d, const std::string& f_text) {
  const FieldPtr K = gf::cached_field(p, 1, d);
  if (f_text.empty()) fail(ErrorCode::ParseError, "missing --f");
  const auto f = parse_elements(*K, f_text);
  const auto sys = etale::analyze_system(K, f);
  Outcome o;
  o.payload["field"] = field_json(*K);
  o.payload["f"] = elements_json(*K, f);
  o.payload["r"] = sys.r;
  o.payload["I"] = sys.I;
  o.payload["J"] = sys.J;
  json rel = json::array();
  for (const auto& x : sys.relations) rel.push_back({{"j", x.j}, {"lambda", x.lambda}, {"g", K->format(x.g)}});
  o.payload["relations"] = rel;
  std::ostringstream s;
  s << "r = " << sys.r << ", I = {";
  for (std::size_t i = 0; i < sys.I.size(); ++i) s << (i ? "," : "") << sys.I[i] + 1;
  s << "}";
  if (op == "analyze") {
    o.text = s.str();
    return o;
  }
  const auto alg = etale::build_Q(sys);
  const std::size_t factors = etale::count_simple_factors(alg);
  o.payload["Q"] = poly_json(*K, alg.Q);
  o.payload["Z_basis"] = elements_json(*K, alg.Z_basis);
  o.payload["factor_count"] = factors;
  s << "\nQ(W) = " << classical_text(*K, alg.Q, "W") << "\nfactors: " << factors;
  if (op == "verify") {
    const auto v = etale::verify_system(alg);
    o.payload["verification"] = {{"q_forms_agree", v.q_forms_agree},
                                 {"squarefree", v.squarefree},
                                 {"generators_ok", v.generators_ok},
                                 {"factor_count", v.factor_count},
                                 {"predicted_factor_count", v.predicted_factor_count},
                                 {"sigma_checks", v.sigma_checks},
                                 {"sigma_failures", v.sigma_failures},
                                 {"composition_ok", v.composition_ok},
                                 {"injective", v.injective},
                                 {"ok", v.ok()}};
    json table = json::array();
    for (const GfElement z : addpoly::enumerate_span(*K, alg.Z_basis)) {
      const auto sr = etale::sigma_action(alg, z);
      json images = json::array();
      for (const auto& img : sr.images) images.push_back(poly_json(*K, img));
      table.push_back({{"z", K->format(z)}, {"images", images}});
      s << "\nsigma_" << K->pretty(z) << ":";
      for (std::size_t i = 0; i < sr.images.size(); ++i)
        s << " w" << i + 1 << " -> " << classical_text(*K, sr.images[i], "W") << ";";
    }
    o.payload["action_table"] = table;
    s << "\n" << (v.ok() ? "pass" : "fail");
    o.passed = v.ok();
  }
  o.text = s.str();
  return o;
}

int status_for(ErrorCode code) {
  if (code == ErrorCode::ParseError) return kExitParse;
  if (is_internal_error(code)) return kExitFailure;
  return kExitPrecondition;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (const char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"moorekit: Moore determinants, additive polynomials and their identities over finite fields"};
  app.name("moorekit");
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--json", g.json_flag, "same as --format json");
  app.add_option("--field-cap", g.field_cap, "largest field order allowed (MOOREKIT_FIELD_CAP)");
  app.add_option("--term-budget", g.term_budget, "monomial budget of exact mode (MOOREKIT_TERM_BUDGET)");

  std::function<Outcome()> action;
  std::string command_text;

  FieldArgs fa;
  std::string tuple;
  bool signed_minors = false;
  auto* moore_app = app.add_subcommand("moore", "Moore determinants and cofactors");
  moore_app->require_subcommand(1);
  for (const std::string op : {"det", "cofactors", "indep"}) {
    auto* sub = moore_app->add_subcommand(op);
    add_field_options(sub, fa);
    sub->add_option("--tuple", tuple, "comma-separated elements")->required();
    if (op == "cofactors") sub->add_flag("--signed", signed_minors, "signed first-row cofactors");
    sub->callback([&, op] { action = [&, op] { return moore_cmd(op, fa, tuple, signed_minors); }; });
  }

  AddpolyArgs aa;
  auto* add_app = app.add_subcommand("addpoly", "additive (q-)polynomials");
  add_app->require_subcommand(1);
  for (const std::string op : {"subspace", "hyperplane", "reverse", "compose", "divide", "kernel"}) {
    auto* sub = add_app->add_subcommand(op);
    add_field_options(sub, fa);
    if (op == "subspace" || op == "hyperplane") sub->add_option("--basis", aa.basis, "basis of W")->required();
    if (op == "hyperplane") sub->add_option("--alpha", aa.alpha, "F_q-coefficients of the functional")->required();
    if (op != "subspace" && op != "hyperplane")
      sub->add_option("--coeffs", aa.coeffs, "coefficients of X, X^q, X^{q^2}, ...")->required();
    if (op == "compose" || op == "divide")
      sub->add_option("--with", aa.other, op == "compose" ? "inner polynomial" : "monic divisor")->required();
    sub->callback([&, op] { action = [&, op] { return addpoly_cmd(op, fa, aa); }; });
  }

  std::string basis, alpha;
  auto* forms_app = app.add_subcommand("forms", "differential forms with simple poles");
  forms_app->require_subcommand(1);
  for (const std::string op : {"build", "residues", "gamma"}) {
    auto* sub = forms_app->add_subcommand(op);
    add_field_options(sub, fa);
    sub->add_option("--basis", basis, "basis of W")->required();
    if (op == "residues") sub->add_option("--alpha", alpha, "F_q-coefficients of the functional")->required();
    sub->callback([&, op] { action = [&, op] { return forms_cmd(op, fa, basis, alpha); }; });
  }

  auto* pairing_app = app.add_subcommand("pairing", "pairings between W and the kernel of the reversed polynomial");
  pairing_app->require_subcommand(1);
  for (const std::string op : {"gram", "check-equal"}) {
    auto* sub = pairing_app->add_subcommand(op);
    add_field_options(sub, fa);
    sub->add_option("--basis", basis, "basis of W")->required();
    sub->callback([&, op] { action = [&, op] { return pairing_cmd(op, fa, basis); }; });
  }

  VerifyArgs va;
  auto* verify_app = app.add_subcommand("verify", "identity verification campaigns");
  verify_app->add_option("identity", va.id, "identity to verify")
      ->required()
      ->check(CLI::IsMember({"thm1", "cofactor-matrix", "thm2", "ore", "phi", "all"}));
  verify_app->add_option("--n", va.n, "number of variables Y")->capture_default_str();
  verify_app->add_option("--m", va.m, "number of variables X")->capture_default_str();
  verify_app->add_option("--q", va.q, "size of the base field")->capture_default_str();
  verify_app->add_option("--mode", va.mode, "exact or randomized")
      ->check(CLI::IsMember({"exact", "randomized"}))
      ->capture_default_str();
  verify_app->add_option("--trials", va.trials, "randomized trials")->capture_default_str();
  verify_app->add_option("--seed", va.seed, "campaign seed")->capture_default_str();
  verify_app->add_option("--suite", va.suite, "suite for `verify all`")->check(CLI::IsMember({"desk"}));
  verify_app->callback([&] { action = [&] { return verify_cmd(va); }; });

  std::uint32_t ep = 2, ed = 1;
  std::string f_text;
  auto* etale_app = app.add_subcommand("etale", "Artin-Schreier systems as a single-generator algebra");
  etale_app->require_subcommand(1);
  for (const std::string op : {"analyze", "build", "verify"}) {
    auto* sub = etale_app->add_subcommand(op);
    sub->add_option("--p", ep, "characteristic")->capture_default_str();
    sub->add_option("--field", ed, "degree of K over F_p")->capture_default_str();
    sub->add_option("--f", f_text, "comma-separated right-hand sides f_i")->required();
    sub->callback([&, op] { action = [&, op] { return etale_cmd(op, ep, ed, f_text); }; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // subcommand help requests surface as CallForHelp raised from within the subcommand
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kExitOk;
    }
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  for (const auto& a : args) command_text += (command_text.empty() ? "" : " ") + a;

  if (g.field_cap) ::setenv("MOOREKIT_FIELD_CAP", std::to_string(g.field_cap).c_str(), 1);
  if (g.term_budget) ::setenv("MOOREKIT_TERM_BUDGET", std::to_string(g.term_budget).c_str(), 1);

  if (!action) {
    err << app.help();
    return kExitParse;
  }
  try {
    Outcome o = action();
    if (g.as_json()) {
      json j;
      j["schema"] = report::kSchemaVersion;
      j["command"] = o.payload.contains("command") ? o.payload["command"] : json(command_text);
      j["status"] = o.passed ? "pass" : "fail";
      for (auto& [key, value] : o.payload.items())
        if (key != "schema" && key != "command" && key != "status") j[key] = value;
      out << j.dump(2) << "\n";
    } else {
      out << o.text << "\n";
    }
    return o.passed ? kExitOk : kExitFailure;
  } catch (const Error& e) {
    const int status = status_for(e.code());
    if (g.as_json()) {
      json j;
      j["schema"] = report::kSchemaVersion;
      j["command"] = command_text;
      j["status"] = "error";
      j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return status;
  }
}

}  // namespace moorekit::cli
