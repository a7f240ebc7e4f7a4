#include "moorekit/suite.hpp"

#include <chrono>
#include <random>

#include "moorekit/addpoly.hpp"
#include "moorekit/error.hpp"
#include "moorekit/etale.hpp"
#include "moorekit/forms.hpp"
#include "moorekit/gf.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/pairing.hpp"
#include "moorekit/symid.hpp"

namespace moorekit::suite {

namespace {

using gf::Field;
using gf::FieldPtr;
using gf::GfElement;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxFailureMessages = 20;

void note_failure(CriterionResult& r, const std::string& message) {
  ++r.failures;
  if (r.failure_messages.size() < kMaxFailureMessages) r.failure_messages.push_back(message);
}

std::string tuple_text(const Field& F, const std::vector<GfElement>& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + F.pretty(a[i]);
  return out + ")";
}

// Every tuple of length n over K, first entry fastest.
template <class Fn>
void for_each_tuple(const Field& F, std::size_t n, Fn&& fn) {
  std::vector<GfElement> a(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.order();
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t x = k;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = GfElement{static_cast<std::uint32_t>(x % F.order())};
      x /= F.order();
    }
    fn(a);
  }
}

std::mt19937_64 rng_for(std::uint64_t seed, const std::string& label) {
  return std::mt19937_64(report::trial_seed(seed, label, 0));
}

std::vector<GfElement> random_basis(const Field& F, std::size_t n, std::mt19937_64& rng) {
  std::vector<GfElement> w(n);
  do {
    for (auto& x : w) x = F.random(rng);
  } while (moore::moore_det(F, w).is_zero());
  return w;
}

// Runs fn, catching library errors as failures, and records the elapsed time.
CriterionResult timed(int id, const std::string& title, const std::function<void(CriterionResult&)>& fn) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  const auto start = Clock::now();
  try {
    fn(r);
  } catch (const Error& e) {
    note_failure(r, std::string("error: ") + e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r.passed = r.failures == 0 && r.checks > 0;
  return r;
}

struct Campaign {
  int n;
  int m;
  std::uint64_t q;
  symid::Mode mode;
  std::uint64_t trials;
};

using CampaignFn = report::VerificationReport (*)(const symid::CampaignOptions&);

// A campaign passes when it has no failures, ran in the requested mode, and
// (randomized) ran at least 100 trials with per-trial soundness at most 1/4.
void run_campaigns(CriterionResult& r, CampaignFn fn, const std::vector<Campaign>& campaigns, std::uint64_t seed) {
  for (const auto& c : campaigns) {
    symid::CampaignOptions o;
    o.n = c.n;
    o.m = c.m;
    o.q = c.q;
    o.mode = c.mode;
    o.trials = c.trials;
    o.seed = seed;
    const auto rep = fn(o);
    r.checks += rep.trials;
    const std::string label =
        rep.identity_id + " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " q=" + std::to_string(c.q);
    if (!rep.passed()) note_failure(r, label + ": " + std::to_string(rep.failures) + " failures");
    const bool want_exact = c.mode == symid::Mode::Exact;
    if (want_exact && rep.mode != "exact") note_failure(r, label + ": exact mode fell back to randomized");
    if (rep.mode == "randomized") {
      if (rep.trials < 100) note_failure(r, label + ": fewer than 100 trials");
      if (rep.false_pass_bound_per_trial > 0.25) note_failure(r, label + ": per-trial bound above 1/4");
    }
    r.reports.push_back(report::to_json(rep));
  }
}

// Ordered bases of every n-dimensional F_q-subspace of K.
std::vector<std::vector<GfElement>> all_bases(const Field& F, std::size_t n) {
  std::vector<std::vector<GfElement>> out;
  std::vector<GfElement> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t c = 1; c < F.order(); ++c) {
      cur.push_back(GfElement{c});
      if (moore::is_fq_independent(F, cur)) rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

struct SpaceFamily {
  FieldPtr K;
  std::vector<std::vector<GfElement>> bases;
  std::string label;
};

// Criterion 7 and 8 share these: all bases of 2- and 3-dimensional
// F_2-subspaces of F_16, plus a seeded sample of 2-dimensional F_3-subspaces of F_27.
std::vector<SpaceFamily> lq_families(std::uint64_t seed) {
  const FieldPtr F16 = gf::cached_field(2, 1, 4), F27 = gf::cached_field(3, 1, 3);
  std::vector<SpaceFamily> out{{F16, all_bases(*F16, 2), "F16 n=2"}, {F16, all_bases(*F16, 3), "F16 n=3"}};
  auto rng = rng_for(seed, "lq/F27");
  SpaceFamily sample{F27, {}, "F27 n=2 sample"};
  for (int i = 0; i < 40; ++i) sample.bases.push_back(random_basis(*F27, 2, rng));
  out.push_back(std::move(sample));
  return out;
}

}  // namespace

json CriterionResult::to_json() const {
  json j;
  j["criterion"] = id;
  j["title"] = title;
  j["status"] = passed ? "pass" : "fail";
  j["checks"] = checks;
  j["failures"] = failures;
  j["details"] = details;
  if (!failure_messages.empty()) j["failure_messages"] = failure_messages;
  if (!reports.empty()) j["reports"] = reports;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

CriterionResult moore_cross_oracle(std::uint64_t seed) {
  return timed(1, "Moore determinant: elimination vs product of linear forms", [&](CriterionResult& r) {
    json fields = json::array();
    for (const auto& K : {gf::cached_field(2, 1, 2), gf::cached_field(2, 1, 3)}) {
      std::uint64_t count = 0;
      for (std::size_t n = 1; n <= 3; ++n) {
        for_each_tuple(*K, n, [&](const std::vector<GfElement>& a) {
          ++count;
          if (moore::moore_det(*K, a) != moore::moore_det_product(*K, a))
            note_failure(r, "F_" + std::to_string(K->order()) + " " + tuple_text(*K, a));
        });
      }
      r.checks += count;
      fields.push_back({{"field", K->order()}, {"q", K->q()}, {"mode", "exhaustive n<=3"}, {"tuples", count}});
    }
    for (const auto& K : {gf::cached_field(2, 1, 10), gf::cached_field(3, 1, 6)}) {
      auto rng = rng_for(seed, "moore/" + std::to_string(K->order()));
      for (int i = 0; i < 1000; ++i) {
        std::vector<GfElement> a(1 + i % 4);
        for (auto& x : a) x = K->random(rng);
        if (moore::moore_det(*K, a) != moore::moore_det_product(*K, a))
          note_failure(r, "F_" + std::to_string(K->order()) + " " + tuple_text(*K, a));
      }
      r.checks += 1000;
      fields.push_back({{"field", K->order()}, {"q", K->q()}, {"mode", "random n in 1..4"}, {"tuples", 1000}});
    }
    r.details["sweeps"] = fields;
  });
}

CriterionResult independence_equivalences(std::uint64_t) {
  return timed(2, "Independence iff nonzero Moore determinant iff nonzero determinant of cofactors",
               [&](CriterionResult& r) {
                 const FieldPtr K = gf::cached_field(2, 1, 4);
                 std::uint64_t independent = 0;
                 for (std::size_t n = 1; n <= 3; ++n) {
                   for_each_tuple(*K, n, [&](const std::vector<GfElement>& a) {
                     ++r.checks;
                     // q = p, so F_p-rank is the F_q-rank
                     const bool indep = K->rank_over_fp(a) == n;
                     const bool det = !moore::moore_det(*K, a).is_zero();
                     bool cof = det;
                     if (n >= 2) cof = !moore::moore_det(*K, moore::cofactor_row(*K, a, true)).is_zero();
                     independent += indep;
                     if (indep != det || det != cof) note_failure(r, tuple_text(*K, a));
                   });
                 }
                 r.details = {{"field", 16}, {"q", 2}, {"max_n", 3}, {"independent_tuples", independent}};
               });
}

CriterionResult minor_determinant_identities(std::uint64_t seed) {
  return timed(3, "Determinants of the minors: power law, sign and bordered closed forms", [&](CriterionResult& r) {
    run_campaigns(r, symid::verify_ore_coeff_formulas,
                  {{2, 0, 2, symid::Mode::Randomized, 200},
                   {3, 0, 2, symid::Mode::Randomized, 200},
                   {2, 0, 3, symid::Mode::Randomized, 200},
                   {4, 0, 2, symid::Mode::Randomized, 200}},
                  seed);
  });
}

CriterionResult signed_cofactor_identity(std::uint64_t seed) {
  return timed(4, "Moore determinant of the signed cofactors of (Y, X)", [&](CriterionResult& r) {
    run_campaigns(r, symid::verify_thm1,
                  {{2, 0, 2, symid::Mode::Exact, 1},
                   {2, 1, 2, symid::Mode::Exact, 1},
                   {3, 0, 2, symid::Mode::Exact, 1},
                   {2, 0, 3, symid::Mode::Exact, 1},
                   {3, 1, 2, symid::Mode::Randomized, 100},
                   {4, 0, 2, symid::Mode::Randomized, 100},
                   {3, 0, 3, symid::Mode::Randomized, 100}},
                  seed);
  });
}

CriterionResult cofactor_matrix(std::uint64_t seed) {
  return timed(5, "Moore matrix of the cofactors times the transposed Moore matrix", [&](CriterionResult& r) {
    run_campaigns(r, symid::verify_cofactor_matrix,
                  {{2, 0, 2, symid::Mode::Exact, 1},
                   {3, 0, 2, symid::Mode::Exact, 1},
                   {2, 0, 3, symid::Mode::Exact, 1},
                   {4, 0, 2, symid::Mode::Randomized, 100}},
                  seed);
  });
}

CriterionResult block_matrix(std::uint64_t seed) {
  return timed(6, "Block matrix form of the general case and its determinant chain", [&](CriterionResult& r) {
    run_campaigns(r, symid::verify_thm2,
                  {{2, 1, 2, symid::Mode::Exact, 1},
                   {2, 2, 2, symid::Mode::Randomized, 100},
                   {3, 1, 2, symid::Mode::Randomized, 100}},
                  seed);
  });
}

CriterionResult lq_spaces(std::uint64_t seed) {
  return timed(7, "Spaces of forms with simple poles and F_q residues", [&](CriterionResult& r) {
    json families = json::array();
    for (const auto& fam : lq_families(seed)) {
      std::uint64_t combinations = 0;
      for (const auto& w : fam.bases) {
        const auto space = forms::build_lq_space(addpoly::make_basis(fam.K, w));
        const auto v = forms::validate_lq_space(space);
        combinations += v.combinations;
        r.checks += v.combinations;
        for (const auto& f : v.failures) note_failure(r, fam.label + " " + tuple_text(*fam.K, w) + ": " + f);
      }
      families.push_back({{"family", fam.label}, {"bases", fam.bases.size()}, {"combinations", combinations}});
    }
    r.details["families"] = families;
  });
}

CriterionResult gamma_divisibility(std::uint64_t seed) {
  return timed(8, "Exact divisibility of the Moore determinant of numerators with constant quotient",
               [&](CriterionResult& r) {
                 json families = json::array();
                 for (const auto& fam : lq_families(seed)) {
                   std::uint64_t matched = 0;
                   for (const auto& w : fam.bases) {
                     ++r.checks;
                     const auto b = addpoly::make_basis(fam.K, w);
                     const GfElement gamma = forms::pagot_gamma(forms::build_lq_space(b));
                     const GfElement predicted = forms::predicted_gamma(b);
                     if (gamma == predicted) {
                       ++matched;
                     } else {
                       note_failure(r, fam.label + " " + tuple_text(*fam.K, w) + ": gamma " + fam.K->pretty(gamma) +
                                           " predicted " + fam.K->pretty(predicted));
                     }
                   }
                   families.push_back({{"family", fam.label}, {"spaces", fam.bases.size()}, {"gamma_matches", matched}});
                 }
                 r.details["families"] = families;
               });
}

CriterionResult pairing_agreement(std::uint64_t seed) {
  return timed(9, "Telescoping pairing equals residue pairing and both are perfect", [&](CriterionResult& r) {
    struct Case {
      std::uint32_t p, s, t;
      std::size_t n;
    };
    json cases = json::array();
    for (const Case c : {Case{2, 1, 4, 2}, Case{2, 1, 4, 3}, Case{3, 1, 3, 2}}) {
      const FieldPtr K = gf::cached_field(c.p, c.s, c.t);
      auto rng = rng_for(seed, "pairing/" + std::to_string(K->order()) + "/n=" + std::to_string(c.n));
      std::uint64_t pairs = 0;
      for (int i = 0; i < 4; ++i) {
        const auto w = random_basis(*K, c.n, rng);
        const auto check = pairing::check_exhaustive(pairing::make_context(addpoly::make_basis(K, w)));
        pairs += check.pairs;
        r.checks += check.pairs;
        if (!check.ok())
          note_failure(r, "q=" + std::to_string(K->q()) + " " + tuple_text(*K, w) + ": " +
                              std::to_string(check.mismatches) + " mismatches");
      }
      cases.push_back({{"q", K->q()}, {"n", c.n}, {"field", K->order()}, {"bases", 4}, {"pairs", pairs}});
    }
    r.details["cases"] = cases;
  });
}

CriterionResult phi_map(std::uint64_t seed) {
  return timed(10, "The map of minors: closed form of its square and the fiber law", [&](CriterionResult& r) {
    std::vector<Campaign> campaigns;
    for (const std::uint64_t q : {2, 3})
      for (const int n : {2, 3, 4}) campaigns.push_back({n, 0, q, symid::Mode::Randomized, 200});
    run_campaigns(r, symid::verify_phi_map, campaigns, seed);
  });
}

CriterionResult artin_schreier(std::uint64_t) {
  return timed(11, "Artin-Schreier systems as a single-generator algebra", [&](CriterionResult& r) {
    const FieldPtr F2 = gf::cached_field(2, 1, 1), F4 = gf::cached_field(2, 1, 2), F8 = gf::cached_field(2, 1, 3);
    const std::vector<std::pair<FieldPtr, std::vector<GfElement>>> systems{
        {F2, {F2->one()}},
        {F4, {F4->one()}},
        {F4, {F4->one(), F4->root()}},
        {F8, {F8->root(), F8->mul(F8->root(), F8->root())}},
        {F8, {F8->one(), F8->root(), F8->mul(F8->root(), F8->root())}}};
    json rows = json::array();
    for (const auto& [K, f] : systems) {
      const auto alg = etale::build_Q(etale::analyze_system(K, f));
      const auto v = etale::verify_system(alg);
      r.checks += v.sigma_checks + 1;
      const std::string label = "F_" + std::to_string(K->order()) + " " + tuple_text(*K, f);
      if (!v.ok()) note_failure(r, label);
      rows.push_back({{"system", label},
                      {"r", alg.system.r},
                      {"q_forms_agree", v.q_forms_agree},
                      {"squarefree", v.squarefree},
                      {"generators_ok", v.generators_ok},
                      {"factor_count", v.factor_count},
                      {"predicted_factor_count", v.predicted_factor_count},
                      {"sigma_checks", v.sigma_checks},
                      {"sigma_failures", v.sigma_failures},
                      {"composition_ok", v.composition_ok},
                      {"injective", v.injective}});
    }
    r.details["systems"] = rows;
  });
}

const std::vector<Criterion>& desk_criteria() {
  static const std::vector<Criterion> list{
      {1, "moore cross-oracle", moore_cross_oracle},
      {2, "independence equivalences", independence_equivalences},
      {3, "determinants of the minors", minor_determinant_identities},
      {4, "signed cofactor identity", signed_cofactor_identity},
      {5, "cofactor matrix", cofactor_matrix},
      {6, "block matrix", block_matrix},
      {7, "forms with simple poles", lq_spaces},
      {8, "gamma divisibility", gamma_divisibility},
      {9, "pairings", pairing_agreement},
      {10, "map of minors", phi_map},
      {11, "artin-schreier", artin_schreier},
  };
  return list;
}

json run_desk(std::uint64_t seed) {
  const auto start = Clock::now();
  json reports = json::array();
  bool all = true;
  for (const auto& c : desk_criteria()) {
    const auto r = c.run(seed);
    all = all && r.passed;
    reports.push_back(r.to_json());
  }
  json j;
  j["schema"] = report::kSchemaVersion;
  j["command"] = "verify all --suite desk --seed " + std::to_string(seed);
  j["seed"] = seed;
  j["status"] = all ? "pass" : "fail";
  j["reports"] = reports;
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return j;
}

}  // namespace moorekit::suite
