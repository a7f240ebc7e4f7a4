#include "moorekit/symid.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/ring.hpp"
#include "moorekit/sparse.hpp"

namespace moorekit::symid {

namespace {

using json = report::json;
using ring::RMatrix;

struct Check {
  std::string name;
  bool ok;
};

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Ring plus a determinant routine; the identities below are written once
// against this interface and run both symbolically and numerically.
template <class R>
struct Algebra {
  using T = typename R::value_type;
  R r;
  std::function<T(const RMatrix<T>&)> det;

  T moore_det(const std::vector<T>& a) const {
    if (a.empty()) return r.one();
    return det(ring::moore_matrix(r, std::span<const T>(a), a.size()));
  }
  T frob(T x, std::uint64_t k) const {
    for (std::uint64_t i = 0; i < k; ++i) x = r.frob(x);
    return x;
  }
  T pow(const T& x, std::uint64_t e) const { return ring::power(r, x, e); }
  T sign(std::int64_t k) const { return k % 2 == 0 ? r.one() : r.neg(r.one()); }
  T mul(const T& a, const T& b) const { return r.mul(a, b); }
};

template <class T>
std::vector<T> without(const std::vector<T>& a, std::size_t i) {
  std::vector<T> out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != i) out.push_back(a[k]);
  return out;
}

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class R>
std::vector<Check> thm1_checks(const Algebra<R>& A, const std::vector<typename R::value_type>& Y,
                               const std::vector<typename R::value_type>& X, std::uint64_t q) {
  using T = typename R::value_type;
  const std::size_t n = Y.size();
  const T dN = A.moore_det(concat(Y, X));
  const T dm = A.moore_det(X);
  std::vector<T> signed_minors, unsigned_minors;
  for (std::size_t i = 0; i < n; ++i) {
    const T d = A.moore_det(concat(without(Y, i), X));
    unsigned_minors.push_back(d);
    signed_minors.push_back(i % 2 ? A.r.neg(d) : d);
  }
  const std::uint64_t s1 = moore_sum(q, n - 1), sn = moore_sum(q, n);
  const T rhs = A.mul(A.frob(dm, n - 1), A.pow(dN, s1));
  const T lhs_signed = A.moore_det(signed_minors);
  const T lhs_unsigned = A.mul(A.moore_det(unsigned_minors), A.pow(dm, s1));
  const T rhs_unsigned = A.mul(A.sign(static_cast<std::int64_t>(n / 2)), A.mul(A.pow(dN, s1), A.pow(dm, sn)));
  return {{"signed_cofactor_identity", lhs_signed == rhs}, {"unsigned_quotient_identity", lhs_unsigned == rhs_unsigned}};
}

template <class R>
std::vector<Check> cofactor_matrix_checks(const Algebra<R>& A, const std::vector<typename R::value_type>& Y,
                                          std::uint64_t q) {
  using T = typename R::value_type;
  const std::size_t n = Y.size();
  std::vector<T> c;
  for (std::size_t i = 0; i < n; ++i) {
    const T d = A.moore_det(without(Y, i));
    c.push_back(i % 2 ? A.r.neg(d) : d);
  }
  const T delta = A.moore_det(Y);
  const auto M = ring::mat_mul(A.r, ring::moore_matrix(A.r, std::span<const T>(c), n),
                               ring::transpose(ring::moore_matrix(A.r, std::span<const T>(Y), n)));
  auto alpha = [&](std::size_t k) {
    T acc = A.r.zero();
    for (std::size_t l = 0; l < n; ++l) acc = A.r.add(acc, A.mul(A.frob(c[l], k + 1), Y[l]));
    return acc;
  };
  std::vector<Check> checks;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T expected = A.r.zero();
      if (i == 0) {
        if (j == n - 1) expected = A.mul(A.sign(static_cast<std::int64_t>(n - 1)), delta);
      } else if (j + 1 == i) {
        expected = A.frob(delta, i - 1);
      } else if (j + 2 <= i) {
        expected = A.frob(alpha(i - j - 1), j);
      }
      checks.push_back({"entry(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", M[i][j] == expected});
    }
  }
  checks.push_back({"determinant_consequence", A.moore_det(c) == A.pow(delta, moore_sum(q, n - 1))});
  return checks;
}

template <class R>
std::vector<Check> thm2_checks(const Algebra<R>& A, const std::vector<typename R::value_type>& Y,
                               const std::vector<typename R::value_type>& X, std::uint64_t q) {
  using T = typename R::value_type;
  const std::size_t n = Y.size(), m = X.size(), N = n + m;
  const std::vector<T> z = concat(Y, X);
  std::vector<T> delta;
  for (std::size_t j = 0; j < N; ++j) {
    const T d = j < n ? A.moore_det(concat(without(Y, j), X)) : A.moore_det(concat(Y, without(X, j - n)));
    delta.push_back(j % 2 ? A.r.neg(d) : d);
  }
  RMatrix<T> Amat(N, std::vector<T>(N, A.r.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j) Amat[i][j] = A.frob(delta[j], i);
  for (std::size_t k = 0; k < m; ++k) Amat[n + k][n + k] = A.r.one();
  const auto M = ring::mat_mul(A.r, Amat, ring::transpose(ring::moore_matrix(A.r, std::span<const T>(z), N)));

  const T dN = A.moore_det(z);
  const T dm = A.moore_det(X);
  auto alpha = [&](std::size_t k) {
    T acc = A.r.zero();
    for (std::size_t l = 0; l < N; ++l) acc = A.r.add(acc, A.mul(A.frob(delta[l], k + 1), z[l]));
    return acc;
  };
  std::vector<Check> checks;
  auto entry_name = [](const char* block, std::size_t i, std::size_t j) {
    return std::string(block) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      T expected = A.r.zero();
      if (i == 0) {
        if (j == N - 1) expected = A.mul(A.sign(static_cast<std::int64_t>(N - 1)), dN);
      } else if (j + 1 == i) {
        expected = A.frob(dN, i - 1);
      } else if (j + 2 <= i) {
        expected = A.frob(alpha(i - j - 1), j);
      }
      checks.push_back({entry_name(j < n ? "M1" : "M2", i, j), M[i][j] == expected});
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) checks.push_back({entry_name("M3", k, j), M[n + k][j] == A.frob(X[k], j)});
    // M4 is the transposed Moore matrix of X^{q^n}
    for (std::size_t j = 0; j < m; ++j) {
      checks.push_back({entry_name("M4", k, j), M[n + k][n + j] == A.frob(A.frob(X[k], n), j)});
    }
  }

  RMatrix<T> Nmat;
  for (std::size_t i = 1; i < N; ++i) Nmat.emplace_back(M[i].begin(), M[i].end() - 1);
  const std::uint64_t s1 = moore_sum(q, n - 1);
  const T det_n = A.det(Nmat);
  const T det_m = A.det(M);
  const T det_a = A.det(Amat);
  const T top = A.moore_det(std::vector<T>(delta.begin(), delta.begin() + n));
  const T closed = A.mul(A.pow(dN, s1), A.frob(dm, n - 1));
  checks.push_back({"detN_closed_form", det_n == closed});
  checks.push_back({"detM_first_row_expansion", det_m == A.mul(dN, det_n)});
  checks.push_back({"detM_product", det_m == A.mul(det_a, dN)});
  checks.push_back({"detA_block_triangular", det_a == top});
  checks.push_back({"signed_cofactor_consequence", top == closed});
  return checks;
}

// ------------------------------------------------------------ runners

struct Params {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
};

Params split_q(std::uint64_t q) {
  const auto ps = gf::split_prime_power(q);
  if (!ps) fail(ErrorCode::PreconditionError, "q = " + std::to_string(q) + " is not a prime power");
  return {ps->first, ps->second};
}

VerificationReport new_report(const std::string& id, const CampaignOptions& o, const Params& ps) {
  VerificationReport r;
  r.identity_id = id;
  r.n = o.n;
  r.m = o.m;
  r.q = o.q;
  r.p = ps.p;
  r.s = ps.s;
  return r;
}

std::string campaign_label(const VerificationReport& r) {
  return r.identity_id + "/n=" + std::to_string(r.n) + "/m=" + std::to_string(r.m) + "/q=" + std::to_string(r.q);
}

std::string format_bound_note(double per_trial, std::uint64_t trials) {
  char buf[128];
  const double log2_bound = per_trial > 0 ? static_cast<double>(trials) * std::log2(per_trial) : -INFINITY;
  std::snprintf(buf, sizeof buf, "campaign false-pass probability <= 2^%.1f (per-trial bound raised to the trial count)",
                log2_bound);
  return buf;
}

using TrialFn = std::function<std::optional<std::vector<Check>>(const Field&, std::mt19937_64&, json&)>;

void run_randomized(VerificationReport& rep, const Extension& ext, const CampaignOptions& o, const TrialFn& fn) {
  rep.mode = "randomized";
  rep.extension_degree = ext.t;
  rep.degree_bound = ext.degree;
  rep.false_pass_bound_per_trial = ext.false_pass_bound;
  const std::string label = campaign_label(rep);
  for (std::uint64_t trial = 0; trial < o.trials; ++trial) {
    std::mt19937_64 rng(report::trial_seed(o.seed, label, trial));
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) fail(ErrorCode::InternalMismatch, "too many degenerate samples");
      json assignment = json::object();
      const auto checks = fn(*ext.K, rng, assignment);
      if (!checks) {
        ++rep.degenerate_resamples;
        continue;
      }
      ++rep.trials;
      for (const auto& c : *checks) {
        if (!c.ok) {
          rep.record_failure({{"trial", trial}, {"check", c.name}, {"assignment", assignment}});
          break;
        }
      }
      break;
    }
  }
  rep.notes.push_back(format_bound_note(ext.false_pass_bound, rep.trials));
}

void record_exact(VerificationReport& rep, const std::vector<Check>& checks) {
  rep.mode = "exact";
  rep.trials = 1;
  for (const auto& c : checks) {
    if (!c.ok) {
      rep.record_failure({{"check", c.name}, {"assignment", "symbolic"}});
      break;
    }
  }
}

std::vector<GfElement> sample(const Field& K, std::mt19937_64& rng, std::size_t count, const std::string& prefix,
                              json& assignment) {
  std::vector<GfElement> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = K.random(rng);
    assignment[prefix + std::to_string(i + 1)] = K.format(out[i]);
  }
  return out;
}

Algebra<ring::FieldRing> numeric(const Field& K) {
  return {ring::FieldRing{K}, [&K](const gf::Matrix& m) { return gf::determinant(K, m); }};
}

Algebra<sparse::SparseRing> symbolic(const FieldPtr& Fq, std::size_t nvars) {
  sparse::SparseRing r{Fq, nvars};
  return {r, [r](const RMatrix<sparse::SparsePoly>& m) { return ring::det_laplace(r, m); }};
}

std::vector<sparse::SparsePoly> variables(const FieldPtr& Fq, std::size_t nvars, std::size_t from, std::size_t count) {
  std::vector<sparse::SparsePoly> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sparse::SparsePoly::variable(Fq, nvars, from + i));
  return out;
}

// Runs the exact branch, falling back to randomized specialization when the
// term budget is exhausted.
void run_with_fallback(VerificationReport& rep, const CampaignOptions& o, const std::function<std::vector<Check>()>& exact,
                       const std::function<void()>& randomized) {
  if (o.mode == Mode::Exact) {
    try {
      record_exact(rep, exact());
      return;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      rep.notes.push_back("exact mode exceeded the term budget; fell back to randomized specialization");
    }
  }
  randomized();
}

template <class F>
VerificationReport timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep = body();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::PreconditionError, what);
}

}  // namespace

std::uint64_t moore_sum(std::uint64_t q, std::uint64_t k) {
  std::uint64_t total = 0, term = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    total += term;
    term *= q;
  }
  return total;
}

Extension choose_extension(std::uint32_t p, std::uint32_t s, std::uint64_t degree, std::uint64_t resample_degree) {
  const std::uint64_t q = ipow(p, s);
  const std::uint64_t target = 4 * (degree + resample_degree);
  std::uint32_t t = 1;
  std::uint64_t size = q;
  while (size <= target) {
    ++t;
    size *= q;
    if (size > gf::default_size_cap()) {
      fail(ErrorCode::BudgetExceeded, "no extension of F_" + std::to_string(q) + " below the field size cap exceeds " +
                                          std::to_string(target));
    }
  }
  Extension ext;
  ext.K = gf::cached_field(p, s, t);
  ext.t = t;
  ext.degree = degree;
  ext.false_pass_bound = static_cast<double>(degree) / static_cast<double>(size - resample_degree);
  return ext;
}

std::vector<GfElement> phi(const Field& F, std::span<const GfElement> a) { return moore::cofactor_row(F, a, false); }

VerificationReport verify_thm1(const CampaignOptions& o) {
  return timed([&] {
    require(o.n >= 2 && o.m >= 0, "thm1 needs n >= 2 and m >= 0");
    const Params ps = split_q(o.q);
    VerificationReport rep = new_report("thm1", o, ps);
    const std::size_t n = o.n, m = o.m, N = n + m;
    const std::uint64_t q = o.q;
    run_with_fallback(
        rep, o,
        [&] {
          const FieldPtr Fq = gf::cached_field(ps.p, ps.s, 1);
          const auto A = symbolic(Fq, N);
          const auto Y = variables(Fq, N, 0, n), X = variables(Fq, N, n, m);
          auto checks = thm1_checks(A, Y, X, q);
          std::vector<std::size_t> all(N);
          std::iota(all.begin(), all.end(), 0);
          checks.push_back({"moore_det_algorithms", sparse::sym_moore_det(Fq, N, all) == A.moore_det(concat(Y, X))});
          return checks;
        },
        [&] {
          // Degrees: minors S_{N-1}, both sides of the signed identity
          // S_n S_{N-1}; the unsigned form adds S_m S_{n-1}. Resampling rejects
          // Delta_N = 0 (degree S_N).
          const std::uint64_t deg = moore_sum(q, n) * moore_sum(q, N - 1) + moore_sum(q, m) * moore_sum(q, n);
          const Extension ext = choose_extension(ps.p, ps.s, deg, moore_sum(q, N));
          run_randomized(rep, ext, o, [&](const Field& K, std::mt19937_64& rng, json& as) -> std::optional<std::vector<Check>> {
            const auto Y = sample(K, rng, n, "Y", as);
            const auto X = sample(K, rng, m, "X", as);
            if (moore::moore_det(K, concat(Y, X)).is_zero()) return std::nullopt;
            return thm1_checks(numeric(K), Y, X, q);
          });
        });
    return rep;
  });
}

VerificationReport verify_cofactor_matrix(const CampaignOptions& o) {
  return timed([&] {
    require(o.n >= 2, "cofactor-matrix needs n >= 2");
    const Params ps = split_q(o.q);
    CampaignOptions oo = o;
    oo.m = 0;
    VerificationReport rep = new_report("cofactor-matrix", oo, ps);
    const std::size_t n = o.n;
    const std::uint64_t q = o.q;
    run_with_fallback(
        rep, o,
        [&] {
          const FieldPtr Fq = gf::cached_field(ps.p, ps.s, 1);
          return cofactor_matrix_checks(symbolic(Fq, n), variables(Fq, n, 0, n), q);
        },
        [&] {
          // Entries have degree at most q^{n-1} (S_{n-1} + 1); the determinant
          // check has degree S_n S_{n-1}.
          const std::uint64_t qn1 = ipow(q, n - 1);
          const std::uint64_t deg =
              std::max(qn1 * (moore_sum(q, n - 1) + 1) + qn1 * moore_sum(q, n), moore_sum(q, n) * moore_sum(q, n - 1));
          const Extension ext = choose_extension(ps.p, ps.s, deg, 0);
          run_randomized(rep, ext, o, [&](const Field& K, std::mt19937_64& rng, json& as) -> std::optional<std::vector<Check>> {
            return cofactor_matrix_checks(numeric(K), sample(K, rng, n, "Y", as), q);
          });
        });
    return rep;
  });
}

VerificationReport verify_thm2(const CampaignOptions& o) {
  return timed([&] {
    require(o.n >= 2 && o.m >= 1, "thm2 needs n >= 2 and m >= 1");
    const Params ps = split_q(o.q);
    VerificationReport rep = new_report("thm2", o, ps);
    const std::size_t n = o.n, m = o.m, N = n + m;
    const std::uint64_t q = o.q;
    run_with_fallback(
        rep, o,
        [&] {
          const FieldPtr Fq = gf::cached_field(ps.p, ps.s, 1);
          return thm2_checks(symbolic(Fq, N), variables(Fq, N, 0, n), variables(Fq, N, n, m), q);
        },
        [&] {
          // Row degrees of M are at most q^{n-1} S_{N-1} + q^{N-1}; det M is
          // bounded by the sum over rows. Delta_N = 0 is resampled.
          const std::uint64_t row = ipow(q, n - 1) * moore_sum(q, N - 1) + ipow(q, N - 1);
          const std::uint64_t deg = N * row + moore_sum(q, N) * (1 + moore_sum(q, n - 1)) + moore_sum(q, m) * ipow(q, n - 1);
          const Extension ext = choose_extension(ps.p, ps.s, deg, moore_sum(q, N));
          run_randomized(rep, ext, o, [&](const Field& K, std::mt19937_64& rng, json& as) -> std::optional<std::vector<Check>> {
            const auto Y = sample(K, rng, n, "Y", as);
            const auto X = sample(K, rng, m, "X", as);
            if (moore::moore_det(K, concat(Y, X)).is_zero()) return std::nullopt;
            return thm2_checks(numeric(K), Y, X, q);
          });
        });
    return rep;
  });
}

VerificationReport verify_ore_coeff_formulas(const CampaignOptions& o) {
  return timed([&] {
    require(o.n >= 2, "ore needs n >= 2");
    const Params ps = split_q(o.q);
    CampaignOptions oo = o;
    oo.m = 0;
    VerificationReport rep = new_report("ore", oo, ps);
    if (o.mode == Mode::Exact) rep.notes.push_back("exact mode is not offered for this identity; randomized specialization used");
    const std::size_t n = o.n;
    const std::uint64_t q = o.q;
    const std::uint64_t sn = moore_sum(q, n), sn1 = moore_sum(q, n - 1), sn2 = moore_sum(q, n + 1);
    // Degree in w of every checked identity, both sides.
    std::uint64_t deg = std::max((q - 1) * sn * sn1, sn * (ipow(q, n - 1) - 1));
    deg = std::max(deg, sn * sn1);
    for (std::size_t mm = 1; mm < n; ++mm) {
      const std::uint64_t lhs = sn1 * (sn2 - ipow(q, mm));
      const std::uint64_t bw = sn2 - ipow(q, n - mm);
      deg = std::max(deg, (q - 1) * lhs);
      deg = std::max(deg, sn * (ipow(q, n) - ipow(q, mm + 1) + ipow(q, mm - 1) - 1) + bw * ipow(q, mm - 1) * (q - 1));
      deg = std::max(deg, lhs);
      deg = std::max(deg, sn * (sn - ipow(q, mm - 1) - ipow(q, mm)) + bw * ipow(q, mm - 1));
    }
    const Extension ext = choose_extension(ps.p, ps.s, deg, sn);
    run_randomized(rep, ext, o, [&](const Field& K, std::mt19937_64& rng, json& as) -> std::optional<std::vector<Check>> {
      const auto w = sample(K, rng, n, "w", as);
      const GfElement delta = moore::moore_det(K, w);
      if (delta.is_zero()) return std::nullopt;
      const auto minors = moore::cofactor_row(K, w, false);
      const GfElement dm = moore::moore_det(K, minors);
      std::vector<Check> checks;
      checks.push_back({"minor_determinant_power", K.pow(dm, q - 1) == K.pow(delta, ipow(q, n - 1) - 1)});
      checks.push_back({"minor_determinant_sign", dm == K.mul(K.sign(n / 2), K.pow(delta, sn1))});
      for (std::size_t mm = 1; mm < n; ++mm) {
        const GfElement bm = moore::bordered_minor(K, minors, mm);
        const GfElement bw = moore::bordered_minor(K, w, n - mm);
        const std::uint64_t qm1 = ipow(q, mm - 1);
        const GfElement power_rhs = K.mul(K.pow(delta, ipow(q, n) - ipow(q, mm + 1) + qm1 - 1), K.pow(bw, qm1 * (q - 1)));
        checks.push_back({"bordered_minor_power(m=" + std::to_string(mm) + ")", K.pow(bm, q - 1) == power_rhs});
        const GfElement exact_rhs =
            K.mul(K.sign(n / 2), K.mul(K.pow(delta, sn - qm1 - ipow(q, mm)), K.pow(bw, qm1)));
        checks.push_back({"bordered_minor_closed_form(m=" + std::to_string(mm) + ")", bm == exact_rhs});
      }
      return checks;
    });
    return rep;
  });
}

VerificationReport verify_phi_map(const CampaignOptions& o) {
  return timed([&] {
    require(o.n >= 2, "phi needs n >= 2");
    const Params ps = split_q(o.q);
    CampaignOptions oo = o;
    oo.m = 0;
    VerificationReport rep = new_report("phi", oo, ps);
    if (o.mode == Mode::Exact) rep.notes.push_back("exact mode is not offered for this identity; randomized specialization used");
    rep.notes.push_back("surjectivity needs an algebraically closed field and is not asserted");
    const std::size_t n = o.n;
    const std::uint64_t q = o.q;
    const std::uint64_t sn = moore_sum(q, n), sn1 = moore_sum(q, n - 1), sn2 = moore_sum(q, n - 2);
    // phi o phi has degree S_{n-1}^2, the fiber law 2 S_{n-1}, the omitted
    // cofactor identity S_n^2. Rejected samples: Delta_n(a) = 0 or lambda = 0.
    const std::uint64_t deg = std::max({sn1 * sn1, 2 * sn1, sn * sn});
    const Extension ext = choose_extension(ps.p, ps.s, deg, sn + 1);
    run_randomized(rep, ext, o, [&](const Field& K, std::mt19937_64& rng, json& as) -> std::optional<std::vector<Check>> {
      const auto a = sample(K, rng, n, "a", as);
      const GfElement lambda = K.random(rng);
      as["lambda"] = K.format(lambda);
      const auto Y = sample(K, rng, n + 1, "Y", as);
      const GfElement delta = moore::moore_det(K, a);
      if (delta.is_zero() || lambda.is_zero()) return std::nullopt;
      std::vector<Check> checks;
      const auto b = phi(K, a);
      const auto bb = phi(K, b);
      checks.push_back({"image_determinant", moore::moore_det(K, b) == K.mul(K.sign(n / 2), K.pow(delta, sn1))});
      const GfElement factor = K.mul(K.sign((n - 1) / 2), K.pow(delta, sn2));
      bool closed = true;
      for (std::size_t i = 0; i < n; ++i) closed = closed && bb[i] == K.mul(factor, K.frobenius_q(a[i], n - 2));
      checks.push_back({"phi_squared_closed_form", closed});
      std::vector<GfElement> scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = K.mul(lambda, a[i]);
      const auto phi_scaled = phi(K, scaled);
      const GfElement lam_pow = K.pow(lambda, sn1);
      bool fiber = true;
      for (std::size_t i = 0; i < n; ++i) fiber = fiber && phi_scaled[i] == K.mul(lam_pow, b[i]);
      checks.push_back({"fiber_law", fiber});
      // mu ranges over the S_{n-1}-th roots of unity; phi(mu a) = phi(a)
      const std::uint64_t g = std::gcd(sn1, K.order() - 1);
      const GfElement mu = K.pow(lambda, (K.order() - 1) / g);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = K.mul(mu, a[i]);
      checks.push_back({"fiber_root_of_unity", phi(K, scaled) == b});
      const auto cof = moore::cofactor_row(K, Y, false);
      const GfElement dY = moore::moore_det(K, Y);
      for (std::size_t i = 0; i <= n; ++i) {
        const GfElement rhs = K.mul(K.sign(n / 2), K.mul(K.frobenius_q(Y[i], n - 1), K.pow(dY, sn1)));
        checks.push_back({"omitted_cofactor_identity(i=" + std::to_string(i + 1) + ")",
                          moore::moore_det(K, moore::omit(cof, i)) == rhs});
      }
      return checks;
    });
    return rep;
  });
}

}  // namespace moorekit::symid
