#include "moorekit/etale.hpp"

#include <set>

#include "moorekit/addpoly.hpp"
#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/pairing.hpp"
#include "moorekit/ring.hpp"

namespace moorekit::etale {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// K[W]/(Q) with the p-power Frobenius, for division-free determinants.
struct QuotientRing {
  using value_type = Poly;
  const Field& F;
  const Poly& Q;

  value_type zero() const { return {}; }
  value_type one() const { return {F.one()}; }
  value_type add(const Poly& a, const Poly& b) const { return upoly::add(F, a, b); }
  value_type sub(const Poly& a, const Poly& b) const { return upoly::sub(F, a, b); }
  value_type neg(const Poly& a) const { return upoly::neg(F, a); }
  value_type mul(const Poly& a, const Poly& b) const { return upoly::mod(F, upoly::mul(F, a, b), Q); }
  bool is_zero(const Poly& a) const { return a.empty(); }
  value_type frob(const Poly& a) const { return upoly::mod(F, upoly::frobenius(F, a, 1), Q); }
  value_type scale(GfElement c, const Poly& a) const { return upoly::scale(F, c, a); }
  const std::vector<GfElement>& fq_scalars() const { return F.fq_elements(); }
};

std::vector<GfElement> signed_minors(const Field& F, const std::vector<GfElement>& f) {
  if (f.size() == 1) return {F.one()};
  return moore::cofactor_row(F, f, true);
}

// Power-basis elements e_k of K over F_p.
std::vector<GfElement> power_basis(const Field& F) {
  std::vector<GfElement> e;
  std::uint64_t code = 1;
  for (std::uint32_t k = 0; k < F.d(); ++k, code *= F.p()) e.push_back(GfElement{static_cast<std::uint32_t>(code)});
  return e;
}

GfElement wp_minus_w(const Field& F, GfElement x) { return F.sub(F.pow(x, F.p()), x); }

}  // namespace

ASSystem analyze_system(FieldPtr ctx, std::vector<GfElement> f) {
  const Field& F = *ctx;
  if (F.s() != 1) fail(ErrorCode::PreconditionError, "Artin-Schreier systems need q = p (s = 1)");
  if (f.empty()) fail(ErrorCode::EmptyTuple, "no Artin-Schreier data");
  if (moore::moore_det(F, f).is_zero()) fail(ErrorCode::DependentInput, "the f_i are dependent over F_p");
  ASSystem sys;
  sys.ctx = ctx;
  sys.f = f;
  const auto e = power_basis(F);
  std::vector<GfElement> image;
  for (const GfElement x : e) image.push_back(wp_minus_w(F, x));
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<GfElement> vectors;
    for (const std::size_t k : sys.I) vectors.push_back(f[k]);
    vectors.insert(vectors.end(), image.begin(), image.end());
    if (F.express_over_fp(vectors, f[i])) {
      sys.J.push_back(i);
    } else {
      sys.I.push_back(i);
    }
  }
  sys.r = sys.I.size();
  std::vector<GfElement> vectors;
  for (const std::size_t k : sys.I) vectors.push_back(f[k]);
  vectors.insert(vectors.end(), image.begin(), image.end());
  for (const std::size_t j : sys.J) {
    const auto coeff = F.express_over_fp(vectors, f[j]);
    if (!coeff) fail(ErrorCode::InternalMismatch, "lost a relation");
    Relation rel;
    rel.j = j;
    rel.lambda.assign(coeff->begin(), coeff->begin() + static_cast<long>(sys.r));
    rel.g = F.zero();
    for (std::size_t k = 0; k < e.size(); ++k) rel.g = F.add(rel.g, F.mul(F.from_int((*coeff)[sys.r + k]), e[k]));
    GfElement rhs = wp_minus_w(F, rel.g);
    for (std::size_t a = 0; a < sys.r; ++a) rhs = F.add(rhs, F.mul(F.from_int(rel.lambda[a]), f[sys.I[a]]));
    if (rhs != f[j]) fail(ErrorCode::InternalMismatch, "relation does not re-verify");
    sys.relations.push_back(rel);
  }
  return sys;
}

Poly closed_form_Q(const ASSystem& sys) {
  const Field& F = *sys.ctx;
  const std::size_t n = sys.f.size();
  const std::uint64_t p = F.p();
  const GfElement delta = moore::moore_det(F, sys.f);
  const std::uint64_t pn1 = ipow(p, n - 1);
  Poly Q(ipow(p, n) + 1, F.zero());
  Q.back() = F.one();
  for (std::size_t m = 1; m + 1 <= n; ++m) {
    const std::int64_t exponent =
        static_cast<std::int64_t>(pn1) - static_cast<std::int64_t>(ipow(p, m - 1)) - static_cast<std::int64_t>(ipow(p, m));
    const GfElement c = F.mul(F.sign(static_cast<std::int64_t>(n - m)),
                              F.mul(F.pow_signed(delta, exponent), F.pow(moore::bordered_minor(F, sys.f, n - m), ipow(p, m - 1))));
    Q[ipow(p, m)] = F.add(Q[ipow(p, m)], c);
  }
  Q[1] = F.add(Q[1], F.mul(F.sign(static_cast<std::int64_t>(n)), F.pow(delta, pn1 - 1)));
  Q[0] = F.sub(Q[0], F.pow(delta, pn1));
  return upoly::trimmed(Q);
}

Poly determinant_form_Q(const ASSystem& sys) {
  const Field& F = *sys.ctx;
  const std::size_t n = sys.f.size();
  const GfElement delta = moore::moore_det(F, sys.f);
  const auto PZ = addpoly::subspace_poly(addpoly::make_basis(sys.ctx, signed_minors(F, sys.f)));
  return upoly::sub(F, addpoly::to_classical(PZ), upoly::constant(F, F.pow(delta, ipow(F.p(), n - 1))));
}

EtaleAlgebra build_Q(const ASSystem& sys) {
  const Field& F = *sys.ctx;
  EtaleAlgebra alg;
  alg.system = sys;
  alg.Q = closed_form_Q(sys);
  if (alg.Q != determinant_form_Q(sys)) fail(ErrorCode::InternalMismatch, "closed and determinant forms of Q differ");
  if (upoly::degree(upoly::gcd(F, alg.Q, upoly::derivative(F, alg.Q))) != 0) {
    fail(ErrorCode::InternalMismatch, "Q is not squarefree");
  }
  alg.Z_basis = signed_minors(F, sys.f);
  alg.delta = moore::moore_det(F, sys.f);
  return alg;
}

Poly reduce(const EtaleAlgebra& alg, const Poly& a) { return upoly::mod(*alg.system.ctx, a, alg.Q); }

std::vector<Poly> recover_generators(const EtaleAlgebra& alg) {
  const Field& F = *alg.system.ctx;
  const auto& f = alg.system.f;
  const std::size_t n = f.size();
  const QuotientRing R{F, alg.Q};
  const auto& z = alg.Z_basis;
  const GfElement dz = moore::moore_det(F, z);
  // signed minors satisfy Delta_n(z) = Delta_n(f)^{1 + p + ... + p^{n-2}}
  std::uint64_t s1 = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) s1 += ipow(F.p(), k);
  if (dz != F.pow(alg.delta, s1)) fail(ErrorCode::VerificationFailed, "determinant of the minors has the wrong sign");
  const Poly W = upoly::monomial(F, F.one(), 1);
  std::vector<Poly> w;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> col;
    for (std::size_t k = 0; k < n; ++k) col.push_back(k == i ? W : upoly::constant(F, z[k]));
    const Poly num = ring::det_laplace(R, ring::moore_matrix(R, std::span<const Poly>(col), n));
    GfElement correction = F.zero(), power = f[i];
    for (std::size_t k = 0; k + 1 < n; ++k) {
      correction = F.add(correction, power);
      power = F.pow(power, F.p());
    }
    w.push_back(upoly::sub(F, upoly::scale(F, F.inv(dz), num), upoly::constant(F, correction)));
  }
  Poly combination;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly lhs = upoly::sub(F, ring::power(R, w[i], F.p()), w[i]);
    if (lhs != upoly::constant(F, f[i])) fail(ErrorCode::VerificationFailed, "w_i^p - w_i differs from f_i");
    combination = upoly::add(F, combination, upoly::scale(F, z[i], w[i]));
  }
  if (reduce(alg, combination) != reduce(alg, W)) fail(ErrorCode::VerificationFailed, "sum z_i w_i differs from W");
  return w;
}

Poly apply_sigma(const EtaleAlgebra& alg, GfElement z, const Poly& a) {
  const Field& F = *alg.system.ctx;
  return upoly::compose_mod(F, a, Poly{z, F.one()}, alg.Q);
}

SigmaResult sigma_action(const EtaleAlgebra& alg, GfElement z) {
  const Field& F = *alg.system.ctx;
  const auto& f = alg.system.f;
  const std::size_t n = f.size();
  if (!F.express_over_fp(alg.Z_basis, z)) fail(ErrorCode::NotInZ, F.format(z) + " is not in Z");
  SigmaResult out;
  out.z = z;
  out.q_invariant = upoly::compose_mod(F, alg.Q, Poly{z, F.one()}, {}) == alg.Q;
  const auto w = recover_generators(alg);
  for (const auto& wi : w) out.images.push_back(apply_sigma(alg, z, wi));
  const auto pc = pairing::make_context(addpoly::make_basis(alg.system.ctx, f));
  const GfElement u = F.pow(F.div(z, alg.delta), F.p());
  const std::uint64_t total = ipow(F.p(), n);
  for (std::uint64_t k = 1; k < total; ++k) {
    std::uint64_t rest = k;
    Poly w_eps;
    GfElement f_eps = F.zero();
    for (std::size_t i = 0; i < n; ++i, rest /= F.p()) {
      const GfElement e = F.from_int(static_cast<std::int64_t>(rest % F.p()));
      w_eps = upoly::add(F, w_eps, upoly::scale(F, e, w[i]));
      f_eps = F.add(f_eps, F.mul(e, f[i]));
    }
    const GfElement shift = F.mul(F.sign(static_cast<std::int64_t>(n - 1)), pairing::elkies_E(pc, f_eps, u));
    ++out.epsilons_checked;
    if (apply_sigma(alg, z, w_eps) != upoly::add(F, w_eps, upoly::constant(F, shift))) ++out.failures;
  }
  return out;
}

std::size_t count_simple_factors(const EtaleAlgebra& alg) {
  const Field& F = *alg.system.ctx;
  const std::size_t D = static_cast<std::size_t>(upoly::degree(alg.Q));
  const Poly xk = upoly::powmod(F, upoly::monomial(F, F.one(), 1), F.order(), alg.Q);
  gf::Matrix B(D, std::vector<GfElement>(D, F.zero()));
  Poly col{F.one()};
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t row = 0; row < col.size(); ++row) B[row][k] = col[row];
    B[k][k] = F.sub(B[k][k], F.one());
    col = upoly::mod(F, upoly::mul(F, col, xk), alg.Q);
  }
  return D - gf::rank(F, B);
}

EtaleVerification verify_system(const EtaleAlgebra& alg) {
  const Field& F = *alg.system.ctx;
  const std::size_t n = alg.system.f.size();
  EtaleVerification v;
  v.q_forms_agree = closed_form_Q(alg.system) == determinant_form_Q(alg.system);
  v.squarefree = upoly::degree(upoly::gcd(F, alg.Q, upoly::derivative(F, alg.Q))) == 0;
  try {
    recover_generators(alg);
    v.generators_ok = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VerificationFailed) throw;
  }
  v.factor_count = count_simple_factors(alg);
  v.predicted_factor_count = ipow(F.p(), n - alg.system.r);
  const auto Z = addpoly::enumerate_span(F, alg.Z_basis);
  std::vector<SigmaResult> results;
  std::set<std::vector<Poly>> image_tuples;
  for (const GfElement z : Z) {
    results.push_back(sigma_action(alg, z));
    const auto& r = results.back();
    v.sigma_checks += r.epsilons_checked;
    v.sigma_failures += r.failures + (r.q_invariant ? 0 : 1);
    image_tuples.insert(r.images);
  }
  v.injective = image_tuples.size() == Z.size();
  const auto w = recover_generators(alg);
  v.composition_ok = true;
  for (std::size_t a = 0; a < Z.size(); ++a) {
    for (std::size_t b = 0; b < Z.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        if (apply_sigma(alg, Z[a], results[b].images[i]) != apply_sigma(alg, F.add(Z[a], Z[b]), w[i])) {
          v.composition_ok = false;
        }
      }
    }
  }
  return v;
}

}  // namespace moorekit::etale
