#include "moorekit/forms.hpp"

#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/ring.hpp"

namespace moorekit::forms {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t moore_sum(std::uint64_t q, std::uint64_t k) {
  std::uint64_t total = 0, term = 1;
  for (std::uint64_t i = 0; i < k; ++i, term *= q) total += term;
  return total;
}

// Coordinates of span element k, matching the enumerate_span indexing.
std::vector<GfElement> digits(const Field& F, std::uint64_t k, std::size_t n) {
  const auto& sc = F.fq_elements();
  std::vector<GfElement> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = sc[k % sc.size()];
    k /= sc.size();
  }
  return e;
}

void check_alpha(const Field& F, std::size_t n, std::span<const GfElement> alpha) {
  if (alpha.size() != n) fail(ErrorCode::PreconditionError, "functional has the wrong length");
  bool nonzero = false;
  for (const GfElement a : alpha) {
    if (!F.in_fq(a)) fail(ErrorCode::PreconditionError, "functional coefficients must lie in F_q");
    nonzero = nonzero || !a.is_zero();
  }
  if (!nonzero) fail(ErrorCode::ZeroFunctional, "the functional is zero");
}

SubspaceBasis validated(const SubspaceBasis& b) { return addpoly::make_basis(b.ctx, b.w); }

}  // namespace

GfElement SimplePoleForm::residue(GfElement x) const {
  const auto it = residues.find(x);
  return it == residues.end() ? GfElement{} : it->second;
}

upoly::Poly SimplePoleForm::pole_polynomial() const {
  std::vector<GfElement> poles;
  for (const auto& [x, r] : residues) poles.push_back(x);
  return upoly::from_roots(*ctx, poles);
}

upoly::Poly SimplePoleForm::numerator() const {
  const Field& F = *ctx;
  const upoly::Poly P = pole_polynomial();
  upoly::Poly N;
  for (const auto& [x, r] : residues) {
    const auto [quot, rem] = upoly::divmod(F, P, upoly::linear(F, x));
    N = upoly::add(F, N, upoly::scale(F, r, quot));
  }
  return N;
}

SimplePoleForm omega_j(const SubspaceBasis& b0, std::size_t j) {
  const SubspaceBasis b = validated(b0);
  const std::size_t n = b.n();
  if (j < 1 || j > n) fail(ErrorCode::PreconditionError, "form index out of range");
  const Field& F = *b.ctx;
  const auto span = addpoly::enumerate_span(F, b.w);
  SimplePoleForm out{b.ctx, {}};
  for (std::uint64_t k = 0; k < span.size(); ++k) {
    const GfElement e = digits(F, k, n)[j - 1];
    if (!e.is_zero()) out.residues.emplace(span[k], e);
  }
  return out;
}

ClosedForm omega_phi_closed_form(const SubspaceBasis& b0, std::span<const GfElement> alpha) {
  const SubspaceBasis b = validated(b0);
  const Field& F = *b.ctx;
  const std::size_t n = b.n();
  check_alpha(F, n, alpha);
  const ring::PolyRing R{F};
  // Delta_phi(w, X): first-row expansion of [alpha, 0] over the Moore rows of (w, X).
  ring::RMatrix<upoly::Poly> m;
  std::vector<upoly::Poly> top;
  for (const GfElement a : alpha) top.push_back(upoly::constant(F, a));
  top.push_back({});
  m.push_back(top);
  std::vector<upoly::Poly> z;
  for (const GfElement w : b.w) z.push_back(upoly::constant(F, w));
  z.push_back(upoly::monomial(F, F.one(), 1));
  const auto moore = ring::moore_matrix(R, std::span<const upoly::Poly>(z), n + 1);
  for (std::size_t k = 0; k < n; ++k) m.push_back(moore[k]);
  const upoly::Poly delta_phi = ring::det_laplace(R, m);
  const GfElement delta = moore::moore_det(F, b.w);
  ClosedForm out;
  out.numerator = upoly::scale(F, F.neg(F.pow(delta, F.q() - 1)), delta_phi);
  out.denominator = ring::det_laplace(R, moore);
  return out;
}

SimplePoleForm omega_phi(const SubspaceBasis& b0, std::span<const GfElement> alpha, bool verify) {
  const SubspaceBasis b = validated(b0);
  const Field& F = *b.ctx;
  const std::size_t n = b.n();
  check_alpha(F, n, alpha);
  const auto span = addpoly::enumerate_span(F, b.w);
  SimplePoleForm out{b.ctx, {}};
  for (std::uint64_t k = 0; k < span.size(); ++k) {
    const auto e = digits(F, k, n);
    GfElement r = F.zero();
    for (std::size_t i = 0; i < n; ++i) r = F.add(r, F.mul(alpha[i], e[i]));
    if (!r.is_zero()) out.residues.emplace(span[k], r);
  }
  if (verify) {
    const ClosedForm c = omega_phi_closed_form(b, alpha);
    for (const GfElement x : span) {
      if (residue_at(F, c.numerator, c.denominator, x) != out.residue(x)) {
        fail(ErrorCode::InternalMismatch, "closed-form residue disagrees with the residue table");
      }
    }
  }
  return out;
}

GfElement residue_at(const Field& F, const upoly::Poly& N, const upoly::Poly& D, GfElement a) {
  if (!upoly::eval(F, D, a).is_zero()) fail(ErrorCode::NotAPole, F.format(a) + " is not a root of the denominator");
  const GfElement d = upoly::eval(F, upoly::derivative(F, D), a);
  if (d.is_zero()) fail(ErrorCode::NotSimplePole, F.format(a) + " is a multiple root of the denominator");
  return F.div(upoly::eval(F, N, a), d);
}

LqSpace build_lq_space(const SubspaceBasis& b0) {
  LqSpace out;
  out.source = validated(b0);
  const std::uint64_t q = out.source.ctx->q();
  const std::size_t n = out.source.n();
  for (std::size_t j = 1; j <= n; ++j) out.basis_forms.push_back(omega_j(out.source, j));
  out.mu_plus_1 = ipow(q, n - 1) * (q - 1);
  return out;
}

LqValidation validate_lq_space(const LqSpace& space) {
  const SubspaceBasis& b = space.source;
  const Field& F = *b.ctx;
  const std::size_t n = b.n();
  const std::uint64_t q = F.q();
  LqValidation v;
  if (space.mu_plus_1 % ipow(F.p(), n - 1) != 0) v.failures.push_back("p^{n-1} does not divide mu + 1");
  const std::uint64_t expected_poles = ipow(q, n) - ipow(q, n - 1);
  if (space.mu_plus_1 != expected_poles) v.failures.push_back("mu + 1 differs from q^n - q^{n-1}");
  const std::uint64_t total = ipow(q, n);
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto alpha = digits(F, k, n);
    ++v.combinations;
    auto report = [&](const std::string& what) {
      std::string a;
      for (const GfElement x : alpha) a += (a.empty() ? "" : ",") + F.format(x);
      v.failures.push_back(what + " for alpha = (" + a + ")");
    };
    // Table obtained by summing the basis forms, independent of omega_phi.
    SimplePoleForm sum{b.ctx, {}};
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [x, r] : space.basis_forms[j].residues) {
        const GfElement t = F.add(sum.residue(x), F.mul(alpha[j], r));
        if (t.is_zero()) {
          sum.residues.erase(x);
        } else {
          sum.residues[x] = t;
        }
      }
    }
    if (sum.pole_count() != expected_poles) report("pole count " + std::to_string(sum.pole_count()));
    GfElement residue_sum = F.zero();
    for (const auto& [x, r] : sum.residues) {
      if (!F.in_fq(r)) report("residue outside F_q");
      residue_sum = F.add(residue_sum, r);
    }
    if (space.mu_plus_1 >= 2 && !residue_sum.is_zero()) report("nonzero residue sum");
    const ClosedForm c = omega_phi_closed_form(b, alpha);
    for (const GfElement x : addpoly::enumerate_span(F, b.w)) {
      if (residue_at(F, c.numerator, c.denominator, x) != sum.residue(x)) {
        report("closed form disagrees at " + F.format(x));
        break;
      }
    }
    // deg P - deg N - 2 = mu - 1 with N/P in lowest terms.
    const upoly::Poly N = sum.numerator();
    const long lhs = upoly::degree(sum.pole_polynomial()) - upoly::degree(N) - 2;
    if (N.empty() || lhs != static_cast<long>(space.mu_plus_1) - 2) report("zero order at infinity differs from mu - 1");
  }
  return v;
}

GfElement pagot_gamma(const LqSpace& space) {
  const Field& F = *space.source.ctx;
  const std::size_t n = space.source.n();
  std::vector<GfElement> poles;
  {
    std::map<GfElement, bool> seen;
    for (const auto& form : space.basis_forms)
      for (const auto& [x, r] : form.residues) seen[x] = true;
    for (const auto& [x, flag] : seen) poles.push_back(x);
  }
  const upoly::Poly P = upoly::from_roots(F, poles);
  std::vector<upoly::Poly> Pi;
  for (const auto& form : space.basis_forms) {
    upoly::Poly N;
    for (const auto& [x, r] : form.residues) {
      N = upoly::add(F, N, upoly::scale(F, r, upoly::divmod(F, P, upoly::linear(F, x)).first));
    }
    Pi.push_back(N);
  }
  const ring::PolyRing R{F};
  const auto m = ring::moore_matrix(R, std::span<const upoly::Poly>(Pi), n);
  const upoly::Poly det = ring::det_laplace(R, m);
  if (det != ring::moore_det_product(R, std::span<const upoly::Poly>(Pi))) {
    fail(ErrorCode::InternalMismatch, "polynomial Moore determinant algorithms disagree");
  }
  const upoly::Poly divisor = upoly::pow(F, P, moore_sum(F.q(), n - 1));
  const auto [quot, rem] = upoly::divmod(F, det, divisor);
  if (!rem.empty() || upoly::degree(quot) != 0) {
    fail(ErrorCode::FactorizationMismatch, "Delta_n(P_1, ..., P_n) / P^{S_{n-1}} is not a nonzero constant");
  }
  return quot[0];
}

GfElement predicted_gamma(const SubspaceBasis& b0) {
  const SubspaceBasis b = validated(b0);
  const Field& F = *b.ctx;
  const std::uint64_t q = F.q();
  const std::size_t n = b.n();
  const std::uint64_t sn = moore_sum(q, n);
  const GfElement delta = moore::moore_det(F, b.w);
  return F.mul(F.sign(static_cast<std::int64_t>(sn)), F.pow(delta, (q - 2) * sn + moore_sum(q, n - 1)));
}

}  // namespace moorekit::forms
