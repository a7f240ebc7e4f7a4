#include "moorekit/addpoly.hpp"

#include <algorithm>

#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"

namespace moorekit::addpoly {

namespace {

std::uint64_t q_power(const Field& F, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= F.q();
  return r;
}

void require_fq(const Field& F, std::span<const GfElement> alpha) {
  for (const GfElement a : alpha) {
    if (!F.in_fq(a)) fail(ErrorCode::PreconditionError, "functional coordinates must lie in F_q");
  }
}

}  // namespace

AdditivePoly make_additive(FieldPtr ctx, std::vector<GfElement> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return {std::move(ctx), std::move(coeffs)};
}

AdditivePoly identity(FieldPtr ctx) {
  const GfElement one = ctx->one();
  return {std::move(ctx), {one}};
}

SubspaceBasis make_basis(FieldPtr ctx, std::vector<GfElement> w) {
  if (w.empty()) fail(ErrorCode::EmptyTuple, "a subspace basis needs at least one vector");
  if (!moore::is_fq_independent(*ctx, w)) fail(ErrorCode::DependentBasis, "basis vectors are F_q-dependent");
  return {std::move(ctx), std::move(w)};
}

std::vector<GfElement> enumerate_span(const Field& F, std::span<const GfElement> w) {
  const auto& scalars = F.fq_elements();
  const std::size_t q = scalars.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < w.size(); ++i) total *= q;
  std::vector<GfElement> out(total);
  for (std::size_t k = 0; k < total; ++k) {
    GfElement x = F.zero();
    std::size_t rest = k;
    for (const GfElement wi : w) {
      x = F.add(x, F.mul(scalars[rest % q], wi));
      rest /= q;
    }
    out[k] = x;
  }
  return out;
}

std::optional<std::vector<GfElement>> coordinates(const SubspaceBasis& b, GfElement x) {
  return b.ctx->express_over_fq(b.w, x);
}

GfElement eval(const AdditivePoly& P, GfElement x) {
  const Field& F = *P.ctx;
  GfElement acc = F.zero();
  GfElement power = x;
  for (std::size_t m = 0; m < P.coeffs.size(); ++m) {
    if (m) power = F.frobenius_q(power, 1);
    acc = F.add(acc, F.mul(P.coeffs[m], power));
  }
  return acc;
}

AdditivePoly subspace_poly_det(const SubspaceBasis& b) {
  const Field& F = *b.ctx;
  const std::size_t n = b.n();
  const GfElement delta = moore::moore_det(F, b.w);
  if (delta.is_zero()) fail(ErrorCode::DependentBasis, "basis vectors are F_q-dependent");
  const GfElement delta_inv = F.inv(delta);
  std::vector<GfElement> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    const GfElement minor = (m == n) ? delta : moore::bordered_minor(F, b.w, m);
    c[m] = F.mul(F.sign(static_cast<std::int64_t>(n - m)), F.mul(minor, delta_inv));
  }
  return make_additive(b.ctx, std::move(c));
}

AdditivePoly subspace_poly_product(const SubspaceBasis& b) {
  const Field& F = *b.ctx;
  const auto elements = enumerate_span(F, b.w);
  return from_classical(b.ctx, upoly::from_roots(F, elements));
}

AdditivePoly subspace_poly(const SubspaceBasis& b) {
  AdditivePoly det_form = subspace_poly_det(b);
  if (q_power(*b.ctx, b.n()) <= kProductFormCap) {
    const AdditivePoly prod_form = subspace_poly_product(b);
    if (!(prod_form == det_form)) {
      fail(ErrorCode::InternalMismatch, "subspace polynomial: determinant and product forms differ");
    }
  }
  return det_form;
}

GfElement delta_phi(const SubspaceBasis& b, std::span<const GfElement> alpha) {
  const Field& F = *b.ctx;
  if (alpha.size() != b.n()) fail(ErrorCode::PreconditionError, "functional has the wrong length");
  if (b.n() == 1) return alpha[0];
  const auto minors = moore::cofactor_row(F, b.w, true);
  GfElement acc = F.zero();
  for (std::size_t i = 0; i < b.n(); ++i) acc = F.add(acc, F.mul(alpha[i], minors[i]));
  return acc;
}

Hyperplane hyperplane_poly(const SubspaceBasis& b, std::span<const GfElement> alpha) {
  const Field& F = *b.ctx;
  const std::size_t n = b.n();
  if (alpha.size() != n) fail(ErrorCode::PreconditionError, "functional has the wrong length");
  if (std::all_of(alpha.begin(), alpha.end(), [](GfElement a) { return a.is_zero(); })) {
    fail(ErrorCode::ZeroFunctional, "the functional is zero");
  }
  require_fq(F, alpha);
  // Column expansion of the bordered determinant: the coefficient of X^{q^i}
  // is (-1)^{n+i+1} det(alpha; w^{q^k}, k != i).
  const gf::Matrix rows = moore::moore_matrix(F, b.w, n);
  std::vector<GfElement> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    gf::Matrix m;
    m.emplace_back(alpha.begin(), alpha.end());
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) m.push_back(rows[k]);
    coeffs[i] = F.mul(F.sign(static_cast<std::int64_t>(n + i + 1)), gf::determinant(F, std::move(m)));
  }
  const GfElement delta = coeffs[n - 1];
  if (delta.is_zero()) fail(ErrorCode::DependentBasis, "delta_phi vanishes; basis is dependent");
  const GfElement inv = F.inv(delta);
  for (auto& c : coeffs) c = F.mul(c, inv);
  return {make_additive(b.ctx, std::move(coeffs)), delta};
}

AdditivePoly reverse(const AdditivePoly& P) {
  if (P.is_zero()) fail(ErrorCode::NotFullDegree, "reverse of the zero polynomial");
  if (!P.is_reduced()) fail(ErrorCode::NotReduced, "reverse needs a nonzero X coefficient");
  const Field& F = *P.ctx;
  const std::size_t n = P.coeffs.size() - 1;
  std::vector<GfElement> out(n + 1);
  for (std::size_t m = 0; m <= n; ++m) out[m] = F.frobenius_q(P.coeffs[n - m], m);
  return make_additive(P.ctx, std::move(out));
}

AdditivePoly compose(const AdditivePoly& P, const AdditivePoly& Q) {
  if (P.ctx != Q.ctx && (P.ctx->q() != Q.ctx->q() || P.ctx->modulus() != Q.ctx->modulus())) {
    fail(ErrorCode::PreconditionError, "composition across different fields");
  }
  const Field& F = *P.ctx;
  if (P.is_zero() || Q.is_zero()) return make_additive(P.ctx, {});
  std::vector<GfElement> out(P.coeffs.size() + Q.coeffs.size() - 1, F.zero());
  for (std::size_t i = 0; i < P.coeffs.size(); ++i) {
    if (P.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < Q.coeffs.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(P.coeffs[i], F.frobenius_q(Q.coeffs[j], i)));
    }
  }
  return make_additive(P.ctx, std::move(out));
}

AdditivePoly right_divide(const AdditivePoly& P, const AdditivePoly& D) {
  const Field& F = *P.ctx;
  if (!D.is_reduced()) fail(ErrorCode::NotReduced, "divisor must be reduced");
  if (!D.is_monic()) fail(ErrorCode::PreconditionError, "divisor must be monic");
  if (P.q_degree() < D.q_degree()) fail(ErrorCode::NotRightDivisible, "dividend has smaller degree");
  const std::size_t np = P.coeffs.size() - 1, nd = D.coeffs.size() - 1, a = np - nd;
  std::vector<GfElement> g(a + 1, F.zero());
  for (std::size_t k = np + 1; k-- > nd;) {
    const std::size_t i0 = k - nd;
    GfElement acc = P.coeffs[k];
    for (std::size_t i = i0 + 1; i <= a && i <= k; ++i) {
      acc = F.sub(acc, F.mul(g[i], F.frobenius_q(D.coeff(k - i), i)));
    }
    g[i0] = acc;
  }
  AdditivePoly Q = make_additive(P.ctx, std::move(g));
  if (!(compose(Q, D) == P)) fail(ErrorCode::NotRightDivisible, "no exact right quotient");
  return Q;
}

std::vector<GfElement> kernel_in(const AdditivePoly& P) {
  const Field& F = *P.ctx;
  std::vector<GfElement> images(F.d());
  std::vector<std::uint32_t> unit(F.d(), 0);
  for (std::uint32_t i = 0; i < F.d(); ++i) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[i] = 1;
    images[i] = eval(P, F.from_coeffs(unit));
  }
  auto basis = F.nullspace_fp(images);
  for (const GfElement x : basis) {
    for (const GfElement c : F.q_basis()) {
      std::vector<GfElement> probe = basis;
      if (!F.express_over_fp(probe, F.mul(c, x))) {
        fail(ErrorCode::InternalMismatch, "kernel is not stable under F_q");
      }
    }
  }
  return basis;
}

std::vector<GfElement> reversed_kernel_basis(const SubspaceBasis& b) {
  const Field& F = *b.ctx;
  const GfElement delta = moore::moore_det(F, b.w);
  if (delta.is_zero()) fail(ErrorCode::DependentBasis, "basis vectors are F_q-dependent");
  std::vector<GfElement> minors;
  if (b.n() == 1) {
    minors = {F.one()};
  } else {
    minors = moore::cofactor_row(F, b.w, false);
  }
  const AdditivePoly rho = reverse(subspace_poly(b));
  std::vector<GfElement> u;
  for (const GfElement m : minors) {
    const GfElement x = F.frobenius_q(F.div(m, delta), 1);
    if (!eval(rho, x).is_zero()) {
      fail(ErrorCode::KernelNotRational, "claimed kernel element does not annihilate the reverse");
    }
    u.push_back(x);
  }
  return u;
}

AdditivePoly ore_hat_poly(const SubspaceBasis& b) {
  const Field& F = *b.ctx;
  const std::size_t n = b.n();
  const GfElement delta = moore::moore_det(F, b.w);
  if (delta.is_zero()) fail(ErrorCode::DependentBasis, "basis vectors are F_q-dependent");
  const AdditivePoly P = subspace_poly_det(b);
  const std::uint64_t qn1 = q_power(F, n - 1);
  const GfElement sgn = F.sign(static_cast<std::int64_t>(n));
  std::vector<GfElement> out(n + 1, F.zero());
  out[n] = F.one();
  out[0] = F.mul(sgn, F.pow(delta, qn1 - 1));
  for (std::size_t m = 1; m < n; ++m) {
    const GfElement c = F.frobenius_q(P.coeff(n - m), m - 1);
    const GfElement d = F.pow(delta, qn1 - q_power(F, m));
    out[m] = F.mul(sgn, F.mul(c, d));
  }
  return make_additive(b.ctx, std::move(out));
}

upoly::Poly to_classical(const AdditivePoly& P) {
  const Field& F = *P.ctx;
  if (P.is_zero()) return {};
  upoly::Poly out(q_power(F, P.coeffs.size() - 1) + 1, F.zero());
  for (std::size_t m = 0; m < P.coeffs.size(); ++m) out[q_power(F, m)] = P.coeffs[m];
  return out;
}

AdditivePoly from_classical(FieldPtr ctx, const upoly::Poly& a) {
  const Field& F = *ctx;
  std::vector<GfElement> coeffs;
  std::uint64_t next = 1;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (e == next) {
      coeffs.push_back(a[e]);
      next *= F.q();
    } else if (!a[e].is_zero()) {
      fail(ErrorCode::PreconditionError, "polynomial is not F_q-linear");
    }
  }
  return make_additive(std::move(ctx), std::move(coeffs));
}

}  // namespace moorekit::addpoly
