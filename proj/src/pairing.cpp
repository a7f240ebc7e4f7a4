#include "moorekit/pairing.hpp"

#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"

namespace moorekit::pairing {

namespace {

void require_kernel(const PairingContext& pc, GfElement w, GfElement u) {
  if (!addpoly::eval(pc.P, w).is_zero()) fail(ErrorCode::NotInKernel, "w is not a root of P_W");
  if (!addpoly::eval(pc.rhoP, u).is_zero()) fail(ErrorCode::NotInKernel, "u is not a root of the reversed P_W");
}

}  // namespace

PairingContext make_context(const SubspaceBasis& b0) {
  PairingContext pc;
  pc.b = addpoly::make_basis(b0.ctx, b0.w);
  const Field& F = *pc.b.ctx;
  pc.P = addpoly::subspace_poly(pc.b);
  pc.rhoP = addpoly::reverse(pc.P);
  pc.u_basis = addpoly::reversed_kernel_basis(pc.b);
  // a single vector has the empty Moore determinant 1 as its only minor
  pc.signed_minors = pc.b.n() == 1 ? std::vector<GfElement>{F.one()} : moore::cofactor_row(F, pc.b.w, true);
  pc.delta = moore::moore_det(F, pc.b.w);
  return pc;
}

GfElement elkies_E(const PairingContext& pc, GfElement w, GfElement u) {
  require_kernel(pc, w, u);
  const Field& F = *pc.b.ctx;
  const std::size_t n = pc.b.n();
  GfElement total = F.zero();
  for (std::size_t m = 1; m <= n; ++m) {
    const GfElement base = F.mul(F.inv_frobenius_q(F.mul(pc.P.coeff(m), u), m), w);
    GfElement term = base;
    for (std::size_t j = 0; j < m; ++j) {
      total = F.add(total, term);
      term = F.frobenius_q(term, 1);
    }
  }
  if (!F.in_fq(total)) fail(ErrorCode::ValueNotInFq, "E(w, u) is not in F_q");
  return total;
}

std::vector<GfElement> decompose_u(const PairingContext& pc, GfElement u) {
  const Field& F = *pc.b.ctx;
  const GfElement target = F.mul(F.inv_frobenius_q(u, 1), pc.delta);
  auto alpha = F.express_over_fq(pc.signed_minors, target);
  if (!alpha) fail(ErrorCode::DecompositionFailed, F.format(u) + " is not in U");
  return *alpha;
}

GfElement residue_f(const PairingContext& pc, GfElement w, GfElement u) {
  require_kernel(pc, w, u);
  const Field& F = *pc.b.ctx;
  if (w.is_zero() || u.is_zero()) return F.zero();
  const auto alpha = decompose_u(pc, u);
  const auto form = forms::omega_phi(pc.b, alpha, false);
  return F.mul(F.sign(static_cast<std::int64_t>(pc.b.n() - 1)), form.residue(w));
}

gf::Matrix gram_matrix(const PairingContext& pc, Which which) {
  const std::size_t n = pc.b.n();
  gf::Matrix m(n, std::vector<GfElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = which == Which::E ? elkies_E(pc, pc.b.w[i], pc.u_basis[j]) : residue_f(pc, pc.b.w[i], pc.u_basis[j]);
  return m;
}

bool is_invertible(const Field& F, const gf::Matrix& m) { return !gf::determinant(F, m).is_zero(); }

ExhaustiveCheck check_exhaustive(const PairingContext& pc) {
  const Field& F = *pc.b.ctx;
  ExhaustiveCheck out;
  const auto W = addpoly::enumerate_span(F, pc.b.w);
  const auto U = addpoly::enumerate_span(F, pc.u_basis);
  for (const GfElement w : W) {
    for (const GfElement u : U) {
      ++out.pairs;
      const GfElement e = elkies_E(pc, w, u);
      if (F.frobenius_q(e, 1) != e) ++out.not_in_fq;
      if (e != residue_f(pc, w, u)) ++out.mismatches;
    }
  }
  for (const GfElement lambda : F.fq_elements()) {
    for (std::size_t i = 0; i < pc.b.n(); ++i) {
      for (std::size_t j = 0; j < pc.b.n(); ++j) {
        const GfElement w = pc.b.w[i], u = pc.u_basis[j];
        const GfElement w2 = pc.b.w[(i + 1) % pc.b.n()], u2 = pc.u_basis[(j + 1) % pc.b.n()];
        for (const Which which : {Which::E, Which::F}) {
          auto pair = [&](GfElement x, GfElement y) {
            return which == Which::E ? elkies_E(pc, x, y) : residue_f(pc, x, y);
          };
          const bool left = pair(F.add(F.mul(lambda, w), w2), u) == F.add(F.mul(lambda, pair(w, u)), pair(w2, u));
          const bool right = pair(w, F.add(F.mul(lambda, u), u2)) == F.add(F.mul(lambda, pair(w, u)), pair(w, u2));
          if (!left || !right) ++out.bilinear_failures;
        }
      }
    }
  }
  const auto gE = gram_matrix(pc, Which::E);
  const auto gF = gram_matrix(pc, Which::F);
  out.gram_E_invertible = is_invertible(F, gE);
  out.gram_f_invertible = is_invertible(F, gF);
  out.grams_equal = gE == gF;
  return out;
}

}  // namespace moorekit::pairing
