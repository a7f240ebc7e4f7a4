#include <gtest/gtest.h>

#include <random>
#include <set>

#include "moorekit/addpoly.hpp"
#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"

namespace {

using moorekit::Error;
using moorekit::ErrorCode;
using namespace moorekit::gf;
using namespace moorekit::addpoly;

std::vector<GfElement> els(std::initializer_list<GfElement> l) { return l; }

// Random F_q-independent tuple of length n.
std::vector<GfElement> random_basis(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    std::vector<GfElement> w(n);
    for (auto& x : w) x = F->random(rng);
    if (moorekit::moore::is_fq_independent(*F, w)) return w;
  }
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

TEST(AddPolyEval, ArtinSchreierOnF4) {
  auto F = build_field(2, 1, 2);
  const auto P = make_additive(F, els({F->one(), F->one()}));  // X^2 + X = X^2 - X
  EXPECT_EQ(eval(P, F->root()), F->one());
  EXPECT_EQ(eval(P, F->zero()), F->zero());
}

TEST(AddPolyEval, AdditiveAndFqLinear) {
  auto F = build_field(3, 1, 4);
  std::mt19937_64 rng(1);
  const auto P = make_additive(F, els({F->random(rng), F->random(rng), F->random(rng)}));
  for (int it = 0; it < 200; ++it) {
    const GfElement x = F->random(rng), y = F->random(rng);
    EXPECT_EQ(eval(P, F->add(x, y)), F->add(eval(P, x), eval(P, y)));
    for (const GfElement lam : F->fq_elements()) EXPECT_EQ(eval(P, F->mul(lam, x)), F->mul(lam, eval(P, x)));
  }
}

TEST(SubspacePoly, Examples) {
  auto F = build_field(2, 1, 2);
  const GfElement w = F->root();
  EXPECT_EQ(subspace_poly(make_basis(F, {F->one(), w})).coeffs, els({F->one(), F->zero(), F->one()}));
  EXPECT_EQ(subspace_poly(make_basis(F, {w})).coeffs, els({w, F->one()}));
  EXPECT_EQ(subspace_poly(make_basis(F, {F->one()})).coeffs, els({F->one(), F->one()}));
}

TEST(SubspacePoly, DependentBasisRejected) {
  auto F = build_field(2, 1, 3);
  try {
    make_basis(F, {F->one(), F->one()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentBasis);
  }
}

TEST(SubspacePoly, RootsAreExactlyTheSpanAndCoefficientOfX) {
  std::mt19937_64 rng(2);
  for (auto [p, s, t, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::size_t>>{
           {2, 1, 4, 2}, {2, 1, 5, 3}, {3, 1, 3, 2}, {2, 2, 3, 2}, {5, 1, 2, 1}, {2, 1, 6, 4}}) {
    auto F = build_field(p, s, t);
    for (int it = 0; it < 5; ++it) {
      const auto b = make_basis(F, random_basis(F, n, rng));
      const auto P = subspace_poly(b);
      EXPECT_EQ(P, subspace_poly_product(b));
      EXPECT_TRUE(P.is_monic());
      EXPECT_EQ(P.q_degree(), static_cast<long>(n));
      const auto span = enumerate_span(*F, b.w);
      const std::set<GfElement> W(span.begin(), span.end());
      EXPECT_EQ(W.size(), ipow(F->q(), n));
      for (std::uint32_t c = 0; c < F->order(); ++c) EXPECT_EQ(eval(P, {c}).is_zero(), W.count({c}) == 1);
      const GfElement delta = moorekit::moore::moore_det(*F, b.w);
      EXPECT_EQ(P.coeff(0), F->mul(F->sign(n), F->pow(delta, F->q() - 1)));
      // the kernel spans W
      const auto ker = kernel_in(P);
      EXPECT_EQ(ker.size(), n * s);
      EXPECT_EQ(F->rank_over_fp(ker), F->rank_over_fp(span));
      std::vector<GfElement> joined = ker;
      joined.insert(joined.end(), span.begin(), span.end());
      EXPECT_EQ(F->rank_over_fp(joined), ker.size());
    }
  }
}

TEST(Hyperplane, F4Examples) {
  auto F = build_field(2, 1, 2);
  const GfElement w = F->root();
  const auto b = make_basis(F, {F->one(), w});
  const auto h1 = hyperplane_poly(b, els({F->one(), F->zero()}));
  EXPECT_EQ(h1.poly.coeffs, els({w, F->one()}));
  EXPECT_EQ(h1.delta_phi, w);
  const auto h2 = hyperplane_poly(b, els({F->zero(), F->one()}));
  EXPECT_EQ(h2.poly.coeffs, els({F->one(), F->one()}));
  EXPECT_EQ(h2.delta_phi, delta_phi(b, els({F->zero(), F->one()})));
  try {
    hyperplane_poly(b, els({F->zero(), F->zero()}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroFunctional);
  }
}

TEST(Hyperplane, RootsInWAreTheKernelOfPhi) {
  std::mt19937_64 rng(4);
  for (auto [p, s, t, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::size_t>>{
           {2, 1, 4, 2}, {2, 1, 4, 3}, {3, 1, 3, 2}, {2, 2, 2, 2}}) {
    auto F = build_field(p, s, t);
    const auto b = make_basis(F, random_basis(F, n, rng));
    const auto& sc = F->fq_elements();
    const auto span = enumerate_span(*F, b.w);
    for (std::size_t a = 1; a < span.size(); ++a) {
      std::vector<GfElement> alpha(n);
      std::size_t rest = a;
      for (auto& x : alpha) {
        x = sc[rest % sc.size()];
        rest /= sc.size();
      }
      const auto h = hyperplane_poly(b, alpha);
      EXPECT_EQ(h.delta_phi, delta_phi(b, alpha));
      EXPECT_TRUE(h.poly.is_monic());
      EXPECT_EQ(h.poly.q_degree(), static_cast<long>(n) - 1);
      EXPECT_EQ(h.poly.coeff(0), F->mul(F->sign(n + 1), F->pow(h.delta_phi, F->q() - 1)));
      for (std::size_t k = 0; k < span.size(); ++k) {
        GfElement phi = F->zero();
        std::size_t r = k;
        for (std::size_t i = 0; i < n; ++i) {
          phi = F->add(phi, F->mul(alpha[i], sc[r % sc.size()]));
          r /= sc.size();
        }
        EXPECT_EQ(eval(h.poly, span[k]).is_zero(), phi.is_zero());
      }
      // Consequence of the composition law: P_W = (X^q - c X) o P_{ker phi}
      const auto P = subspace_poly(b);
      const auto Q = right_divide(P, h.poly);
      const GfElement c = F->pow(F->div(moorekit::moore::moore_det(*F, b.w), h.delta_phi), F->q() - 1);
      EXPECT_EQ(Q.coeffs, els({F->neg(c), F->one()}));
    }
  }
}

TEST(Reverse, Examples) {
  auto F = build_field(2, 1, 3);
  const GfElement c = F->root();
  const auto P = make_additive(F, els({c, F->one()}));
  EXPECT_EQ(reverse(P).coeffs, els({F->one(), F->frobenius_q(c, 1)}));
  try {
    reverse(make_additive(F, els({F->zero(), F->one()})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReduced);
  }
  try {
    reverse(make_additive(F, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFullDegree);
  }
}

TEST(Reverse, TwiceIsCoefficientwiseFrobenius) {
  auto F = build_field(3, 1, 4);
  std::mt19937_64 rng(6);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 1 + it % 3;
    std::vector<GfElement> c(n + 1);
    for (auto& x : c) x = F->random_nonzero(rng);
    const auto P = make_additive(F, c);
    const auto rr = reverse(reverse(P));
    for (std::size_t m = 0; m <= n; ++m) EXPECT_EQ(rr.coeff(m), F->frobenius_q(c[m], n));
  }
  const auto rational = make_additive(F, els({F->one(), F->from_int(2), F->one()}));
  EXPECT_EQ(reverse(reverse(rational)), rational);
}

TEST(Compose, Examples) {
  auto F2 = build_field(2, 1, 1);
  const auto Xq = make_additive(F2, els({F2->zero(), F2->one()}));
  EXPECT_EQ(compose(Xq, Xq).coeffs, els({F2->zero(), F2->zero(), F2->one()}));
  const auto AS = make_additive(F2, els({F2->one(), F2->one()}));
  EXPECT_EQ(compose(AS, AS).coeffs, els({F2->one(), F2->zero(), F2->one()}));
  EXPECT_EQ(compose(AS, identity(F2)), AS);
}

TEST(Compose, EvaluationIsFunctionComposition) {
  auto F = build_field(2, 2, 3);
  std::mt19937_64 rng(8);
  for (int it = 0; it < 30; ++it) {
    const auto P = make_additive(F, els({F->random(rng), F->random(rng), F->random(rng)}));
    const auto Q = make_additive(F, els({F->random(rng), F->random(rng)}));
    const auto PQ = compose(P, Q);
    for (int k = 0; k < 20; ++k) {
      const GfElement x = F->random(rng);
      EXPECT_EQ(eval(PQ, x), eval(P, eval(Q, x)));
    }
  }
}

TEST(RightDivide, Examples) {
  auto F2 = build_field(2, 1, 1);
  const auto P = make_additive(F2, els({F2->one(), F2->zero(), F2->one()}));
  const auto D = make_additive(F2, els({F2->one(), F2->one()}));
  EXPECT_EQ(right_divide(P, D), D);
  EXPECT_EQ(right_divide(D, D), identity(F2));
  auto F = build_field(2, 1, 4);
  const auto notdiv = make_additive(F, els({F->root(), F->zero(), F->one()}));
  try {
    right_divide(notdiv, make_additive(F, els({F->one(), F->one()})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRightDivisible);
  }
}

TEST(RightDivide, CompositionLawForSubspaces) {
  std::mt19937_64 rng(10);
  auto F = build_field(2, 1, 6);
  for (int it = 0; it < 20; ++it) {
    const auto w = random_basis(F, 4, rng);
    const auto b = make_basis(F, w);
    const auto PW = subspace_poly(b);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto b1 = make_basis(F, std::vector<GfElement>(w.begin(), w.begin() + k));
      const auto P1 = subspace_poly(b1);
      const auto Q = right_divide(PW, P1);
      EXPECT_EQ(compose(Q, P1), PW);
      // Q is the subspace polynomial of P1(W)
      std::vector<GfElement> image;
      for (std::size_t i = k; i < 4; ++i) image.push_back(eval(P1, w[i]));
      if (image.empty()) {
        EXPECT_EQ(Q, identity(F));
      } else {
        EXPECT_EQ(Q, subspace_poly(make_basis(F, image)));
      }
    }
  }
}

TEST(Kernel, Examples) {
  auto F = build_field(2, 1, 2);
  const GfElement w = F->root();
  EXPECT_EQ(kernel_in(make_additive(F, els({F->one(), F->one()}))), els({F->one()}));
  EXPECT_EQ(kernel_in(make_additive(F, els({F->one(), F->zero(), F->one()}))).size(), 2u);
  EXPECT_EQ(kernel_in(make_additive(F, els({w, F->one()}))), els({w}));
}

TEST(ReversedKernel, SingleVector) {
  auto F = build_field(3, 1, 3);
  for (std::uint32_t c = 1; c < F->order(); ++c) {
    const GfElement w{c};
    const auto u = reversed_kernel_basis(make_basis(F, {w}));
    ASSERT_EQ(u.size(), 1u);
    EXPECT_EQ(u[0], F->inv(F->pow(w, F->q())));
  }
}

TEST(ReversedKernel, SpansKernelOfReverse) {
  std::mt19937_64 rng(12);
  for (auto [p, s, t, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::size_t>>{
           {2, 1, 2, 2}, {2, 1, 4, 3}, {3, 1, 4, 2}, {2, 2, 3, 3}}) {
    auto F = build_field(p, s, t);
    const auto b = make_basis(F, random_basis(F, n, rng));
    const auto u = reversed_kernel_basis(b);
    EXPECT_TRUE(moorekit::moore::is_fq_independent(*F, u));
    const auto rho = reverse(subspace_poly(b));
    for (const GfElement x : u) EXPECT_TRUE(eval(rho, x).is_zero());
    EXPECT_EQ(kernel_in(rho).size(), n * s);
  }
}

TEST(OreHat, MatchesSubspacePolynomialOfMinors) {
  std::mt19937_64 rng(14);
  auto F1 = build_field(2, 1, 3);
  const auto one_dim = ore_hat_poly(make_basis(F1, {F1->root()}));
  EXPECT_EQ(one_dim.coeffs, els({F1->neg(F1->one()), F1->one()}));
  for (auto [p, s, t, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::size_t>>{
           {2, 1, 2, 2}, {2, 1, 5, 3}, {3, 1, 4, 2}, {2, 1, 8, 4}, {3, 1, 6, 3}, {2, 2, 3, 2}}) {
    auto F = build_field(p, s, t);
    for (int it = 0; it < 5; ++it) {
      const auto b = make_basis(F, random_basis(F, n, rng));
      const auto minors = moorekit::moore::cofactor_row(*F, b.w, false);
      const auto hat = ore_hat_poly(b);
      EXPECT_EQ(hat, subspace_poly(make_basis(F, minors)));
      const GfElement delta = moorekit::moore::moore_det(*F, b.w);
      EXPECT_EQ(hat.coeff(0), F->mul(F->sign(n), F->pow(delta, ipow(F->q(), n - 1) - 1)));
    }
  }
}

TEST(OreCoefficients, DeterminantOfMinors) {
  std::mt19937_64 rng(16);
  for (auto [p, s, t, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::size_t>>{
           {2, 1, 4, 2}, {2, 1, 6, 3}, {3, 1, 4, 2}, {2, 1, 8, 4}, {3, 1, 6, 3}}) {
    auto F = build_field(p, s, t);
    for (int it = 0; it < 10; ++it) {
      const auto w = random_basis(F, n, rng);
      const GfElement delta = moorekit::moore::moore_det(*F, w);
      const GfElement dm = moorekit::moore::moore_det(*F, moorekit::moore::cofactor_row(*F, w, false));
      const std::uint64_t q = F->q();
      EXPECT_EQ(F->pow(dm, q - 1), F->pow(delta, ipow(q, n - 1) - 1));
      std::uint64_t S = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) S += ipow(q, k);
      EXPECT_EQ(dm, F->mul(F->sign(n / 2), F->pow(delta, S)));
    }
  }
}

}  // namespace
