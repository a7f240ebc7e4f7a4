#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/ring.hpp"

namespace {

using moorekit::Error;
using moorekit::ErrorCode;
using namespace moorekit::gf;
using namespace moorekit::moore;

// Leibniz expansion over permutations; independent of both library algorithms.
GfElement leibniz(const Field& F, const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GfElement total = F.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    GfElement prod = F.one();
    for (std::size_t i = 0; i < n; ++i) prod = F.mul(prod, m[i][perm[i]]);
    total = (inversions % 2) ? F.sub(total, prod) : F.add(total, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// F_q-independence by brute force: no nontrivial combination vanishes.
bool independent_brute(const Field& F, const std::vector<GfElement>& a) {
  const auto& sc = F.fq_elements();
  std::size_t total = 1;
  for (std::size_t i = 0; i < a.size(); ++i) total *= sc.size();
  for (std::size_t k = 1; k < total; ++k) {
    GfElement x = F.zero();
    std::size_t rest = k;
    for (const GfElement ai : a) {
      x = F.add(x, F.mul(sc[rest % sc.size()], ai));
      rest /= sc.size();
    }
    if (x.is_zero()) return false;
  }
  return true;
}

TEST(MooreMatrix, Shapes) {
  auto F = build_field(2, 1, 2);
  const GfElement w = F->root();
  const std::vector<GfElement> single{w};
  EXPECT_EQ(moore_matrix(*F, single, 1), (Matrix{{w}}));
  const std::vector<GfElement> pair{F->one(), w};
  EXPECT_EQ(moore_matrix(*F, pair, 2), (Matrix{{F->one(), w}, {F->one(), F->add(w, F->one())}}));
  const auto tall = moore_matrix(*F, pair, 3);
  EXPECT_EQ(tall.size(), 3u);
  EXPECT_EQ(tall[2].size(), 2u);
  try {
    moore_matrix(*F, std::vector<GfElement>{}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyTuple);
  }
}

TEST(MooreDet, SmallExamples) {
  auto F = build_field(2, 1, 2);
  const GfElement w = F->root();
  EXPECT_EQ(moore_det(*F, std::vector<GfElement>{w}), w);
  EXPECT_EQ(moore_det(*F, std::vector<GfElement>{F->one(), w}), F->one());
  EXPECT_EQ(moore_det_product(*F, std::vector<GfElement>{F->one(), w}), F->one());
  EXPECT_EQ(moore_det(*F, std::vector<GfElement>{w, w}), F->zero());
  EXPECT_EQ(moore_det_product(*F, std::vector<GfElement>{w}), w);
}

TEST(MooreDet, AlgorithmsAgreeExhaustivelyOverF8) {
  auto F = build_field(2, 1, 3);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      for (std::uint32_t c = 0; c < 8; ++c) {
        const std::vector<GfElement> t{{a}, {b}, {c}};
        const GfElement g = moore_det(*F, t);
        EXPECT_EQ(g, moore_det_product(*F, t));
        EXPECT_EQ(g, leibniz(*F, moore_matrix(*F, t, 3)));
      }
}

TEST(MooreDet, AlgorithmsAgreeOnRandomLargerFields) {
  std::mt19937_64 rng(5);
  for (auto [p, s, t] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 10}, {3, 1, 6}, {2, 2, 4}, {3, 2, 3}}) {
    auto F = build_field(p, s, t);
    for (int it = 0; it < 100; ++it) {
      const std::size_t n = 1 + it % 4;
      std::vector<GfElement> a(n);
      for (auto& x : a) x = F->random(rng);
      EXPECT_EQ(moore_det(*F, a), moore_det_product(*F, a));
      EXPECT_EQ(moore_det(*F, a), leibniz(*F, moore_matrix(*F, a, n)));
    }
  }
}

TEST(MooreDet, LaplaceDpMatchesLeibniz) {
  auto F = build_field(3, 1, 2);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 1 + it % 5;
    Matrix m(n, std::vector<GfElement>(n));
    for (auto& row : m)
      for (auto& x : row) x = F->random(rng);
    EXPECT_EQ(moorekit::ring::det_laplace(moorekit::ring::FieldRing{*F}, m), leibniz(*F, m));
  }
}

TEST(MooreDet, MultilinearOverFq) {
  auto F = build_field(2, 2, 3);
  std::mt19937_64 rng(13);
  const auto& sc = F->fq_elements();
  for (int it = 0; it < 100; ++it) {
    std::vector<GfElement> a{F->random(rng), F->random(rng), F->random(rng)};
    const GfElement b = F->random(rng);
    const GfElement lam = sc[rng() % sc.size()], mu = sc[rng() % sc.size()];
    const std::size_t i = it % 3;
    auto with = [&](GfElement x) {
      auto t = a;
      t[i] = x;
      return moore_det(*F, t);
    };
    const GfElement lhs = with(F->add(F->mul(lam, a[i]), F->mul(mu, b)));
    const GfElement rhs = F->add(F->mul(lam, with(a[i])), F->mul(mu, with(b)));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Cofactors, PairCase) {
  auto F = build_field(3, 1, 2);
  const GfElement a1 = F->root(), a2 = F->add(F->root(), F->one());
  const std::vector<GfElement> t{a1, a2};
  EXPECT_EQ(cofactor_row(*F, t, false), (std::vector<GfElement>{a2, a1}));
  EXPECT_EQ(cofactor_row(*F, t, true), (std::vector<GfElement>{a2, F->neg(a1)}));
  try {
    cofactor_row(*F, std::vector<GfElement>{a1}, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TupleTooShort);
  }
}

TEST(Cofactors, LastRowExpansionReproducesDeterminant) {
  // Signed first-row cofactors c_i satisfy sum_i c_i a_i^{q^{n-1}} = (-1)^{n-1} Delta_n.
  auto F = build_field(2, 1, 4);
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    std::vector<GfElement> a{F->random(rng), F->random(rng), F->random(rng)};
    const auto c = cofactor_row(*F, a, true);
    GfElement acc = F->zero();
    for (std::size_t i = 0; i < 3; ++i) acc = F->add(acc, F->mul(c[i], F->frobenius_q(a[i], 2)));
    EXPECT_EQ(acc, F->mul(F->sign(2), moore_det(*F, a)));
    GfElement first = F->zero();
    for (std::size_t i = 0; i < 3; ++i) first = F->add(first, F->mul(c[i], a[i]));
    EXPECT_EQ(first, F->zero());
  }
}

TEST(Independence, ExhaustiveEquivalences) {
  for (std::uint32_t d : {3u, 4u}) {
    auto F = build_field(2, 1, d);
    const std::uint32_t N = F->order();
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b) {
        const std::vector<GfElement> t2{{a}, {b}};
        const bool ind2 = independent_brute(*F, t2);
        EXPECT_EQ(ind2, is_fq_independent(*F, t2));
        EXPECT_EQ(ind2, !moore_det(*F, cofactor_row(*F, t2, false)).is_zero());
        for (std::uint32_t c = 0; c < N; c += (d == 4 ? 3 : 1)) {
          const std::vector<GfElement> t3{{a}, {b}, {c}};
          const bool ind3 = independent_brute(*F, t3);
          EXPECT_EQ(ind3, is_fq_independent(*F, t3));
          EXPECT_EQ(ind3, !moore_det(*F, cofactor_row(*F, t3, false)).is_zero());
        }
      }
  }
}

TEST(Independence, ScalarMultiplesAreDependent) {
  auto F = build_field(3, 1, 3);
  for (std::uint32_t x = 1; x < F->order(); ++x)
    for (const GfElement lam : F->fq_elements()) {
      EXPECT_FALSE(is_fq_independent(*F, std::vector<GfElement>{{x}, F->mul(lam, {x})}));
    }
  EXPECT_FALSE(is_fq_independent(*F, std::vector<GfElement>{F->one(), F->one()}));
}

}  // namespace
