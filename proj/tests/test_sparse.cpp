#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "moorekit/error.hpp"
#include "moorekit/moore.hpp"
#include "moorekit/sparse.hpp"

namespace {

using moorekit::Error;
using moorekit::ErrorCode;
using namespace moorekit::gf;
using namespace moorekit::sparse;

SparsePoly var(const FieldPtr& F, std::size_t n, std::size_t i) { return SparsePoly::variable(F, n, i); }

TEST(Sparse, FreshmansDream) {
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const FieldPtr F = cached_field(p, s, 1);
    const SparsePoly x = var(F, 3, 0), y = var(F, 3, 1), z = var(F, 3, 2);
    const SparsePoly sum = add(add(x, scale(F->root(), y)), z);
    EXPECT_EQ(pow(sum, F->q()), frobenius(sum, 1)) << p << "^" << s;
  }
}

TEST(Sparse, MooreDetTwoVariablesOverF2) {
  const FieldPtr F = cached_field(2, 1, 1);
  const SparsePoly d = sym_moore_det(F, 2, {0, 1});
  SparsePoly expected(F, 2);
  expected.add_term({1, 2}, F->one());
  expected.add_term({2, 1}, F->one());
  EXPECT_EQ(d, expected);
  EXPECT_EQ(format(d, {"Y1", "Y2"}), "Y1^2*Y2 + Y1*Y2^2");
}

TEST(Sparse, MooreDetVanishesOnDependentSubstitution) {
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const FieldPtr F = cached_field(p, s, 1);
    const SparsePoly d = sym_moore_det(F, 3, {0, 1, 2});
    for (const GfElement a : F->fq_elements()) {
      for (const GfElement b : F->fq_elements()) {
        const SparsePoly combo = add(scale(a, var(F, 3, 0)), scale(b, var(F, 3, 1)));
        EXPECT_TRUE(substitute(d, 2, combo).is_zero());
      }
    }
    EXPECT_FALSE(d.is_zero());
    EXPECT_EQ(d.total_degree(), static_cast<long>(1 + F->q() + F->q() * F->q()));
  }
}

TEST(Sparse, EvaluationMatchesNumericMooreDet) {
  std::mt19937_64 rng(5);
  for (auto [p, s, t] : {std::tuple{2u, 1u, 5u}, {3u, 1u, 4u}, {2u, 2u, 3u}}) {
    const FieldPtr F = cached_field(p, s, 1);
    const FieldPtr K = cached_field(p, s, t);
    const Embedding embed(F, K);
    const SparsePoly d = sym_moore_det(F, 3, {0, 1, 2});
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<GfElement> pt{K->random(rng), K->random(rng), K->random(rng)};
      EXPECT_EQ(evaluate(d, embed, pt), moorekit::moore::moore_det(*K, pt));
    }
  }
}

TEST(Sparse, ProductAndRowExpansionAgree) {
  // sym_moore_det throws InternalMismatch on disagreement.
  for (auto [p, s, n] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {2u, 1u, 5u}}) {
    const FieldPtr F = cached_field(p, s, 1);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    EXPECT_NO_THROW(sym_moore_det(F, n, idx));
  }
}

TEST(Sparse, EmptyMooreDetIsOne) {
  const FieldPtr F = cached_field(3, 1, 1);
  EXPECT_EQ(sym_moore_det(F, 2, {}), SparsePoly::constant(F, 2, F->one()));
}

TEST(Sparse, VariableCountMismatch) {
  const FieldPtr F = cached_field(2, 1, 1);
  try {
    (void)add(var(F, 2, 0), var(F, 3, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VarMismatch);
  }
}

TEST(Sparse, TermBudget) {
  const FieldPtr F = cached_field(2, 1, 1);
  ::setenv("MOOREKIT_TERM_BUDGET", "10", 1);
  const SparsePoly a = add(add(var(F, 3, 0), var(F, 3, 1)), var(F, 3, 2));
  try {
    (void)pow(a, 7);
    ::unsetenv("MOOREKIT_TERM_BUDGET");
    FAIL();
  } catch (const Error& e) {
    ::unsetenv("MOOREKIT_TERM_BUDGET");
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

}  // namespace
