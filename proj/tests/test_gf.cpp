#include <gtest/gtest.h>

#include <random>
#include <set>

#include "moorekit/error.hpp"
#include "moorekit/gf.hpp"

namespace {

using moorekit::Error;
using moorekit::ErrorCode;
using namespace moorekit::gf;

// Independent oracles: plain polynomial arithmetic over F_p on coefficient vectors.
using Vec = std::vector<std::uint32_t>;

Vec poly_mod(Vec a, const Vec& f, std::uint32_t p) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() >= f.size()) {
    const std::uint32_t c = a.back();  // f is monic
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool divides_trial(const Vec& f, std::uint32_t p) {
  // true when f has a monic factor of degree 1..deg/2
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      Vec g(k + 1, 0);
      std::size_t rest = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty()) return true;
    }
  }
  return false;
}

Vec oracle_mul(const Vec& a, const Vec& b, const Vec& f, std::uint32_t p) {
  Vec r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  Vec out = poly_mod(r, f, p);
  out.resize(f.size() - 1, 0);
  return out;
}

// Smallest irreducible by brute-force enumeration in the same order the
// library documents (constant term most significant).
Vec smallest_irreducible(std::uint32_t p, std::size_t d) {
  Vec digits(d, 0);
  while (true) {
    Vec f = digits;
    f.push_back(1);
    if (!divides_trial(f, p) && (d == 1 || f[0] != 0)) return f;
    std::size_t k = d;
    while (k-- > 0) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
  }
}

TEST(GfBuild, PrimeFieldUsesModulusX) {
  auto F = build_field(2, 1, 1);
  EXPECT_EQ(F->modulus(), (Vec{0, 1}));
  EXPECT_EQ(F->order(), 2u);
  EXPECT_EQ(F->root(), F->zero());
}

TEST(GfBuild, F4ModulusIsXSquaredPlusXPlusOne) {
  auto F = build_field(2, 1, 2);
  EXPECT_EQ(F->modulus(), (Vec{1, 1, 1}));
}

TEST(GfBuild, F9ModulusIsXSquaredPlusOne) {
  auto F = build_field(3, 1, 2);
  EXPECT_EQ(F->modulus(), (Vec{1, 0, 1}));
}

TEST(GfBuild, ModulusMatchesBruteForceEnumeration) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    auto F = build_field(p, 1, d);
    EXPECT_EQ(F->modulus(), smallest_irreducible(p, d)) << p << "^" << d;
  }
}

TEST(GfBuild, RabinTestAgreesWithTrialDivision) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t d = 2; d <= 5; ++d) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::size_t idx = 0; idx < count; ++idx) {
        Vec f(d + 1, 0);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < d; ++i) {
          f[i] = rest % p;
          rest /= p;
        }
        f[d] = 1;
        EXPECT_EQ(is_irreducible_fp(f, p), !divides_trial(f, p)) << "p=" << p << " idx=" << idx;
      }
    }
  }
}

TEST(GfBuild, Errors) {
  EXPECT_THROW(
      {
        try {
          build_field(4, 1, 1);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::NonPrimeP);
          throw;
        }
      },
      Error);
  try {
    build_field(2, 1, 21);
    FAIL() << "expected DegreeCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
  }
  EXPECT_NO_THROW(build_field(2, 1, 21, std::uint64_t{1} << 21));
}

TEST(GfArith, F4RootSquared) {
  auto F = build_field(2, 1, 2);
  const GfElement w = F->root();
  EXPECT_EQ(F->mul(w, w), F->add(w, F->one()));
}

TEST(GfArith, F9RootSquaredIsMinusOne) {
  auto F = build_field(3, 1, 2);
  const GfElement i = F->root();
  EXPECT_EQ(F->mul(i, i), F->from_int(2));
  EXPECT_EQ(F->mul(i, i), F->neg(F->one()));
}

TEST(GfArith, InverseOfZeroFails) {
  auto F = build_field(2, 1, 3);
  try {
    F->inv(F->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(GfArith, TablesAgreeWithSchoolbookMultiplication) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {2, 8}}) {
    auto F = build_field(p, 1, d);
    for (std::uint32_t a = 0; a < F->order(); ++a) {
      for (std::uint32_t b = 0; b < F->order(); b += (F->order() > 64 ? 7 : 1)) {
        const auto expected = oracle_mul(F->coeffs({a}), F->coeffs({b}), F->modulus(), p);
        EXPECT_EQ(F->coeffs(F->mul({a}, {b})), expected);
      }
    }
  }
}

TEST(GfArith, FieldAxiomsExhaustive) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 4}, {3, 2}, {2, 8}, {5, 3}}) {
    auto F = build_field(p, 1, d);
    for (std::uint32_t c = 1; c < F->order(); ++c) {
      const GfElement x{c};
      EXPECT_EQ(F->pow(x, F->order() - 1), F->one());
      EXPECT_EQ(F->mul(x, F->inv(x)), F->one());
      EXPECT_EQ(F->add(x, F->neg(x)), F->zero());
      EXPECT_EQ(F->pow_signed(x, -3), F->inv(F->pow(x, 3)));
    }
  }
}

TEST(GfFrobenius, PrimeFieldFixed) {
  auto F = build_field(2, 1, 1);
  for (std::uint64_t k = 0; k < 5; ++k) EXPECT_EQ(F->frobenius_q(F->one(), k), F->one());
}

TEST(GfFrobenius, F4RootImage) {
  auto F = build_field(2, 1, 2);
  EXPECT_EQ(F->frobenius_q(F->root(), 1), F->add(F->root(), F->one()));
}

TEST(GfFrobenius, OrderAndAutomorphism) {
  std::mt19937_64 rng(7);
  for (auto [p, s, t] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 4}, {2, 2, 3}, {3, 1, 3}, {3, 2, 2}, {2, 3, 2}}) {
    auto F = build_field(p, s, t);
    for (int it = 0; it < 200; ++it) {
      const GfElement x = F->random(rng), y = F->random(rng);
      EXPECT_EQ(F->frobenius_q(x, F->frobenius_order()), x);
      for (std::uint64_t k = 0; k < 3; ++k) {
        EXPECT_EQ(F->frobenius_q(F->mul(x, y), k), F->mul(F->frobenius_q(x, k), F->frobenius_q(y, k)));
        EXPECT_EQ(F->frobenius_q(F->add(x, y), k), F->add(F->frobenius_q(x, k), F->frobenius_q(y, k)));
        EXPECT_EQ(F->inv_frobenius_q(F->frobenius_q(x, k), k), x);
      }
      EXPECT_EQ(F->frobenius_q(x, 1), F->pow(x, F->q()));
    }
  }
}

TEST(GfSubfield, QBasisSpansSubfieldOfSizeQ) {
  for (auto [p, s, t] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 4}, {2, 2, 2}, {2, 2, 3}, {3, 1, 3}, {3, 2, 2}, {2, 4, 1}}) {
    auto F = build_field(p, s, t);
    EXPECT_EQ(F->q_basis().size(), s);
    const auto& sub = F->fq_elements();
    EXPECT_EQ(sub.size(), F->q());
    std::set<GfElement> as_set(sub.begin(), sub.end());
    EXPECT_EQ(as_set.size(), F->q());
    for (const GfElement x : sub) {
      EXPECT_TRUE(F->in_fq(x));
      for (const GfElement y : sub) EXPECT_TRUE(as_set.count(F->mul(x, y)));
    }
    std::size_t fixed = 0;
    for (std::uint32_t c = 0; c < F->order(); ++c) fixed += F->in_fq({c}) ? 1 : 0;
    EXPECT_EQ(fixed, F->q());
  }
}

TEST(GfNullspace, IdentityAndZeroMaps) {
  auto F = build_field(2, 1, 3);
  std::vector<GfElement> id, zero(3, F->zero());
  for (std::uint32_t i = 0; i < 3; ++i) id.push_back({1u << i});
  EXPECT_TRUE(F->nullspace_fp(id).empty());
  EXPECT_EQ(F->nullspace_fp(zero).size(), 3u);
}

TEST(GfNullspace, ArtinSchreierMapOnF4) {
  auto F = build_field(2, 1, 2);
  std::vector<GfElement> images;
  for (std::uint32_t i = 0; i < 2; ++i) {
    const GfElement e{1u << i};
    images.push_back(F->sub(F->mul(e, e), e));
  }
  const auto ker = F->nullspace_fp(images);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0], F->one());
}

TEST(GfFormat, RoundTrips) {
  auto F = build_field(3, 1, 3);
  for (std::uint32_t c = 0; c < F->order(); ++c) {
    const GfElement x{c};
    EXPECT_EQ(F->parse(F->format(x)), x);
    EXPECT_EQ(F->parse(F->pretty(x)), x);
  }
  EXPECT_EQ(F->format(F->root()), "3^3:[0,1,0]");
  EXPECT_EQ(F->pretty(F->from_coeffs(Vec{1, 2, 1})), "w^2+2*w+1");
  EXPECT_EQ(F->parse("w - 1"), F->sub(F->root(), F->one()));
  EXPECT_EQ(F->parse("w^3"), F->pow(F->root(), 3));
}

TEST(GfFormat, ParseErrors) {
  auto F = build_field(2, 1, 2);
  for (const char* bad : {"", "x", "2^3:[0,1,0]", "2^2:[0,2]", "w^", "1 1", "2^2:[0,1"}) {
    try {
      F->parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(GfLinearAlgebra, ExpressOverFq) {
  auto F = build_field(2, 2, 3);  // F_64 over F_4
  std::mt19937_64 rng(3);
  const std::vector<GfElement> v{F->random_nonzero(rng), F->random_nonzero(rng)};
  const auto& sub = F->fq_elements();
  for (const GfElement a : sub)
    for (const GfElement b : sub) {
      const GfElement x = F->add(F->mul(a, v[0]), F->mul(b, v[1]));
      const auto coords = F->express_over_fq(v, x);
      ASSERT_TRUE(coords.has_value());
      EXPECT_EQ(F->add(F->mul((*coords)[0], v[0]), F->mul((*coords)[1], v[1])), x);
    }
}

TEST(GfEmbedding, IsRingHomomorphism) {
  auto small = build_field(2, 1, 2);
  auto big = build_field(2, 1, 6);
  Embedding e(small, big);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ(e(small->mul({a}, {b})), big->mul(e({a}), e({b})));
      EXPECT_EQ(e(small->add({a}, {b})), big->add(e({a}), e({b})));
    }
}

TEST(GfDeterminant, MatchesCofactorExpansionOn3x3) {
  auto F = build_field(3, 1, 2);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    Matrix m(3, std::vector<GfElement>(3));
    for (auto& row : m)
      for (auto& x : row) x = F->random(rng);
    auto t = [&](int i, int j) { return m[i][j]; };
    GfElement expect = F->zero();
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int k = 0; k < 6; ++k) {
      GfElement prod = F->mul(F->mul(t(0, perms[k][0]), t(1, perms[k][1])), t(2, perms[k][2]));
      expect = k < 3 ? F->add(expect, prod) : F->sub(expect, prod);
    }
    EXPECT_EQ(determinant(*F, m), expect);
  }
}

TEST(GfPrimePower, Split) {
  EXPECT_EQ(split_prime_power(8), (std::optional<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}}));
  EXPECT_EQ(split_prime_power(9), (std::optional<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}}));
  EXPECT_FALSE(split_prime_power(12).has_value());
  EXPECT_FALSE(split_prime_power(1).has_value());
}

}  // namespace
