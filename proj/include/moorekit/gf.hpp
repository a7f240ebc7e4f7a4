#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace moorekit::gf {

/// An element of F_{p^d}, stored as the base-p packing of its coordinates in
/// the power basis of the modulus root: code = c0 + c1*p + ... + c_{d-1}*p^{d-1}.
struct GfElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr auto operator<=>(GfElement, GfElement) = default;
};

using Matrix = std::vector<std::vector<GfElement>>;

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 20;

/// Size cap p^d for new fields. Reads MOOREKIT_FIELD_CAP when set.
std::uint64_t default_size_cap();

bool is_prime(std::uint64_t n) noexcept;

/// Dense matrix over F_p used for the F_p-linear algebra on K.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduces to reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {x : A x = 0}, rows in reduced echelon form.
  std::vector<std::vector<std::uint32_t>> nullspace() const;
  /// Some x with A x = b, free variables set to zero.
  std::optional<std::vector<std::uint32_t>> solve(std::span<const std::uint32_t> b) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/// The finite field F_{p^d} with its distinguished subfield F_q, q = p^s.
/// Immutable once built; share through FieldPtr.
class Field {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint32_t d() const noexcept { return d_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t order() const noexcept { return order_; }
  /// [K : F_q] = d / s, the order of the q-Frobenius.
  std::uint32_t frobenius_order() const noexcept { return d_ / s_; }

  /// Monic modulus over F_p, coefficients from the constant term up (length d+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// F_p-basis of F_q inside this field, in reduced echelon form.
  const std::vector<GfElement>& q_basis() const noexcept { return q_basis_; }
  /// All q elements of F_q, sorted by code.
  const std::vector<GfElement>& fq_elements() const noexcept { return fq_elements_; }

  GfElement zero() const noexcept { return {0}; }
  GfElement one() const noexcept { return {1}; }
  /// The class of X modulo the modulus (0 when d = 1, the modulus being X).
  GfElement root() const noexcept;
  GfElement from_int(std::int64_t v) const noexcept;
  GfElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(GfElement x) const;
  bool contains(GfElement x) const noexcept { return x.code < order_; }

  GfElement add(GfElement a, GfElement b) const noexcept;
  GfElement sub(GfElement a, GfElement b) const noexcept;
  GfElement neg(GfElement a) const noexcept;
  GfElement mul(GfElement a, GfElement b) const noexcept;
  GfElement inv(GfElement a) const;
  GfElement div(GfElement a, GfElement b) const;
  GfElement pow(GfElement a, std::uint64_t e) const noexcept;
  GfElement pow_signed(GfElement a, std::int64_t e) const;
  /// (-1)^k.
  GfElement sign(std::int64_t k) const noexcept { return (k % 2 == 0) ? one() : neg(one()); }

  GfElement frobenius_p(GfElement a) const noexcept;
  /// a^{q^k}, by k*s applications of the p-power map.
  GfElement frobenius_q(GfElement a, std::uint64_t k) const noexcept;
  /// The inverse of frobenius_q(., k).
  GfElement inv_frobenius_q(GfElement a, std::uint64_t k) const noexcept;
  bool in_fq(GfElement a) const noexcept { return frobenius_q(a, 1) == a; }

  GfElement random(std::mt19937_64& rng) const;
  GfElement random_nonzero(std::mt19937_64& rng) const;

  /// Canonical "p^d:[c0,c1,...]".
  std::string format(GfElement x) const;
  /// Polynomial in the root w, e.g. "w^2+2*w+1".
  std::string pretty(GfElement x) const;
  /// Accepts both the canonical and the pretty forms.
  GfElement parse(std::string_view text) const;

  /// F_p-basis (reduced echelon form) of the kernel of the F_p-linear map
  /// sending the i-th power-basis element w^i to images[i].
  std::vector<GfElement> nullspace_fp(std::span<const GfElement> images) const;
  /// Coordinates over F_p of x in the span of vectors (free coordinates zero).
  std::optional<std::vector<std::uint32_t>> express_over_fp(std::span<const GfElement> vectors,
                                                            GfElement x) const;
  /// Coordinates over F_q of x in the F_q-span of vectors (as F_q elements).
  std::optional<std::vector<GfElement>> express_over_fq(std::span<const GfElement> vectors,
                                                        GfElement x) const;
  std::size_t rank_over_fp(std::span<const GfElement> vectors) const;

  /// Built through build_field only.
  Field(std::uint32_t p, std::uint32_t s, std::uint32_t d, std::vector<std::uint32_t> modulus);

 private:
  GfElement mul_slow(GfElement a, GfElement b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint32_t d_;
  std::uint64_t q_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;   // p^i, i < d
  std::vector<std::uint32_t> exp_;     // g^i for i < 2(order-1)
  std::vector<std::uint32_t> log_;     // inverse of exp_ on nonzero codes
  std::vector<GfElement> q_basis_;
  std::vector<GfElement> fq_elements_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^{s t}} with distinguished subfield F_{p^s}; the modulus is the
/// lexicographically smallest monic irreducible of degree s*t (coefficients
/// compared from the constant term upward).
FieldPtr build_field(std::uint32_t p, std::uint32_t s, std::uint32_t t,
                     std::uint64_t size_cap = default_size_cap());
/// Memoized build_field; fields are immutable so sharing is safe.
FieldPtr cached_field(std::uint32_t p, std::uint32_t s, std::uint32_t t);

/// Monic irreducibility over F_p (Rabin's test). Coefficients constant term first.
bool is_irreducible_fp(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Determinant by Gaussian elimination.
GfElement determinant(const Field& F, Matrix m);
std::size_t rank(const Field& F, Matrix m);

/// Field embedding small -> big sending the root of small's modulus to the
/// smallest-code root of that modulus in big.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big);
  GfElement operator()(GfElement x) const;
  const FieldPtr& source() const noexcept { return small_; }
  const FieldPtr& target() const noexcept { return big_; }

 private:
  FieldPtr small_;
  FieldPtr big_;
  std::vector<GfElement> root_powers_;
};

/// Splits q into (p, s) with q = p^s; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q);

}  // namespace moorekit::gf
