#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moorekit/gf.hpp"

// Exact multivariate polynomials with coefficients in F_q, the coefficient
// field being a FieldCtx with d = s.
namespace moorekit::sparse {

using gf::FieldPtr;
using gf::GfElement;
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: higher total degree first, then lexicographic
/// with variable 0 most significant.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

inline constexpr std::size_t kDefaultTermBudget = 2'000'000;

/// Term budget for products; reads MOOREKIT_TERM_BUDGET when set.
std::size_t term_budget();

class SparsePoly {
 public:
  using Terms = std::map<Exponents, GfElement, GradedLex>;

  SparsePoly(FieldPtr F, std::size_t nvars) : F_(std::move(F)), nvars_(nvars) {}

  static SparsePoly constant(FieldPtr F, std::size_t nvars, GfElement c);
  static SparsePoly variable(FieldPtr F, std::size_t nvars, std::size_t index);

  const FieldPtr& field() const noexcept { return F_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for zero.
  long total_degree() const;

  /// Adds c * monomial, dropping the term when the coefficient cancels.
  void add_term(const Exponents& e, GfElement c);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  FieldPtr F_;
  std::size_t nvars_;
  Terms terms_;
};

SparsePoly add(const SparsePoly& a, const SparsePoly& b);
SparsePoly sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly neg(const SparsePoly& a);
SparsePoly scale(GfElement c, const SparsePoly& a);
/// Throws BudgetExceeded when the product has more than term_budget() terms.
SparsePoly mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly pow(const SparsePoly& a, std::uint64_t e);
/// a^{q^k}: coefficients through the q-Frobenius, exponents times q^k.
SparsePoly frobenius(const SparsePoly& a, std::uint64_t k);
/// a with variable `index` replaced by `value`.
SparsePoly substitute(const SparsePoly& a, std::size_t index, const SparsePoly& value);
/// Value at a point of an extension field; `embed` maps coefficients.
GfElement evaluate(const SparsePoly& a, const gf::Embedding& embed, const std::vector<GfElement>& point);
/// Terms in graded lexicographic order, e.g. "Y1*Y2^2 + Y1^2*Y2".
std::string format(const SparsePoly& a, const std::vector<std::string>& names);

/// Ring adaptor for the generic matrix templates.
struct SparseRing {
  using value_type = SparsePoly;
  FieldPtr F;
  std::size_t nvars;
  value_type zero() const { return SparsePoly(F, nvars); }
  value_type one() const { return SparsePoly::constant(F, nvars, F->one()); }
  value_type add(const value_type& a, const value_type& b) const { return sparse::add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return sparse::sub(a, b); }
  value_type neg(const value_type& a) const { return sparse::neg(a); }
  value_type mul(const value_type& a, const value_type& b) const { return sparse::mul(a, b); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type frob(const value_type& a) const { return sparse::frobenius(a, 1); }
  value_type scale(GfElement c, const value_type& a) const { return sparse::scale(c, a); }
  const std::vector<GfElement>& fq_scalars() const { return F->fq_elements(); }
};

/// Moore determinant of the given variables computed by Leibniz expansion
/// (n <= 4), by row expansion and by the product over F_q-combinations; the
/// results must coincide (InternalMismatch otherwise).
SparsePoly sym_moore_det(const FieldPtr& F, std::size_t nvars, const std::vector<std::size_t>& var_indices);

}  // namespace moorekit::sparse
