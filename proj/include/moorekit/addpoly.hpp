#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "moorekit/gf.hpp"
#include "moorekit/upoly.hpp"

namespace moorekit::addpoly {

using gf::Field;
using gf::FieldPtr;
using gf::GfElement;

/// Sum of coeffs[m] X^{q^m}. Trailing zero coefficients are trimmed, so the
/// zero polynomial has no coefficients.
struct AdditivePoly {
  FieldPtr ctx;
  std::vector<GfElement> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// n for a polynomial of degree q^n; -1 for zero.
  long q_degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  bool is_reduced() const noexcept { return !coeffs.empty() && !coeffs.front().is_zero(); }
  bool is_monic() const noexcept { return !coeffs.empty() && coeffs.back().code == 1; }
  GfElement coeff(std::size_t m) const noexcept { return m < coeffs.size() ? coeffs[m] : GfElement{}; }

  friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) { return a.coeffs == b.coeffs; }
};

AdditivePoly make_additive(FieldPtr ctx, std::vector<GfElement> coeffs);
/// X.
AdditivePoly identity(FieldPtr ctx);

/// An F_q-basis of a subspace W of K.
struct SubspaceBasis {
  FieldPtr ctx;
  std::vector<GfElement> w;

  std::size_t n() const noexcept { return w.size(); }
};

/// Validates independence (DependentBasis) and non-emptiness (EmptyTuple).
SubspaceBasis make_basis(FieldPtr ctx, std::vector<GfElement> w);

/// Every F_q-combination sum_i e_i w_i. Index k encodes e in base q with e_1
/// the least significant digit, digits mapped through Field::fq_elements.
std::vector<GfElement> enumerate_span(const Field& F, std::span<const GfElement> w);
/// The F_q-coordinates of x in the basis, or nullopt when x is outside W.
std::optional<std::vector<GfElement>> coordinates(const SubspaceBasis& b, GfElement x);

GfElement eval(const AdditivePoly& P, GfElement x);

/// Largest |W| for which the product form is built as a cross-check.
inline constexpr std::uint64_t kProductFormCap = 4096;

/// P_W from the bordered Moore determinant ratio; cross-checked against the
/// product over W when |W| <= kProductFormCap.
AdditivePoly subspace_poly(const SubspaceBasis& b);
AdditivePoly subspace_poly_det(const SubspaceBasis& b);
/// Product of (X - w) over W, read back as an additive polynomial.
AdditivePoly subspace_poly_product(const SubspaceBasis& b);

struct Hyperplane {
  AdditivePoly poly;
  GfElement delta_phi;
};
/// P_{ker phi} and delta_phi for the form phi = sum alpha_i w_i^*.
Hyperplane hyperplane_poly(const SubspaceBasis& b, std::span<const GfElement> alpha);
/// sum_i (-1)^{i-1} alpha_i Delta_{n-1}(w without w_i).
GfElement delta_phi(const SubspaceBasis& b, std::span<const GfElement> alpha);

AdditivePoly reverse(const AdditivePoly& P);
/// (P o Q)_k = sum_{i+j=k} p_i q_j^{q^i}.
AdditivePoly compose(const AdditivePoly& P, const AdditivePoly& Q);
/// The Q with P = Q o D, D monic and reduced.
AdditivePoly right_divide(const AdditivePoly& P, const AdditivePoly& D);

/// F_p-basis (reduced echelon) of the roots of P inside its field.
std::vector<GfElement> kernel_in(const AdditivePoly& P);

/// u_i = (Delta_{n-1}(w without w_i) / Delta_n(w))^q, checked to be roots of
/// the reversed subspace polynomial. For a non-monic P with leading
/// coefficient c_n the kernel of its reverse is c_n^{-1} times this space.
std::vector<GfElement> reversed_kernel_basis(const SubspaceBasis& b);

/// The closed form for the subspace polynomial of the unsigned minors.
AdditivePoly ore_hat_poly(const SubspaceBasis& b);

upoly::Poly to_classical(const AdditivePoly& P);
/// Fails with PreconditionError when a is not of additive shape.
AdditivePoly from_classical(FieldPtr ctx, const upoly::Poly& a);

}  // namespace moorekit::addpoly
