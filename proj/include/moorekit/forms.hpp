#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "moorekit/addpoly.hpp"
#include "moorekit/gf.hpp"
#include "moorekit/upoly.hpp"

// Differential forms on the projective line with only simple poles, stored as
// residue tables, and the spaces spanned by the coordinate forms of a basis.
namespace moorekit::forms {

using addpoly::SubspaceBasis;
using gf::Field;
using gf::FieldPtr;
using gf::GfElement;

struct SimplePoleForm {
  FieldPtr ctx;
  std::map<GfElement, GfElement> residues;  // pole -> nonzero residue

  std::size_t pole_count() const noexcept { return residues.size(); }
  /// Zero when x is not a pole.
  GfElement residue(GfElement x) const;
  /// N with the form equal to N / prod(X - pole) dX.
  upoly::Poly numerator() const;
  /// prod over poles of (X - pole).
  upoly::Poly pole_polynomial() const;
};

/// sum over e in F_q^n with e_j != 0 of e_j dX / (X - sum e_i w_i); j is 1-based.
SimplePoleForm omega_j(const SubspaceBasis& b, std::size_t j);

/// Numerator and denominator of the closed form
/// -Delta_n(w)^{q-1} Delta_phi(w, X) / Delta_{n+1}(w, X).
struct ClosedForm {
  upoly::Poly numerator;
  upoly::Poly denominator;
};
ClosedForm omega_phi_closed_form(const SubspaceBasis& b, std::span<const GfElement> alpha);

/// sum_j alpha_j omega_j. With `verify`, the table is compared pole by pole
/// against the residues of the closed form (InternalMismatch on disagreement).
SimplePoleForm omega_phi(const SubspaceBasis& b, std::span<const GfElement> alpha, bool verify = true);

/// N(a) / D'(a) for a simple root a of D.
GfElement residue_at(const Field& F, const upoly::Poly& N, const upoly::Poly& D, GfElement a);

struct LqSpace {
  SubspaceBasis source;
  std::vector<SimplePoleForm> basis_forms;
  std::uint64_t mu_plus_1 = 0;  // q^{n-1} (q - 1)
};
LqSpace build_lq_space(const SubspaceBasis& b);

/// Outcome of checking every nonzero combination of an LqSpace.
struct LqValidation {
  std::uint64_t combinations = 0;
  std::vector<std::string> failures;  // empty when every check passed

  bool ok() const noexcept { return failures.empty(); }
};
/// Checks pole count q^n - q^{n-1}, residues in F_q, agreement with the closed
/// form, a nonzero constant numerator over the pole polynomial (zero of order
/// mu - 1 at infinity), the residue sum when mu >= 1, and p^{n-1} | mu + 1.
LqValidation validate_lq_space(const LqSpace& space);

/// Writes the basis forms as P_i / P dX with P the product over the union of
/// their poles, computes Delta_n(P_1, ..., P_n) and divides it exactly by
/// P^{1 + q + ... + q^{n-2}}; returns the constant quotient.
/// FactorizationMismatch when the quotient is not a nonzero constant.
GfElement pagot_gamma(const LqSpace& space);

/// (-1)^{S_n} Delta_n(w)^{(q-2) S_n + S_{n-1}} with S_k = 1 + ... + q^{k-1}.
GfElement predicted_gamma(const SubspaceBasis& b);

}  // namespace moorekit::forms
