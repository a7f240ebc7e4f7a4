#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moorekit/gf.hpp"
#include "moorekit/upoly.hpp"

// Artin-Schreier systems x_i^p - x_i = f_i over a finite field K of
// characteristic p (q = p), presented as the single-generator algebra
// A = K[W]/(Q(W)).
namespace moorekit::etale {

using gf::Field;
using gf::FieldPtr;
using gf::GfElement;
using upoly::Poly;

struct Relation {
  std::size_t j = 0;                  // index in J (0-based)
  std::vector<std::uint32_t> lambda;  // aligned with I
  GfElement g;                        // f_j = sum lambda_i f_i + g^p - g
};

struct ASSystem {
  FieldPtr ctx;
  std::vector<GfElement> f;
  std::size_t r = 0;  // dimension of the span of the f_i modulo (x^p - x)(K)
  std::vector<std::size_t> I;
  std::vector<std::size_t> J;
  std::vector<Relation> relations;
};

/// PreconditionError unless s = 1; DependentInput when Delta_n(f) = 0.
/// I is chosen greedily in index order.
ASSystem analyze_system(FieldPtr ctx, std::vector<GfElement> f);

struct EtaleAlgebra {
  ASSystem system;
  Poly Q;                          // monic of degree p^n
  std::vector<GfElement> Z_basis;  // (-1)^{i-1} Delta_{n-1}(f without f_i)
  GfElement delta;                 // Delta_n(f)
};

/// Q by the closed coefficient formula, cross-checked against
/// P_Z(W) - Delta_n(f)^{p^{n-1}} with P_Z the subspace polynomial of the
/// minors; both squarefreeness and agreement are asserted (InternalMismatch).
EtaleAlgebra build_Q(const ASSystem& system);
/// The closed coefficient formula alone.
Poly closed_form_Q(const ASSystem& system);
/// P_Z(W) - Delta_n(f)^{p^{n-1}}.
Poly determinant_form_Q(const ASSystem& system);

/// Reduction modulo Q.
Poly reduce(const EtaleAlgebra& alg, const Poly& a);

/// w_i = Delta_n(z with W in slot i) / Delta_n(z) - sum_{k<n-1} f_i^{p^k} in A,
/// z the signed minors. Verifies w_i^p - w_i = f_i and sum z_i w_i = W
/// (VerificationFailed otherwise).
std::vector<Poly> recover_generators(const EtaleAlgebra& alg);

struct SigmaResult {
  GfElement z;
  bool q_invariant = false;           // Q(W + z) = Q(W)
  std::vector<Poly> images;           // sigma_z(w_i)
  std::uint64_t epsilons_checked = 0;
  std::uint64_t failures = 0;         // epsilons where the pairing shift law fails
};
/// sigma_z : W -> W + z, checked against w_e + (-1)^{n-1} E(f_e, (z/Delta)^p)
/// for every nonzero e in F_p^n. NotInZ when z is outside the span of Z_basis.
SigmaResult sigma_action(const EtaleAlgebra& alg, GfElement z);
/// a(W + z) mod Q.
Poly apply_sigma(const EtaleAlgebra& alg, GfElement z, const Poly& a);

/// Nullity of a -> a^{|K|} - a on A, i.e. the number of irreducible factors of Q.
std::size_t count_simple_factors(const EtaleAlgebra& alg);

struct EtaleVerification {
  bool q_forms_agree = false;
  bool squarefree = false;
  bool generators_ok = false;
  std::size_t factor_count = 0;
  std::size_t predicted_factor_count = 0;  // p^{n-r}
  std::uint64_t sigma_checks = 0;
  std::uint64_t sigma_failures = 0;
  bool composition_ok = false;
  bool injective = false;

  bool ok() const noexcept {
    return q_forms_agree && squarefree && generators_ok && factor_count == predicted_factor_count &&
           sigma_failures == 0 && composition_ok && injective;
  }
};
/// Every check above, with sigma_z over all of Z.
EtaleVerification verify_system(const EtaleAlgebra& alg);

}  // namespace moorekit::etale
