#pragma once

#include <span>
#include <vector>

#include "moorekit/addpoly.hpp"
#include "moorekit/forms.hpp"
#include "moorekit/gf.hpp"

// The two F_q-bilinear pairings between W = Ker P_W and U = Ker of its reverse:
// the telescoping sum E and the residue pairing f.
namespace moorekit::pairing {

using addpoly::AdditivePoly;
using addpoly::SubspaceBasis;
using gf::Field;
using gf::GfElement;

struct PairingContext {
  SubspaceBasis b;
  AdditivePoly P;
  AdditivePoly rhoP;
  std::vector<GfElement> u_basis;
  std::vector<GfElement> signed_minors;
  GfElement delta;  // Delta_n(w)
};

PairingContext make_context(const SubspaceBasis& b);

/// sum_{m=1..n} sum_{j<m} ((c_m u)^{q^{-m}} w)^{q^j}; NotInKernel for inputs
/// outside W or U, ValueNotInFq if the sum leaves F_q.
GfElement elkies_E(const PairingContext& pc, GfElement w, GfElement u);

/// alpha in F_q^n with u^{1/q} Delta_n(w) = sum alpha_i (signed minor)_i.
/// DecompositionFailed when u is outside U.
std::vector<GfElement> decompose_u(const PairingContext& pc, GfElement u);

/// (-1)^{n-1} res_w omega_phi with phi given by decompose_u(u); zero when
/// either argument is zero.
GfElement residue_f(const PairingContext& pc, GfElement w, GfElement u);

enum class Which { E, F };
/// [pair(w_i, u_j)].
gf::Matrix gram_matrix(const PairingContext& pc, Which which);
bool is_invertible(const Field& F, const gf::Matrix& m);

struct ExhaustiveCheck {
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;       // E(w,u) != f(w,u)
  std::uint64_t not_in_fq = 0;        // E(w,u)^q != E(w,u)
  std::uint64_t bilinear_failures = 0;
  bool gram_E_invertible = false;
  bool gram_f_invertible = false;
  bool grams_equal = false;

  bool ok() const noexcept {
    return pairs > 0 && mismatches == 0 && not_in_fq == 0 && bilinear_failures == 0 && gram_E_invertible &&
           gram_f_invertible && grams_equal;
  }
};
/// Compares E and f on all of W x U and checks bilinearity on basis pairs.
ExhaustiveCheck check_exhaustive(const PairingContext& pc);

}  // namespace moorekit::pairing
