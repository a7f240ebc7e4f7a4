#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moorekit/gf.hpp"
#include "moorekit/report.hpp"

// Verification harness for the generic Moore-determinant identities, in exact
// symbolic mode (sparse polynomials over F_q) or by randomized specialization
// at points of an extension F_{q^t}.
namespace moorekit::symid {

using gf::Field;
using gf::FieldPtr;
using gf::GfElement;
using report::VerificationReport;

enum class Mode { Exact, Randomized };

inline constexpr std::uint64_t kDefaultSeed = 42;

struct CampaignOptions {
  int n = 2;
  int m = 0;
  std::uint64_t q = 2;
  Mode mode = Mode::Randomized;
  std::uint64_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
};

/// 1 + q + ... + q^{k-1}; zero for k = 0.
std::uint64_t moore_sum(std::uint64_t q, std::uint64_t k);

/// Extension F_{q^t} for randomized checks of an identity of total degree at
/// most `degree`, where samples on a hypersurface of degree `resample_degree`
/// are rejected. t is minimal with q^t > 4 (degree + resample_degree), so the
/// per-trial false-pass probability degree / (q^t - resample_degree) is below 1/4.
struct Extension {
  FieldPtr K;
  std::uint32_t t = 0;
  std::uint64_t degree = 0;
  double false_pass_bound = 0;
};
Extension choose_extension(std::uint32_t p, std::uint32_t s, std::uint64_t degree, std::uint64_t resample_degree);

/// phi(a) = (Delta_{n-1}(a without a_i))_i.
std::vector<GfElement> phi(const Field& F, std::span<const GfElement> a);

/// Delta_n of the signed cofactors of (Y, X) against Delta_m(X)^{q^{n-1}}
/// Delta_{n+m}^{1+...+q^{n-2}}, plus the unsigned variant with sign
/// (-1)^{floor(n/2)} in cross-multiplied form.
VerificationReport verify_thm1(const CampaignOptions& o);
/// Moore matrix of the signed cofactors times the transposed Moore matrix.
VerificationReport verify_cofactor_matrix(const CampaignOptions& o);
/// Block matrix form of the general (n, m) case and its determinant chain.
VerificationReport verify_thm2(const CampaignOptions& o);
/// Determinant and coefficient formulas for the subspace polynomial of the
/// minors (randomized only).
VerificationReport verify_ore_coeff_formulas(const CampaignOptions& o);
/// Closed form of phi o phi, the fiber law and the omitted-cofactor identity
/// (randomized only).
VerificationReport verify_phi_map(const CampaignOptions& o);

}  // namespace moorekit::symid
