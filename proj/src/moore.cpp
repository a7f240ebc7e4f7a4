#include "moorekit/moore.hpp"

#include "moorekit/error.hpp"
#include "moorekit/ring.hpp"

namespace moorekit::moore {

Matrix moore_matrix(const Field& F, std::span<const GfElement> a, std::size_t rows) {
  if (a.empty()) fail(ErrorCode::EmptyTuple, "Moore matrix of an empty tuple");
  if (rows == 0) fail(ErrorCode::PreconditionError, "Moore matrix needs at least one row");
  return ring::moore_matrix(ring::FieldRing{F}, a, rows);
}

GfElement moore_det(const Field& F, std::span<const GfElement> a) {
  if (a.empty()) return F.one();
  return gf::determinant(F, ring::moore_matrix(ring::FieldRing{F}, a, a.size()));
}

GfElement moore_det_product(const Field& F, std::span<const GfElement> a) {
  return ring::moore_det_product(ring::FieldRing{F}, a);
}

std::vector<GfElement> omit(std::span<const GfElement> a, std::size_t i) {
  std::vector<GfElement> out;
  out.reserve(a.empty() ? 0 : a.size() - 1);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != i) out.push_back(a[k]);
  return out;
}

std::vector<GfElement> cofactor_row(const Field& F, std::span<const GfElement> a, bool signed_minors) {
  if (a.size() < 2) fail(ErrorCode::TupleTooShort, "cofactors need at least two elements");
  std::vector<GfElement> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto rest = omit(a, i);
    GfElement c = moore_det(F, rest);
    if (signed_minors && i % 2 == 1) c = F.neg(c);
    out.push_back(c);
  }
  return out;
}

bool is_fq_independent(const Field& F, std::span<const GfElement> a) { return !moore_det(F, a).is_zero(); }

GfElement bordered_minor(const Field& F, std::span<const GfElement> a, std::size_t omit_row) {
  const std::size_t n = a.size();
  Matrix full = ring::moore_matrix(ring::FieldRing{F}, a, n + 1);
  full.erase(full.begin() + static_cast<std::ptrdiff_t>(omit_row));
  return gf::determinant(F, std::move(full));
}

}  // namespace moorekit::moore
