#pragma once

#include <span>
#include <vector>

#include "moorekit/gf.hpp"

namespace moorekit::moore {

using gf::Field;
using gf::GfElement;
using gf::Matrix;

/// entries[i][j] = a_j^{q^i}, i < rows.
Matrix moore_matrix(const Field& F, std::span<const GfElement> a, std::size_t rows);

/// Moore determinant by Gaussian elimination. The empty tuple has determinant 1.
GfElement moore_det(const Field& F, std::span<const GfElement> a);

/// Moore determinant as a product of linear forms over F_q.
GfElement moore_det_product(const Field& F, std::span<const GfElement> a);

/// Unsigned: (Delta_{n-1}(a with a_i removed))_i. Signed: the same times
/// (-1)^{i-1} (1-based i), i.e. the cofactors of the first row of the Moore
/// matrix. Both (-1)^{i-1} and (-1)^{i+1} describe the same sign pattern.
std::vector<GfElement> cofactor_row(const Field& F, std::span<const GfElement> a, bool signed_minors);

bool is_fq_independent(const Field& F, std::span<const GfElement> a);

/// det of the n x n matrix made of rows 0..n of the (n+1) x n Moore matrix
/// of a, with row `omit` left out.
GfElement bordered_minor(const Field& F, std::span<const GfElement> a, std::size_t omit);

/// a with the element at index i removed.
std::vector<GfElement> omit(std::span<const GfElement> a, std::size_t i);

}  // namespace moorekit::moore
