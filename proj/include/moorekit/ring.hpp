#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "moorekit/gf.hpp"
#include "moorekit/upoly.hpp"

// Division-free matrix algorithms over any commutative ring that carries the
// q-power Frobenius. A ring adaptor provides:
//   value_type, zero(), one(), add, sub, neg, mul, is_zero, frob (x -> x^q),
//   scale(c, x) for c in F_q, and fq_scalars() listing F_q.
namespace moorekit::ring {

template <class T>
using RMatrix = std::vector<std::vector<T>>;

/// The field itself.
struct FieldRing {
  using value_type = gf::GfElement;
  const gf::Field& F;

  value_type zero() const { return F.zero(); }
  value_type one() const { return F.one(); }
  value_type add(value_type a, value_type b) const { return F.add(a, b); }
  value_type sub(value_type a, value_type b) const { return F.sub(a, b); }
  value_type neg(value_type a) const { return F.neg(a); }
  value_type mul(value_type a, value_type b) const { return F.mul(a, b); }
  bool is_zero(value_type a) const { return a.is_zero(); }
  value_type frob(value_type a) const { return F.frobenius_q(a, 1); }
  value_type scale(gf::GfElement c, value_type a) const { return F.mul(c, a); }
  const std::vector<gf::GfElement>& fq_scalars() const { return F.fq_elements(); }
};

/// K[X] with the q-power map acting on coefficients and exponents.
struct PolyRing {
  using value_type = upoly::Poly;
  const gf::Field& F;

  value_type zero() const { return {}; }
  value_type one() const { return {F.one()}; }
  value_type add(const value_type& a, const value_type& b) const { return upoly::add(F, a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return upoly::sub(F, a, b); }
  value_type neg(const value_type& a) const { return upoly::neg(F, a); }
  value_type mul(const value_type& a, const value_type& b) const { return upoly::mul(F, a, b); }
  bool is_zero(const value_type& a) const { return a.empty(); }
  value_type frob(const value_type& a) const { return upoly::frobenius(F, a, 1); }
  value_type scale(gf::GfElement c, const value_type& a) const { return upoly::scale(F, c, a); }
  const std::vector<gf::GfElement>& fq_scalars() const { return F.fq_elements(); }
};

/// entries[i][j] = a_j^{q^i}.
template <class R>
RMatrix<typename R::value_type> moore_matrix(const R& r, std::span<const typename R::value_type> a,
                                             std::size_t rows) {
  RMatrix<typename R::value_type> m(rows);
  if (rows == 0) return m;
  m[0].assign(a.begin(), a.end());
  for (std::size_t i = 1; i < rows; ++i) {
    m[i].reserve(a.size());
    for (const auto& x : m[i - 1]) m[i].push_back(r.frob(x));
  }
  return m;
}

/// Determinant by row-by-row Laplace expansion over column subsets,
/// O(2^n n) ring operations and no division.
template <class R>
typename R::value_type det_laplace(const R& r, const RMatrix<typename R::value_type>& m) {
  using T = typename R::value_type;
  const std::size_t n = m.size();
  if (n == 0) return r.one();
  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S.
  std::vector<T> minors(std::size_t{1} << n, r.zero());
  std::vector<bool> present(std::size_t{1} << n, false);
  minors[0] = r.one();
  present[0] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != k || !present[s] || r.is_zero(minors[s])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (s & (1u << j)) continue;
        if (r.is_zero(m[k][j])) continue;
        const std::uint32_t t = s | (1u << j);
        // position of column j inside t, counted from the left
        const int pos = std::popcount(s & ((1u << j) - 1));
        T term = r.mul(m[k][j], minors[s]);
        if ((k + static_cast<std::size_t>(pos)) % 2 == 1) term = r.neg(term);
        minors[t] = present[t] ? r.add(minors[t], term) : term;
        present[t] = true;
      }
    }
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  return present[full] ? minors[full] : r.zero();
}

/// Determinant by the Leibniz sum over permutations; meant for small n.
template <class R>
typename R::value_type det_leibniz(const R& r, const RMatrix<typename R::value_type>& m) {
  using T = typename R::value_type;
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  T total = r.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T prod = r.one();
    for (std::size_t i = 0; i < n && !r.is_zero(prod); ++i) prod = r.mul(prod, m[i][perm[i]]);
    total = (inversions % 2) ? r.sub(total, prod) : r.add(total, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Moore determinant as the product over i of the linear forms
/// a_i + e_{i-1} a_{i-1} + ... + e_1 a_1, e ranging over F_q^{i-1}.
template <class R>
typename R::value_type moore_det_product(const R& r, std::span<const typename R::value_type> a) {
  using T = typename R::value_type;
  const auto& scalars = r.fq_scalars();
  T result = r.one();
  std::vector<T> prefix_combos{r.zero()};  // all F_q-combinations of a_1..a_{i-1}
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const T& c : prefix_combos) {
      result = r.mul(result, r.add(a[i], c));
      if (r.is_zero(result)) return result;
    }
    if (i + 1 == a.size()) break;
    std::vector<T> next;
    next.reserve(prefix_combos.size() * scalars.size());
    for (const T& c : prefix_combos) {
      for (const gf::GfElement e : scalars) next.push_back(r.add(c, r.scale(e, a[i])));
    }
    prefix_combos = std::move(next);
  }
  return result;
}

template <class R>
RMatrix<typename R::value_type> mat_mul(const R& r, const RMatrix<typename R::value_type>& a,
                                        const RMatrix<typename R::value_type>& b) {
  using T = typename R::value_type;
  const std::size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
  RMatrix<T> out(rows, std::vector<T>(cols, r.zero()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (r.is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = r.add(out[i][j], r.mul(a[i][k], b[k][j]));
    }
  return out;
}

template <class T>
RMatrix<T> transpose(const RMatrix<T>& a) {
  if (a.empty()) return {};
  RMatrix<T> out(a[0].size());
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    out[j].reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[j].push_back(a[i][j]);
  }
  return out;
}

/// x^e by square-and-multiply.
template <class R>
typename R::value_type power(const R& r, typename R::value_type x, std::uint64_t e) {
  typename R::value_type result = r.one();
  while (e) {
    if (e & 1) result = r.mul(result, x);
    e >>= 1;
    if (e) x = r.mul(x, x);
  }
  return result;
}

}  // namespace moorekit::ring
