#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "moorekit/gf.hpp"

// Dense univariate polynomials over a Field, coefficients from the constant
// term up. Every function returns trimmed results (no trailing zeros); the
// zero polynomial is the empty vector.
namespace moorekit::upoly {

using gf::Field;
using gf::GfElement;
using Poly = std::vector<GfElement>;

void trim(Poly& a);
Poly trimmed(Poly a);
/// -1 for the zero polynomial.
long degree(const Poly& a);
GfElement lead(const Poly& a);
Poly constant(const Field& F, GfElement c);
Poly monomial(const Field& F, GfElement c, std::uint64_t e);
/// X - a.
Poly linear(const Field& F, GfElement a);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, GfElement c, const Poly& a);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Field& F, Poly a, Poly b);
Poly monic(const Field& F, const Poly& a);
Poly derivative(const Field& F, const Poly& a);
GfElement eval(const Field& F, const Poly& a, GfElement x);
/// a^{q^k}: coefficients through frobenius_q, exponents multiplied by q^k.
Poly frobenius(const Field& F, const Poly& a, std::uint64_t k);
Poly pow(const Field& F, const Poly& a, std::uint64_t e);
Poly powmod(const Field& F, const Poly& a, std::uint64_t e, const Poly& m);
/// a(b(X)) reduced modulo m (m may be empty for no reduction).
Poly compose_mod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
/// Product of (X - r) over the roots.
Poly from_roots(const Field& F, const std::vector<GfElement>& roots);

}  // namespace moorekit::upoly
