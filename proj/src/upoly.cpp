#include "moorekit/upoly.hpp"

#include "moorekit/error.hpp"

namespace moorekit::upoly {

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly trimmed(Poly a) {
  trim(a);
  return a;
}

long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

GfElement lead(const Poly& a) { return a.empty() ? GfElement{} : a.back(); }

Poly constant(const Field& F, GfElement c) {
  (void)F;
  return c.is_zero() ? Poly{} : Poly{c};
}

Poly monomial(const Field& F, GfElement c, std::uint64_t e) {
  if (c.is_zero()) return {};
  Poly out(e + 1, F.zero());
  out[e] = c;
  return out;
}

Poly linear(const Field& F, GfElement a) { return {F.neg(a), F.one()}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
  trim(out);
  return out;
}

Poly neg(const Field& F, const Poly& a) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.neg(a[i]);
  return out;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly scale(const Field& F, GfElement c, const Poly& a) {
  if (c.is_zero()) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
  return out;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  Poly bb = trimmed(b);
  if (bb.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly r = trimmed(a);
  if (r.size() < bb.size()) return {Poly{}, r};
  Poly quot(r.size() - bb.size() + 1, F.zero());
  const GfElement lead_inv = F.inv(bb.back());
  while (r.size() >= bb.size()) {
    const std::size_t shift = r.size() - bb.size();
    const GfElement c = F.mul(r.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, bb[i]));
    trim(r);
  }
  trim(quot);
  return {quot, r};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
  Poly t = trimmed(a);
  if (t.empty()) return t;
  return scale(F, F.inv(t.back()), t);
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), a[i]);
  trim(out);
  return out;
}

GfElement eval(const Field& F, const Poly& a, GfElement x) {
  GfElement acc = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

Poly frobenius(const Field& F, const Poly& a, std::uint64_t k) {
  if (a.empty()) return {};
  std::uint64_t qk = 1;
  for (std::uint64_t i = 0; i < k; ++i) qk *= F.q();
  Poly out((a.size() - 1) * qk + 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i * qk] = F.frobenius_q(a[i], k);
  return out;
}

Poly pow(const Field& F, const Poly& a, std::uint64_t e) {
  Poly result{F.one()};
  Poly base = a;
  while (e) {
    if (e & 1) result = mul(F, result, base);
    e >>= 1;
    if (e) base = mul(F, base, base);
  }
  return result;
}

Poly powmod(const Field& F, const Poly& a, std::uint64_t e, const Poly& m) {
  Poly result = mod(F, Poly{F.one()}, m);
  Poly base = mod(F, a, m);
  while (e) {
    if (e & 1) result = mod(F, mul(F, result, base), m);
    e >>= 1;
    if (e) base = mod(F, mul(F, base, base), m);
  }
  return result;
}

Poly compose_mod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  Poly acc;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = add(F, mul(F, acc, b), constant(F, a[i]));
    if (!m.empty()) acc = mod(F, acc, m);
  }
  return acc;
}

Poly from_roots(const Field& F, const std::vector<GfElement>& roots) {
  Poly out{F.one()};
  for (const GfElement r : roots) out = mul(F, out, linear(F, r));
  return out;
}

}  // namespace moorekit::upoly
