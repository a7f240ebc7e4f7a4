#include "moorekit/gf.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "moorekit/error.hpp"

namespace moorekit::gf {

namespace {

using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return fp_mod(std::move(r), f, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint32_t p) {
  FpPoly result{1};
  base = fp_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = fp_mulmod(result, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::uint64_t default_size_cap() {
  if (const char* env = std::getenv("MOOREKIT_FIELD_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return kDefaultSizeCap;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t f = 2; f <= q; ++f) {
    if (q % f != 0) continue;
    std::uint32_t s = 0;
    while (q % f == 0) {
      q /= f;
      ++s;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(f), s};
  }
  return std::nullopt;
}

bool is_irreducible_fp(std::span<const std::uint32_t> poly, std::uint32_t p) {
  FpPoly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // h_k = X^{p^k} mod f
  std::vector<FpPoly> h(d + 1);
  h[0] = fp_mod(FpPoly{0, 1}, f, p);
  for (std::size_t k = 1; k <= d; ++k) h[k] = fp_powmod(h[k - 1], p, f, p);
  if (h[d] != h[0]) return false;
  for (std::uint64_t r : prime_factors(d)) {
    FpPoly g = h[d / r];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    const FpPoly gg = fp_gcd(f, g, p);
    if (gg.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::uint64_t iv = inv_mod(at(r, c), p_);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = static_cast<std::uint32_t>(at(r, j) * iv % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint64_t factor = at(i, c);
      for (std::size_t j = 0; j < cols_; ++j) {
        at(i, j) = static_cast<std::uint32_t>((at(i, j) + (p_ - factor) * at(r, j)) % p_);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<std::uint32_t>> FpMatrix::nullspace() const {
  FpMatrix red = *this;
  const auto pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix basis(0, cols_, p_);
  std::vector<std::vector<std::uint32_t>> vecs;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = (p_ - red.at(i, free)) % p_;
    }
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return vecs;
  FpMatrix m(vecs.size(), cols_, p_);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = vecs[i][j];
  m.rref();
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) vecs[i][j] = m.at(i, j);
  return vecs;
}

std::optional<std::vector<std::uint32_t>> FpMatrix::solve(std::span<const std::uint32_t> b) const {
  FpMatrix aug(rows_, cols_ + 1, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i] % p_;
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<std::uint32_t> x(cols_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

// ---------------------------------------------------------------- Field

Field::Field(std::uint32_t p, std::uint32_t s, std::uint32_t d, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), d_(d), q_(ipow(p, s)), order_(ipow(p, d)), modulus_(std::move(modulus)) {
  pow_p_.resize(d_);
  std::uint32_t acc = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    pow_p_[i] = acc;
    acc *= p_;
  }
  build_tables();

  std::vector<GfElement> images(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    const GfElement e{pow_p_[i]};
    images[i] = sub(frobenius_q(e, 1), e);
  }
  q_basis_ = nullspace_fp(images);

  fq_elements_.push_back(zero());
  for (const GfElement b : q_basis_) {
    std::vector<GfElement> next;
    next.reserve(fq_elements_.size() * p_);
    for (const GfElement x : fq_elements_) {
      GfElement acc_elem = x;
      for (std::uint32_t c = 0; c < p_; ++c) {
        next.push_back(acc_elem);
        acc_elem = add(acc_elem, b);
      }
    }
    fq_elements_ = std::move(next);
  }
  std::sort(fq_elements_.begin(), fq_elements_.end());
}

GfElement Field::root() const noexcept { return d_ == 1 ? GfElement{0} : GfElement{p_}; }

GfElement Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

GfElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > d_) fail(ErrorCode::ParseError, "too many coordinates for F_" + std::to_string(order_));
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) code += (coeffs[i] % p_) * pow_p_[i];
  return {code};
}

std::vector<std::uint32_t> Field::coeffs(GfElement x) const {
  std::vector<std::uint32_t> out(d_);
  std::uint32_t c = x.code;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

GfElement Field::add(GfElement a, GfElement b) const noexcept {
  if (p_ == 2) return {a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0;
  for (std::uint32_t i = 0; i < d_ && (x | y); ++i) {
    std::uint32_t digit = x % p_ + y % p_;
    if (digit >= p_) digit -= p_;
    out += digit * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

GfElement Field::neg(GfElement a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t x = a.code, out = 0;
  for (std::uint32_t i = 0; i < d_ && x; ++i) {
    const std::uint32_t digit = x % p_;
    if (digit) out += (p_ - digit) * pow_p_[i];
    x /= p_;
  }
  return {out};
}

GfElement Field::sub(GfElement a, GfElement b) const noexcept { return add(a, neg(b)); }

GfElement Field::mul(GfElement a, GfElement b) const noexcept {
  if (a.code == 0 || b.code == 0) return {0};
  return {exp_[log_[a.code] + log_[b.code]]};
}

GfElement Field::inv(GfElement a) const {
  if (a.code == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint64_t n = order_ - 1;
  return {exp_[(n - log_[a.code]) % n]};
}

GfElement Field::div(GfElement a, GfElement b) const { return mul(a, inv(b)); }

GfElement Field::pow(GfElement a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t n = order_ - 1;
  return {exp_[(std::uint64_t{log_[a.code]} * (e % n)) % n]};
}

GfElement Field::pow_signed(GfElement a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

GfElement Field::frobenius_p(GfElement a) const noexcept {
  if (a.code == 0) return a;
  const std::uint64_t n = order_ - 1;
  return {exp_[(std::uint64_t{log_[a.code]} * p_) % n]};
}

GfElement Field::frobenius_q(GfElement a, std::uint64_t k) const noexcept {
  const std::uint64_t steps = (k % frobenius_order()) * s_;
  for (std::uint64_t i = 0; i < steps; ++i) a = frobenius_p(a);
  return a;
}

GfElement Field::inv_frobenius_q(GfElement a, std::uint64_t k) const noexcept {
  const std::uint64_t m = frobenius_order();
  return frobenius_q(a, (m - k % m) % m);
}

GfElement Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, order_ - 1);
  return {static_cast<std::uint32_t>(dist(rng))};
}

GfElement Field::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(1, order_ - 1);
  return {static_cast<std::uint32_t>(dist(rng))};
}

GfElement Field::mul_slow(GfElement a, GfElement b) const {
  const FpPoly r = fp_mulmod(coeffs(a), coeffs(b), modulus_, p_);
  return from_coeffs(r);
}

void Field::build_tables() {
  const std::uint64_t n = order_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](GfElement g, std::uint64_t e) {
    GfElement result = one(), base = g;
    while (e) {
      if (e & 1) result = mul_slow(result, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return result;
  };
  auto is_generator = [&](GfElement g) {
    if (g.code == 0) return false;
    for (std::uint64_t r : factors) {
      if (slow_pow(g, n / r) == one()) return false;
    }
    return true;
  };
  GfElement g = root();
  if (!is_generator(g)) {
    for (std::uint32_t c = 1; c < order_; ++c) {
      if (is_generator({c})) {
        g = {c};
        break;
      }
    }
  }
  exp_.assign(2 * n + 1, 0);
  log_.assign(order_, 0);
  // x -> x*g is F_p-linear: tabulate c * (w^j g) for every digit c and position j.
  std::vector<std::vector<GfElement>> step(d_, std::vector<GfElement>(p_));
  for (std::uint32_t j = 0; j < d_; ++j) {
    const GfElement basis_times_g = mul_slow({pow_p_[j]}, g);
    for (std::uint32_t c = 1; c < p_; ++c) step[j][c] = add(step[j][c - 1], basis_times_g);
  }
  GfElement x = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x.code;
    log_[x.code] = static_cast<std::uint32_t>(i);
    GfElement next = zero();
    std::uint32_t rest = x.code;
    for (std::uint32_t j = 0; rest != 0; ++j, rest /= p_) {
      const std::uint32_t digit = rest % p_;
      if (digit) next = add(next, step[j][digit]);
    }
    x = next;
  }
  for (std::uint64_t i = n; i < 2 * n + 1; ++i) exp_[i] = exp_[i - n];
}

std::string Field::format(GfElement x) const {
  std::ostringstream os;
  os << p_ << '^' << d_ << ":[";
  const auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

std::string Field::pretty(GfElement x) const {
  if (x.is_zero()) return "0";
  const auto c = coeffs(x);
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (!c[k]) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) out += std::to_string(c[k]) + "*";
    out += "w";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(const Field& F, std::string_view text) : F_(F), text_(text) {}

  GfElement parse() {
    skip_ws();
    if (text_.find(':') != std::string_view::npos) return parse_canonical();
    GfElement acc = F_.zero();
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      GfElement t = parse_term();
      acc = negative ? F_.sub(acc, t) : F_.add(acc, t);
      first = false;
    }
    if (first) error("empty element");
    return acc;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, msg + " in element '" + std::string(text_) + "'");
  }
  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) error("number too large");
      ++pos_;
    }
    if (pos_ == start) error("expected a number");
    return v;
  }
  GfElement parse_term() {
    skip_ws();
    GfElement coef = F_.one();
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = F_.from_int(static_cast<std::int64_t>(number() % F_.p()));
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return coef;
      }
    }
    if (peek() != 'w') {
      if (have_coef) error("expected 'w' after '*'");
      error("unexpected character");
    }
    ++pos_;
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      e = number();
    }
    return F_.mul(coef, F_.pow(F_.root(), e));
  }
  GfElement parse_canonical() {
    const std::uint64_t p = number();
    skip_ws();
    if (peek() != '^') error("expected '^'");
    ++pos_;
    const std::uint64_t d = number();
    if (p != F_.p() || d != F_.d()) {
      error("element belongs to F_" + std::to_string(p) + "^" + std::to_string(d));
    }
    skip_ws();
    if (peek() != ':') error("expected ':'");
    ++pos_;
    skip_ws();
    if (peek() != '[') error("expected '['");
    ++pos_;
    std::vector<std::uint32_t> c;
    skip_ws();
    if (peek() != ']') {
      while (true) {
        const std::uint64_t v = number();
        if (v >= F_.p()) error("coordinate out of range");
        c.push_back(static_cast<std::uint32_t>(v));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    if (peek() != ']') error("expected ']'");
    ++pos_;
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");
    if (c.size() > F_.d()) error("too many coordinates");
    return F_.from_coeffs(c);
  }

  const Field& F_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GfElement Field::parse(std::string_view text) const { return ElementParser(*this, text).parse(); }

std::vector<GfElement> Field::nullspace_fp(std::span<const GfElement> images) const {
  FpMatrix a(d_, images.size(), p_);
  for (std::size_t j = 0; j < images.size(); ++j) {
    const auto c = coeffs(images[j]);
    for (std::uint32_t i = 0; i < d_; ++i) a.at(i, j) = c[i];
  }
  std::vector<GfElement> out;
  for (const auto& v : a.nullspace()) {
    std::vector<std::uint32_t> c(v.begin(), v.end());
    c.resize(d_, 0);
    out.push_back(from_coeffs(std::span<const std::uint32_t>(c.data(), std::min<std::size_t>(c.size(), d_))));
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> Field::express_over_fp(std::span<const GfElement> vectors,
                                                                 GfElement x) const {
  FpMatrix a(d_, vectors.size(), p_);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const auto c = coeffs(vectors[j]);
    for (std::uint32_t i = 0; i < d_; ++i) a.at(i, j) = c[i];
  }
  const auto rhs = coeffs(x);
  return a.solve(rhs);
}

std::optional<std::vector<GfElement>> Field::express_over_fq(std::span<const GfElement> vectors,
                                                             GfElement x) const {
  std::vector<GfElement> expanded;
  expanded.reserve(vectors.size() * q_basis_.size());
  for (const GfElement v : vectors)
    for (const GfElement c : q_basis_) expanded.push_back(mul(c, v));
  const auto sol = express_over_fp(expanded, x);
  if (!sol) return std::nullopt;
  std::vector<GfElement> out(vectors.size(), zero());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t k = 0; k < q_basis_.size(); ++k) {
      const std::uint32_t c = (*sol)[i * q_basis_.size() + k];
      if (c) out[i] = add(out[i], mul(from_int(c), q_basis_[k]));
    }
  }
  return out;
}

std::size_t Field::rank_over_fp(std::span<const GfElement> vectors) const {
  FpMatrix a(d_, vectors.size(), p_);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const auto c = coeffs(vectors[j]);
    for (std::uint32_t i = 0; i < d_; ++i) a.at(i, j) = c[i];
  }
  return a.rank();
}

// ---------------------------------------------------------------- construction

FieldPtr build_field(std::uint32_t p, std::uint32_t s, std::uint32_t t, std::uint64_t size_cap) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
  if (s == 0 || t == 0) fail(ErrorCode::PreconditionError, "s and t must be positive");
  const std::uint64_t d = std::uint64_t{s} * t;
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    order *= p;
    if (order > size_cap || order > (std::uint64_t{1} << 31)) {
      fail(ErrorCode::DegreeCapExceeded, "p^d exceeds the field size cap " + std::to_string(size_cap));
    }
  }
  // Lexicographic order on (c0, c1, ..., c_{d-1}) with c0 most significant.
  std::vector<std::uint32_t> digits(d, 0);
  while (true) {
    std::vector<std::uint32_t> f(digits.begin(), digits.end());
    f.push_back(1);
    // a root in F_p rules out irreducibility cheaply (d > 1)
    bool has_root = false;
    for (std::uint32_t x = 0; d > 1 && x < std::min<std::uint32_t>(p, 64) && !has_root; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      has_root = v == 0;
    }
    if (!has_root && is_irreducible_fp(f, p)) {
      return std::make_shared<const Field>(p, s, static_cast<std::uint32_t>(d), std::move(f));
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++digits[k] < p) break;
      digits[k] = 0;
      if (k == 0) fail(ErrorCode::InternalMismatch, "no irreducible polynomial found");
    }
  }
}

FieldPtr cached_field(std::uint32_t p, std::uint32_t s, std::uint32_t t) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, s, t}];
  if (!slot) slot = build_field(p, s, t);
  return slot;
}

GfElement determinant(const Field& F, Matrix m) {
  const std::size_t n = m.size();
  GfElement det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    const GfElement iv = F.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const GfElement factor = F.mul(m[r][c], iv);
      for (std::size_t j = c; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(factor, m[c][j]));
    }
  }
  return det;
}

std::size_t rank(const Field& F, Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const GfElement iv = F.inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const GfElement factor = F.mul(m[i][c], iv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->p() != big_->p() || big_->d() % small_->d() != 0) {
    fail(ErrorCode::PreconditionError, "no embedding between the given fields");
  }
  const auto& f = small_->modulus();
  std::optional<GfElement> image;
  for (std::uint32_t c = 0; c < big_->order() && !image; ++c) {
    GfElement acc = big_->zero();
    for (std::size_t k = f.size(); k-- > 0;) {
      acc = big_->add(big_->mul(acc, GfElement{c}), big_->from_int(f[k]));
    }
    if (acc.is_zero()) image = GfElement{c};
  }
  if (!image) fail(ErrorCode::InternalMismatch, "modulus has no root in the target field");
  root_powers_.resize(small_->d());
  GfElement acc = big_->one();
  for (auto& rp : root_powers_) {
    rp = acc;
    acc = big_->mul(acc, *image);
  }
}

GfElement Embedding::operator()(GfElement x) const {
  const auto c = small_->coeffs(x);
  GfElement out = big_->zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) out = big_->add(out, big_->mul(big_->from_int(c[i]), root_powers_[i]));
  }
  return out;
}

}  // namespace moorekit::gf
