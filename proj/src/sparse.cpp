#include "moorekit/sparse.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "moorekit/error.hpp"
#include "moorekit/ring.hpp"

namespace moorekit::sparse {

namespace {

std::uint64_t degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

void check_vars(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) {
    fail(ErrorCode::VarMismatch,
         "operands have " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const std::uint64_t da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

std::size_t term_budget() {
  if (const char* env = std::getenv("MOOREKIT_TERM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultTermBudget;
}

SparsePoly SparsePoly::constant(FieldPtr F, std::size_t nvars, GfElement c) {
  SparsePoly out(std::move(F), nvars);
  out.add_term(Exponents(nvars, 0), c);
  return out;
}

SparsePoly SparsePoly::variable(FieldPtr F, std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorCode::VarMismatch, "variable index out of range");
  SparsePoly out(F, nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  out.add_term(e, F->one());
  return out;
}

long SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(degree_of(terms_.begin()->first));
}

void SparsePoly::add_term(const Exponents& e, GfElement c) {
  if (e.size() != nvars_) fail(ErrorCode::VarMismatch, "exponent tuple has the wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = F_->add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
  check_vars(a, b);
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

SparsePoly neg(const SparsePoly& a) {
  SparsePoly out(a.field(), a.nvars());
  for (const auto& [e, c] : a.terms()) out.add_term(e, a.field()->neg(c));
  return out;
}

SparsePoly sub(const SparsePoly& a, const SparsePoly& b) { return add(a, neg(b)); }

SparsePoly scale(GfElement c, const SparsePoly& a) {
  SparsePoly out(a.field(), a.nvars());
  if (c.is_zero()) return out;
  for (const auto& [e, x] : a.terms()) out.add_term(e, a.field()->mul(c, x));
  return out;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  check_vars(a, b);
  SparsePoly out(a.field(), a.nvars());
  const std::size_t budget = term_budget();
  const auto& F = *a.field();
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, F.mul(ca, cb));
    }
    if (out.size() > budget) {
      fail(ErrorCode::BudgetExceeded, "product exceeds the term budget of " + std::to_string(budget));
    }
  }
  return out;
}

SparsePoly pow(const SparsePoly& a, std::uint64_t e) {
  return ring::power(SparseRing{a.field(), a.nvars()}, a, e);
}

SparsePoly frobenius(const SparsePoly& a, std::uint64_t k) {
  const auto& F = *a.field();
  std::uint64_t factor = 1;
  for (std::uint64_t i = 0; i < k; ++i) factor *= F.q();
  SparsePoly out(a.field(), a.nvars());
  for (const auto& [e, c] : a.terms()) {
    Exponents scaled(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::uint64_t v = std::uint64_t{e[i]} * factor;
      if (v > UINT32_MAX) fail(ErrorCode::BudgetExceeded, "exponent overflow in Frobenius");
      scaled[i] = static_cast<std::uint32_t>(v);
    }
    out.add_term(scaled, F.frobenius_q(c, k));
  }
  return out;
}

SparsePoly substitute(const SparsePoly& a, std::size_t index, const SparsePoly& value) {
  check_vars(a, value);
  if (index >= a.nvars()) fail(ErrorCode::VarMismatch, "variable index out of range");
  SparsePoly out(a.field(), a.nvars());
  std::map<std::uint32_t, SparsePoly> powers;
  for (const auto& [e, c] : a.terms()) {
    Exponents rest = e;
    const std::uint32_t k = rest[index];
    rest[index] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, pow(value, k)).first;
    SparsePoly mono(a.field(), a.nvars());
    mono.add_term(rest, c);
    out = add(out, mul(mono, it->second));
  }
  return out;
}

GfElement evaluate(const SparsePoly& a, const gf::Embedding& embed, const std::vector<GfElement>& point) {
  if (point.size() != a.nvars()) fail(ErrorCode::VarMismatch, "point has the wrong number of coordinates");
  const auto& K = *embed.target();
  GfElement total = K.zero();
  for (const auto& [e, c] : a.terms()) {
    GfElement term = embed(c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i]) term = K.mul(term, K.pow(point[i], e[i]));
    }
    total = K.add(total, term);
  }
  return total;
}

std::string format(const SparsePoly& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  const auto& F = *a.field();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool constant_term = degree_of(e) == 0;
    const bool unit = c == F.one();
    if (!unit || constant_term) os << F.pretty(c);
    bool need_star = !unit || constant_term;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

SparsePoly sym_moore_det(const FieldPtr& F, std::size_t nvars, const std::vector<std::size_t>& var_indices) {
  if (var_indices.empty()) return SparsePoly::constant(F, nvars, F->one());
  const SparseRing r{F, nvars};
  std::vector<SparsePoly> vars;
  for (const std::size_t i : var_indices) vars.push_back(SparsePoly::variable(F, nvars, i));
  const std::size_t n = vars.size();
  const auto m = ring::moore_matrix(r, std::span<const SparsePoly>(vars), n);
  const SparsePoly by_rows = ring::det_laplace(r, m);
  const SparsePoly by_product = ring::moore_det_product(r, std::span<const SparsePoly>(vars));
  if (!(by_rows == by_product)) fail(ErrorCode::InternalMismatch, "symbolic Moore determinant algorithms disagree");
  if (n <= 4 && !(ring::det_leibniz(r, m) == by_rows)) {
    fail(ErrorCode::InternalMismatch, "Leibniz expansion disagrees with the Moore product");
  }
  return by_rows;
}

}  // namespace moorekit::sparse
