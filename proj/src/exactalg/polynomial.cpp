#include "mgdiag/exactalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mgdiag/errors.hpp"

namespace mgdiag::exactalg {

// ---------------------------------------------------------------- RingContext

RingContext::RingContext(int x_count, int y_count, std::uint32_t p)
    : x_count_(x_count), y_count_(y_count), field_(p) {
  if (x_count < 0 || y_count < 0 || x_count + y_count == 0) {
    throw PreconditionError("ring needs a nonnegative block split with at least one variable");
  }
}

std::string RingContext::variable_name(int index) const {
  if (index < 0 || index >= variable_count()) {
    throw PreconditionError("variable index " + std::to_string(index) + " out of range");
  }
  return index < x_count_ ? "x" + std::to_string(index + 1)
                          : "y" + std::to_string(index - x_count_ + 1);
}

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::one(int variable_count) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(variable_count), 0));
}

Monomial Monomial::variable(int variable_count, int index, int power) {
  std::vector<int> e(static_cast<std::size_t>(variable_count), 0);
  e.at(static_cast<std::size_t>(index)) = power;
  return Monomial(std::move(e));
}

std::pair<int, int> Monomial::bidegree(int x_count) const {
  int a = std::accumulate(exps_.begin(), exps_.begin() + x_count, 0);
  return {a, degree_ - a};
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

// ------------------------------------------------------------- MonomialOrder

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  if (kind_ == OrderKind::lex) {
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
  }
  return 0;
}

// ----------------------------------------------------------------- MultiPoly

namespace {

constexpr MonomialOrder kCanonical = MonomialOrder::grevlex();

bool term_before(const Term& a, const Term& b) { return kCanonical.greater(a.monomial, b.monomial); }

// a + c*b, both sorted canonically.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, Coeff c,
                            const PrimeField& F) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size()   ? -1
              : j == b.size() ? 1
                              : kCanonical.compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Coeff v = F.mul(c, b[j].coeff);
      if (v != 0) out.push_back({b[j].monomial, v});
      ++j;
    } else {
      Coeff v = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (v != 0) out.push_back({a[i].monomial, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(RingContext context) : ctx_(std::move(context)) {}

MultiPoly::MultiPoly(RingContext context, std::vector<Term> sorted_terms)
    : ctx_(std::move(context)), terms_(std::move(sorted_terms)) {}

MultiPoly MultiPoly::constant(const RingContext& context, std::int64_t value) {
  return monomial(context, Monomial::one(context.variable_count()), context.field().reduce(value));
}

MultiPoly MultiPoly::variable(const RingContext& context, int index) {
  if (index < 0 || index >= context.variable_count()) {
    throw PreconditionError("variable index out of range");
  }
  return monomial(context, Monomial::variable(context.variable_count(), index));
}

MultiPoly MultiPoly::monomial(const RingContext& context, Monomial m, Coeff coeff) {
  std::vector<Term> t;
  t.push_back({std::move(m), coeff});
  return from_terms(context, std::move(t));
}

MultiPoly MultiPoly::from_terms(const RingContext& context, std::vector<Term> terms) {
  const auto& F = context.field();
  std::unordered_map<Monomial, Coeff> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    if (t.monomial.size() != context.variable_count()) {
      throw ContextError("monomial length does not match the ring's variable count");
    }
    auto [it, fresh] = acc.try_emplace(t.monomial, 0);
    it->second = F.add(it->second, F.reduce(t.coeff));
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(), term_before);
  return MultiPoly(context, std::move(out));
}

Coeff MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return kCanonical.greater(t.monomial, key);
  });
  return it != terms_.end() && it->monomial == m ? it->coeff : 0;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = terms_.front().monomial.degree();
  for (const auto& t : terms_) {
    if (t.monomial.degree() != deg) return std::nullopt;
  }
  return deg;
}

std::optional<std::pair<int, int>> MultiPoly::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  auto bd = terms_.front().monomial.bidegree(ctx_.x_count());
  for (const auto& t : terms_) {
    if (t.monomial.bidegree(ctx_.x_count()) != bd) return std::nullopt;
  }
  return bd;
}

void MultiPoly::require_same_context(const MultiPoly& other) const {
  if (!(ctx_ == other.ctx_)) throw ContextError("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const { return scaled(ctx_.field().neg(1)); }

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  require_same_context(other);
  return MultiPoly(ctx_, merge_add(terms_, other.terms_, 1, ctx_.field()));
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  require_same_context(other);
  return MultiPoly(ctx_, merge_add(terms_, other.terms_, ctx_.field().neg(1), ctx_.field()));
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  require_same_context(other);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  const auto& F = ctx_.field();
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.monomial * b.monomial, F.mul(a.coeff, b.coeff)});
  }
  return from_terms(ctx_, std::move(prod));
}

MultiPoly MultiPoly::scaled(Coeff c) const {
  const auto& F = ctx_.field();
  c = F.reduce(c);
  if (c == 0) return MultiPoly(ctx_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return MultiPoly(ctx_, std::move(out));
}

MultiPoly MultiPoly::times(const Monomial& m, Coeff c) const {
  // Multiplying by a monomial preserves the relative order of terms.
  const auto& F = ctx_.field();
  c = F.reduce(c);
  if (c == 0) return MultiPoly(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, F.mul(t.coeff, c)});
  return MultiPoly(ctx_, std::move(out));
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(ctx_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = ctx_.field().symmetric(t.coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    bool constant_term = t.monomial.degree() == 0;
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << mag;
      need_star = true;
    }
    for (int i = 0; i < t.monomial.size(); ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << ctx_.variable_name(i);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

void require_common_context(std::span<const MultiPoly> polys) {
  for (const auto& p : polys) {
    if (!(p.context() == polys.front().context())) {
      throw ContextError("polynomials live in different rings");
    }
  }
}

// ------------------------------------------------------ monomial enumeration

namespace {

void compositions(int vars, int degree, std::vector<int>& cur, int pos, std::vector<Monomial>& out) {
  if (pos == vars - 1) {
    cur[static_cast<std::size_t>(pos)] = degree;
    out.emplace_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    compositions(vars, degree - e, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int variable_count, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || variable_count < 0) return out;
  if (variable_count == 0) {
    if (degree == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(variable_count), 0);
  compositions(variable_count, degree, cur, 0, out);
  return out;
}

std::vector<Monomial> monomials_of_bidegree(int x_count, int y_count, int a, int b) {
  std::vector<Monomial> out;
  auto xs = monomials_of_degree(x_count, a);
  auto ys = monomials_of_degree(y_count, b);
  out.reserve(xs.size() * ys.size());
  for (const auto& mx : xs) {
    for (const auto& my : ys) {
      std::vector<int> e = mx.exponents();
      e.insert(e.end(), my.exponents().begin(), my.exponents().end());
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

}  // namespace mgdiag::exactalg
