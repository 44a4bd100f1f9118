#ifndef MGDIAG_EXACTALG_POLYNOMIAL_HPP
#define MGDIAG_EXACTALG_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mgdiag/exactalg/prime_field.hpp"

namespace mgdiag::exactalg {

/// Ring K[x_1..x_m, y_1..y_n] over K = F_p, with deg x_i = (1,0) and
/// deg y_j = (0,1). Variable index i < m is x_{i+1}, otherwise y_{i-m+1}.
class RingContext {
 public:
  RingContext(int x_count, int y_count, std::uint32_t p);

  int x_count() const noexcept { return x_count_; }
  int y_count() const noexcept { return y_count_; }
  int variable_count() const noexcept { return x_count_ + y_count_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }

  std::string variable_name(int index) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  int x_count_;
  int y_count_;
  PrimeField field_;
};

/// Exponent vector, x-block then y-block.
class Monomial {
 public:
  Monomial() = default;
  /// Throws PreconditionError on a negative exponent.
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int variable_count);
  static Monomial variable(int variable_count, int index, int power = 1);

  int size() const noexcept { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept { return degree_; }
  /// (sum of the first x_count exponents, sum of the rest)
  std::pair<int, int> bidegree(int x_count) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / divisor; the divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class OrderKind { grevlex, lex };

/// Admissible monomial order with variable precedence x1 > ... > xm > y1 > ... > yn.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static constexpr MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static constexpr MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }

  OrderKind kind() const noexcept { return kind_; }
  /// <0, 0, >0 as a is smaller than, equal to, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::grevlex;
};

struct Term {
  Monomial monomial;
  Coeff coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are nonzero, distinct and kept in
/// descending grevlex order, so equal polynomials have equal term lists.
class MultiPoly {
 public:
  explicit MultiPoly(RingContext context);

  static MultiPoly constant(const RingContext& context, std::int64_t value);
  static MultiPoly variable(const RingContext& context, int index);
  static MultiPoly monomial(const RingContext& context, Monomial m, Coeff coeff = 1);
  /// Combines like terms and drops zeros; coefficients are reduced mod p.
  static MultiPoly from_terms(const RingContext& context, std::vector<Term> terms);

  const RingContext& context() const noexcept { return ctx_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(const Monomial& m) const;

  /// Total degree when every term has the same total degree.
  std::optional<int> homogeneous_degree() const;
  /// Bidegree when every term has the same bidegree.
  std::optional<std::pair<int, int>> bidegree() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly scaled(Coeff c) const;
  MultiPoly times(const Monomial& m, Coeff c = 1) const;
  MultiPoly pow(unsigned exponent) const;

  /// Terms in descending grevlex order, coefficients in (-p/2, p/2],
  /// e.g. "x1^2 + x2*x3" or "-x2^3*x3^3".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  MultiPoly(RingContext context, std::vector<Term> sorted_terms);
  void require_same_context(const MultiPoly& other) const;

  RingContext ctx_;
  std::vector<Term> terms_;
};

/// Throws ContextError unless every polynomial lives in the same ring.
void require_common_context(std::span<const MultiPoly> polys);

/// Every monomial of total degree `degree` in `variable_count` variables,
/// in descending lex order.
std::vector<Monomial> monomials_of_degree(int variable_count, int degree);
/// Every monomial of bidegree (a, b) in x_count + y_count variables.
std::vector<Monomial> monomials_of_bidegree(int x_count, int y_count, int a, int b);

}  // namespace mgdiag::exactalg

template <>
struct std::hash<mgdiag::exactalg::Monomial> {
  std::size_t operator()(const mgdiag::exactalg::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};

#endif  // MGDIAG_EXACTALG_POLYNOMIAL_HPP
