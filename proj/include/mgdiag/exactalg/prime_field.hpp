#ifndef MGDIAG_EXACTALG_PRIME_FIELD_HPP
#define MGDIAG_EXACTALG_PRIME_FIELD_HPP

#include <cstdint>

namespace mgdiag::exactalg {

/// Canonical representative of an element of F_p, always in [0, p).
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p for a word-sized prime 2 <= p < 2^31.
class PrimeField {
 public:
  /// Throws PreconditionError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Coeff reduce(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff base, std::uint64_t exponent) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  Coeff inv(Coeff a) const;

  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace mgdiag::exactalg

#endif  // MGDIAG_EXACTALG_PRIME_FIELD_HPP
