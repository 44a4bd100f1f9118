#include "mgdiag/exactalg/prime_field.hpp"

#include <string>

#include "mgdiag/errors.hpp"

namespace mgdiag::exactalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
}

Coeff PrimeField::pow(Coeff base, std::uint64_t exponent) const noexcept {
  Coeff result = 1 % p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw PreconditionError("zero has no inverse");
  return pow(a, p_ - 2);
}

}  // namespace mgdiag::exactalg
