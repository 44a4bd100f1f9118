#ifndef MGDIAG_EXACTALG_SAMPLING_HPP
#define MGDIAG_EXACTALG_SAMPLING_HPP

#include <cstdint>

#include "mgdiag/exactalg/polynomial.hpp"

namespace mgdiag::exactalg {

/// Dense form of total degree `degree`: every monomial present with a
/// coefficient uniform in F_p^x. Deterministic per seed.
MultiPoly random_form(const RingContext& ctx, int degree, std::uint64_t seed);

/// Dense form of bidegree (d, e), coefficients uniform in F_p^x except that
/// x1^d*y1^e has coefficient 1. Deterministic per seed.
MultiPoly random_biform(const RingContext& ctx, int d, int e, std::uint64_t seed);

}  // namespace mgdiag::exactalg

#endif  // MGDIAG_EXACTALG_SAMPLING_HPP
