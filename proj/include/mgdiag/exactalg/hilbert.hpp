#ifndef MGDIAG_EXACTALG_HILBERT_HPP
#define MGDIAG_EXACTALG_HILBERT_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mgdiag/exactalg/polynomial.hpp"

namespace mgdiag::exactalg {

struct TotalDegree {
  int degree;
};

struct Bidegree {
  int x_degree;
  int y_degree;
};

using DegreeSelector = std::variant<TotalDegree, Bidegree>;

/// Standard-monomial counting refuses degrees with more ambient monomials.
inline constexpr std::uint64_t kAmbientMonomialCap = 10'000'000;

/// Number of monomials of the ring at the selected degree; saturates at
/// UINT64_MAX.
std::uint64_t ambient_monomial_count(const RingContext& ctx, DegreeSelector selector);

/// Monomials of the selected (bi)degree not divisible by any leading
/// monomial of gb, i.e. dim_K of that graded piece of the quotient.
///
/// Throws PreconditionError if some element of gb is not homogeneous for the
/// selector, and ResourceLimitError beyond kAmbientMonomialCap.
std::uint64_t standard_monomial_count(const RingContext& ctx, std::span<const MultiPoly> gb,
                                      MonomialOrder order, DegreeSelector selector);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of K[x]/(monomials),
/// n = variable count; coefficient i of the result is that of t^i.
std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> generators, int variable_count);

/// Hilbert series numerator of the quotient by the ideal whose Groebner
/// basis is gb (standard grading).
std::vector<std::int64_t> hilbert_numerator(const RingContext& ctx, std::span<const MultiPoly> gb,
                                            MonomialOrder order = {});

/// Coefficients of (1-t^k)^s / (1-t)^m through t^max_degree: the Hilbert
/// function of a complete intersection of s forms of degree k in m variables.
std::vector<std::int64_t> complete_intersection_hilbert(int m, int k, int s, int max_degree);

}  // namespace mgdiag::exactalg

#endif  // MGDIAG_EXACTALG_HILBERT_HPP
