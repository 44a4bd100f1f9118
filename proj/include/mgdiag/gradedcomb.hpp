#ifndef MGDIAG_GRADEDCOMB_HPP
#define MGDIAG_GRADEDCOMB_HPP

// Graded dimensions for polynomial rings A = K[x_1..x_m], B = K[y_1..y_n]
// and the diagonal pieces of the shifted Segre products
//
//   T(i,j)_Delta = (+)_k  A_{i+gk} (x) B_{j+hk},   Delta = (g,h)Z,
//
// together with their local cohomology via the Kunneth formula. Only H^m of
// A and H^n of B are nonzero, so H^q of T(i,j)_Delta has at most three
// summands: q = n, q = m and q = m+n-1.
//
// Local cohomology dimensions use the graded-dual convention
// dim H^m(A)_k = dim A_{-k-m}.

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace mgdiag::gradedcomb {

using BigInt = boost::multiprecision::cpp_int;

/// The diagonal Delta = (g,h)Z; g and h need not be coprime.
struct DiagonalSpec {
  std::int64_t g = 1;
  std::int64_t h = 1;

  /// Throws PreconditionError unless g, h >= 1.
  void validate() const;

  friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;
};

/// Variable counts (m, n) and the shift (i, j) of T(i,j).
struct PieceShape {
  int m = 1;
  int n = 1;
  std::int64_t i = 0;
  std::int64_t j = 0;
};

/// Closed integer interval of diagonal indices. Empty when lo > hi, unless
/// `unbounded_below` is set, in which case lo is meaningless.
struct Window {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  bool unbounded_below = false;

  static Window empty_window() { return {}; }

  bool empty() const noexcept { return !unbounded_below && lo > hi; }
  bool contains(std::int64_t k) const noexcept { return k <= hi && (unbounded_below || k >= lo); }

  friend bool operator==(const Window&, const Window&) = default;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// C(n, r), zero outside 0 <= r <= n.
BigInt binomial(std::int64_t n, std::int64_t r);

/// dim_K A_k for A a polynomial ring in m variables.
BigInt dim_poly(int m, std::int64_t k);

/// dim_K H^m(A)_k = dim A_{-k-m}; nonzero exactly when k <= -m.
BigInt dim_top_lc(int m, std::int64_t k);

/// dim_K of the k-th piece of T(i,j)_Delta.
BigInt dim_T_diag(const PieceShape& shape, const DiagonalSpec& diag, std::int64_t k);

/// dim_K H^q(T(i,j)_Delta)_k by the Kunneth formula. When m = n the q = n
/// and q = m summands both contribute.
BigInt dim_lc_T_diag(int q, const PieceShape& shape, const DiagonalSpec& diag, std::int64_t k);

/// Diagonal indices outside of which dim_lc_T_diag(q, ...) is provably 0:
/// the hull of the termwise windows of the contributing summands. The
/// q = m+n-1 summand has no lower bound; the result then carries
/// `unbounded_below` and callers must use duality instead of enumeration.
Window support_window(int q, const PieceShape& shape, const DiagonalSpec& diag);

}  // namespace mgdiag::gradedcomb

#endif  // MGDIAG_GRADEDCOMB_HPP
