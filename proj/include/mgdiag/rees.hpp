#ifndef MGDIAG_REES_HPP
#define MGDIAG_REES_HPP

// Diagonals of Rees algebras R = A[z_1 t, ..., z_s t] over a standard graded
// Cohen-Macaulay ring A of dimension dimA >= 2 and a-invariant a, for a
// regular sequence z_1..z_s of forms of common degree k, bigraded by
// deg x = (deg_A x, 0) and deg z_i t = (0, 1).
//
// For Delta = (g,h)Z only H^{dimA-s+1} and H^{dimA} of R_Delta can be
// nonzero, and H^{dimA-s+1}(R_Delta)_i != 0 exactly for
// 1 <= i <= (a+ks-k)/g. The criteria do not involve h.
//
// In polynomial mode (A = K[x_1..x_m], a = -m) the dimensions are explicit:
// H^{m-s+1}(R_Delta)_i = H^{m-s}(A/I^{hi})_{gi+khi} with I = (z), and
// 0 -> I^r/I^{r+1} -> A/I^{r+1} -> A/I^r -> 0, I^r/I^{r+1} = (A/I)(-rk)^C(s-1+r,r)
// gives the recursion used below. A/I is a Gorenstein complete intersection,
// so H^{m-s}(A/I)_t is dual to (A/I)_{ks-m-t}.

#include <cstdint>
#include <optional>
#include <vector>

#include "mgdiag/exactalg/polynomial.hpp"
#include "mgdiag/gradedcomb.hpp"

namespace mgdiag::rees {

using gradedcomb::BigInt;
using gradedcomb::Window;

struct ReesSpec {
  std::int64_t a = -2;
  int dim_a = 2;
  int s = 2;
  std::int64_t k = 1;
  /// Set in polynomial mode: A = K[x_1..x_m], a = -m, dim_a = m.
  std::optional<int> polynomial_vars;

  static ReesSpec polynomial(int m, std::int64_t k, int s);
  /// Throws PreconditionError unless dim_a >= 2, 2 <= s <= dim_a, k >= 1,
  /// and polynomial mode is consistent.
  void validate() const;
};

/// Complete intersection in K[x_1..x_m] with generator degrees d_1..d_r.
struct CISpec {
  int m = 1;
  std::vector<std::int64_t> degrees;

  void validate() const;
};

/// a-invariant of A/I^r: a + ks + rk - k. Throws PreconditionError for r < 1.
std::int64_t a_inv_quotient_power(std::int64_t a, std::int64_t k, int s, std::int64_t r);

/// {i : 1 <= i <= (a+ks-k)/g}, possibly empty.
Window rigidity_window(std::int64_t a, std::int64_t k, int s, std::int64_t g);
/// g > a + ks - k
bool rigidity_is_cm(std::int64_t a, std::int64_t k, int s, std::int64_t g);
/// True when H^q(R_Delta) is forced to vanish: q not in {dimA-s+1, dimA}.
bool rigidity_vanishing(int q, int dim_a, int s);

/// K[(I^h)_g] is Cohen-Macaulay iff g > (h-1)d - m + sum d_j, d = max d_j.
/// Throws PreconditionError unless g/h > d.
bool chtv_is_cm(const CISpec& ci, std::int64_t g, std::int64_t h);

/// Regrading (g,h) -> (g+kh, h) between the two Rees gradings: does the
/// rigidity criterion at (g,h) agree with the complete-intersection one at
/// (g+kh, h)? Always expected true; false is a defect.
bool rigidity_chtv_consistency(int m, std::int64_t k, int s, std::int64_t g, std::int64_t h);

/// dim (A/I)_j, the t^j coefficient of (1-t^k)^s/(1-t)^m.
BigInt dim_quotient_ci(int m, std::int64_t k, int s, std::int64_t j);
/// dim H^{m-s}(A/I^r)_t for a complete intersection of s forms of degree k.
BigInt dim_lc_quotient_power(int m, std::int64_t k, int s, std::int64_t r, std::int64_t t);

/// dim_K H^{dimA-s+1}(R_Delta)_i in polynomial mode, i >= 1. Throws
/// PreconditionError outside polynomial mode or for i < 1.
BigInt dim_lc_rees_diag(const ReesSpec& spec, std::int64_t g, std::int64_t h, std::int64_t i);

/// A = K[x_0..x_dimA]/(f) with Proj A smooth, blown up along dimA-1 general
/// k-forms: the g for which H^2(R_Delta)_0 = 0 and H^2(R_Delta)_1 != 0,
/// namely 1 <= g <= deg f + k(dimA-2) - (dimA+1). Needs dimA >= 3.
Window blowup_example_range(std::int64_t deg_f, std::int64_t k, int dim_a);

/// s dense forms of degree k in K[x_1..x_m] certified to form a regular
/// sequence: the quotient's Hilbert series numerator must equal (1-t^k)^s.
/// Resamples with seeds seed, seed+1, ... up to 10 times, then throws
/// InternalError.
struct SampledSequence {
  std::vector<exactalg::MultiPoly> forms;
  std::uint64_t seed_used;
};
SampledSequence sample_regular_sequence(int m, std::int64_t k, int s, std::uint32_t p, std::uint64_t seed);

/// Does the quotient by `forms` have Hilbert numerator exactly (1-t^k)^s?
bool is_complete_intersection(const std::vector<exactalg::MultiPoly>& forms, std::int64_t k);

}  // namespace mgdiag::rees

#endif  // MGDIAG_REES_HPP
