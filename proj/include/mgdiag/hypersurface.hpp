#ifndef MGDIAG_HYPERSURFACE_HPP
#define MGDIAG_HYPERSURFACE_HPP

// Diagonal subalgebras R_Delta of a bigraded hypersurface
//
//   R = K[x_1..x_m, y_1..y_n] / (f),  deg x_i = (1,0), deg y_j = (0,1),
//   deg f = (d,e) > (0,0),
//
// decided from (m, n, d, e, g, h) alone. The local cohomology of R_Delta
// comes from 0 -> T(-d,-e)_Delta -> T_Delta -> R_Delta -> 0 with T the
// polynomial ring: H^q(R_Delta) = H^{q+1}(T(-d,-e)_Delta) for q <= m+n-3,
// H^{m+n-2}(R_Delta) is the kernel of the (surjective) multiplication by f
// on top local cohomology, and everything above vanishes.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgdiag/gradedcomb.hpp"

namespace mgdiag::hypersurface {

using gradedcomb::BigInt;
using gradedcomb::DiagonalSpec;
using gradedcomb::Window;

struct HypersurfaceSpec {
  int m = 2;
  int n = 2;
  std::int64_t d = 1;
  std::int64_t e = 1;

  /// Throws PreconditionError unless m, n >= 2, d, e >= 0 and (d,e) != (0,0).
  void validate() const;
};

/// Generic f of this bidegree gives a normal ring: m > min(2,d) and n > min(2,e).
bool validate_generic_normal(const HypersurfaceSpec& spec);

/// floor((d-m)/g) < e/h and floor((e-n)/h) < d/g
bool cm_floor_form(const HypersurfaceSpec& spec, const DiagonalSpec& diag);
/// No integer k with d/g <= k <= (e-n)/h or e/h <= k <= (d-m)/g.
bool cm_window_form(const HypersurfaceSpec& spec, const DiagonalSpec& diag);
/// Smallest integer in either of the two windows above, if any.
std::optional<std::int64_t> cm_obstruction(const HypersurfaceSpec& spec, const DiagonalSpec& diag);

struct CmVerdict {
  bool cohen_macaulay = false;
  /// Smallest k in the obstruction windows when not Cohen-Macaulay.
  std::optional<std::int64_t> witness;
};

/// Floor-form criterion plus the smallest obstruction. Throws InternalError
/// if the floor and window forms disagree.
CmVerdict is_cohen_macaulay(const HypersurfaceSpec& spec, const DiagonalSpec& diag);

/// (d-m, e-n): the canonical module of R_Delta is R(d-m, e-n)_Delta.
std::pair<std::int64_t, std::int64_t> canonical_shift(const HypersurfaceSpec& spec);
/// g | d-m, h | e-n and (d-m)/g = (e-n)/h.
bool is_gorenstein(const HypersurfaceSpec& spec, const DiagonalSpec& diag);

/// dim_K (R_Delta)_k = dim (T_Delta)_k - dim (T(-d,-e)_Delta)_k.
BigInt dim_R_delta_piece(const HypersurfaceSpec& spec, const DiagonalSpec& diag, std::int64_t k);
/// dim_K of the k-th piece of the canonical module R(d-m,e-n)_Delta.
BigInt dim_canonical_piece(const HypersurfaceSpec& spec, const DiagonalSpec& diag, std::int64_t k);
/// dim_K H^q(R_Delta)_k.
BigInt dim_lc_R_delta(const HypersurfaceSpec& spec, const DiagonalSpec& diag, int q, std::int64_t k);
/// Indices outside of which dim_lc_R_delta(q, .) vanishes. Bounded for
/// q <= m+n-3; unbounded below for q = m+n-2; empty otherwise.
Window lc_support_window(const HypersurfaceSpec& spec, const DiagonalSpec& diag, int q);

/// a(R_Delta) = -min{k : canonical piece k is nonzero}. Throws InternalError
/// if the ascending search passes k0 + (d+e+m+n)(g+h).
std::int64_t a_invariant(const HypersurfaceSpec& spec, const DiagonalSpec& diag);

/// Generic f, characteristic 0: Cohen-Macaulay and (d < m or e < n).
bool has_rational_singularities_generic(const HypersurfaceSpec& spec, const DiagonalSpec& diag);
/// Generic f, characteristic 0: d < m and e < n.
bool is_f_regular_type_generic(const HypersurfaceSpec& spec);

/// m = n = 2: rational (equivalently F-regular type) exactly when
/// d = 1, e <= h+1 or e = 1, d <= g+1.
bool dim2_rational(std::int64_t d, std::int64_t e, const DiagonalSpec& diag);

/// Rees bigrading deg y_j = (delta, 1) to the product bigrading
/// deg y_j = (0, 1): (g, h) becomes (g - delta*h, h). Throws
/// PreconditionError when g <= delta*h.
DiagonalSpec rees_to_product_diagonal(std::int64_t delta, std::int64_t g, std::int64_t h);

struct ClassificationReport {
  HypersurfaceSpec spec;
  DiagonalSpec diag;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool rational_singularities_generic = false;
  bool f_regular_type_generic = false;
  bool generic_normal = false;
  std::pair<std::int64_t, std::int64_t> canonical_shift{0, 0};
  std::int64_t a_invariant = 0;
  std::optional<std::int64_t> cm_obstruction;
  /// Only for m = n = 2.
  std::optional<bool> dim2_rational;
  std::vector<std::string> caveats;
};

ClassificationReport classify(const HypersurfaceSpec& spec, const DiagonalSpec& diag);

struct LcDimEntry {
  int q;
  std::int64_t k;
  BigInt dim;
};

/// Nonzero dim_K H^q(R_Delta)_k for 0 <= q <= m+n-2. Lower cohomology is
/// listed over its exact support windows; the top module (unbounded below)
/// from `top_floor` up to the a-invariant.
struct LcDimTable {
  std::int64_t top_floor = 0;
  std::vector<LcDimEntry> entries;
};

/// Default floor for the top row is a_invariant - 4.
LcDimTable lc_dim_table(const HypersurfaceSpec& spec, const DiagonalSpec& diag,
                        std::optional<std::int64_t> top_floor = std::nullopt);

}  // namespace mgdiag::hypersurface

#endif  // MGDIAG_HYPERSURFACE_HPP
