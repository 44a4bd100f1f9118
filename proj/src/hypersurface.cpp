#include "mgdiag/hypersurface.hpp"

#include <algorithm>

#include "mgdiag/errors.hpp"

namespace mgdiag::hypersurface {

using gradedcomb::ceil_div;
using gradedcomb::dim_lc_T_diag;
using gradedcomb::dim_T_diag;
using gradedcomb::floor_div;
using gradedcomb::PieceShape;

void HypersurfaceSpec::validate() const {
  if (m < 2 || n < 2) throw PreconditionError("hypersurface needs m, n >= 2");
  if (d < 0 || e < 0 || (d == 0 && e == 0)) throw PreconditionError("bidegree (d,e) must be nonnegative and nonzero");
}

namespace {

void check(const HypersurfaceSpec& spec, const DiagonalSpec& diag) {
  spec.validate();
  diag.validate();
}

Window window_one(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  return {ceil_div(s.d, diag.g), floor_div(s.e - s.n, diag.h), false};
}

Window window_two(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  return {ceil_div(s.e, diag.h), floor_div(s.d - s.m, diag.g), false};
}

}  // namespace

bool validate_generic_normal(const HypersurfaceSpec& spec) {
  spec.validate();
  return spec.m > std::min<std::int64_t>(2, spec.d) && spec.n > std::min<std::int64_t>(2, spec.e);
}

bool cm_floor_form(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  check(s, diag);
  // floor(a/g) < e/h  <=>  floor(a/g) * h < e, since h > 0
  return floor_div(s.d - s.m, diag.g) * diag.h < s.e && floor_div(s.e - s.n, diag.h) * diag.g < s.d;
}

bool cm_window_form(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  check(s, diag);
  return window_one(s, diag).empty() && window_two(s, diag).empty();
}

std::optional<std::int64_t> cm_obstruction(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  check(s, diag);
  std::optional<std::int64_t> best;
  for (const Window& w : {window_one(s, diag), window_two(s, diag)}) {
    if (!w.empty()) best = best ? std::min(*best, w.lo) : w.lo;
  }
  return best;
}

CmVerdict is_cohen_macaulay(const HypersurfaceSpec& spec, const DiagonalSpec& diag) {
  bool floor_form = cm_floor_form(spec, diag);
  if (floor_form != cm_window_form(spec, diag)) {
    throw InternalError("floor and window forms of the Cohen-Macaulay criterion disagree");
  }
  return {floor_form, floor_form ? std::nullopt : cm_obstruction(spec, diag)};
}

std::pair<std::int64_t, std::int64_t> canonical_shift(const HypersurfaceSpec& spec) {
  spec.validate();
  return {spec.d - spec.m, spec.e - spec.n};
}

bool is_gorenstein(const HypersurfaceSpec& spec, const DiagonalSpec& diag) {
  check(spec, diag);
  auto [a, b] = canonical_shift(spec);
  return a % diag.g == 0 && b % diag.h == 0 && a / diag.g == b / diag.h;
}

BigInt dim_R_delta_piece(const HypersurfaceSpec& s, const DiagonalSpec& diag, std::int64_t k) {
  check(s, diag);
  BigInt dim = dim_T_diag({s.m, s.n, 0, 0}, diag, k) - dim_T_diag({s.m, s.n, -s.d, -s.e}, diag, k);
  if (dim < 0) throw InternalError("negative Hilbert function value for R_Delta");
  return dim;
}

BigInt dim_canonical_piece(const HypersurfaceSpec& s, const DiagonalSpec& diag, std::int64_t k) {
  check(s, diag);
  BigInt dim = dim_T_diag({s.m, s.n, s.d - s.m, s.e - s.n}, diag, k) - dim_T_diag({s.m, s.n, -s.m, -s.n}, diag, k);
  if (dim < 0) throw InternalError("negative dimension for the canonical module");
  return dim;
}

BigInt dim_lc_R_delta(const HypersurfaceSpec& s, const DiagonalSpec& diag, int q, std::int64_t k) {
  check(s, diag);
  const int top = s.m + s.n - 2;
  const PieceShape shifted{s.m, s.n, -s.d, -s.e};
  if (q < 0 || q > top) return 0;
  if (q < top) return dim_lc_T_diag(q + 1, shifted, diag, k);
  BigInt kernel = dim_lc_T_diag(top + 1, shifted, diag, k) - dim_lc_T_diag(top + 1, {s.m, s.n, 0, 0}, diag, k);
  if (kernel < 0) throw InternalError("multiplication by f on top local cohomology is not surjective");
  return kernel;
}

Window lc_support_window(const HypersurfaceSpec& s, const DiagonalSpec& diag, int q) {
  check(s, diag);
  const int top = s.m + s.n - 2;
  if (q < 0 || q > top) return Window::empty_window();
  // the kernel at q = top sits inside the source's window
  return gradedcomb::support_window(q + 1, {s.m, s.n, -s.d, -s.e}, diag);
}

std::int64_t a_invariant(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  check(s, diag);
  const std::int64_t k0 = std::max(ceil_div(s.m - s.d, diag.g), ceil_div(s.n - s.e, diag.h));
  const std::int64_t cap = k0 + (s.d + s.e + s.m + s.n) * (diag.g + diag.h);
  for (std::int64_t k = k0; k <= cap; ++k) {
    if (dim_canonical_piece(s, diag, k) > 0) return -k;
  }
  throw InternalError("a-invariant search passed its cap without finding a nonzero canonical piece");
}

bool has_rational_singularities_generic(const HypersurfaceSpec& spec, const DiagonalSpec& diag) {
  return is_cohen_macaulay(spec, diag).cohen_macaulay && (spec.d < spec.m || spec.e < spec.n);
}

bool is_f_regular_type_generic(const HypersurfaceSpec& spec) {
  spec.validate();
  return spec.d < spec.m && spec.e < spec.n;
}

bool dim2_rational(std::int64_t d, std::int64_t e, const DiagonalSpec& diag) {
  diag.validate();
  return (d == 1 && e <= diag.h + 1) || (e == 1 && d <= diag.g + 1);
}

DiagonalSpec rees_to_product_diagonal(std::int64_t delta, std::int64_t g, std::int64_t h) {
  if (delta < 0) throw PreconditionError("Rees degree shift must be nonnegative");
  DiagonalSpec{g, h}.validate();
  if (g <= delta * h) throw PreconditionError("diagonal not ample for product grading: need g > delta*h");
  return {g - delta * h, h};
}

ClassificationReport classify(const HypersurfaceSpec& spec, const DiagonalSpec& diag) {
  check(spec, diag);
  ClassificationReport r;
  r.spec = spec;
  r.diag = diag;
  auto cm = is_cohen_macaulay(spec, diag);
  r.cohen_macaulay = cm.cohen_macaulay;
  r.cm_obstruction = cm.witness;
  r.gorenstein = is_gorenstein(spec, diag);
  r.rational_singularities_generic = has_rational_singularities_generic(spec, diag);
  r.f_regular_type_generic = is_f_regular_type_generic(spec);
  r.generic_normal = validate_generic_normal(spec);
  r.canonical_shift = canonical_shift(spec);
  r.a_invariant = a_invariant(spec, diag);
  if (spec.m == 2 && spec.n == 2) r.dim2_rational = dim2_rational(spec.d, spec.e, diag);

  r.caveats.emplace_back(
      "rational_singularities_generic and f_regular_type_generic assume a generic f over a field of "
      "characteristic 0");
  if (!r.generic_normal) {
    r.caveats.emplace_back(
        "a generic hypersurface of this bidegree is not normal (needs m > min(2,d) and n > min(2,e)); "
        "the singularity conclusions do not apply, the dimension formulas still do");
  }
  if (r.dim2_rational) {
    r.caveats.emplace_back("m = n = 2: rational singularities and F-regular type coincide; see dim2_rational");
  }
  return r;
}

LcDimTable lc_dim_table(const HypersurfaceSpec& s, const DiagonalSpec& diag, std::optional<std::int64_t> top_floor) {
  check(s, diag);
  LcDimTable table;
  const std::int64_t a = a_invariant(s, diag);
  table.top_floor = top_floor.value_or(a - 4);
  const int top = s.m + s.n - 2;
  for (int q = 0; q <= top; ++q) {
    Window w = lc_support_window(s, diag, q);
    if (w.empty()) continue;
    std::int64_t lo = w.unbounded_below ? table.top_floor : w.lo;
    for (std::int64_t k = lo; k <= w.hi; ++k) {
      BigInt dim = dim_lc_R_delta(s, diag, q, k);
      if (dim != 0) table.entries.push_back({q, k, std::move(dim)});
    }
  }
  return table;
}

}  // namespace mgdiag::hypersurface
