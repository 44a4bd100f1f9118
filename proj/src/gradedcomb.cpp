#include "mgdiag/gradedcomb.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mgdiag/errors.hpp"

namespace mgdiag::gradedcomb {

void DiagonalSpec::validate() const {
  if (g < 1 || h < 1) {
    throw PreconditionError("diagonal (" + std::to_string(g) + "," + std::to_string(h) +
                            ") needs positive entries");
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

namespace {

void require_vars(int m) {
  if (m < 1) throw PreconditionError("polynomial ring needs at least one variable");
}

void require_shape(const PieceShape& s) {
  if (s.m < 1 || s.n < 1) throw PreconditionError("piece needs m, n >= 1");
}

}  // namespace

BigInt dim_poly(int m, std::int64_t k) {
  require_vars(m);
  if (k < 0) return 0;
  return binomial(k + m - 1, m - 1);
}

BigInt dim_top_lc(int m, std::int64_t k) { return dim_poly(m, -k - m); }

BigInt dim_T_diag(const PieceShape& s, const DiagonalSpec& diag, std::int64_t k) {
  require_shape(s);
  diag.validate();
  return dim_poly(s.m, s.i + diag.g * k) * dim_poly(s.n, s.j + diag.h * k);
}

BigInt dim_lc_T_diag(int q, const PieceShape& s, const DiagonalSpec& diag, std::int64_t k) {
  require_shape(s);
  diag.validate();
  const std::int64_t a_deg = s.i + diag.g * k;
  const std::int64_t b_deg = s.j + diag.h * k;
  BigInt total = 0;
  if (q == s.n) total += dim_poly(s.m, a_deg) * dim_top_lc(s.n, b_deg);
  if (q == s.m) total += dim_top_lc(s.m, a_deg) * dim_poly(s.n, b_deg);
  if (q == s.m + s.n - 1) total += dim_top_lc(s.m, a_deg) * dim_top_lc(s.n, b_deg);
  return total;
}

Window support_window(int q, const PieceShape& s, const DiagonalSpec& diag) {
  require_shape(s);
  diag.validate();
  const auto g = diag.g;
  const auto h = diag.h;

  std::optional<Window> hull;
  auto join = [&](Window w) {
    if (w.empty()) return;
    if (!hull) {
      hull = w;
      return;
    }
    hull->unbounded_below = hull->unbounded_below || w.unbounded_below;
    hull->lo = std::min(hull->lo, w.lo);
    hull->hi = std::max(hull->hi, w.hi);
  };

  // A_{i+gk} (x) H^n(B)_{j+hk}: i+gk >= 0 and j+hk <= -n
  if (q == s.n) join({ceil_div(-s.i, g), floor_div(-s.j - s.n, h), false});
  // H^m(A)_{i+gk} (x) B_{j+hk}: i+gk <= -m and j+hk >= 0
  if (q == s.m) join({ceil_div(-s.j, h), floor_div(-s.i - s.m, g), false});
  // H^m(A) (x) H^n(B): only upper bounds
  if (q == s.m + s.n - 1) {
    join({std::numeric_limits<std::int64_t>::min(),
          std::min(floor_div(-s.i - s.m, g), floor_div(-s.j - s.n, h)), true});
  }
  return hull.value_or(Window::empty_window());
}

}  // namespace mgdiag::gradedcomb
