#include "doctest.h"
#include "mgdiag/errors.hpp"
#include "mgdiag/gradedcomb.hpp"
#include "oracles.hpp"

using namespace mgdiag;
using namespace mgdiag::gradedcomb;

namespace {

// Monomials of A_{i+gk} (x) B_{j+hk}, counted by enumeration.
std::uint64_t enumerate_T_piece(int m, int n, std::int64_t i, std::int64_t j, const DiagonalSpec& diag, std::int64_t k) {
  const std::int64_t a = i + diag.g * k, b = j + diag.h * k;
  if (a < 0 || b < 0) return 0;
  return oracle::bimonomials(m, n, static_cast<int>(a), static_cast<int>(b)).size();
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(200, 100).str() == "90548514656103281165404177077484163874504589675413336841320");
}

TEST_CASE("dim_poly and dim_top_lc examples") {
  CHECK(dim_poly(3, 2) == 6);
  for (int m = 1; m <= 6; ++m) CHECK(dim_poly(m, 0) == 1);
  CHECK(dim_poly(4, -1) == 0);
  CHECK_THROWS_AS(dim_poly(0, 1), PreconditionError);

  CHECK(dim_top_lc(3, -3) == 1);
  CHECK(dim_top_lc(2, -4) == 3);
  CHECK(dim_top_lc(3, -2) == 0);
}

TEST_CASE("dim_T_diag examples") {
  CHECK(dim_T_diag({2, 2, 0, 0}, {1, 1}, 1) == 4);
  CHECK(dim_T_diag({3, 2, -4, -1}, {1, 1}, 1) == 0);
  CHECK(dim_T_diag({2, 2, -1, -1}, {1, 1}, 2) == 4);
  CHECK(enumerate_T_piece(2, 2, -1, -1, {1, 1}, 2) == 4);
  CHECK_THROWS_AS(dim_T_diag({2, 2, 0, 0}, {0, 1}, 1), PreconditionError);
}

TEST_CASE("dim_lc_T_diag examples") {
  CHECK(dim_lc_T_diag(3, {3, 2, -4, -1}, {1, 1}, 1) == 1);
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      for (std::int64_t k = -5; k <= 5; ++k) CHECK(dim_lc_T_diag(1, {m, n, -2, 1}, {1, 2}, k) == 0);
    }
  }
  CHECK(dim_lc_T_diag(3, {2, 2, 0, 0}, {1, 1}, -3) == 4);
  // m = n: both middle summands land in q = m
  CHECK(dim_lc_T_diag(2, {2, 2, -3, 0}, {1, 1}, 1) ==
        dim_poly(2, -2) * dim_top_lc(2, 1) + dim_top_lc(2, -2) * dim_poly(2, 1));
}

TEST_CASE("support window examples") {
  // q = n summand with i = -d, j = -e, d < m, e < n
  auto w = support_window(2, {3, 2, -2, -1}, {1, 1});
  CHECK(w.empty());
  auto top = support_window(3, {2, 2, 0, 0}, {1, 1});
  CHECK(top.unbounded_below);
  CHECK(top.hi == -2);
  CHECK(support_window(2, {2, 2, 0, 0}, {1, 1}).empty());
  CHECK(support_window(1, {3, 3, 0, 0}, {1, 1}).empty());
  auto prop = support_window(3, {3, 2, -4, -1}, {1, 1});
  CHECK(prop.contains(1));
  CHECK_FALSE(prop.contains(0));
}

TEST_CASE("duality identity for the top summand") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (std::int64_t i = -8; i <= 8; ++i) {
        for (std::int64_t j = -8; j <= 8; ++j) {
          for (DiagonalSpec diag : {DiagonalSpec{1, 1}, DiagonalSpec{2, 1}, DiagonalSpec{1, 3}}) {
            for (std::int64_t k = -8; k <= 8; ++k) {
              if (m == 1 || n == 1) continue;  // q = m+n-1 collides with a middle summand
              CHECK(dim_lc_T_diag(m + n - 1, {m, n, i, j}, diag, k) == dim_T_diag({m, n, -i - m, -j - n}, diag, -k));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Kunneth summands vanish off {m, n, m+n-1} and outside the support windows") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (std::int64_t i = -6; i <= 6; i += 2) {
        for (std::int64_t j = -6; j <= 6; j += 3) {
          for (DiagonalSpec diag : {DiagonalSpec{1, 1}, DiagonalSpec{2, 3}, DiagonalSpec{3, 1}}) {
            for (int q = -1; q <= m + n + 1; ++q) {
              const bool possible = q == m || q == n || q == m + n - 1;
              const auto w = support_window(q, {m, n, i, j}, diag);
              for (std::int64_t k = -10; k <= 10; ++k) {
                const auto v = dim_lc_T_diag(q, {m, n, i, j}, diag, k);
                if (!possible) CHECK(v == 0);
                if (!w.contains(k)) CHECK(v == 0);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("dim_T_diag agrees with monomial enumeration") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (std::int64_t i = -4; i <= 4; ++i) {
        for (std::int64_t j = -4; j <= 4; ++j) {
          for (std::int64_t g = 1; g <= 3; ++g) {
            for (std::int64_t h = 1; h <= 3; ++h) {
              for (std::int64_t k = -4; k <= 4; ++k) {
                CHECK(dim_T_diag({m, n, i, j}, {g, h}, k) == enumerate_T_piece(m, n, i, j, {g, h}, k));
              }
            }
          }
        }
      }
    }
  }
}
