#include "mgdiag/rees.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mgdiag/errors.hpp"
#include "mgdiag/exactalg/groebner.hpp"
#include "mgdiag/exactalg/hilbert.hpp"
#include "mgdiag/exactalg/sampling.hpp"

namespace mgdiag::rees {

using gradedcomb::binomial;
using gradedcomb::dim_poly;
using gradedcomb::floor_div;

ReesSpec ReesSpec::polynomial(int m, std::int64_t k, int s) {
  ReesSpec spec{-m, m, s, k, m};
  spec.validate();
  return spec;
}

void ReesSpec::validate() const {
  if (dim_a < 2) throw PreconditionError("base ring needs dimension >= 2");
  if (s < 2 || s > dim_a) throw PreconditionError("need 2 <= s <= dim A for a regular sequence");
  if (k < 1) throw PreconditionError("form degree k must be >= 1");
  if (polynomial_vars && (*polynomial_vars != dim_a || a != -*polynomial_vars)) {
    throw PreconditionError("polynomial base in m variables has dim A = m and a = -m");
  }
}

void CISpec::validate() const {
  if (m < 1) throw PreconditionError("ambient ring needs m >= 1");
  if (degrees.empty()) throw PreconditionError("complete intersection needs at least one generator");
  if (degrees.size() > static_cast<std::size_t>(m)) throw PreconditionError("more generators than variables");
  for (auto d : degrees) {
    if (d < 1) throw PreconditionError("generator degrees must be positive");
  }
}

std::int64_t a_inv_quotient_power(std::int64_t a, std::int64_t k, int s, std::int64_t r) {
  if (r < 1) throw PreconditionError("ideal power r must be >= 1");
  return a + k * s + r * k - k;
}

Window rigidity_window(std::int64_t a, std::int64_t k, int s, std::int64_t g) {
  if (g < 1) throw PreconditionError("g must be >= 1");
  return {1, floor_div(a + k * s - k, g), false};
}

bool rigidity_is_cm(std::int64_t a, std::int64_t k, int s, std::int64_t g) {
  if (g < 1) throw PreconditionError("g must be >= 1");
  return g > a + k * s - k;
}

bool rigidity_vanishing(int q, int dim_a, int s) { return q != dim_a - s + 1 && q != dim_a; }

bool chtv_is_cm(const CISpec& ci, std::int64_t g, std::int64_t h) {
  ci.validate();
  if (g < 1 || h < 1) throw PreconditionError("g and h must be positive");
  const std::int64_t d = *std::max_element(ci.degrees.begin(), ci.degrees.end());
  if (g <= d * h) throw PreconditionError("theorem hypothesis violated: need g/h > max degree");
  const std::int64_t sum = std::accumulate(ci.degrees.begin(), ci.degrees.end(), std::int64_t{0});
  return g > (h - 1) * d - ci.m + sum;
}

bool rigidity_chtv_consistency(int m, std::int64_t k, int s, std::int64_t g, std::int64_t h) {
  ReesSpec::polynomial(m, k, s);
  CISpec ci{m, std::vector<std::int64_t>(static_cast<std::size_t>(s), k)};
  return rigidity_is_cm(-m, k, s, g) == chtv_is_cm(ci, g + k * h, h);
}

BigInt dim_quotient_ci(int m, std::int64_t k, int s, std::int64_t j) {
  BigInt total = 0;
  for (int i = 0; i <= s; ++i) {
    BigInt term = binomial(s, i) * dim_poly(m, j - i * k);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt dim_lc_quotient_power(int m, std::int64_t k, int s, std::int64_t r, std::int64_t t) {
  if (r < 1) throw PreconditionError("ideal power r must be >= 1");
  const std::int64_t a_quot = k * s - m;
  BigInt total = 0;
  // A/I^r is filtered by I^u/I^{u+1} = (A/I)(-uk)^C(s-1+u,u), u = 0..r-1.
  for (std::int64_t u = 0; u < r; ++u) {
    total += binomial(s - 1 + u, u) * dim_quotient_ci(m, k, s, a_quot - (t - u * k));
  }
  return total;
}

BigInt dim_lc_rees_diag(const ReesSpec& spec, std::int64_t g, std::int64_t h, std::int64_t i) {
  spec.validate();
  if (!spec.polynomial_vars) throw PreconditionError("exact dimensions need a polynomial base ring");
  if (g < 1 || h < 1) throw PreconditionError("g and h must be positive");
  if (i < 1) throw PreconditionError("diagonal index i must be >= 1");
  const std::int64_t r = h * i;
  return dim_lc_quotient_power(*spec.polynomial_vars, spec.k, spec.s, r, g * i + spec.k * r);
}

Window blowup_example_range(std::int64_t deg_f, std::int64_t k, int dim_a) {
  if (dim_a < 3) throw PreconditionError("blow-up example needs dim A >= 3");
  if (deg_f < 1 || k < 1) throw PreconditionError("deg f and k must be positive");
  const std::int64_t a = deg_f - (dim_a + 1);
  const int s = dim_a - 1;
  return {1, a + k * s - k, false};
}

bool is_complete_intersection(const std::vector<exactalg::MultiPoly>& forms, std::int64_t k) {
  if (forms.empty()) return true;
  for (const auto& f : forms) {
    if (f.homogeneous_degree() != k) return false;
  }
  auto gb = exactalg::groebner_basis(forms);
  auto numerator = exactalg::hilbert_numerator(forms.front().context(), gb);
  std::vector<std::int64_t> expected{1};
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::vector<std::int64_t> next(expected.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      next[j] += expected[j];
      next[j + static_cast<std::size_t>(k)] -= expected[j];
    }
    expected = std::move(next);
  }
  return numerator == expected;
}

SampledSequence sample_regular_sequence(int m, std::int64_t k, int s, std::uint32_t p, std::uint64_t seed) {
  if (s < 1 || s > m || k < 1) throw PreconditionError("need 1 <= s <= m and k >= 1");
  exactalg::RingContext ctx(m, 0, p);
  constexpr int kAttempts = 10;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t sd = seed + static_cast<std::uint64_t>(attempt);
    std::vector<exactalg::MultiPoly> forms;
    for (int i = 0; i < s; ++i) {
      forms.push_back(exactalg::random_form(ctx, static_cast<int>(k), sd * 1000003ull + static_cast<std::uint64_t>(i)));
    }
    if (is_complete_intersection(forms, k)) return {std::move(forms), sd};
  }
  throw InternalError("no regular sequence of " + std::to_string(s) + " forms of degree " + std::to_string(k) +
                      " found in " + std::to_string(kAttempts) + " samples");
}

}  // namespace mgdiag::rees
