#ifndef MGDIAG_TESTS_TEST_SUPPORT_HPP
#define MGDIAG_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "mgdiag/exactalg/polynomial.hpp"
#include "oracles.hpp"

namespace testsupport {

using mgdiag::exactalg::Monomial;
using mgdiag::exactalg::MultiPoly;
using mgdiag::exactalg::RingContext;
using mgdiag::exactalg::Term;

/// Homogeneous form of degree deg with up to `terms` random terms.
inline MultiPoly sparse_form(const RingContext& ctx, int deg, int terms, std::mt19937_64& rng) {
  const auto all = oracle::monomials(ctx.variable_count(), deg);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ctx.modulus() - 1);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) out.push_back({Monomial(all[pick(rng)]), coeff(rng)});
  return MultiPoly::from_terms(ctx, std::move(out));
}

/// Arbitrary (not necessarily homogeneous) polynomial of degree <= max_deg.
inline MultiPoly sparse_poly(const RingContext& ctx, int max_deg, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  MultiPoly acc(ctx);
  for (int i = 0; i < terms; ++i) acc = acc + sparse_form(ctx, deg(rng), 1, rng);
  return acc;
}

}  // namespace testsupport

#endif  // MGDIAG_TESTS_TEST_SUPPORT_HPP
