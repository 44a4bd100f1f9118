#include "mgdiag/exactalg/sampling.hpp"

#include <random>

#include "mgdiag/errors.hpp"

namespace mgdiag::exactalg {

namespace {

MultiPoly dense(const RingContext& ctx, std::vector<Monomial> monomials, const Monomial* pinned,
                std::uint64_t seed) {
  if (ctx.modulus() < 2) throw PreconditionError("field too small to sample nonzero coefficients");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ctx.modulus() - 1);
  std::vector<Term> terms;
  terms.reserve(monomials.size());
  for (auto& m : monomials) {
    Coeff c = coeff(rng);
    if (pinned != nullptr && m == *pinned) c = 1;
    terms.push_back({std::move(m), c});
  }
  return MultiPoly::from_terms(ctx, std::move(terms));
}

}  // namespace

MultiPoly random_form(const RingContext& ctx, int degree, std::uint64_t seed) {
  if (degree < 0) throw PreconditionError("form degree must be nonnegative");
  return dense(ctx, monomials_of_degree(ctx.variable_count(), degree), nullptr, seed);
}

MultiPoly random_biform(const RingContext& ctx, int d, int e, std::uint64_t seed) {
  if (d < 0 || e < 0) throw PreconditionError("bidegree must be nonnegative");
  if ((d > 0 && ctx.x_count() == 0) || (e > 0 && ctx.y_count() == 0)) {
    throw PreconditionError("bidegree needs variables in both blocks");
  }
  std::vector<int> lead(static_cast<std::size_t>(ctx.variable_count()), 0);
  if (ctx.x_count() > 0) lead[0] = d;
  if (ctx.y_count() > 0) lead[static_cast<std::size_t>(ctx.x_count())] = e;
  Monomial pinned(std::move(lead));
  return dense(ctx, monomials_of_bidegree(ctx.x_count(), ctx.y_count(), d, e), &pinned, seed);
}

}  // namespace mgdiag::exactalg
