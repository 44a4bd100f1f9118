#ifndef MGDIAG_EXACTALG_GROEBNER_HPP
#define MGDIAG_EXACTALG_GROEBNER_HPP

#include <span>
#include <vector>

#include "mgdiag/exactalg/polynomial.hpp"

namespace mgdiag::exactalg {

/// Largest monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const MultiPoly& f, MonomialOrder order = {});

/// Reduced Groebner basis of the ideal generated by `gens`, monic and sorted
/// by ascending leading monomial. Zero generators are ignored; the zero
/// ideal gives an empty basis.
///
/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and both of Buchberger's criteria: pairs with coprime leading
/// monomials are dropped, and so is (i,j) when some third element k has
/// LM(k) | lcm(i,j) with (i,k) and (j,k) already treated.
///
/// Throws ContextError on mixed rings.
std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens, MonomialOrder order = {});

/// Fully reduced remainder of f on division by gb. When gb is a Groebner
/// basis for `order` the result is unique and no term of it is divisible by
/// a leading monomial of gb.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> gb, MonomialOrder order = {});

/// f in (gens)? Computes a Groebner basis of gens.
bool ideal_contains(std::span<const MultiPoly> gens, const MultiPoly& f, MonomialOrder order = {});

/// All products of r generators with repetition (C(s+r-1, r) of them), with
/// equal products collapsed. Throws PreconditionError for r < 1.
std::vector<MultiPoly> power_ideal_gens(std::span<const MultiPoly> gens, int r);

}  // namespace mgdiag::exactalg

#endif  // MGDIAG_EXACTALG_GROEBNER_HPP
