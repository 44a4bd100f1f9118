#include "mgdiag/exactalg/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mgdiag/errors.hpp"

namespace mgdiag::exactalg {

namespace {

// Terms sorted descending under a given order. The engine works on these
// and only converts back to MultiPoly at the boundary.
using Terms = std::vector<Term>;

Terms to_ordered(const MultiPoly& f, MonomialOrder order) {
  Terms t(f.terms().begin(), f.terms().end());
  if (order.kind() != OrderKind::grevlex) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  }
  return t;
}

// h[from..] - c * q * g
Terms sub_multiple(const Terms& h, std::size_t from, const Terms& g, Coeff c, const Monomial& q,
                   MonomialOrder order, const PrimeField& F) {
  Terms out;
  out.reserve(h.size() - from + g.size());
  Coeff negc = F.neg(c);
  std::size_t i = from, j = 0;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * q;
    int cmp = i == h.size() ? -1 : order.compare(h[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), F.mul(negc, g[j].coeff)});
      ++j;
    } else {
      Coeff v = F.add(h[i].coeff, F.mul(negc, g[j].coeff));
      if (v != 0) out.push_back({std::move(gm), v});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Terms& t, const PrimeField& F) {
  if (t.empty() || t.front().coeff == 1) return;
  Coeff inv = F.inv(t.front().coeff);
  for (auto& term : t) term.coeff = F.mul(term.coeff, inv);
}

// Full reduction of h modulo the monic polynomials in basis, skipping index `skip`.
Terms reduce(Terms h, const std::vector<Terms>& basis, MonomialOrder order, const PrimeField& F,
             std::size_t skip = static_cast<std::size_t>(-1)) {
  Terms remainder;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term& lead = h[pos];
    const Terms* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().monomial.divides(lead.monomial)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    Monomial q = lead.monomial.quotient(divisor->front().monomial);
    h = sub_multiple(h, pos, *divisor, lead.coeff, q, order, F);
    pos = 0;
  }
  return remainder;
}

Terms s_polynomial(const Terms& f, const Terms& g, MonomialOrder order, const PrimeField& F) {
  Monomial l = f.front().monomial.lcm(g.front().monomial);
  Terms lhs;
  lhs.reserve(f.size());
  Monomial qf = l.quotient(f.front().monomial);
  for (const auto& t : f) lhs.push_back({t.monomial * qf, t.coeff});
  // both monic, so the leading terms cancel
  return sub_multiple(lhs, 0, g, 1, l.quotient(g.front().monomial), order, F);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Monomial leading_monomial(const MultiPoly& f, MonomialOrder order) {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no leading monomial");
  if (order.kind() == OrderKind::grevlex) return f.terms().front().monomial;
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms()) {
    if (order.greater(t.monomial, *best)) best = &t.monomial;
  }
  return *best;
}

std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens, MonomialOrder order) {
  if (gens.empty()) return {};
  require_common_context(gens);
  const RingContext& ctx = gens.front().context();
  const PrimeField& F = ctx.field();

  std::vector<Terms> G;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Terms t = to_ordered(g, order);
    make_monic(t, F);
    G.push_back(std::move(t));
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;  // pairs not yet treated
  auto add_pairs_with = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      pending.push_back({i, n, G[i].front().monomial.lcm(G[n].front().monomial)});
      open.insert({i, n});
    }
  };
  for (std::size_t n = 1; n < G.size(); ++n) add_pairs_with(n);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    auto best = pending.begin();
    for (auto it = pending.begin() + 1; it != pending.end(); ++it) {
      int cmp = order.compare(it->lcm, best->lcm);
      if (cmp < 0 || (cmp == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    Pair pair = std::move(*best);
    pending.erase(best);
    open.erase({pair.i, pair.j});

    const Monomial& li = G[pair.i].front().monomial;
    const Monomial& lj = G[pair.j].front().monomial;
    if (li.coprime(lj)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = G[k].front().monomial.divides(pair.lcm) && !is_open(pair.i, k) && !is_open(pair.j, k);
    }
    if (chain) continue;

    Terms r = reduce(s_polynomial(G[pair.i], G[pair.j], order, F), G, order, F);
    if (r.empty()) continue;
    make_monic(r, F);
    G.push_back(std::move(r));
    add_pairs_with(G.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<Terms> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = G[a].front().monomial;
      const Monomial& lb = G[b].front().monomial;
      redundant = lb.divides(la) && (!(la == lb) || b < a);
    }
    if (!redundant) minimal.push_back(G[a]);
  }

  // Interreduce tails.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    Terms lead{minimal[a].front()};
    Terms tail(minimal[a].begin() + 1, minimal[a].end());
    Terms reduced_tail = reduce(std::move(tail), minimal, order, F, a);
    lead.insert(lead.end(), reduced_tail.begin(), reduced_tail.end());
    minimal[a] = std::move(lead);
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front().monomial, b.front().monomial) < 0; });

  std::vector<MultiPoly> out;
  out.reserve(minimal.size());
  for (auto& t : minimal) out.push_back(MultiPoly::from_terms(ctx, std::move(t)));
  return out;
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> gb, MonomialOrder order) {
  for (const auto& g : gb) {
    if (!(g.context() == f.context())) throw ContextError("polynomials live in different rings");
  }
  const PrimeField& F = f.context().field();
  std::vector<Terms> basis;
  basis.reserve(gb.size());
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    Terms t = to_ordered(g, order);
    make_monic(t, F);
    basis.push_back(std::move(t));
  }
  return MultiPoly::from_terms(f.context(), reduce(to_ordered(f, order), basis, order, F));
}

bool ideal_contains(std::span<const MultiPoly> gens, const MultiPoly& f, MonomialOrder order) {
  if (f.is_zero()) return true;
  for (const auto& g : gens) {
    if (!(g.context() == f.context())) throw ContextError("polynomials live in different rings");
  }
  auto gb = groebner_basis(gens, order);
  return normal_form(f, gb, order).is_zero();
}

std::vector<MultiPoly> power_ideal_gens(std::span<const MultiPoly> gens, int r) {
  if (r < 1) throw PreconditionError("ideal power exponent must be at least 1");
  if (gens.empty()) return {};
  require_common_context(gens);

  std::vector<MultiPoly> out;
  // Enumerate multisets i_1 <= ... <= i_r of generator indices.
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    MultiPoly prod = gens[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) prod = prod * gens[idx[k]];
    if (std::find(out.begin(), out.end(), prod) == out.end()) out.push_back(std::move(prod));

    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < idx.size(); ++t) idx[t] = idx[k - 1];
  }
  return out;
}

}  // namespace mgdiag::exactalg
