#include "mgdiag/exactalg/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mgdiag/errors.hpp"
#include "mgdiag/exactalg/groebner.hpp"
#include "mgdiag/gradedcomb.hpp"

namespace mgdiag::exactalg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_binomial(std::int64_t n, std::int64_t r) {
  const gradedcomb::BigInt value = gradedcomb::binomial(n, r);
  if (value > kSaturated) return kSaturated;
  return static_cast<std::uint64_t>(value);
}

std::uint64_t count_in_block(int vars, int degree) {
  if (degree < 0) return 0;
  if (vars == 0) return degree == 0 ? 1 : 0;
  return saturating_binomial(degree + vars - 1, vars - 1);
}

struct Block {
  int begin;
  int end;
  int degree;
};

// Counts exponent vectors with the block sums given by `blocks` that no
// monomial in `leads` divides.
class StandardCounter {
 public:
  StandardCounter(int vars, std::vector<Block> blocks, const std::vector<Monomial>& leads)
      : exps_(static_cast<std::size_t>(vars), 0), blocks_(std::move(blocks)), leads_(leads) {}

  std::uint64_t run() {
    count_ = 0;
    visit(0, 0, blocks_.empty() ? 0 : blocks_[0].degree);
    return count_;
  }

 private:
  void visit(std::size_t block, int var, int remaining) {
    if (block == blocks_.size()) {
      if (!divisible()) ++count_;
      return;
    }
    const Block& b = blocks_[block];
    if (var == b.end - 1) {
      exps_[static_cast<std::size_t>(var)] = remaining;
      std::size_t next = block + 1;
      visit(next, next < blocks_.size() ? blocks_[next].begin : 0, next < blocks_.size() ? blocks_[next].degree : 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps_[static_cast<std::size_t>(var)] = e;
      visit(block, var + 1, remaining - e);
    }
  }

  bool divisible() const {
    for (const auto& m : leads_) {
      bool divides = true;
      for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (m.exponents()[i] > exps_[i]) {
          divides = false;
          break;
        }
      }
      if (divides) return true;
    }
    return false;
  }

  std::vector<int> exps_;
  std::vector<Block> blocks_;
  const std::vector<Monomial>& leads_;
  std::uint64_t count_ = 0;
};

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

Series sub_shifted(const Series& a, const Series& b, int shift) {
  Series out = a;
  if (out.size() < b.size() + static_cast<std::size_t>(shift)) out.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(shift)] -= b[i];
  trim(out);
  return out;
}

Series times_one_minus_t_pow(const Series& a, int k) {
  Series out = a;
  out.resize(a.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + static_cast<std::size_t>(k)] -= a[i];
  trim(out);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

Series numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {0};

  bool pairwise_coprime = true;
  for (std::size_t a = 0; a < gens.size() && pairwise_coprime; ++a) {
    for (std::size_t b = a + 1; b < gens.size() && pairwise_coprime; ++b) pairwise_coprime = gens[a].coprime(gens[b]);
  }
  if (pairwise_coprime) {
    Series s{1};
    for (const auto& g : gens) s = times_one_minus_t_pow(s, g.degree());
    return s;
  }

  // N(J + (m)) = N(J) - t^deg(m) N(J : m)
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g.lcm(pivot).quotient(pivot));
  return sub_shifted(numerator(gens), numerator(std::move(colon)), pivot.degree());
}

}  // namespace

std::uint64_t ambient_monomial_count(const RingContext& ctx, DegreeSelector selector) {
  if (const auto* t = std::get_if<TotalDegree>(&selector)) return count_in_block(ctx.variable_count(), t->degree);
  const auto& b = std::get<Bidegree>(selector);
  std::uint64_t a = count_in_block(ctx.x_count(), b.x_degree);
  std::uint64_t c = count_in_block(ctx.y_count(), b.y_degree);
  if (a == 0 || c == 0) return 0;
  if (a > kSaturated / c) return kSaturated;
  return a * c;
}

std::uint64_t standard_monomial_count(const RingContext& ctx, std::span<const MultiPoly> gb, MonomialOrder order,
                                      DegreeSelector selector) {
  const bool total = std::holds_alternative<TotalDegree>(selector);
  for (const auto& g : gb) {
    if (!(g.context() == ctx)) throw ContextError("basis element lives in a different ring");
    if (g.is_zero()) continue;
    bool homogeneous = total ? g.homogeneous_degree().has_value() : g.bidegree().has_value();
    if (!homogeneous) {
      throw PreconditionError("basis element " + g.to_string() + " is not homogeneous for the requested grading");
    }
  }

  std::uint64_t ambient = ambient_monomial_count(ctx, selector);
  if (ambient > kAmbientMonomialCap) {
    throw ResourceLimitError("ambient monomial count " +
                             (ambient == kSaturated ? std::string("(overflow)") : std::to_string(ambient)) +
                             " exceeds the cap of " + std::to_string(kAmbientMonomialCap));
  }
  if (ambient == 0) return 0;

  std::vector<Monomial> leads;
  for (const auto& g : gb) {
    if (!g.is_zero()) leads.push_back(leading_monomial(g, order));
  }

  std::vector<Block> blocks;
  if (total) {
    blocks.push_back({0, ctx.variable_count(), std::get<TotalDegree>(selector).degree});
  } else {
    const auto& b = std::get<Bidegree>(selector);
    if (ctx.x_count() > 0) blocks.push_back({0, ctx.x_count(), b.x_degree});
    if (ctx.y_count() > 0) blocks.push_back({ctx.x_count(), ctx.variable_count(), b.y_degree});
  }
  return StandardCounter(ctx.variable_count(), std::move(blocks), leads).run();
}

std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> generators, int variable_count) {
  for (const auto& g : generators) {
    if (g.size() != variable_count) throw ContextError("monomial length does not match the variable count");
  }
  return numerator(std::vector<Monomial>(generators.begin(), generators.end()));
}

std::vector<std::int64_t> hilbert_numerator(const RingContext& ctx, std::span<const MultiPoly> gb,
                                            MonomialOrder order) {
  std::vector<Monomial> leads;
  for (const auto& g : gb) {
    if (!(g.context() == ctx)) throw ContextError("basis element lives in a different ring");
    if (!g.is_zero()) leads.push_back(leading_monomial(g, order));
  }
  return hilbert_numerator(leads, ctx.variable_count());
}

std::vector<std::int64_t> complete_intersection_hilbert(int m, int k, int s, int max_degree) {
  if (m < 1 || k < 1 || s < 0 || max_degree < 0) {
    throw PreconditionError("complete intersection needs m >= 1, k >= 1, s >= 0");
  }
  auto n = static_cast<std::size_t>(max_degree) + 1;
  Series num{1};
  for (int i = 0; i < s; ++i) num = times_one_minus_t_pow(num, k);
  num.resize(std::max(num.size(), n), 0);
  num.resize(n);
  // Divide by (1-t) m times: prefix sums.
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 1; j < n; ++j) num[j] += num[j - 1];
  }
  return num;
}

}  // namespace mgdiag::exactalg
