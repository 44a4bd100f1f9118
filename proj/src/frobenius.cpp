#include "mgdiag/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "mgdiag/errors.hpp"
#include "mgdiag/exactalg/groebner.hpp"
#include "mgdiag/exactalg/sampling.hpp"

namespace mgdiag::frobenius {

using exactalg::Coeff;
using exactalg::Monomial;
using exactalg::RingContext;
using exactalg::Term;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::f_regular:
      return "f_regular";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::not_f_pure:
      return "not_f_pure";
    case Verdict::not_f_regular:
      return "not_f_regular";
  }
  return "unknown";
}

nlohmann::json to_json(const FrobeniusCertificate& c) {
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  j["p"] = c.p;
  j["polynomial"] = c.polynomial;
  j["f_pure"] = c.f_pure;
  j["q_used"] = c.q_used ? nlohmann::json(*c.q_used) : nlohmann::json(nullptr);
  j["tested_powers"] = c.tested_powers;
  j["ideal_generators"] = c.ideal_generators;
  j["socle"] = c.socle;
  j["normal_form"] = c.normal_form;
  j["assumptions"] = c.assumptions;
  j["reason"] = c.reason;
  return j;
}

namespace {

void require_modulus(const MultiPoly& f, std::uint32_t p) {
  if (f.context().modulus() != p) {
    throw ContextError("polynomial has coefficients in F_" + std::to_string(f.context().modulus()) +
                       ", not F_" + std::to_string(p));
  }
}

MultiPoly var_power(const RingContext& ctx, int index, std::uint64_t power) {
  if (power > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw ResourceLimitError("Frobenius power exponent too large");
  }
  return MultiPoly::monomial(ctx, Monomial::variable(ctx.variable_count(), index, static_cast<int>(power)));
}

// f^(p-1) with every term divisible by some v^p dropped along the way; the
// ideal (v^p) is monomial, so this is exact reduction modulo it.
MultiPoly truncated_power(const MultiPoly& f, std::uint32_t p) {
  const auto& ctx = f.context();
  const auto& F = ctx.field();
  auto survives = [p](const Monomial& m) {
    return std::all_of(m.exponents().begin(), m.exponents().end(), [p](int e) { return e < static_cast<int>(p); });
  };
  MultiPoly acc = MultiPoly::constant(ctx, 1);
  for (std::uint32_t step = 0; step + 1 < p; ++step) {
    std::unordered_map<Monomial, Coeff> next;
    for (const auto& a : acc.terms()) {
      for (const auto& b : f.terms()) {
        Monomial m = a.monomial * b.monomial;
        if (!survives(m)) continue;
        auto [it, fresh] = next.try_emplace(std::move(m), 0);
        it->second = F.add(it->second, F.mul(a.coeff, b.coeff));
      }
    }
    std::vector<Term> terms;
    terms.reserve(next.size());
    for (auto& [m, c] : next) terms.push_back({m, c});
    acc = MultiPoly::from_terms(ctx, std::move(terms));
    if (acc.is_zero()) break;
  }
  return acc;
}

SocleTest run_socle_test(std::vector<MultiPoly> ideal, MultiPoly socle) {
  auto gb = exactalg::groebner_basis(ideal);
  MultiPoly nf = exactalg::normal_form(socle, gb);
  return {std::move(ideal), std::move(socle), std::move(nf)};
}

std::vector<std::string> render(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

template <class Test>
void search_powers(FrobeniusCertificate& cert, std::uint32_t p, int e_max, Test&& test) {
  if (e_max < 1) throw PreconditionError("e_max must be at least 1");
  std::uint64_t q = 1;
  for (int e = 1; e <= e_max; ++e) {
    q *= p;
    SocleTest t = test(q);
    cert.tested_powers.push_back(q);
    cert.ideal_generators = render(t.ideal);
    cert.socle = t.socle.to_string();
    cert.normal_form = t.normal_form.to_string();
    if (!t.member()) {
      cert.verdict = Verdict::f_regular;
      cert.q_used = q;
      cert.reason = "socle element survives modulo the Frobenius power of the parameter ideal";
      return;
    }
  }
  cert.verdict = Verdict::inconclusive;
  cert.reason = "socle element lies in the ideal for every tested q";
}

}  // namespace

bool fedder_is_f_pure(const MultiPoly& f, std::uint32_t p) {
  require_modulus(f, p);
  if (f.is_zero()) throw PreconditionError("Fedder's criterion needs a nonzero polynomial");
  if (!f.homogeneous_degree()) throw PreconditionError("Fedder's criterion needs a homogeneous polynomial");
  return !truncated_power(f, p).is_zero();
}

SocleTest graded_socle_test(const MultiPoly& f, int d, std::uint64_t q) {
  const auto& ctx = f.context();
  std::vector<MultiPoly> ideal;
  for (int i = 1; i < ctx.variable_count(); ++i) ideal.push_back(var_power(ctx, i, q));
  ideal.push_back(f);
  return run_socle_test(std::move(ideal), var_power(ctx, 0, static_cast<std::uint64_t>(d - 1) * q + 1));
}

SocleTest bigraded_socle_test(const MultiPoly& f, int d, int e, std::uint64_t q) {
  const auto& ctx = f.context();
  const int m = ctx.x_count();
  std::vector<MultiPoly> ideal;
  ideal.push_back(var_power(ctx, 0, q) - var_power(ctx, m, q));
  for (int i = 1; i < m; ++i) ideal.push_back(var_power(ctx, i, q));
  for (int j = m + 1; j < ctx.variable_count(); ++j) ideal.push_back(var_power(ctx, j, q));
  ideal.push_back(f);
  return run_socle_test(std::move(ideal), var_power(ctx, 0, static_cast<std::uint64_t>(d + e - 1) * q + 1));
}

FrobeniusCertificate f_regular_certificate_graded(const MultiPoly& f, int d, int m, std::uint32_t p, int e_max) {
  require_modulus(f, p);
  const auto& ctx = f.context();
  if (ctx.y_count() != 0 || ctx.x_count() != m) {
    throw PreconditionError("graded certificate needs a ring with exactly m x-variables and no y-variables");
  }
  if (d < 1) throw PreconditionError("degree must be positive");
  if (f.homogeneous_degree() != d) throw PreconditionError("f is not homogeneous of degree " + std::to_string(d));

  FrobeniusCertificate cert;
  cert.p = p;
  cert.polynomial = f.to_string();
  if (d >= m) {
    cert.verdict = Verdict::not_f_regular;
    cert.reason = "a-invariant d - m = " + std::to_string(d - m) + " >= 0";
    return cert;
  }
  cert.f_pure = fedder_is_f_pure(f, p);
  if (!cert.f_pure) {
    cert.verdict = Verdict::not_f_pure;
    cert.reason = "f^(p-1) lies in the Frobenius power of the maximal ideal";
    return cert;
  }
  cert.assumptions = {"A/fA is F-pure (checked by Fedder's criterion)",
                      "(A/fA) localized at x1 is regular (not checked)"};
  search_powers(cert, p, e_max, [&](std::uint64_t q) { return graded_socle_test(f, d, q); });
  return cert;
}

FrobeniusCertificate f_regular_certificate_bigraded(const MultiPoly& f, int d, int e, int m, int n,
                                                    std::uint32_t p, int e_max) {
  require_modulus(f, p);
  const auto& ctx = f.context();
  if (ctx.x_count() != m || ctx.y_count() != n || m < 1 || n < 1) {
    throw PreconditionError("bigraded certificate needs a ring with m x-variables and n y-variables");
  }
  if (d < 0 || e < 0 || d + e == 0) throw PreconditionError("bidegree must be nonnegative and nonzero");
  if (f.bidegree() != std::pair<int, int>{d, e}) {
    throw PreconditionError("f is not bihomogeneous of bidegree (" + std::to_string(d) + "," + std::to_string(e) + ")");
  }

  FrobeniusCertificate cert;
  cert.p = p;
  cert.polynomial = f.to_string();
  if (d >= m || e >= n) {
    cert.verdict = Verdict::not_f_regular;
    cert.reason = "a-invariant (d - m, e - n) = (" + std::to_string(d - m) + "," + std::to_string(e - n) +
                  ") is not negative";
    return cert;
  }
  cert.f_pure = fedder_is_f_pure(f, p);
  if (!cert.f_pure) {
    cert.verdict = Verdict::not_f_pure;
    cert.reason = "f^(p-1) lies in the Frobenius power of the maximal ideal";
    return cert;
  }
  cert.assumptions = {"B/fB is F-pure (checked by Fedder's criterion)",
                      "(B/fB) localized at x1*y1 is regular (not checked)"};
  search_powers(cert, p, e_max, [&](std::uint64_t q) { return bigraded_socle_test(f, d, e, q); });
  return cert;
}

namespace {

MultiPoly product_of_vars(const RingContext& ctx, int begin, int count) {
  MultiPoly out = MultiPoly::constant(ctx, 1);
  for (int i = begin; i < begin + count; ++i) out = out * MultiPoly::variable(ctx, i);
  return out;
}

}  // namespace

MultiPoly witness_graded(int d, int m, std::uint32_t p) {
  if (d < 1 || m < d + 1) throw PreconditionError("witness x1^d + x2*...*x_{d+1} needs d >= 1 and m >= d+1");
  RingContext ctx(m, 0, p);
  return MultiPoly::variable(ctx, 0).pow(static_cast<unsigned>(d)) + product_of_vars(ctx, 1, d);
}

MultiPoly witness_bigraded(int d, int e, int m, int n, std::uint32_t p) {
  if (d < 0 || e < 0 || d + e == 0 || m < d + 1 || n < e + 1) {
    throw PreconditionError("bigraded witness needs (d,e) > (0,0), m >= d+1 and n >= e+1");
  }
  RingContext ctx(m, n, p);
  MultiPoly lead = MultiPoly::variable(ctx, 0).pow(static_cast<unsigned>(d)) *
                   MultiPoly::variable(ctx, m).pow(static_cast<unsigned>(e));
  return lead + product_of_vars(ctx, 1, d) * product_of_vars(ctx, m + 1, e);
}

MultiPoly witness_fpure(int d, int m, std::uint32_t p) {
  if (d < 1 || m < d) throw PreconditionError("F-pure witness needs 1 <= d <= m");
  RingContext ctx(m, 0, p);
  MultiPoly x1 = MultiPoly::variable(ctx, 0);
  MultiPoly out = x1;
  for (int i = 1; i < d; ++i) out = out * (x1 + MultiPoly::variable(ctx, i));
  return out;
}

MultiPoly witness_fpure_bigraded(int d, int e, int m, int n, std::uint32_t p) {
  if (d < 0 || e < 0 || d + e == 0 || m < d || n < e || m < 1 || n < 1) {
    throw PreconditionError("squarefree witness needs (d,e) > (0,0), d <= m and e <= n");
  }
  RingContext ctx(m, n, p);
  return product_of_vars(ctx, 0, d) * product_of_vars(ctx, m, e);
}

MultiPoly random_biform(int m, int n, int d, int e, std::uint32_t p, std::uint64_t seed) {
  if (m < 1 || n < 0) throw PreconditionError("random form needs m >= 1 and n >= 0");
  return exactalg::random_biform(RingContext(m, n, p), d, e, seed);
}

}  // namespace mgdiag::frobenius
