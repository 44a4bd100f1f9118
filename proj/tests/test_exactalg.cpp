#include <random>
#include <vector>

#include "doctest.h"
#include "mgdiag/errors.hpp"
#include "mgdiag/exactalg/groebner.hpp"
#include "mgdiag/exactalg/hilbert.hpp"
#include "mgdiag/exactalg/prime_field.hpp"
#include "mgdiag/exactalg/sampling.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mgdiag;
using namespace mgdiag::exactalg;

namespace {

MultiPoly var(const RingContext& ctx, int i) { return MultiPoly::variable(ctx, i); }
MultiPoly num(const RingContext& ctx, std::int64_t c) { return MultiPoly::constant(ctx, c); }

std::uint64_t count_total(const RingContext& ctx, const std::vector<MultiPoly>& gb, int t) {
  return standard_monomial_count(ctx, gb, {}, TotalDegree{t});
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(4), PreconditionError);
  CHECK_THROWS_AS(PrimeField(1), PreconditionError);

  PrimeField F(7);
  CHECK(F.reduce(-1) == 6);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.symmetric(6) == -1);
  CHECK_THROWS_AS(F.inv(0), PreconditionError);
  for (Coeff a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("monomial orders") {
  Monomial x1x3({1, 0, 1});
  Monomial x2sq({0, 2, 0});
  Monomial x1({1, 0, 0});
  CHECK(MonomialOrder::grevlex().greater(x2sq, x1x3));
  CHECK(MonomialOrder::lex().greater(x1x3, x2sq));
  CHECK(MonomialOrder::grevlex().greater(x2sq, x1));  // degree first
  CHECK(MonomialOrder::lex().greater(x1, Monomial({0, 5, 5})));
  CHECK(MonomialOrder::grevlex().compare(x1, x1) == 0);
  CHECK(x1.divides(x1x3));
  CHECK_FALSE(x1.divides(x2sq));
  CHECK(x1x3.lcm(x2sq) == Monomial({1, 2, 1}));
  CHECK(x1x3.quotient(x1) == Monomial({0, 0, 1}));
}

TEST_CASE("polynomial arithmetic and printing") {
  RingContext ctx(3, 0, 5);
  auto x1 = var(ctx, 0), x2 = var(ctx, 1), x3 = var(ctx, 2);
  auto f = x1 * x1 + x2 * x3;
  CHECK(f.to_string() == "x1^2 + x2*x3");
  CHECK(f.homogeneous_degree() == 2);
  CHECK((f - f).is_zero());
  CHECK(num(ctx, 0).to_string() == "0");
  CHECK((num(ctx, 3) * x1 * x1).to_string() == "-2*x1^2");
  CHECK((num(ctx, 2) * x2).to_string() == "2*x2");
  CHECK((-(x2.pow(3) * x3.pow(3))).to_string() == "-x2^3*x3^3");
  CHECK((x1 + x2).pow(5) == x1.pow(5) + x2.pow(5));  // Frobenius in characteristic 5
  CHECK_FALSE((x1 + num(ctx, 1)).homogeneous_degree().has_value());

  RingContext bi(2, 2, 7);
  auto g = var(bi, 0) * var(bi, 2) - var(bi, 1) * var(bi, 3);
  CHECK(g.bidegree() == std::pair<int, int>{1, 1});
  CHECK(g.to_string() == "x1*y1 - x2*y2");
  CHECK_FALSE((var(bi, 0) + var(bi, 2)).bidegree().has_value());

  RingContext other(3, 0, 7);
  CHECK_THROWS_AS(x1 + var(other, 0), ContextError);
}

TEST_CASE("groebner basis examples") {
  RingContext ctx(3, 0, 5);
  auto x1 = var(ctx, 0), x2 = var(ctx, 1), x3 = var(ctx, 2);

  auto gb1 = groebner_basis(std::vector<MultiPoly>{x1});
  REQUIRE(gb1.size() == 1);
  CHECK(gb1[0] == x1);
  CHECK(groebner_basis(std::vector<MultiPoly>{x1}, MonomialOrder::lex()) == gb1);

  auto gb2 = groebner_basis(std::vector<MultiPoly>{x1 * x2 - x3 * x3, x1});
  CHECK(gb2 == std::vector<MultiPoly>{x1, x3 * x3});

  auto gb3 = groebner_basis(std::vector<MultiPoly>{x2.pow(5), x3.pow(5), x1 * x1 + x2 * x3});
  std::vector<Monomial> lms;
  for (const auto& g : gb3) lms.push_back(leading_monomial(g));
  auto has = [&](const Monomial& m) { return std::find(lms.begin(), lms.end(), m) != lms.end(); };
  CHECK(has(Monomial({2, 0, 0})));
  CHECK(has(Monomial({0, 5, 0})));
  CHECK(has(Monomial({0, 0, 5})));

  RingContext other(3, 0, 7);
  CHECK_THROWS_AS(groebner_basis(std::vector<MultiPoly>{x1, var(other, 1)}), ContextError);
}

TEST_CASE("normal form and membership examples") {
  RingContext ctx(3, 0, 5);
  auto x1 = var(ctx, 0), x2 = var(ctx, 1), x3 = var(ctx, 2);

  CHECK(normal_form(x1, std::vector<MultiPoly>{x1}).is_zero());
  auto gb = groebner_basis(std::vector<MultiPoly>{x2.pow(5), x3.pow(5), x1 * x1 + x2 * x3});
  auto nf = normal_form(x1.pow(6), gb);
  CHECK(nf.to_string() == "-x2^3*x3^3");
  auto untouched = x2 * x3 + x3.pow(4);
  CHECK(normal_form(untouched, std::vector<MultiPoly>{x1}) == untouched);

  CHECK_FALSE(ideal_contains(std::vector<MultiPoly>{x1 * x1, x2 * x2}, x1 * x2));
  CHECK_FALSE(ideal_contains(std::vector<MultiPoly>{x2.pow(5), x3.pow(5), x1 * x1 + x2 * x3}, x1.pow(6)));
  CHECK(ideal_contains(std::vector<MultiPoly>{x1 * x1}, x1 * x1 * x2));

  // the oracle agrees on the membership question behind the witness
  CHECK_FALSE(oracle::in_ideal({x2.pow(5), x3.pow(5), x1 * x1 + x2 * x3}, x1.pow(6)));
  CHECK(oracle::in_ideal({x2.pow(5), x3.pow(5), x1 * x1 + x2 * x3}, x1.pow(6) + x2.pow(3) * x3.pow(3)));
}

TEST_CASE("standard monomial counts") {
  RingContext ctx(3, 0, 101);
  CHECK(count_total(ctx, {}, 2) == 6);

  auto forms = std::vector<MultiPoly>{random_form(ctx, 2, 1), random_form(ctx, 2, 2)};
  auto gb = groebner_basis(forms);
  CHECK(count_total(ctx, gb, 2) == 4);
  CHECK(count_total(ctx, gb, 2) == oracle::quotient_dim(ctx, forms, 2));

  RingContext two(2, 0, 7);
  std::vector<MultiPoly> x1{var(two, 0)};
  for (int k = 0; k <= 8; ++k) CHECK(count_total(two, x1, k) == 1);

  std::vector<MultiPoly> inhomogeneous{var(ctx, 0) + num(ctx, 1)};
  CHECK_THROWS_AS(count_total(ctx, inhomogeneous, 2), PreconditionError);

  RingContext big(30, 0, 101);
  CHECK(ambient_monomial_count(big, TotalDegree{20}) > kAmbientMonomialCap);
  CHECK_THROWS_AS(count_total(big, {}, 20), ResourceLimitError);

  RingContext bi(2, 2, 7);
  auto g = var(bi, 0) * var(bi, 2) - var(bi, 1) * var(bi, 3);
  auto gbb = groebner_basis(std::vector<MultiPoly>{g});
  CHECK(standard_monomial_count(bi, gbb, {}, Bidegree{1, 1}) == 3);
  CHECK(standard_monomial_count(bi, gbb, {}, Bidegree{2, 1}) == oracle::quotient_dim_bigraded(bi, {g}, 2, 1));
}

TEST_CASE("power ideal generators") {
  RingContext ctx(3, 0, 101);
  auto z1 = random_form(ctx, 2, 11), z2 = random_form(ctx, 2, 12);
  auto sq = power_ideal_gens(std::vector<MultiPoly>{z1, z2}, 2);
  CHECK(sq == std::vector<MultiPoly>{z1 * z1, z1 * z2, z2 * z2});
  CHECK(power_ideal_gens(std::vector<MultiPoly>{z1}, 3) == std::vector<MultiPoly>{z1.pow(3)});
  std::vector<MultiPoly> gens{var(ctx, 0), var(ctx, 1), var(ctx, 2)};
  for (int r = 1; r <= 4; ++r) CHECK(power_ideal_gens(gens, r).size() == oracle::binom(3 + r - 1, r));
  CHECK_THROWS_AS(power_ideal_gens(gens, 0), PreconditionError);
}

TEST_CASE("normal form is idempotent and membership is closed under multiples") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 40; ++trial) {
    RingContext ctx(3, 0, trial % 2 ? 7 : 101);
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testsupport::sparse_poly(ctx, 3, 3, rng));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const MultiPoly& p) { return p.is_zero(); }), gens.end());
    if (gens.empty()) continue;
    auto gb = groebner_basis(gens);
    auto f = testsupport::sparse_poly(ctx, 4, 5, rng);
    auto nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(ideal_contains(gens, f - nf));
    for (const auto& g : gens) {
      auto h = testsupport::sparse_poly(ctx, 2, 3, rng);
      CHECK(ideal_contains(gens, h * g));
    }
    CHECK(groebner_basis(gens) == gb);
  }
}

TEST_CASE("groebner counts match the Macaulay-matrix oracle on random homogeneous ideals") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    RingContext ctx(3 + trial % 2, 0, trial % 3 == 0 ? 5 : 101);
    std::vector<MultiPoly> gens;
    const int count = 1 + trial % 3;
    for (int i = 0; i < count; ++i) gens.push_back(testsupport::sparse_form(ctx, 2 + (i + trial) % 2, 3, rng));
    auto gb = groebner_basis(gens);
    auto lex_gb = groebner_basis(gens, MonomialOrder::lex());
    for (int t = 0; t <= 5; ++t) {
      const auto expected = oracle::quotient_dim(ctx, gens, t);
      CHECK(count_total(ctx, gb, t) == expected);
      CHECK(standard_monomial_count(ctx, lex_gb, MonomialOrder::lex(), TotalDegree{t}) == expected);
    }
  }
}

TEST_CASE("zero ideal counts") {
  for (int m = 1; m <= 6; ++m) {
    RingContext ctx(m, 0, 2);
    for (int k = 0; k <= 10; ++k) CHECK(count_total(ctx, {}, k) == oracle::binom(k + m - 1, m - 1));
  }
}

TEST_CASE("complete intersection Hilbert functions") {
  struct Case {
    int m, k, s;
  };
  for (auto c : {Case{3, 2, 2}, Case{4, 2, 3}, Case{3, 3, 2}, Case{4, 1, 2}}) {
    RingContext ctx(c.m, 0, 101);
    std::vector<MultiPoly> forms;
    for (int i = 0; i < c.s; ++i) forms.push_back(random_form(ctx, c.k, 100 + static_cast<std::uint64_t>(i)));
    auto gb = groebner_basis(forms);
    auto expected = complete_intersection_hilbert(c.m, c.k, c.s, 12);
    for (int t = 0; t <= 12; ++t) {
      CHECK(static_cast<std::int64_t>(count_total(ctx, gb, t)) == expected[static_cast<std::size_t>(t)]);
    }
    std::vector<std::int64_t> numerator{1};
    for (int i = 0; i < c.s; ++i) {
      std::vector<std::int64_t> next(numerator.size() + static_cast<std::size_t>(c.k), 0);
      for (std::size_t j = 0; j < numerator.size(); ++j) {
        next[j] += numerator[j];
        next[j + static_cast<std::size_t>(c.k)] -= numerator[j];
      }
      numerator = next;
    }
    CHECK(hilbert_numerator(ctx, gb) == numerator);
  }
  CHECK(complete_intersection_hilbert(3, 2, 2, 4) == std::vector<std::int64_t>{1, 3, 4, 4, 4});
}

TEST_CASE("monomial Hilbert numerators") {
  // K[x,y]/(x^2, xy): 1 + 2t + t^2 + t^3 + ... has numerator 1 - 2t^2 + t^3
  std::vector<Monomial> gens{Monomial({2, 0}), Monomial({1, 1})};
  CHECK(hilbert_numerator(gens, 2) == std::vector<std::int64_t>{1, 0, -2, 1});
  CHECK(hilbert_numerator(std::vector<Monomial>{}, 3) == std::vector<std::int64_t>{1});
}

TEST_CASE("sampling is seeded and dense") {
  RingContext ctx(2, 2, 101);
  auto a = random_biform(ctx, 2, 1, 5);
  CHECK(a == random_biform(ctx, 2, 1, 5));
  CHECK_FALSE(a == random_biform(ctx, 2, 1, 6));
  CHECK(a.size() == oracle::binom(3, 2) * oracle::binom(2, 1));
  CHECK(a.coefficient(Monomial({2, 0, 1, 0})) == 1);
  CHECK(a.bidegree() == std::pair<int, int>{2, 1});
}
