#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <seidelcert/factor.hpp>
#include <seidelcert/graph_expr.hpp>
#include <seidelcert/linalg.hpp>
#include <seidelcert/seidel.hpp>

#include "support.hpp"

using namespace seidelcert;

namespace {

using Expected = std::vector<std::pair<std::vector<long>, std::size_t>>;

Polynomial poly(const std::vector<long>& ascending) {
  std::vector<Rational> c(ascending.begin(), ascending.end());
  return Polynomial(std::move(c));
}

Polynomial product(const Factorization& f) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& [g, m] : f.factors) p = p * g.pow(m);
  return p;
}

void expect_factors(const Factorization& f, const Expected& expected) {
  ASSERT_TRUE(f.complete);
  ASSERT_EQ(f.factors.size(), expected.size());
  for (const auto& [coeffs, m] : expected) {
    Polynomial g = poly(coeffs);
    bool found = std::any_of(f.factors.begin(), f.factors.end(),
                             [&](const IrreducibleFactor& h) { return h.factor == g && h.multiplicity == m; });
    EXPECT_TRUE(found) << to_string(g) << " ^" << m << " in " << to_string(f);
  }
}

Polynomial seidel_poly(const std::string& expr) {
  return characteristic_polynomial(seidel_integer_matrix(parse_graph_expr(expr)));
}

}  // namespace

// Expected factor lists below come from sympy's factor_list.
TEST(Factor, SmallPolynomials) {
  expect_factors(factor_over_integers(poly({1, 0, 0, 0, 1})), {{{1, 0, 0, 0, 1}, 1}});
  expect_factors(factor_over_integers(poly({-1, 0, 0, 0, 0, 0, 0, 0, 1})),
                 {{{-1, 1}, 1}, {{1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 0, 0, 0, 1}, 1}});
  // Irreducible, but splits into linear or quadratic factors modulo every prime.
  expect_factors(factor_over_integers(poly({576, 0, -960, 0, 352, 0, -40, 0, 1})),
                 {{{576, 0, -960, 0, 352, 0, -40, 0, 1}, 1}});
  Polynomial p = poly({-2, 0, 1}) * poly({-3, 0, 1}) * poly({-1, -1, 0, 1}).pow(2);
  expect_factors(factor_over_integers(p), {{{-2, 0, 1}, 1}, {{-3, 0, 1}, 1}, {{-1, -1, 0, 1}, 2}});
  expect_factors(factor_over_integers(Polynomial::constant(1)), {});
  expect_factors(factor_over_integers(Polynomial::x().pow(3)), {{{0, 1}, 3}});
}

TEST(Factor, SeidelCharacteristicPolynomials) {
  expect_factors(factor_over_integers(seidel_poly("P(5)")), {{{3, 1}, 1}, {{-1, 1}, 2}, {{-4, -1, 1}, 1}});
  expect_factors(factor_over_integers(seidel_poly("C(7)")), {{{-2, 1}, 1}, {{-1, -9, 1, 1}, 2}});
  expect_factors(factor_over_integers(seidel_poly("Et(8)")),
                 {{{1, 1}, 1}, {{-1, 1}, 1}, {{-5, 0, 1}, 1}, {{40, 189, -8, -30, 0, 1}, 1}});
  expect_factors(factor_over_integers(seidel_poly("K(1,5)+iso(3)")), {{{1, 1}, 6}, {{52, -15, -6, 1}, 1}});
  expect_factors(factor_over_integers(seidel_poly("K(2,3)+P(4)")),
                 {{{1, 1}, 3}, {{-5, 0, 1}, 1}, {{4, 79, -25, -3, 1}, 1}});
}

TEST(Factor, Ordering) {
  auto f = factor_over_integers(seidel_poly("K(1,5)+iso(41)"));
  EXPECT_EQ(to_string(f).substr(0, 8), "(x + 1)^");
  auto g = factor_over_integers(poly({-6, 1, 1}));  // (x + 3)(x - 2)
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].factor, poly({3, 1}));
  EXPECT_EQ(to_string(factor_over_integers(Polynomial::x().pow(2) * poly({1, 1}))), "(x + 1) * x^2");
}

// Oracle: factors are recovered from a product built out of known irreducibles.
TEST(Factor, RecoversKnownIrreducibles) {
  const std::vector<std::vector<long>> irreducible = {
      {-2, 0, 1}, {1, 1, 1}, {-1, -1, 0, 1}, {1, 0, 0, 0, 1}, {-5, 0, 1}, {2, 0, 0, 1}, {3, 1}, {-7, 1}, {1, 0, 1}};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Expected want;
    Polynomial p = Polynomial::constant(1);
    for (const auto& g : irreducible) {
      std::size_t m = rng() % 3;
      if (m == 0) continue;
      want.push_back({g, m});
      p = p * poly(g).pow(m);
    }
    expect_factors(factor_over_integers(p), want);
  }
}

TEST(Factor, ProductReconstructsLargeCharacteristicPolynomials) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = testsupport::random_graph(rng, 20 + 8 * trial, 0.4);
    Polynomial p = characteristic_polynomial(seidel_integer_matrix(g));
    auto f = factor_over_integers(p);
    EXPECT_EQ(product(f), p);
  }
  Polynomial p = seidel_poly("Et+(8)+iso(54)");
  EXPECT_EQ(product(factor_over_integers(p)), p);
}

TEST(Factor, Errors) {
  EXPECT_THROW(factor_over_integers(Polynomial{}), DomainError);
  EXPECT_THROW(factor_over_integers(poly({1, 2})), DomainError);
  EXPECT_THROW(factor_over_integers(Polynomial(std::vector<Rational>{Rational(1, 2), 1})), DomainError);
}
