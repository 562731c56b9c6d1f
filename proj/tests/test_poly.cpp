#include <gtest/gtest.h>

#include <random>

#include "c2kit/errors.hpp"
#include "c2kit/poly.hpp"

using namespace c2kit;

namespace {

SparsePoly a(int i) { return SparsePoly::variable(i); }

// Direct evaluation term by term, used as an independent oracle.
long long eval_mod(const SparsePoly& f, const std::vector<long long>& x, long long p) {
  mpz_class s = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_class t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= static_cast<long>(x[i]);
    s += t;
  }
  return residue(s, p);
}

long long naive_count(const SparsePoly& f, long long p, int N) {
  std::vector<long long> x(N, 0);
  long long count = 0;
  while (true) {
    if (eval_mod(f, x, p) == 0) ++count;
    int i = 0;
    while (i < N && ++x[i] == p) x[i++] = 0;
    if (i == N) break;
  }
  return count;
}

SparsePoly random_poly(std::mt19937_64& rng, int vars, int max_deg, int terms, bool homogeneous) {
  std::uniform_int_distribution<int> coef(-3, 3), var(1, vars), deg(homogeneous ? max_deg : 0, max_deg);
  SparsePoly f;
  for (int t = 0; t < terms; ++t) {
    Monomial m(vars, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m[var(rng) - 1];
    monomial_trim(m);
    f.add_term(m, coef(rng));
  }
  return f;
}

}  // namespace

TEST(SparsePoly, ArithmeticAndNormalForm) {
  const SparsePoly f = a(1) + a(2);
  EXPECT_EQ(f * f, a(1) * a(1) + 2L * a(1) * a(2) + a(2) * a(2));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f * f).total_degree(), 2);
  EXPECT_TRUE((f * f).is_homogeneous());
  EXPECT_FALSE((f + 1L).is_homogeneous());
  EXPECT_EQ(SparsePoly().total_degree(), -1);
  EXPECT_EQ((a(3) * a(3) * a(1)).degree_in(3), 2);
  EXPECT_EQ((a(3) * a(1)).max_variable(), 3);
  EXPECT_EQ((a(1) + a(4)).variables(), (std::vector<int>{1, 4}));
}

TEST(SparsePoly, TextRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const SparsePoly f = random_poly(rng, 4, 4, 6, false);
    EXPECT_EQ(parse_poly(f.to_string()), f) << f.to_string();
  }
  EXPECT_EQ(parse_poly("a4*a6"), a(4) * a(6));
  EXPECT_EQ(parse_poly("x1^2 - 3*x2"), a(1) * a(1) - 3L * a(2));
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("a"), ParseError);
}

TEST(SparsePoly, SubstituteDerivativeCoefficients) {
  const SparsePoly f = 3L * a(1) * a(1) * a(2) + a(1) + 7L;
  const auto cs = f.coefficients_in(1);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], SparsePoly(7L));
  EXPECT_EQ(cs[1], SparsePoly(1L));
  EXPECT_EQ(cs[2], 3L * a(2));
  EXPECT_EQ(f.derivative(1), 6L * a(1) * a(2) + 1L);
  EXPECT_EQ(f.substitute(1, SparsePoly(2L)), 12L * a(2) + 9L);
  EXPECT_EQ(f.coefficient_of(monomial_of({{1, 2}, {2, 1}})), 3);
}

TEST(SparsePoly, ExactDivisionAndSquareRoot) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    const SparsePoly f = random_poly(rng, 3, 3, 4, false);
    const SparsePoly g = random_poly(rng, 3, 2, 3, false);
    if (f.is_zero() || g.is_zero()) continue;
    const auto q = exact_divide(f * g, g);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, f);
    const auto r = poly_sqrt(f * f);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, f.sign_normalized());
  }
  EXPECT_FALSE(exact_divide(a(1) + 1L, a(2)).has_value());
  EXPECT_FALSE(poly_sqrt(a(1) * a(2)).has_value());
  EXPECT_FALSE(poly_sqrt(-(a(1) * a(1))).has_value());
  EXPECT_EQ(poly_sqrt(SparsePoly()), SparsePoly());
}

TEST(SparsePoly, PowTruncatedMatchesFilteredPower) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const SparsePoly f = random_poly(rng, 3, 2, 4, false);
    const SparsePoly full = pow(f, 4);
    SparsePoly filtered;
    for (const auto& [m, c] : full.terms()) {
      bool keep = true;
      for (int e : m) keep = keep && e <= 3;
      if (keep) filtered.add_term(m, c);
    }
    EXPECT_EQ(pow_truncated(f, 4, 3), filtered);
  }
}

TEST(PrimeFields, Primality) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(PrimeField(4), DomainError);
  EXPECT_EQ(residue(mpz_class(-1), 5), 4);
}

TEST(PointCount, MatchesNaiveEvaluation) {
  std::mt19937_64 rng(4);
  for (long long p : {2, 3, 5, 7}) {
    const PrimeField fp(p);
    for (int i = 0; i < 30; ++i) {
      const int N = 1 + i % 4;
      const SparsePoly f = random_poly(rng, N, 3, 4, false);
      EXPECT_EQ(point_count(f, fp, N), static_cast<long>(naive_count(f, p, N))) << f.to_string() << " p=" << p;
    }
  }
}

TEST(PointCount, SimpleCases) {
  const PrimeField f3(3);
  EXPECT_EQ(point_count(a(1) * a(2), f3, 2), 5);
  EXPECT_EQ(point_count(SparsePoly(), f3, 2), 9);
  EXPECT_EQ(point_count(SparsePoly(1L), f3, 2), 0);
  EXPECT_EQ(point_count(a(2), f3, std::vector<int>{2, 5}), 3);
  EXPECT_THROW(point_count(a(3), f3, 2), DomainError);
}

TEST(PointCount, BudgetIsEnforced) {
  EXPECT_THROW(point_count(a(1) * a(1) + a(2) * a(2), PrimeField(101), 2, 100.0), ResourceError);
}

TEST(LegendreSum, AgreesWithCountsOfSquares) {
  // sum chi(f) = #{(x, y) : y^2 = f(x)} - p^N.
  std::mt19937_64 rng(5);
  for (long long p : {3, 5, 7}) {
    const PrimeField fp(p);
    for (int i = 0; i < 10; ++i) {
      const SparsePoly f = random_poly(rng, 2, 3, 3, false);
      const SparsePoly g = a(3) * a(3) - f;
      EXPECT_EQ(legendre_sum(f, fp, 2) + static_cast<long>(p * p), point_count(g, fp, 3));
    }
  }
  EXPECT_THROW(legendre_sum(a(1), PrimeField(2), 1), DomainError);
}

TEST(Chevalley, CoefficientMatchesPointCount) {
  std::mt19937_64 rng(6);
  for (long long p : {2, 3, 5}) {
    const PrimeField fp(p);
    for (int N : {2, 3}) {
      for (int i = 0; i < 15; ++i) {
        const SparsePoly f = random_poly(rng, N, N, 5, true);
        const long long coef = residue(chevalley_coefficient(f, fp, N), p);
        const long long sign = N % 2 == 1 ? 1 : -1;
        EXPECT_EQ(coef, residue(static_cast<long>(sign) * point_count(f, fp, N), p)) << f.to_string() << " p=" << p;
      }
    }
  }
}
