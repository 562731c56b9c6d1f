#pragma once

// Sparse multivariate polynomials with arbitrary precision integer
// coefficients, plus evaluation over prime fields.
//
// Variables are numbered from 1 (a1, a2, ...), matching edge ids.  A
// monomial is an exponent vector with index 0 holding the exponent of a1;
// trailing zeros are always trimmed so that equal monomials compare equal.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace c2kit {

using Monomial = std::vector<int>;

// Graded lexicographic order, largest first: higher total degree wins,
// ties broken lexicographically with a1 most significant.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_div(const Monomial& m, const Monomial& d);
void monomial_trim(Monomial& m);
// Monomial with exponent `e` on each listed variable.
Monomial monomial_of(const std::vector<std::pair<int, int>>& var_exps);

class SparsePoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, GradedLexGreater>;

  SparsePoly() = default;
  SparsePoly(long c);  // NOLINT: implicit constants are convenient
  SparsePoly(const mpz_class& c);  // NOLINT

  static SparsePoly variable(int var);
  static SparsePoly monomial(const Monomial& m, const mpz_class& c = 1);
  // Product of the listed variables.
  static SparsePoly product_of(const std::vector<int>& vars);

  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Adds c * m.
  void add_term(const Monomial& m, const mpz_class& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  int total_degree() const;   // -1 for zero
  int min_degree() const;     // -1 for zero
  bool is_homogeneous() const;
  int degree_in(int var) const;  // -1 for zero
  // Highest variable index with non-zero exponent, 0 if constant.
  int max_variable() const;
  std::vector<int> variables() const;

  // c_0, c_1, ... with f = sum_i c_i var^i.
  std::vector<SparsePoly> coefficients_in(int var) const;
  SparsePoly substitute(int var, const SparsePoly& value) const;
  SparsePoly derivative(int var) const;
  mpz_class coefficient_of(const Monomial& m) const;
  mpz_class content() const;  // gcd of coefficients, 0 for zero

  // Leading term in graded-lex order; the polynomial must be non-zero.
  const Monomial& leading_monomial() const;
  const mpz_class& leading_coefficient() const;
  // Multiplies by -1 if the leading coefficient is negative.
  SparsePoly sign_normalized() const;

  // Text form "c*a<i>^<e> + ..." in graded-lex order.
  std::string to_string() const;

 private:
  TermMap terms_;
};

SparsePoly pow(const SparsePoly& f, int n);
// Product discarding every monomial whose exponent of some variable exceeds
// cap (used for coefficient extraction).
SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, int cap);
SparsePoly pow_truncated(const SparsePoly& f, int n, int cap);
// Exact quotient f / g when g divides f, otherwise nullopt.
std::optional<SparsePoly> exact_divide(const SparsePoly& f, const SparsePoly& g);
// s with s^2 = f and positive leading coefficient, or nullopt.
std::optional<SparsePoly> poly_sqrt(const SparsePoly& f);
// Parses the text form produced by to_string (also accepts x<i> and
// parentheses-free sums of products with integer coefficients).
SparsePoly parse_poly(const std::string& text);

// ---- prime fields --------------------------------------------------------

bool is_prime(long long n);

class PrimeField {
 public:
  explicit PrimeField(long long p);
  long long p() const { return p_; }

 private:
  long long p_;
};

// Maximum number of field points a brute-force sweep may visit.
inline constexpr double kDefaultPointBudget = 2.0e8;

// |{x in F_p^N : f(x) = 0}|; every variable of f must be <= N.
mpz_class point_count(const SparsePoly& f, const PrimeField& fp, int N,
                      double budget = kDefaultPointBudget);
// Same count over F_p^{vars}: the ambient variables are the listed ids.
mpz_class point_count(const SparsePoly& f, const PrimeField& fp, const std::vector<int>& vars,
                      double budget = kDefaultPointBudget);
// Sum of Legendre symbols (f(x)/p) over F_p^N.  p must be odd.
mpz_class legendre_sum(const SparsePoly& f, const PrimeField& fp, int N,
                       double budget = kDefaultPointBudget);
mpz_class legendre_sum(const SparsePoly& f, const PrimeField& fp, const std::vector<int>& vars,
                       double budget = kDefaultPointBudget);
// Coefficient of x_1^{p-1} ... x_N^{p-1} in f^{p-1}.
mpz_class chevalley_coefficient(const SparsePoly& f, const PrimeField& fp, int N);

// Canonical residue of x modulo p in 0..p-1.
long long residue(const mpz_class& x, long long p);

}  // namespace c2kit
