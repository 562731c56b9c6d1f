#include "c2kit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "c2kit/errors.hpp"

namespace c2kit {

// ---- monomials ------------------------------------------------------------

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

int monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

void monomial_trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > (i < m.size() ? m[i] : 0)) return false;
  return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
  Monomial r = m;
  for (size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  monomial_trim(r);
  return r;
}

Monomial monomial_of(const std::vector<std::pair<int, int>>& var_exps) {
  Monomial m;
  for (auto [v, e] : var_exps) {
    if (v < 1) throw DomainError("variables are numbered from 1");
    if (static_cast<int>(m.size()) < v) m.resize(v, 0);
    m[v - 1] += e;
  }
  monomial_trim(m);
  return m;
}

namespace {

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (int e : m) h = (h ^ static_cast<size_t>(e + 1)) * 1099511628211ull;
    return h;
  }
};

using Accumulator = std::unordered_map<Monomial, mpz_class, MonomialHash>;

SparsePoly from_accumulator(Accumulator& acc) {
  SparsePoly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.add_term(m, c);
  return out;
}

}  // namespace

// ---- SparsePoly -----------------------------------------------------------

SparsePoly::SparsePoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

SparsePoly::SparsePoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

SparsePoly SparsePoly::variable(int var) { return monomial(monomial_of({{var, 1}})); }

SparsePoly SparsePoly::monomial(const Monomial& m, const mpz_class& c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::product_of(const std::vector<int>& vars) {
  std::vector<std::pair<int, int>> ve;
  for (int v : vars) ve.push_back({v, 1});
  return monomial(monomial_of(ve));
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void SparsePoly::add_term(const Monomial& m0, const mpz_class& c) {
  if (c == 0) return;
  Monomial m = m0;
  monomial_trim(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  mpz_class t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      t = ca * cb;
      acc[monomial_mul(ma, mb)] += t;
    }
  return from_accumulator(acc);
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  *this = *this * o;
  return *this;
}

int SparsePoly::total_degree() const {
  return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first);
}

int SparsePoly::min_degree() const {
  if (terms_.empty()) return -1;
  return monomial_degree(terms_.rbegin()->first);
}

bool SparsePoly::is_homogeneous() const {
  return terms_.empty() || total_degree() == min_degree();
}

int SparsePoly::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) >= var) d = std::max(d, m[var - 1]);
  return d;
}

int SparsePoly::max_variable() const {
  int v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, static_cast<int>(m.size()));
  return v;
}

std::vector<int> SparsePoly::variables() const {
  std::vector<bool> used(max_variable() + 1, false);
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) used[i + 1] = true;
  std::vector<int> out;
  for (size_t v = 1; v < used.size(); ++v)
    if (used[v]) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<SparsePoly> SparsePoly::coefficients_in(int var) const {
  std::vector<SparsePoly> out(std::max(degree_in(var), 0) + 1);
  for (const auto& [m, c] : terms_) {
    int e = static_cast<int>(m.size()) >= var ? m[var - 1] : 0;
    Monomial rest = m;
    if (e) rest[var - 1] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

SparsePoly SparsePoly::substitute(int var, const SparsePoly& value) const {
  std::vector<SparsePoly> cs = coefficients_in(var);
  // Horner evaluation in the substituted variable.
  SparsePoly r;
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) r = r * value + cs[i];
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.size()) < var || m[var - 1] == 0) continue;
    Monomial d = m;
    int e = d[var - 1]--;
    r.add_term(d, c * e);
  }
  return r;
}

mpz_class SparsePoly::coefficient_of(const Monomial& m0) const {
  Monomial m = m0;
  monomial_trim(m);
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class SparsePoly::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

const Monomial& SparsePoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const mpz_class& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.begin()->second;
}

SparsePoly SparsePoly::sign_normalized() const {
  if (!terms_.empty() && leading_coefficient() < 0) return -*this;
  return *this;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.empty()) {
      os << a.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (wrote) os << '*';
      os << 'a' << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---- algebra --------------------------------------------------------------

SparsePoly pow(const SparsePoly& f, int n) {
  if (n < 0) throw DomainError("negative power");
  SparsePoly r = 1, base = f;
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, int cap) {
  Accumulator acc;
  mpz_class t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = monomial_mul(ma, mb);
      if (std::any_of(m.begin(), m.end(), [cap](int e) { return e > cap; })) continue;
      t = ca * cb;
      acc[std::move(m)] += t;
    }
  return from_accumulator(acc);
}

SparsePoly pow_truncated(const SparsePoly& f, int n, int cap) {
  SparsePoly r = 1;
  for (int i = 0; i < n; ++i) r = mul_truncated(r, f, cap);
  return r;
}

std::optional<SparsePoly> exact_divide(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  SparsePoly q, r = f;
  const Monomial& lg = g.leading_monomial();
  const mpz_class& cg = g.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!monomial_divides(lg, lr) || !mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cg.get_mpz_t()))
      return std::nullopt;
    SparsePoly t = SparsePoly::monomial(monomial_div(lr, lg), r.leading_coefficient() / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

std::optional<SparsePoly> poly_sqrt(const SparsePoly& f) {
  if (f.is_zero()) return SparsePoly();
  const Monomial& lm = f.leading_monomial();
  const mpz_class& lc = f.leading_coefficient();
  if (lc < 0 || !mpz_perfect_square_p(lc.get_mpz_t())) return std::nullopt;
  Monomial half(lm.size());
  for (size_t i = 0; i < lm.size(); ++i) {
    if (lm[i] % 2) return std::nullopt;
    half[i] = lm[i] / 2;
  }
  mpz_class root = sqrt(lc);
  SparsePoly s = SparsePoly::monomial(half, root);
  const int lowest = f.min_degree();
  SparsePoly r = f - s * s;
  // Each step peels the leading term of the remainder: with s = s0 + t,
  // the remainder's leading term is 2 * LT(s0) * t.
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!monomial_divides(half, lr)) return std::nullopt;
    if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), mpz_class(2 * root).get_mpz_t()))
      return std::nullopt;
    Monomial tm = monomial_div(lr, half);
    if (2 * monomial_degree(tm) < lowest) return std::nullopt;
    SparsePoly t = SparsePoly::monomial(tm, r.leading_coefficient() / (2 * root));
    r -= s * t * 2 + t * t;
    s += t;
  }
  return s.sign_normalized();
}

SparsePoly parse_poly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  SparsePoly out;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    mpz_class coef = 1;
    Monomial m;
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        coef *= mpz_class(s.substr(i, j - i));
        i = j;
        any = true;
      } else if (s[i] == 'a' || s[i] == 'x') {
        size_t j = ++i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError("variable without index in '" + text + "'");
        int var = std::stoi(s.substr(i, j - i));
        i = j;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          size_t k = ++i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) throw ParseError("missing exponent in '" + text + "'");
          e = std::stoi(s.substr(i, k - i));
          i = k;
        }
        m = monomial_mul(m, monomial_of({{var, e}}));
        any = true;
      } else {
        throw ParseError(std::string("unexpected character '") + s[i] + "' in polynomial");
      }
    }
    if (!any) throw ParseError("empty term in '" + text + "'");
    out.add_term(m, coef * sign);
  }
  return out;
}

// ---- prime fields -----------------------------------------------------------

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(long long p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  if (p > 1000003) throw DomainError("prime too large for brute-force sweeps");
}

long long residue(const mpz_class& x, long long p) {
  mpz_class r = x % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return r.get_si();
}

namespace {

// A polynomial compiled to machine arithmetic modulo p over a local
// variable numbering 0..n-1.
struct CompiledPoly {
  struct Term {
    std::uint64_t coef;
    std::vector<std::pair<int, int>> factors;  // (local var, exponent)
  };
  std::vector<Term> terms;

  CompiledPoly(const SparsePoly& f, const std::vector<int>& local_of, long long p) {
    for (const auto& [m, c] : f.terms()) {
      Term t{static_cast<std::uint64_t>(residue(c, p)), {}};
      if (t.coef == 0) continue;
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) t.factors.push_back({local_of[i + 1], m[i]});
      terms.push_back(std::move(t));
    }
  }

  std::uint64_t eval(const std::vector<int>& x, const std::vector<std::vector<std::uint64_t>>& powtab,
                     std::uint64_t p) const {
    std::uint64_t s = 0;
    for (const Term& t : terms) {
      std::uint64_t v = t.coef;
      for (auto [var, e] : t.factors) {
        v = v * powtab[x[var]][e] % p;
        if (!v) break;
      }
      s += v;
    }
    return s % p;
  }
};

struct Sweep {
  std::vector<int> ambient;    // ambient variables (edge ids)
  std::vector<int> local_of;   // variable -> local index
  std::vector<std::vector<std::uint64_t>> powtab;
  long long p;

  Sweep(const SparsePoly& f, const std::vector<int>& vars, long long p_, double budget, int skip_var)
      : p(p_) {
    for (int v : vars)
      if (v != skip_var) ambient.push_back(v);
    int maxv = std::max(f.max_variable(), vars.empty() ? 0 : *std::max_element(vars.begin(), vars.end()));
    local_of.assign(maxv + 1, -1);
    for (size_t i = 0; i < ambient.size(); ++i) local_of[ambient[i]] = static_cast<int>(i);
    for (int v : f.variables())
      if (v != skip_var && local_of[v] < 0)
        throw DomainError("polynomial variable a" + std::to_string(v) + " is not an ambient variable");
    double points = std::pow(static_cast<double>(p), static_cast<double>(ambient.size()));
    if (points > budget)
      throw ResourceError("point sweep of " + std::to_string(p) + "^" + std::to_string(ambient.size()) +
                          " points exceeds the budget");
    int maxe = std::max(1, f.total_degree());
    powtab.assign(p, std::vector<std::uint64_t>(maxe + 1, 1));
    for (long long a = 0; a < p; ++a)
      for (int e = 1; e <= maxe; ++e) powtab[a][e] = powtab[a][e - 1] * a % p;
  }

  // Calls visit(x) for every point of F_p^{ambient}.
  template <class Visit>
  void run(Visit&& visit) const {
    std::vector<int> x(ambient.size(), 0);
    while (true) {
      visit(x);
      size_t i = 0;
      while (i < x.size() && ++x[i] == p) x[i++] = 0;
      if (i == x.size()) break;
    }
  }
};

std::vector<int> first_n(int N) {
  std::vector<int> v(N);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

mpz_class point_count(const SparsePoly& f, const PrimeField& fp, int N, double budget) {
  if (N < 0) throw DomainError("negative variable count");
  if (f.max_variable() > N) throw DomainError("polynomial has variables beyond the ambient count");
  return point_count(f, fp, first_n(N), budget);
}

mpz_class point_count(const SparsePoly& f, const PrimeField& fp, const std::vector<int>& vars,
                      double budget) {
  const long long p = fp.p();
  // If some variable occurs only linearly, f = x*A + B and the zeros over
  // x can be counted in closed form: one if A != 0, p if A = B = 0.
  int linear = 0;
  for (int v : f.variables())
    if (f.degree_in(v) == 1) {
      linear = v;
      break;
    }
  if (linear) {
    std::vector<SparsePoly> cs = f.coefficients_in(linear);
    Sweep sw(f, vars, p, budget, linear);
    CompiledPoly A(cs[1], sw.local_of, p), B(cs[0], sw.local_of, p);
    unsigned long long count = 0;
    sw.run([&](const std::vector<int>& x) {
      if (A.eval(x, sw.powtab, p)) ++count;
      else if (!B.eval(x, sw.powtab, p)) count += p;
    });
    return mpz_class(std::to_string(count));
  }
  Sweep sw(f, vars, p, budget, 0);
  CompiledPoly F(f, sw.local_of, p);
  unsigned long long count = 0;
  sw.run([&](const std::vector<int>& x) {
    if (!F.eval(x, sw.powtab, p)) ++count;
  });
  return mpz_class(std::to_string(count));
}

mpz_class legendre_sum(const SparsePoly& f, const PrimeField& fp, int N, double budget) {
  if (f.max_variable() > N) throw DomainError("polynomial has variables beyond the ambient count");
  return legendre_sum(f, fp, first_n(N), budget);
}

mpz_class legendre_sum(const SparsePoly& f, const PrimeField& fp, const std::vector<int>& vars,
                       double budget) {
  const long long p = fp.p();
  if (p == 2) throw DomainError("legendre_sum needs an odd prime");
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (long long a = 1; a < p; ++a) chi[a * a % p] = 1;
  Sweep sw(f, vars, p, budget, 0);
  CompiledPoly F(f, sw.local_of, p);
  long long s = 0;
  sw.run([&](const std::vector<int>& x) { s += chi[F.eval(x, sw.powtab, p)]; });
  return mpz_class(std::to_string(s));
}

mpz_class chevalley_coefficient(const SparsePoly& f, const PrimeField& fp, int N) {
  const int e = static_cast<int>(fp.p()) - 1;
  SparsePoly power = pow_truncated(f, e, e);
  std::vector<std::pair<int, int>> target;
  for (int v = 1; v <= N; ++v) target.push_back({v, e});
  return power.coefficient_of(monomial_of(target));
}

}  // namespace c2kit
