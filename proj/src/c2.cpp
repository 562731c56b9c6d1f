#include "c2kit/c2.hpp"

#include "c2kit/errors.hpp"

namespace c2kit {

namespace {

C2Value make_value(long long p, const mpz_class& x, const char* method) {
  return C2Value{p, residue(x, p), method};
}

long long sign_power(int n) { return n % 2 == 0 ? 1 : -1; }

void require_reducible_shape(const Multigraph& g, const char* who) {
  if (!g.is_connected()) throw DomainError(std::string(who) + " needs a connected graph");
  if (2 * g.loop_order() > g.edge_count())
    throw DomainError(std::string(who) + " needs 2l <= E");
  if (g.edge_count() <= 3)
    throw DomainError(std::string(who) + " needs at least four edges (no stage n < E exists)");
}

}  // namespace

C2Value c2_definition(const Multigraph& g, long long p) {
  if (!g.is_connected()) throw DomainError("c2 needs a connected graph");
  if (g.vertex_count() < 3) throw DomainError("c2 by definition needs at least three vertices");
  const PrimeField fp(p);
  const mpz_class count = point_count(kirchhoff(g), fp, g.edge_count());
  const mpz_class p2 = mpz_class(static_cast<long>(p)) * static_cast<long>(p);
  if (count % p2 != 0)
    throw ConsistencyError("[Psi]_p = " + count.get_str() + " is not divisible by p^2");
  return make_value(p, count / p2, "definition");
}

C2Value c2_denom(const Multigraph& g, long long p, const std::vector<int>& order) {
  const PrimeField fp(p);
  if (!g.is_connected()) throw DomainError("c2 needs a connected graph");
  const int E = g.edge_count();
  if (2 * g.loop_order() < E && E >= 4) return C2Value{p, 0, "denominator"};
  require_reducible_shape(g, "denominator reduction");
  const ReductionTrace tr = denominator_reduce(g, order);
  const ReductionStage& st = tr.deepest();
  const mpz_class count = point_count(st.poly, fp, st.remaining);
  return make_value(p, count * static_cast<long>(sign_power(st.n)), "denominator");
}

C2Value c2_coeff(const Multigraph& g, long long p, std::array<int, 3> triple) {
  const PrimeField fp(p);
  if (!g.is_connected()) throw DomainError("c2 needs a connected graph");
  const int E = g.edge_count();
  if (E != 2 * g.loop_order())
    throw DomainError("coefficient route needs E = 2l; use the denominator route instead");
  const auto [e1, e2, e3] = triple;
  for (int e : triple)
    if (e < 1 || e > E) throw DomainError("edge triple mentions unknown edge " + std::to_string(e));
  if (e1 == e2 || e1 == e3 || e2 == e3) throw DomainError("edge triple must be distinct");
  const SparsePoly d3 = dodgson(g, {{e1, e3}, {e2, e3}, {}}) * dodgson(g, {{e1}, {e2}, {e3}});
  const int k = static_cast<int>(p - 1);
  const SparsePoly power = pow_truncated(d3, k, k);
  std::vector<std::pair<int, int>> target;
  for (int e = 1; e <= E; ++e)
    if (e != e1 && e != e2 && e != e3) target.push_back({e, k});
  return make_value(p, -power.coefficient_of(monomial_of(target)), "coefficient");
}

C2Value c2_legendre(const Multigraph& g, long long p, const std::vector<int>& order) {
  if (p == 2) throw DomainError("Legendre route needs an odd prime");
  const PrimeField fp(p);
  require_reducible_shape(g, "quadratic reduction");
  const ReductionTrace tr = quadratic_reduce(g, order);
  const ReductionStage& st = tr.deepest();
  const mpz_class sum = legendre_sum(st.poly, fp, st.remaining);
  return make_value(p, sum * static_cast<long>(sign_power(st.n - 1)), "legendre");
}

std::vector<C2Value> c2_all(const Multigraph& g, long long p, const std::vector<int>& order) {
  std::vector<C2Value> out;
  out.push_back(c2_definition(g, p));
  out.push_back(c2_denom(g, p, order));
  if (g.edge_count() == 2 * g.loop_order()) out.push_back(c2_coeff(g, p));
  if (p != 2) out.push_back(c2_legendre(g, p, order));
  return out;
}

bool dtr_invariance_check(const Multigraph& g, int e, int v, const std::vector<long long>& primes) {
  if (!g.is_regular(4)) throw DomainError("double triangle check needs a 4-regular graph");
  const Multigraph reduced = double_triangle_reduce(g, e);
  const int w = dtr_vertex_image(g, e, v);
  if (w < 0) throw DomainError("vertex " + std::to_string(v) + " does not survive the reduction");
  const Multigraph before = decompletion(g, v), after = decompletion(reduced, w);
  for (long long p : primes)
    if (!(c2_coeff(before, p) == c2_coeff(after, p))) return false;
  return true;
}

}  // namespace c2kit
