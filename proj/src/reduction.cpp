#include "c2kit/reduction.hpp"

#include <algorithm>
#include <set>

#include "c2kit/errors.hpp"

namespace c2kit {

std::string to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::Continuing: return "continuing";
    case ReductionStatus::WeightDrop: return "weight-drop";
    case ReductionStatus::NotFactorable: return "not-factorable";
    case ReductionStatus::Exhausted: return "exhausted";
  }
  return "unknown";
}

bool ReductionTrace::has_zero_stage() const {
  return std::any_of(stages.begin(), stages.end(),
                     [](const ReductionStage& s) { return s.poly.is_zero(); });
}

std::vector<int> complete_edge_order(const Multigraph& g, const std::vector<int>& order) {
  std::set<int> seen;
  for (int e : order) {
    if (e < 1 || e > g.edge_count())
      throw DomainError("edge order mentions unknown edge " + std::to_string(e));
    if (!seen.insert(e).second)
      throw DomainError("edge order repeats edge " + std::to_string(e));
  }
  std::vector<int> out = order;
  for (int e = 1; e <= g.edge_count(); ++e)
    if (!seen.count(e)) out.push_back(e);
  return out;
}

SparsePoly discriminant_in(const SparsePoly& f, int x) {
  if (f.degree_in(x) > 2)
    throw DomainError("discriminant needs degree <= 2 in a" + std::to_string(x));
  std::vector<SparsePoly> c = f.coefficients_in(x);
  c.resize(3);
  return c[1] * c[1] - c[2] * c[0] * 4;
}

namespace {

using Coeffs = std::vector<SparsePoly>;  // index = power of x

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs primitive_integers(Coeffs c) {
  mpz_class g = 0;
  for (const auto& p : c) {
    mpz_class h = p.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
  }
  if (g > 1)
    for (auto& p : c) {
      SparsePoly q;
      for (const auto& [m, k] : p.terms()) q.add_term(m, k / g);
      p = q;
    }
  return c;
}

// Pseudo-remainder of a by b as polynomials in x.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    SparsePoly la = a.back();
    Coeffs next(a.size());
    for (int i = 0; i <= da; ++i) next[i] = a[i] * b.back();
    for (int i = 0; i <= db; ++i) next[i + da - db] -= la * b[i];
    trim(next);
    a = primitive_integers(next);
  }
  return a;
}

// sum_i c_i * u^i * w^{d-i}: the homogenised value of the polynomial with
// coefficients c at x = u / w, scaled by w^d.
SparsePoly homogeneous_value(const Coeffs& c, const SparsePoly& u, const SparsePoly& w, int d) {
  SparsePoly s;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i].is_zero()) continue;
    s += c[i] * pow(u, i) * pow(w, d - i);
  }
  return s;
}

ReductionStage make_stage(int n, const SparsePoly& poly, const std::vector<int>& order) {
  ReductionStage st;
  st.n = n;
  st.poly = poly.sign_normalized();
  st.remaining.assign(order.begin() + n, order.end());
  std::sort(st.remaining.begin(), st.remaining.end());
  if (!st.poly.is_zero() && !st.poly.is_constant()) st.perfect_square = poly_sqrt(st.poly).has_value();
  return st;
}

void check_input(const Multigraph& g) {
  if (!g.is_connected()) throw DomainError("reduction needs a connected graph");
  if (g.edge_count() < 3) throw DomainError("reduction needs at least three edges");
}

}  // namespace

std::optional<SparsePoly> squared_linear_factor_step(const SparsePoly& p, int x) {
  const int d = p.degree_in(x);
  if (d < 2 || d > 4) return std::nullopt;
  Coeffs a = p.coefficients_in(x), b = p.derivative(x).coefficients_in(x);
  trim(a);
  trim(b);
  // Euclidean pseudo-remainder sequence for gcd(P, P').
  Coeffs prev = a, cur = primitive_integers(b);
  while (true) {
    Coeffs r = pseudo_remainder(prev, cur);
    if (r.empty()) break;
    prev = cur;
    cur = r;
  }
  if (cur.size() != 2) return std::nullopt;  // gcd must be linear in x
  const SparsePoly r1 = cur[1], r0 = cur[0];
  // Double root x = -r0 / r1: check P and P' vanish there.
  const SparsePoly u = -r0;
  if (!homogeneous_value(a, u, r1, 4).is_zero()) return std::nullopt;
  if (!homogeneous_value(b, u, r1, 3).is_zero()) return std::nullopt;
  // P''(r)/2 = sum C(i,2) p_i r^{i-2}; scaled by r1^2 it is a polynomial.
  Coeffs half_second(a.size() > 2 ? a.size() - 2 : 0);
  for (size_t i = 2; i < a.size(); ++i)
    half_second[i - 2] = a[i] * static_cast<long>(i * (i - 1) / 2);
  SparsePoly num = homogeneous_value(half_second, u, r1, 2);
  auto q = exact_divide(num, r1 * r1);
  if (!q) return std::nullopt;
  return *q;
}

ReductionTrace denominator_reduce(const Multigraph& g, const std::vector<int>& order_in) {
  check_input(g);
  ReductionTrace tr;
  tr.edge_order = complete_edge_order(g, order_in);
  const std::vector<int>& o = tr.edge_order;
  const int E = g.edge_count();
  const int e1 = o[0], e2 = o[1], e3 = o[2];

  SparsePoly cur = dodgson(g, {{e1, e3}, {e2, e3}, {}}) * dodgson(g, {{e1}, {e2}, {e3}});
  tr.stages.push_back(make_stage(3, cur, o));
  for (int n = 3; n < E - 1; ++n) {
    const ReductionStage& st = tr.stages.back();
    if (st.poly.is_zero()) {
      tr.status = ReductionStatus::WeightDrop;
      return tr;
    }
    SparsePoly next;
    if (n + 1 == 4) {
      const int e4 = o[3];
      next = dodgson(g, {{e1, e3}, {e2, e4}, {}}) * dodgson(g, {{e1, e4}, {e2, e3}, {}});
    } else if (n + 1 == 5) {
      next = five_invariant(g, {o[0], o[1], o[2], o[3], o[4]});
    } else {
      const int x = o[n];
      if (st.poly.degree_in(x) > 2) {
        tr.status = ReductionStatus::NotFactorable;
        return tr;
      }
      auto root = poly_sqrt(discriminant_in(st.poly, x));
      if (!root) {
        tr.status = ReductionStatus::NotFactorable;
        return tr;
      }
      next = *root;
    }
    tr.stages.push_back(make_stage(n + 1, next, o));
  }
  tr.status = tr.stages.back().poly.is_zero() ? ReductionStatus::WeightDrop : ReductionStatus::Exhausted;
  return tr;
}

ReductionTrace quadratic_reduce(const Multigraph& g, const std::vector<int>& order_in) {
  check_input(g);
  ReductionTrace tr;
  tr.edge_order = complete_edge_order(g, order_in);
  const std::vector<int>& o = tr.edge_order;
  const int E = g.edge_count();
  SparsePoly d3 = dodgson(g, {{o[0], o[2]}, {o[1], o[2]}, {}}) * dodgson(g, {{o[0]}, {o[1]}, {o[2]}});
  tr.stages.push_back(make_stage(3, d3 * d3, o));
  for (int n = 3; n < E - 1; ++n) {
    const SparsePoly& p = tr.stages.back().poly;
    if (p.is_zero()) {
      tr.status = ReductionStatus::WeightDrop;
      return tr;
    }
    const int x = o[n];
    std::optional<SparsePoly> next;
    if (auto s = poly_sqrt(p); s && s->degree_in(x) <= 2) {
      next = discriminant_in(*s, x);
    } else {
      next = squared_linear_factor_step(p, x);
    }
    if (!next) {
      tr.status = ReductionStatus::NotFactorable;
      return tr;
    }
    tr.stages.push_back(make_stage(n + 1, *next, o));
  }
  tr.status = tr.stages.back().poly.is_zero() ? ReductionStatus::WeightDrop : ReductionStatus::Exhausted;
  return tr;
}

bool has_weight_drop(const Multigraph& g, const std::vector<int>& order) {
  ReductionTrace tr = denominator_reduce(g, order);
  if (tr.status == ReductionStatus::WeightDrop) return true;
  return std::any_of(tr.stages.begin(), tr.stages.end(),
                     [](const ReductionStage& s) { return s.poly.is_zero() || s.perfect_square; });
}

}  // namespace c2kit
