#include "c2kit/graphpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "c2kit/errors.hpp"

namespace c2kit {

int word_sign(const Word& w) {
  int sign = 1;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return 0;
      if (w[i] > w[j]) sign = -sign;
    }
  return sign;
}

SparsePoly kirchhoff(const Multigraph& g) {
  if (!g.is_connected()) throw DomainError("kirchhoff: graph is disconnected");
  SparsePoly psi;
  for (const EdgeSet& t : spanning_trees(g))
    psi += SparsePoly::product_of(complement(g, t));
  return psi;
}

namespace {

int resolve_removed(const Multigraph& g, int removed_vertex) {
  if (g.vertex_count() == 0) throw DomainError("graph has no vertices");
  int r = removed_vertex < 0 ? g.vertex_count() - 1 : removed_vertex;
  if (r >= g.vertex_count()) throw DomainError("removed vertex out of range");
  return r;
}

// Signed incidence entry of vertex v and edge e (1-based).
int incidence(const Multigraph& g, int v, int e) {
  const Edge& x = g.edge(e);
  if (x.is_loop()) throw DomainError("self-loops are not allowed in the expanded Laplacian");
  if (x.tail == v) return 1;
  if (x.head == v) return -1;
  return 0;
}

// Vertices kept as incidence rows, in increasing order.
std::vector<int> kept_vertices(const Multigraph& g, int removed) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != removed) out.push_back(v);
  return out;
}

// det of the incidence submatrix with the kept vertices as rows and the
// given edges as columns (in the given order).
long long incidence_det(const Multigraph& g, const std::vector<int>& rows, const EdgeSet& cols) {
  std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m[i][j] = incidence(g, rows[i], cols[j]);
  return integer_determinant(std::move(m));
}

template <class Visit>
void for_each_subset(const std::vector<int>& pool, int size, Visit&& visit) {
  std::vector<int> chosen;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(chosen.size()) == size) {
      visit(chosen);
      return;
    }
    for (size_t i = start; i + (size - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  if (size >= 0 && size <= static_cast<int>(pool.size())) rec(0);
}

}  // namespace

long long integer_determinant(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<long long>(v / prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SparsePoly polynomial_determinant(std::vector<std::vector<SparsePoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  SparsePoly prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        SparsePoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw ConsistencyError("Bareiss step was not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = SparsePoly();
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

ExpandedLaplacian expanded_laplacian(const Multigraph& g, int removed_vertex) {
  if (!g.is_connected()) throw DomainError("expanded_laplacian: graph is disconnected");
  ExpandedLaplacian L;
  L.edge_count = g.edge_count();
  L.removed_vertex = resolve_removed(g, removed_vertex);
  std::vector<int> verts = kept_vertices(g, L.removed_vertex);
  const int E = g.edge_count(), n = E + static_cast<int>(verts.size());
  L.entries.assign(n, std::vector<SparsePoly>(n));
  for (int e = 1; e <= E; ++e) {
    L.entries[e - 1][e - 1] = SparsePoly::variable(e);
    for (size_t i = 0; i < verts.size(); ++i) {
      int s = incidence(g, verts[i], e);
      L.entries[e - 1][E + i] = s;
      L.entries[E + i][e - 1] = s;
    }
  }
  return L;
}

SparsePoly ExpandedLaplacian::determinant() const { return polynomial_determinant(entries); }

SparsePoly dodgson(const Multigraph& g, const DodgsonSpec& spec, int removed_vertex) {
  if (!g.is_connected()) throw DomainError("dodgson: graph is disconnected");
  const int E = g.edge_count(), V = g.vertex_count();
  for (const Word* w : {&spec.I, &spec.J, &spec.K})
    for (int e : *w)
      if (e < 1 || e > E) throw DomainError("dodgson: edge " + std::to_string(e) + " out of range");
  if (spec.I.size() != spec.J.size()) return {};
  const int sI = word_sign(spec.I), sJ = word_sign(spec.J);
  if (sI == 0 || sJ == 0) return {};
  for (const Edge& x : g.edges())
    if (x.is_loop()) throw DomainError("self-loops are not allowed in the expanded Laplacian");

  const int removed = resolve_removed(g, removed_vertex);
  const std::vector<int> verts = kept_vertices(g, removed);
  std::vector<bool> inI(E + 1, false), inJ(E + 1, false), inK(E + 1, false);
  for (int e : spec.I) inI[e] = true;
  for (int e : spec.J) inJ[e] = true;
  for (int e : spec.K) inK[e] = true;

  // 1-based positions of the surviving edge rows/columns inside the minor.
  std::vector<int> pos_r(E + 1, 0), pos_c(E + 1, 0);
  for (int e = 1, r = 0, c = 0; e <= E; ++e) {
    if (!inI[e]) pos_r[e] = ++r;
    if (!inJ[e]) pos_c[e] = ++c;
  }
  // Diagonal variables that survive in the minor.
  std::vector<int> active;
  for (int e = 1; e <= E; ++e)
    if (!inI[e] && !inJ[e] && !inK[e]) active.push_back(e);

  // The minor is multilinear in the surviving diagonal variables.  The
  // coefficient of prod_{e in S} a_e is the signed complementary minor of
  // the integer part, which has block form [[0, B], [C, 0]] and is non-zero
  // only when the remaining edge rows number exactly V - 1.
  const int a = V - 1;
  const int d = E - static_cast<int>(spec.I.size()) - a;
  SparsePoly det;
  std::map<EdgeSet, long long> row_cache, col_cache;
  auto cached = [&](std::map<EdgeSet, long long>& cache, const EdgeSet& edges) {
    auto it = cache.find(edges);
    if (it != cache.end()) return it->second;
    long long v = incidence_det(g, verts, edges);
    cache.emplace(edges, v);
    return v;
  };
  for_each_subset(active, d, [&](const std::vector<int>& S) {
    std::vector<bool> inS(E + 1, false);
    int pos_sum = 0;
    for (int e : S) {
      inS[e] = true;
      pos_sum += pos_r[e] + pos_c[e];
    }
    EdgeSet rows, cols;
    for (int e = 1; e <= E; ++e) {
      if (inS[e]) continue;
      if (!inI[e]) rows.push_back(e);
      if (!inJ[e]) cols.push_back(e);
    }
    // det B: rows are edges, columns vertices, i.e. the transpose of the
    // incidence submatrix on `rows`.
    long long dB = cached(row_cache, rows);
    if (dB == 0) return;
    long long dC = cached(col_cache, cols);
    if (dC == 0) return;
    long long v = dB * dC;
    if (a % 2) v = -v;
    if (pos_sum % 2) v = -v;
    det.add_term(SparsePoly::product_of(S).leading_monomial(), mpz_class(static_cast<long>(v)));
  });

  long long idx = 0;
  for (int e : spec.I) idx += e;
  for (int e : spec.J) idx += e;
  int sign = sI * sJ * (((V + idx - 1) % 2 == 0) ? 1 : -1);
  return sign < 0 ? -det : det;
}

namespace {

// Forests of g avoiding `forbidden` edges, compatible with p, as a sum of
// products of the variables of non-forest, non-forbidden edges.
SparsePoly forest_poly_avoiding(const Multigraph& g, const VertexPartition& p,
                                const std::vector<bool>& forbidden) {
  EdgeSet removed;
  std::vector<int> original;  // H edge id - 1 -> g edge id
  for (int e = 1; e <= g.edge_count(); ++e) {
    if (forbidden[e]) removed.push_back(e);
    else original.push_back(e);
  }
  Multigraph h = g.delete_edges(removed);
  SparsePoly out;
  for (const EdgeSet& f : spanning_forests(h, p)) {
    std::vector<int> vars;
    for (int e : complement(h, f)) vars.push_back(original[e - 1]);
    out += SparsePoly::product_of(vars);
  }
  return out;
}

}  // namespace

SparsePoly spanning_forest_poly(const Multigraph& g, const VertexPartition& p) {
  return forest_poly_avoiding(g, p, std::vector<bool>(g.edge_count() + 1, false));
}

std::vector<ForestTerm> dodgson_forest_expansion(const Multigraph& g, const DodgsonSpec& spec) {
  if (!spec.K.empty()) throw DomainError("forest expansion needs K empty (pass to a minor first)");
  if (spec.I.size() != spec.J.size()) throw DomainError("forest expansion needs |I| = |J|");
  std::set<int> sI(spec.I.begin(), spec.I.end()), sJ(spec.J.begin(), spec.J.end());
  if (sI.size() != spec.I.size() || sJ.size() != spec.J.size())
    throw DomainError("forest expansion needs words without repeated letters");
  // Shared letters only delete their edge (passing to the minor), so the
  // expansion runs on I' = I \ J and J' = J \ I with those edges forbidden.
  Word I1, J1;
  for (int e : spec.I)
    if (!sJ.count(e)) I1.push_back(e);
  for (int e : spec.J)
    if (!sI.count(e)) J1.push_back(e);
  const int E = g.edge_count();
  std::vector<bool> forbidden(E + 1, false);
  for (int e : spec.I) forbidden[e] = true;
  for (int e : spec.J) forbidden[e] = true;

  std::set<int> ends;
  for (int e : I1) ends.insert({g.edge(e).tail, g.edge(e).head});
  for (int e : J1) ends.insert({g.edge(e).tail, g.edge(e).head});

  std::vector<int> pool;
  for (int e = 1; e <= E; ++e)
    if (!forbidden[e]) pool.push_back(e);
  const std::vector<int> verts = kept_vertices(g, g.vertex_count() - 1);
  const int size = g.vertex_count() - 1 - static_cast<int>(I1.size());

  std::map<VertexPartition, int> sign_of;
  for_each_subset(pool, size, [&](const std::vector<int>& U) {
    // Columns ordered U first, then the word: the common U block then
    // factors out of both determinants as a square, leaving a sign that
    // depends only on how the trees of U meet the ends of I and J.
    EdgeSet ui(U), uj(U);
    ui.insert(ui.end(), I1.begin(), I1.end());
    uj.insert(uj.end(), J1.begin(), J1.end());
    EdgeSet ui_sorted(ui), uj_sorted(uj);
    std::sort(ui_sorted.begin(), ui_sorted.end());
    std::sort(uj_sorted.begin(), uj_sorted.end());
    if (!is_spanning_tree(g, ui_sorted) || !is_spanning_tree(g, uj_sorted)) return;
    long long f = incidence_det(g, verts, ui) * incidence_det(g, verts, uj);
    std::vector<int> label = forest_components(g, U);
    std::map<int, std::vector<int>> groups;
    for (int v : ends) groups[label[v]].push_back(v);
    VertexPartition P;
    for (auto& [root, part] : groups) P.parts.push_back(part);
    P = P.canonical();
    int s = f > 0 ? 1 : -1;
    auto [it, fresh] = sign_of.emplace(P, s);
    if (!fresh && it->second != s)
      throw ConsistencyError("forest expansion sign is not constant on partition " + P.to_string());
  });

  std::vector<ForestTerm> terms;
  for (auto& [P, s] : sign_of) terms.push_back({s, P});
  if (terms.empty()) return terms;
  SparsePoly target = dodgson(g, spec);
  SparsePoly sum = forest_expansion_sum(g, spec, terms);
  if (sum == -target) {
    for (auto& t : terms) t.sign = -t.sign;
  } else if (sum != target) {
    throw ConsistencyError("forest expansion does not reproduce the Dodgson polynomial");
  }
  return terms;
}

SparsePoly forest_expansion_sum(const Multigraph& g, const DodgsonSpec& spec,
                                const std::vector<ForestTerm>& terms) {
  std::vector<bool> forbidden(g.edge_count() + 1, false);
  for (int e : spec.I) forbidden[e] = true;
  for (int e : spec.J) forbidden[e] = true;
  SparsePoly sum;
  for (const ForestTerm& t : terms) {
    SparsePoly phi = forest_poly_avoiding(g, t.partition, forbidden);
    sum += t.sign > 0 ? phi : -phi;
  }
  return sum;
}

SparsePoly five_invariant(const Multigraph& g, const std::array<int, 5>& e) {
  if (g.edge_count() < 5) throw DomainError("five_invariant: graph has fewer than 5 edges");
  std::set<int> distinct(e.begin(), e.end());
  if (distinct.size() != 5) throw DomainError("five_invariant: edges must be distinct");
  const int e1 = e[0], e2 = e[1], e3 = e[2], e4 = e[3], e5 = e[4];
  SparsePoly a = dodgson(g, {{e1, e2}, {e3, e4}, {e5}}) * dodgson(g, {{e1, e3, e5}, {e2, e4, e5}, {}});
  SparsePoly b = dodgson(g, {{e1, e3}, {e2, e4}, {e5}}) * dodgson(g, {{e1, e2, e5}, {e3, e4, e5}, {}});
  return (a - b).sign_normalized();
}

ZigzagCoefficient zigzag_period_coefficient(int loops) {
  if (loops < 3) throw DomainError("zig-zag graphs start at three loops");
  mpz_class num, den1, den2;
  mpz_fac_ui(num.get_mpz_t(), 2 * loops - 2);
  mpz_fac_ui(den1.get_mpz_t(), loops);
  mpz_fac_ui(den2.get_mpz_t(), loops - 1);
  mpq_class base(4 * num, den1 * den2);
  base.canonicalize();
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * loops - 3);
  const int odd = loops % 2 ? 2 : 0;  // 1 - (-1)^l
  mpq_class correction = 1 - mpq_class(odd, two_pow);
  correction.canonicalize();
  ZigzagCoefficient z;
  z.value = base * correction;
  z.value.canonicalize();
  z.weight = 2 * loops - 3;
  return z;
}

}  // namespace c2kit
