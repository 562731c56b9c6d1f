#include "c2kit/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "c2kit/errors.hpp"

namespace c2kit {

// ---- Multigraph ---------------------------------------------------------

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  for (const Edge& e : edges_) {
    check_vertex(e.tail);
    check_vertex(e.head);
  }
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw DomainError("vertex id " + std::to_string(v) + " out of range");
}

const Edge& Multigraph::edge(int id) const {
  if (id < 1 || id > edge_count())
    throw DomainError("edge id " + std::to_string(id) + " out of range");
  return edges_[id - 1];
}

int Multigraph::add_edge(int tail, int head) {
  check_vertex(tail);
  check_vertex(head);
  edges_.push_back({tail, head});
  return edge_count();
}

int Multigraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (const Edge& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

bool Multigraph::is_regular(int d) const {
  for (int v = 0; v < vertex_count_; ++v)
    if (degree(v) != d) return false;
  return true;
}

std::vector<int> Multigraph::incident_edges(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].tail == v || edges_[i].head == v) out.push_back(i + 1);
  return out;
}

std::vector<int> Multigraph::neighbours(int v) const {
  check_vertex(v);
  std::set<int> s;
  for (const Edge& e : edges_) {
    if (e.tail == v && e.head != v) s.insert(e.head);
    if (e.head == v && e.tail != v) s.insert(e.tail);
  }
  return {s.begin(), s.end()};
}

int Multigraph::multiplicity(int u, int v) const {
  int m = 0;
  for (const Edge& e : edges_)
    if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) ++m;
  return m;
}

bool Multigraph::has_self_loop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::is_simple() const {
  if (has_self_loop()) return false;
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

int Multigraph::component_count() const {
  DisjointSets ds(vertex_count_);
  for (const Edge& e : edges_) ds.unite(e.tail, e.head);
  return ds.components();
}

bool Multigraph::is_connected() const {
  return vertex_count_ > 0 && component_count() == 1;
}

int Multigraph::loop_order() const {
  return edge_count() - vertex_count_ + component_count();
}

Multigraph Multigraph::delete_edge(int e) const {
  edge(e);
  return delete_edges({e});
}

Multigraph Multigraph::delete_edges(const EdgeSet& removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (int e : removed) {
    edge(e);
    drop[e - 1] = true;
  }
  std::vector<Edge> kept;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (!drop[i]) kept.push_back(edges_[i]);
  return Multigraph(vertex_count_, kept);
}

Multigraph Multigraph::contract_edge(int e) const {
  const Edge& c = edge(e);
  const int keep = c.tail, gone = c.head;
  if (keep == gone) return delete_edge(e);  // contracting a loop deletes it
  auto relabel = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Edge> out;
  for (int i = 0; i < edge_count(); ++i) {
    if (i + 1 == e) continue;
    out.push_back({relabel(edges_[i].tail), relabel(edges_[i].head)});
  }
  return Multigraph(vertex_count_ - 1, out);
}

bool Multigraph::operator==(const Multigraph& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size())
    return false;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].tail != other.edges_[i].tail ||
        edges_[i].head != other.edges_[i].head)
      return false;
  return true;
}

// ---- VertexPartition ----------------------------------------------------

VertexPartition::VertexPartition(std::initializer_list<std::vector<int>> ps)
    : parts(ps) {}

VertexPartition::VertexPartition(std::vector<std::vector<int>> ps)
    : parts(std::move(ps)) {}

VertexPartition VertexPartition::canonical() const {
  VertexPartition c = *this;
  for (auto& p : c.parts) std::sort(p.begin(), p.end());
  std::sort(c.parts.begin(), c.parts.end());
  return c;
}

std::vector<int> VertexPartition::marked() const {
  std::vector<int> m;
  for (const auto& p : parts) m.insert(m.end(), p.begin(), p.end());
  std::sort(m.begin(), m.end());
  return m;
}

int VertexPartition::part_of(int v) const {
  for (size_t i = 0; i < parts.size(); ++i)
    if (std::find(parts[i].begin(), parts[i].end(), v) != parts[i].end())
      return static_cast<int>(i);
  return -1;
}

bool VertexPartition::valid() const {
  std::vector<int> m = marked();
  for (const auto& p : parts)
    if (p.empty()) return false;
  return std::adjacent_find(m.begin(), m.end()) == m.end();
}

std::string VertexPartition::to_string() const {
  std::ostringstream os;
  VertexPartition c = canonical();
  for (size_t i = 0; i < c.parts.size(); ++i) {
    if (i) os << '|';
    os << '{';
    for (size_t j = 0; j < c.parts[i].size(); ++j)
      os << (j ? "," : "") << c.parts[i][j];
    os << '}';
  }
  return os.str();
}

// ---- DisjointSets -------------------------------------------------------

DisjointSets::DisjointSets(int n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

// ---- forests ------------------------------------------------------------

std::vector<int> forest_components(const Multigraph& g, const EdgeSet& edges) {
  DisjointSets ds(g.vertex_count());
  for (int e : edges) ds.unite(g.edge(e).tail, g.edge(e).head);
  std::vector<int> label(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) label[v] = ds.find(v);
  return label;
}

bool is_forest(const Multigraph& g, const EdgeSet& edges) {
  DisjointSets ds(g.vertex_count());
  for (int e : edges)
    if (!ds.unite(g.edge(e).tail, g.edge(e).head)) return false;
  return true;
}

bool is_spanning_tree(const Multigraph& g, const EdgeSet& edges) {
  return static_cast<int>(edges.size()) == g.vertex_count() - 1 &&
         is_forest(g, edges);
}

static bool partition_matches(const std::vector<int>& label,
                              const VertexPartition& p, int trees) {
  if (trees != static_cast<int>(p.parts.size())) return false;
  std::set<int> used;
  for (const auto& part : p.parts) {
    if (part.empty()) return false;
    int root = label[part[0]];
    for (int v : part)
      if (label[v] != root) return false;
    if (!used.insert(root).second) return false;
  }
  return true;
}

bool is_compatible_forest(const Multigraph& g, const EdgeSet& edges,
                          const VertexPartition& p) {
  if (!is_forest(g, edges)) return false;
  int trees = g.vertex_count() - static_cast<int>(edges.size());
  return partition_matches(forest_components(g, edges), p, trees);
}

EdgeSet complement(const Multigraph& g, const EdgeSet& edges) {
  std::vector<bool> in(g.edge_count() + 1, false);
  for (int e : edges) in[e] = true;
  EdgeSet out;
  for (int e = 1; e <= g.edge_count(); ++e)
    if (!in[e]) out.push_back(e);
  return out;
}

namespace {

// Depth-first enumeration of acyclic edge subsets of a fixed size.
// Edges are considered in increasing id order, so the output is
// lexicographically sorted.
class ForestEnumerator {
 public:
  ForestEnumerator(const Multigraph& g, int size) : g_(g), size_(size) {}

  template <class Visit>
  void run(Visit&& visit) {
    std::vector<int> parent(g_.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    EdgeSet chosen;
    recurse(1, parent, chosen, visit);
  }

 private:
  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  template <class Visit>
  void recurse(int next, std::vector<int>& parent, EdgeSet& chosen,
               Visit& visit) {
    if (static_cast<int>(chosen.size()) == size_) {
      visit(chosen);
      return;
    }
    int remaining = g_.edge_count() - next + 1;
    if (remaining < size_ - static_cast<int>(chosen.size())) return;
    for (int e = next; e <= g_.edge_count(); ++e) {
      if (g_.edge_count() - e + 1 < size_ - static_cast<int>(chosen.size()))
        break;
      int a = find(parent, g_.edge(e).tail), b = find(parent, g_.edge(e).head);
      if (a == b) continue;
      parent[b] = a;
      chosen.push_back(e);
      recurse(e + 1, parent, chosen, visit);
      chosen.pop_back();
      parent[b] = b;
    }
  }

  const Multigraph& g_;
  int size_;
};

}  // namespace

std::vector<EdgeSet> spanning_trees(const Multigraph& g) {
  if (!g.is_connected())
    throw DomainError("spanning_trees: graph is disconnected");
  std::vector<EdgeSet> out;
  ForestEnumerator(g, g.vertex_count() - 1).run([&](const EdgeSet& s) {
    out.push_back(s);
  });
  return out;
}

std::vector<EdgeSet> spanning_forests(const Multigraph& g,
                                      const VertexPartition& p) {
  for (int v : p.marked())
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("partition references unknown vertex " +
                        std::to_string(v));
  if (!p.valid()) throw DomainError("partition parts must be disjoint and non-empty");
  const int k = static_cast<int>(p.parts.size());
  std::vector<EdgeSet> out;
  if (k == 0 || k > g.vertex_count()) return out;
  ForestEnumerator(g, g.vertex_count() - k).run([&](const EdgeSet& s) {
    if (partition_matches(forest_components(g, s), p, k)) out.push_back(s);
  });
  return out;
}

std::vector<EdgeSet> spanning_2forests(const Multigraph& g,
                                       const VertexPartition& p) {
  if (p.parts.size() != 2)
    throw DomainError("spanning_2forests needs a two-part partition");
  return spanning_forests(g, p);
}

long long matrix_tree_count(const Multigraph& g) {
  const int n = g.vertex_count() - 1;
  if (n < 0) return 0;
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    int a = e.tail, b = e.head;
    if (a < n) m[a][a] += 1;
    if (b < n) m[b][b] += 1;
    if (a < n && b < n) {
      m[a][b] -= 1;
      m[b][a] -= 1;
    }
  }
  // Bareiss fraction-free elimination.
  __int128 prev = 1;
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
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return static_cast<long long>(sign * m[n - 1][n - 1]);
}

// ---- structural predicates ----------------------------------------------

int sdd(const Multigraph& g) { return 4 * g.loop_order() - 2 * g.edge_count(); }

bool is_primitive(const Multigraph& g) {
  if (!g.is_connected()) throw DomainError("is_primitive: graph is disconnected");
  const int E = g.edge_count();
  if (E != 2 * g.loop_order()) return false;
  if (E > 24) throw ResourceError("is_primitive: more than 24 edges");
  const std::uint64_t full = (std::uint64_t{1} << E) - 1;
  std::vector<int> seen(g.vertex_count(), -1);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    DisjointSets ds(g.vertex_count());
    int ev = 0, vv = 0;
    for (int i = 0; i < E; ++i) {
      if (!(mask >> i & 1)) continue;
      ++ev;
      const Edge& e = g.edges()[i];
      for (int x : {e.tail, e.head})
        if (seen[x] != static_cast<int>(mask)) {
          seen[x] = static_cast<int>(mask);
          ++vv;
        }
      ds.unite(e.tail, e.head);
    }
    // Components of the induced subgraph: unions among touched vertices.
    int comps = ds.components() - (g.vertex_count() - vv);
    int loops = ev - vv + comps;
    if (ev <= 2 * loops) return false;
  }
  return true;
}

bool is_completed_primitive(const Multigraph& g) {
  if (!g.is_regular(4)) throw DomainError("is_completed_primitive: graph is not 4-regular");
  if (g.vertex_count() < 3 || !g.is_connected())
    throw DomainError("is_completed_primitive: needs a connected graph on >= 3 vertices");
  const int E = g.edge_count();
  // Enumerate all 4-subsets of edges; a subset is a non-trivial cut when
  // its removal disconnects the graph without isolating a single vertex.
  // Smaller cuts show up as 4-subsets containing them.
  for (int a = 1; a <= E; ++a)
    for (int b = a + 1; b <= E; ++b)
      for (int c = b + 1; c <= E; ++c)
        for (int d = c + 1; d <= E; ++d) {
          Multigraph r = g.delete_edges({a, b, c, d});
          std::vector<int> label = forest_components(r, complement(r, {}));
          std::map<int, int> sizes;
          for (int x : label) ++sizes[x];
          if (sizes.size() < 2) continue;
          bool trivial = false;
          for (auto& [root, sz] : sizes)
            if (sz == 1 && sizes.size() == 2) trivial = true;
          if (!trivial) return false;
        }
  return true;
}

Multigraph decompletion(const Multigraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("decompletion: invalid vertex " + std::to_string(v));
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.tail == v || e.head == v) continue;
    out.push_back({e.tail > v ? e.tail - 1 : e.tail, e.head > v ? e.head - 1 : e.head});
  }
  return Multigraph(g.vertex_count() - 1, out);
}

std::vector<int> triangle_apexes(const Multigraph& g, int e) {
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) return {};
  std::vector<int> na = g.neighbours(ed.tail), nb = g.neighbours(ed.head), out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(out));
  return out;
}

Multigraph double_triangle_reduce(const Multigraph& g, int e) {
  const Edge ab = g.edge(e);
  std::vector<int> apex = triangle_apexes(g, e);
  if (apex.size() != 2)
    throw DomainError("double_triangle_reduce: edge " + std::to_string(e) +
                      " lies in " + std::to_string(apex.size()) +
                      " triangles, need exactly 2");
  const int A = ab.tail, B = ab.head, C = apex[0], D = apex[1];
  std::vector<bool> drop(g.edge_count() + 1, false);
  drop[e] = true;
  for (int target : {C, D}) {
    for (int id : g.incident_edges(B)) {
      const Edge& x = g.edge(id);
      if (!drop[id] && ((x.tail == B && x.head == target) ||
                        (x.head == B && x.tail == target))) {
        drop[id] = true;
        break;
      }
    }
  }
  auto relabel = [&](int v) {
    if (v == B) v = A;
    return v > B ? v - 1 : v;
  };
  std::vector<Edge> out;
  for (int id = 1; id <= g.edge_count(); ++id) {
    if (drop[id]) continue;
    Edge x = g.edge(id);
    Edge y{relabel(x.tail), relabel(x.head)};
    if (y.is_loop())
      throw DomainError("double_triangle_reduce: reattaching B's edges would create a self-loop");
    out.push_back(y);
  }
  out.push_back({relabel(C), relabel(D)});
  return Multigraph(g.vertex_count() - 1, out);
}

int dtr_vertex_image(const Multigraph& g, int e, int v) {
  const int B = g.edge(e).head;
  if (v == B) return -1;
  return v > B ? v - 1 : v;
}

// ---- text formats -------------------------------------------------------

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  long long V, E;
  if (!(in >> V >> E) || V < 0 || E < 0)
    throw ParseError("graph text must start with 'V E'");
  Multigraph g(static_cast<int>(V));
  for (long long i = 0; i < E; ++i) {
    long long t, h;
    if (!(in >> t >> h)) throw ParseError("expected " + std::to_string(E) + " edge lines");
    if (t < 0 || h < 0 || t >= V || h >= V)
      throw ParseError("edge endpoint out of range on edge " + std::to_string(i + 1));
    g.add_edge(static_cast<int>(t), static_cast<int>(h));
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after edge list");
  return g;
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.tail << ' ' << e.head << '\n';
  return os.str();
}

Multigraph parse_graph6(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  size_t pos = 0;
  long long n;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() > 1 && s[1] != 126) {
    if (s.size() < 4) throw ParseError("truncated graph6 header");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  } else {
    throw ParseError("graph6 graphs this large are not supported");
  }
  Multigraph g(static_cast<int>(n));
  std::vector<int> bits;
  for (size_t i = pos; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  size_t need = static_cast<size_t>(n * (n - 1) / 2);
  if (bits.size() < need) throw ParseError("truncated graph6 body");
  // Bits are ordered by column j, then row i < j; collect then sort to
  // lexicographic (i, j) order.
  std::vector<std::pair<int, int>> pairs;
  size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) pairs.push_back({i, j});
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) g.add_edge(i, j);
  return g;
}

Multigraph read_graph_auto(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  bool numeric = !trimmed.empty() &&
                 std::all_of(trimmed.begin(), trimmed.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; });
  return numeric ? parse_graph(text) : parse_graph6(text);
}

// ---- generators ---------------------------------------------------------

Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph cycle_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph circulant(int n, const std::vector<int>& steps) {
  std::set<std::pair<int, int>> pairs;
  for (int s : steps)
    for (int i = 0; i < n; ++i) {
      const int j = (i + s) % n;
      if (i != j) pairs.insert({std::min(i, j), std::max(i, j)});
    }
  Multigraph g(n);
  for (auto [a, b] : pairs) g.add_edge(a, b);
  return g;
}

Multigraph banana(int m) {
  Multigraph g(2);
  for (int i = 0; i < m; ++i) g.add_edge(0, 1);
  return g;
}

Multigraph multiply_edges(const Multigraph& g, int times) {
  Multigraph out(g.vertex_count());
  for (const Edge& e : g.edges())
    for (int i = 0; i < times; ++i) out.add_edge(e.tail, e.head);
  return out;
}

Multigraph k4_canonical() {
  return Multigraph(4, {{0, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 3}, {1, 3}});
}

Multigraph glue_two_vertices(const Multigraph& g1, int a1, int b1,
                             const Multigraph& g2, int a2, int b2) {
  const int n1 = g1.vertex_count();
  std::vector<int> map2(g2.vertex_count(), -1);
  int next = n1;
  for (int v = 0; v < g2.vertex_count(); ++v) {
    if (v == a2) map2[v] = a1;
    else if (v == b2) map2[v] = b1;
    else map2[v] = next++;
  }
  Multigraph g(next, g1.edges());
  for (const Edge& e : g2.edges()) g.add_edge(map2[e.tail], map2[e.head]);
  return g;
}

Multigraph random_simple_4regular(int n, std::mt19937_64& rng) {
  if (n < 5) throw DomainError("no simple 4-regular graph on fewer than 5 vertices");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 4; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> pairs;
    bool ok = true;
    for (size_t i = 0; i < stubs.size(); i += 2) {
      auto p = std::minmax(stubs[i], stubs[i + 1]);
      if (p.first == p.second || !pairs.insert({p.first, p.second}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Multigraph g(n);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    if (g.is_connected()) return g;
  }
  throw ResourceError("random_simple_4regular: rejection sampling failed");
}

Multigraph random_connected_multigraph(int vertices, int edges,
                                       std::mt19937_64& rng) {
  if (vertices < 1 || edges < vertices - 1)
    throw DomainError("random_connected_multigraph: too few edges to connect");
  if (vertices == 1 && edges > 0)
    throw DomainError("random_connected_multigraph: single vertex needs loops");
  Multigraph g(vertices);
  // Random spanning tree first, then extra edges.
  std::vector<int> order(vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(order[pick(rng)], order[i]);
  }
  std::uniform_int_distribution<int> any(0, vertices - 1);
  while (g.edge_count() < edges) {
    int a = any(rng), b = any(rng);
    if (a != b) g.add_edge(std::min(a, b), std::max(a, b));
  }
  // Shuffle edge order so the tree edges are not always first.
  std::vector<Edge> es = g.edges();
  std::shuffle(es.begin(), es.end(), rng);
  return Multigraph(vertices, es);
}

std::vector<Multigraph> connected_simple_graphs(int vertices, int min_edges,
                                                int max_edges) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) slots.push_back({i, j});
  const int S = static_cast<int>(slots.size());
  if (S > 21) throw ResourceError("connected_simple_graphs: too many vertices");
  std::vector<int> perm(vertices);
  std::vector<std::vector<int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> slot_index(vertices, std::vector<int>(vertices, -1));
  for (int s = 0; s < S; ++s) {
    slot_index[slots[s].first][slots[s].second] = s;
    slot_index[slots[s].second][slots[s].first] = s;
  }
  std::vector<Multigraph> out;
  for (std::uint32_t mask = 0; mask < (1u << S); ++mask) {
    int ec = __builtin_popcount(mask);
    if (ec < min_edges || ec > max_edges) continue;
    Multigraph g(vertices);
    for (int s = 0; s < S; ++s)
      if (mask >> s & 1) g.add_edge(slots[s].first, slots[s].second);
    if (!g.is_connected()) continue;
    std::uint32_t best = ~0u;
    for (const auto& p : perms) {
      std::uint32_t img = 0;
      for (int s = 0; s < S; ++s)
        if (mask >> s & 1) img |= 1u << slot_index[p[slots[s].first]][p[slots[s].second]];
      best = std::min(best, img);
    }
    if (best == mask) out.push_back(g);  // keep the minimal labelling only
  }
  return out;
}

}  // namespace c2kit
