#include "c2kit/bipartition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "c2kit/c2.hpp"
#include "c2kit/errors.hpp"

namespace c2kit {

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::AllShared: return "all-shared";
    case PairCase::T: return "T";
    case PairCase::S: return "S";
    case PairCase::R: return "R";
  }
  return "unknown";
}

// ---- case set-up --------------------------------------------------------

int CaseContext::label(char c) const {
  auto it = labels.find(c);
  if (it == labels.end()) throw DomainError(std::string("no vertex labelled ") + c);
  return it->second;
}

VertexPartition CaseContext::partition(const std::string& spec) const {
  std::vector<std::vector<int>> parts(1);
  for (char ch : spec) {
    if (ch == '|') {
      parts.emplace_back();
    } else {
      parts.back().push_back(label(ch));
    }
  }
  return VertexPartition(parts).canonical();
}

Multigraph remove_vertices(const Multigraph& g, std::vector<int> vertices, std::vector<int>* map) {
  std::vector<int> m(g.vertex_count(), 0);
  for (int x : vertices) {
    if (x < 0 || x >= g.vertex_count()) throw DomainError("invalid vertex " + std::to_string(x));
    m[x] = -1;
  }
  int next = 0;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (m[x] != -1) m[x] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (m[e.tail] >= 0 && m[e.head] >= 0) edges.push_back({m[e.tail], m[e.head]});
  if (map) *map = m;
  return Multigraph(next, edges);
}

CaseContext make_case_context(const Multigraph& g, int v, int w) {
  if (!g.is_simple()) throw DomainError("case analysis needs a simple graph");
  if (!g.is_regular(4) || !g.is_connected())
    throw DomainError("case analysis needs a connected 4-regular graph");
  if (g.multiplicity(v, w) != 1) throw DomainError("case analysis needs adjacent vertices");
  CaseContext ctx;
  ctx.g = g;
  ctx.v = v;
  ctx.w = w;
  std::vector<int> nv, nw, shared, only_v, only_w;
  for (int x : g.neighbours(v))
    if (x != w) nv.push_back(x);
  for (int x : g.neighbours(w))
    if (x != v) nw.push_back(x);
  std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(), std::back_inserter(shared));
  std::set_difference(nv.begin(), nv.end(), shared.begin(), shared.end(), std::back_inserter(only_v));
  std::set_difference(nw.begin(), nw.end(), shared.begin(), shared.end(), std::back_inserter(only_w));
  ctx.h = remove_vertices(g, {v, w}, &ctx.to_h);

  std::vector<std::pair<char, int>> named;
  auto assign = [&](const std::string& letters, const std::vector<int>& vs) {
    for (size_t i = 0; i < letters.size(); ++i) named.push_back({letters[i], vs[i]});
  };
  switch (shared.size()) {
    case 3:
      ctx.tag = PairCase::AllShared;
      assign("abc", shared);
      break;
    case 2:
      ctx.tag = PairCase::T;
      assign("a", only_w);
      assign("bc", shared);
      assign("d", only_v);
      break;
    case 1:
      ctx.tag = PairCase::S;
      assign("ab", only_w);
      assign("c", shared);
      assign("de", only_v);
      break;
    default:
      ctx.tag = PairCase::R;
      assign("abc", only_w);
      assign("def", only_v);
      break;
  }
  for (auto [ch, x] : named) {
    ctx.labels[ch] = ctx.to_h[x];
    ctx.marked.push_back(ctx.to_h[x]);
  }
  std::sort(ctx.marked.begin(), ctx.marked.end());
  return ctx;
}

// ---- counting -------------------------------------------------------------

std::optional<VertexPartition> induced_partition(const Multigraph& h, const EdgeSet& forest,
                                                 const std::vector<int>& marked) {
  if (!is_forest(h, forest) || h.vertex_count() - static_cast<int>(forest.size()) != 2)
    return std::nullopt;
  std::vector<int> comp = forest_components(h, forest);
  std::map<int, std::vector<int>> groups;
  for (int x : marked) groups[comp[x]].push_back(x);
  if (groups.size() != 2) return std::nullopt;
  std::vector<std::vector<int>> parts;
  for (auto& [k, vs] : groups) parts.push_back(vs);
  return VertexPartition(parts).canonical();
}

long long count_bipartitions(const Multigraph& h, const VertexPartition& p) {
  if (p.parts.size() != 2) throw DomainError("count_bipartitions needs a two-part partition");
  if (!p.valid()) return 0;  // overlapping parts can never be separated
  if (!h.is_connected()) return 0;
  long long n = 0;
  for (const EdgeSet& tree : spanning_trees(h))
    if (is_compatible_forest(h, complement(h, tree), p)) ++n;
  return n;
}

std::vector<EdgeBipartition> enumerate_bipartitions(const Multigraph& h, const std::vector<int>& marked) {
  std::vector<EdgeBipartition> out;
  if (!h.is_connected()) return out;
  for (const EdgeSet& tree : spanning_trees(h)) {
    EdgeSet forest = complement(h, tree);
    if (auto p = induced_partition(h, forest, marked)) out.push_back({tree, forest, *p});
  }
  return out;
}

long long c2_p2_via_counts(const Multigraph& g, int v, int u) {
  if (v < 0 || v >= g.vertex_count() || u < 0 || u >= g.vertex_count() || u == v)
    throw DomainError("c2_p2_via_counts: invalid vertices");
  std::vector<int> ends;
  for (int e : g.incident_edges(u)) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) throw DomainError("c2_p2_via_counts: u carries a self-loop");
    const int other = ed.tail == u ? ed.head : ed.tail;
    if (other != v) ends.push_back(other);
  }
  if (ends.size() != 3) throw DomainError("u must be 3-valent in G - v");
  std::vector<int> map;
  const Multigraph h = remove_vertices(g, {u, v}, &map);
  long long first = -1;
  for (int k = 0; k < 3; ++k) {
    const int u3 = map[ends[k]];
    std::vector<int> pair;
    for (int j = 0; j < 3; ++j)
      if (j != k) pair.push_back(map[ends[j]]);
    std::sort(pair.begin(), pair.end());
    pair.erase(std::unique(pair.begin(), pair.end()), pair.end());
    const long long r = count_bipartitions(h, VertexPartition{{u3}, pair}) % 2;
    if (first < 0) {
      first = r;
    } else if (r != first) {
      throw ConsistencyError("c2 via counts depends on the neighbour ordering");
    }
  }
  return first;
}

// ---- tree and forest helpers ------------------------------------------------

namespace {

struct ForestView {
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge)
  std::vector<int> comp;
};

ForestView view_of(const Multigraph& h, const EdgeSet& edges) {
  ForestView fv;
  fv.adj.resize(h.vertex_count());
  for (int e : edges) {
    const Edge& ed = h.edge(e);
    fv.adj[ed.tail].push_back({ed.head, e});
    fv.adj[ed.head].push_back({ed.tail, e});
  }
  fv.comp = forest_components(h, edges);
  return fv;
}

// Edges on the forest path from a to b, in order from a.
std::vector<int> forest_path(const ForestView& fv, int a, int b) {
  const int n = static_cast<int>(fv.adj.size());
  std::vector<int> via(n, -1), prev(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(a);
  seen[a] = true;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == b) break;
    for (auto [y, e] : fv.adj[x])
      if (!seen[y]) {
        seen[y] = true;
        prev[y] = x;
        via[y] = e;
        q.push(y);
      }
  }
  if (!seen[b]) throw ConsistencyError("no forest path between the given vertices");
  std::vector<int> path;
  for (int x = b; x != a; x = prev[x]) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Vertex sets of the components of tree-of-`root` minus `removed`, each
// paired with the edge joining it to the removed vertex it hangs off.
struct Branch {
  std::vector<int> vertices;
  int attach_edge = -1;
};

std::vector<Branch> branches_without(const ForestView& fv, int root, const std::set<int>& removed) {
  const int n = static_cast<int>(fv.adj.size());
  std::vector<int> label(n, -1);
  std::vector<Branch> out;
  // All vertices of the tree containing root.
  std::vector<int> tree;
  for (int x = 0; x < n; ++x)
    if (fv.comp[x] == fv.comp[root]) tree.push_back(x);
  for (int s : tree) {
    if (removed.count(s) || label[s] >= 0) continue;
    Branch br;
    std::vector<int> stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      br.vertices.push_back(x);
      for (auto [y, e] : fv.adj[x]) {
        if (removed.count(y)) {
          br.attach_edge = e;
          continue;
        }
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          stack.push_back(y);
        }
      }
    }
    std::sort(br.vertices.begin(), br.vertices.end());
    out.push_back(br);
  }
  return out;
}

int count_in(const std::vector<int>& vs, const std::vector<int>& part) {
  int k = 0;
  for (int x : part)
    if (std::binary_search(vs.begin(), vs.end(), x)) ++k;
  return k;
}

// Tree edge and tree neighbour of a leaf of the spanning tree.
std::pair<int, int> tree_leaf_edge(const Multigraph& h, const EdgeSet& tree, int v) {
  int found = -1, count = 0;
  for (int e : h.incident_edges(v))
    if (std::binary_search(tree.begin(), tree.end(), e)) {
      found = e;
      ++count;
    }
  if (count != 1) throw ConsistencyError("vertex " + std::to_string(v) + " is not a leaf of the tree");
  const Edge& ed = h.edge(found);
  return {found, ed.tail == v ? ed.head : ed.tail};
}

void move_edge(EdgeSet& from, EdgeSet& to, int e) {
  auto it = std::lower_bound(from.begin(), from.end(), e);
  if (it == from.end() || *it != e) throw ConsistencyError("edge " + std::to_string(e) + " not in the expected part");
  from.erase(it);
  to.insert(std::lower_bound(to.begin(), to.end(), e), e);
}

// Exchanges tree edge `te` with forest edge `fe`.
void exchange(EdgeBipartition& b, int te, int fe) {
  move_edge(b.tree, b.forest, te);
  move_edge(b.forest, b.tree, fe);
}

EdgeBipartition finalize(const Multigraph& h, EdgeBipartition b, const std::vector<int>& marked) {
  if (!is_spanning_tree(h, b.tree)) throw ConsistencyError("transformation broke the spanning tree");
  auto p = induced_partition(h, b.forest, marked);
  if (!p) throw ConsistencyError("transformation broke the spanning 2-forest");
  b.partition = *p;
  return b;
}

std::vector<int> part_with(const VertexPartition& p, int x) {
  const int i = p.part_of(x);
  if (i < 0) throw DomainError("vertex not marked");
  return p.parts[i];
}

bool is_trio_member(const CaseContext& ctx, int x, const std::string& trio) {
  for (char ch : trio)
    if (ctx.label(ch) == x) return true;
  return false;
}

// Swap around the 2-valent vertex c without touching the partition record.
void raw_swap_two_valent(const Multigraph& h, EdgeBipartition& b, int c) {
  std::vector<int> inc = h.incident_edges(c);
  if (inc.size() != 2 || h.degree(c) != 2) throw DomainError("vertex is not 2-valent");
  const bool first_in_tree = std::binary_search(b.tree.begin(), b.tree.end(), inc[0]);
  const bool second_in_tree = std::binary_search(b.tree.begin(), b.tree.end(), inc[1]);
  if (first_in_tree == second_in_tree)
    throw ConsistencyError("the 2-valent vertex is not split between tree and forest");
  if (first_in_tree) {
    exchange(b, inc[0], inc[1]);
  } else {
    exchange(b, inc[1], inc[0]);
  }
}

}  // namespace

// ---- involutions ----------------------------------------------------------

EdgeBipartition swap_two_valent(const Multigraph& h, const EdgeBipartition& b, int c,
                                const std::vector<int>& marked) {
  if (h.degree(c) != 2) throw DomainError("swap_two_valent: vertex is not 2-valent");
  for (const auto& part : b.partition.parts) {
    const bool other = std::any_of(part.begin(), part.end(), [c](int x) { return x != c; });
    if (!other) throw DomainError("swap_two_valent: a part holds no marked vertex besides c");
  }
  EdgeBipartition out = b;
  raw_swap_two_valent(h, out, c);
  return finalize(h, out, marked);
}

ControlVertexResult find_control_vertex(const Multigraph& h, const EdgeBipartition& b,
                                        const std::vector<int>& part_in, int x, ControlMode mode) {
  std::vector<int> part = part_in;
  std::sort(part.begin(), part.end());
  if (part.size() != 4) throw DomainError("control vertex needs a four-element part");
  if (!std::binary_search(part.begin(), part.end(), x)) throw DomainError("special vertex not in the part");
  const ForestView fv = view_of(h, b.forest);
  for (int y : part)
    if (fv.comp[y] != fv.comp[x]) throw DomainError("part does not lie in one forest tree");

  std::vector<int> hits;
  for (int u = 0; u < h.vertex_count(); ++u) {
    if (fv.comp[u] != fv.comp[x]) continue;
    std::vector<std::vector<int>> groups;
    for (const Branch& br : branches_without(fv, u, {u})) {
      std::vector<int> g;
      for (int y : part)
        if (std::binary_search(br.vertices.begin(), br.vertices.end(), y)) g.push_back(y);
      if (!g.empty()) groups.push_back(g);
    }
    if (std::binary_search(part.begin(), part.end(), u)) groups.push_back({u});
    std::vector<size_t> sizes;
    for (auto& g : groups) sizes.push_back(g.size());
    std::sort(sizes.begin(), sizes.end());
    if (sizes != std::vector<size_t>{1, 1, 2}) continue;
    bool x_in_pair = false;
    for (auto& g : groups)
      if (g.size() == 2 && std::find(g.begin(), g.end(), x) != g.end()) x_in_pair = true;
    if ((mode == ControlMode::InTwoPart) == x_in_pair) hits.push_back(u);
  }
  if (hits.size() != 1)
    throw ConsistencyError("expected a unique control vertex, found " + std::to_string(hits.size()));
  const int u = hits[0];
  const int valence = static_cast<int>(fv.adj[u].size());
  const bool in_part = std::binary_search(part.begin(), part.end(), u);
  if (!((valence == 2 && in_part) || (valence == 3 && !in_part)))
    throw ConsistencyError("control vertex has unexpected valence in its tree");
  ControlVertexResult r;
  r.vertices = {u};
  r.kind = ControlKind::SingleControl;
  r.tree_edges = {tree_leaf_edge(h, b.tree, u).first};
  return r;
}

ControlVertexResult find_two_control_vertices(const Multigraph& h, const EdgeBipartition& b,
                                              const std::vector<int>& part_in) {
  std::vector<int> part = part_in;
  std::sort(part.begin(), part.end());
  if (part.size() != 5) throw DomainError("two control vertices need a five-element part");
  const ForestView fv = view_of(h, b.forest);
  for (int y : part)
    if (fv.comp[y] != fv.comp[part[0]]) throw DomainError("part does not lie in one forest tree");
  std::vector<int> tree;
  for (int u = 0; u < h.vertex_count(); ++u)
    if (fv.comp[u] == fv.comp[part[0]]) tree.push_back(u);
  if (tree.size() < 5) throw DomainError("tree too small for two control vertices");

  std::vector<std::pair<int, int>> hits;
  for (size_t i = 0; i < tree.size(); ++i)
    for (size_t j = i + 1; j < tree.size(); ++j) {
      const int u1 = tree[i], u2 = tree[j];
      const bool adjacent = std::any_of(fv.adj[u1].begin(), fv.adj[u1].end(),
                                        [u2](auto pr) { return pr.first == u2; });
      if (adjacent) continue;
      bool all_single = true;
      for (const Branch& br : branches_without(fv, u1, {u1, u2}))
        if (count_in(br.vertices, part) > 1) all_single = false;
      if (all_single) hits.push_back({u1, u2});
    }
  if (hits.size() != 1)
    throw ConsistencyError("expected a unique control pair, found " + std::to_string(hits.size()));
  ControlVertexResult r;
  r.kind = ControlKind::DoubleControl;
  for (int u : {hits[0].first, hits[0].second}) {
    const int valence = static_cast<int>(fv.adj[u].size());
    const bool in_part = std::binary_search(part.begin(), part.end(), u);
    if (!((valence == 2 && in_part) || (valence == 3 && !in_part)))
      throw ConsistencyError("control vertex has unexpected valence in its tree");
    r.vertices.push_back(u);
    r.tree_edges.push_back(tree_leaf_edge(h, b.tree, u).first);
  }
  return r;
}

namespace {

void require_case(const CaseContext& ctx, PairCase c, const char* who) {
  if (ctx.tag != c) throw DomainError(std::string(who) + " called on a " + to_string(ctx.tag) + "-case pair");
}

// First forest edge at v on the way to whichever branch of t - v the
// selector picks.
int edge_towards(const ForestView& fv, int v, int target) { return forest_path(fv, v, target).front(); }

// The single-control swap: "stays in" when the tree neighbour of the
// control vertex lies in the same forest tree, otherwise "goes out" along
// out_edge.  Returns true when the stay-in branch was taken.
bool control_swap(const Multigraph& h, EdgeBipartition& b, int v, int out_edge) {
  const ForestView fv = view_of(h, b.forest);
  const auto [eta_v, n_v] = tree_leaf_edge(h, b.tree, v);
  if (fv.comp[n_v] == fv.comp[v]) {
    exchange(b, eta_v, edge_towards(fv, v, n_v));
    return true;
  }
  exchange(b, eta_v, out_edge);
  return false;
}

}  // namespace

EdgeBipartition involution_S(const CaseContext& ctx, const EdgeBipartition& b) {
  require_case(ctx, PairCase::S, "involution_S");
  const Multigraph& h = ctx.h;
  const int c = ctx.label('c');
  const std::vector<int> four = part_with(b.partition, c);
  if (four.size() != 4) throw DomainError("involution_S: shape is not {*}|{c,*,*,*}");
  const ForestView fv = view_of(h, b.forest);
  const int n_c = tree_leaf_edge(h, b.tree, c).second;
  EdgeBipartition out = b;
  if (fv.comp[n_c] == fv.comp[c]) {  // (1) swapping c stays in
    raw_swap_two_valent(h, out, c);
    return finalize(h, out, ctx.marked);
  }
  const int v = find_control_vertex(h, b, four, c, ControlMode::InTwoPart).vertices[0];
  const bool stayed = control_swap(h, out, v, edge_towards(fv, v, c));
  if (!stayed) raw_swap_two_valent(h, out, c);  // (2ii) finishes with a c swap
  return finalize(h, out, ctx.marked);
}

EdgeBipartition involution_S_swapped(const CaseContext& ctx, const EdgeBipartition& b) {
  require_case(ctx, PairCase::S, "involution_S_swapped");
  const Multigraph& h = ctx.h;
  const int c = ctx.label('c');
  if (part_with(b.partition, c).size() != 2) throw DomainError("involution_S_swapped: shape is not {c,*}|{*,*,*}");
  const ForestView fv = view_of(h, b.forest);
  const int n_c = tree_leaf_edge(h, b.tree, c).second;
  EdgeBipartition out = b;
  raw_swap_two_valent(h, out, c);
  if (fv.comp[n_c] == fv.comp[c]) return finalize(h, out, ctx.marked);  // (1)
  // (2): the first c swap moved c into the other tree, giving {*}|{c,*,*,*}.
  out = finalize(h, out, ctx.marked);
  const std::vector<int> four = part_with(out.partition, c);
  if (four.size() != 4) throw ConsistencyError("involution_S_swapped: unexpected intermediate shape");
  const int v = find_control_vertex(h, out, four, c, ControlMode::InTwoPart).vertices[0];
  const ForestView fv2 = view_of(h, out.forest);
  const bool stayed = control_swap(h, out, v, edge_towards(fv2, v, c));
  if (stayed) raw_swap_two_valent(h, out, c);  // the extra c swap moves to (2i)
  return finalize(h, out, ctx.marked);
}

EdgeBipartition involution_R_single(const CaseContext& ctx, const EdgeBipartition& b) {
  require_case(ctx, PairCase::R, "involution_R_single");
  const Multigraph& h = ctx.h;
  std::vector<int> four, two;
  for (const auto& part : b.partition.parts) (part.size() == 4 ? four : two) = part;
  if (four.size() != 4 || two.size() != 2) throw DomainError("involution_R_single: shape is not {y,z}|{x,*,*,*}");
  const std::string trio = is_trio_member(ctx, two[0], "abc") ? "abc" : "def";
  if (!is_trio_member(ctx, two[1], trio)) throw DomainError("involution_R_single: pair is not from one trio");
  int x = -1;
  for (int y : four)
    if (is_trio_member(ctx, y, trio)) x = y;
  const int v = find_control_vertex(h, b, four, x, ControlMode::SingletonOrSelf).vertices[0];
  const ForestView fv = view_of(h, b.forest);
  int out_edge = -1;
  for (const Branch& br : branches_without(fv, v, {v}))
    if (count_in(br.vertices, four) == 2) out_edge = br.attach_edge;
  if (out_edge < 0) throw ConsistencyError("involution_R_single: no branch with two part vertices");
  EdgeBipartition out = b;
  control_swap(h, out, v, out_edge);
  return finalize(h, out, ctx.marked);
}

EdgeBipartition involution_R_double(const CaseContext& ctx, const EdgeBipartition& b) {
  require_case(ctx, PairCase::R, "involution_R_double");
  const Multigraph& h = ctx.h;
  std::vector<int> five;
  for (const auto& part : b.partition.parts)
    if (part.size() == 5) five = part;
  if (five.empty()) throw DomainError("involution_R_double: shape is not {x}|{*,*,*,*,*}");
  const ControlVertexResult cv = find_two_control_vertices(h, b, five);
  const int v = cv.vertices[0], w = cv.vertices[1];
  const ForestView fv = view_of(h, b.forest);
  const auto [eta_v, n_v] = tree_leaf_edge(h, b.tree, v);
  const auto [eta_w, n_w] = tree_leaf_edge(h, b.tree, w);
  const bool v_in = fv.comp[n_v] == fv.comp[v], w_in = fv.comp[n_w] == fv.comp[w];
  EdgeBipartition out = b;
  if (v_in || w_in) {
    // Both exchange edges are chosen on the original forest.
    const int e1 = v_in ? edge_towards(fv, v, n_v) : -1;
    const int e2 = w_in ? edge_towards(fv, w, n_w) : -1;
    if (v_in) exchange(out, eta_v, e1);
    if (w_in) exchange(out, eta_w, e2);
  } else {
    const int e1 = edge_towards(fv, v, w), e2 = edge_towards(fv, w, v);
    exchange(out, eta_v, e1);
    exchange(out, eta_w, e2);
  }
  return finalize(h, out, ctx.marked);
}

// ---- verification ---------------------------------------------------------

namespace {

using Op = std::function<EdgeBipartition(const EdgeBipartition&)>;

InvolutionCheck run_involution(const std::string& name, const std::vector<EdgeBipartition>& all,
                               const std::vector<VertexPartition>& domain, const Op& op) {
  InvolutionCheck chk;
  chk.name = name;
  auto in_domain = [&](const VertexPartition& p) {
    return std::find(domain.begin(), domain.end(), p) != domain.end();
  };
  for (const EdgeBipartition& b : all) {
    if (!in_domain(b.partition)) continue;
    ++chk.domain_size;
    bool good = true;
    try {
      const EdgeBipartition img = op(b);
      if (img == b) {
        chk.fixed_point_free = false;
        good = false;
      }
      if (!in_domain(img.partition)) {
        chk.closed = false;
        good = false;
      } else if (!(op(img) == b)) {
        chk.involutive = false;
        good = false;
      }
    } catch (const std::exception&) {
      // The transformation left the space of (tree, 2-forest) pairs.
      chk.closed = false;
      good = false;
    }
    if (!good) ++chk.failures;
  }
  return chk;
}

long long sum_counts(const std::vector<EdgeBipartition>& all, const std::vector<VertexPartition>& ps) {
  long long n = 0;
  for (const EdgeBipartition& b : all)
    if (std::find(ps.begin(), ps.end(), b.partition) != ps.end()) ++n;
  return n;
}

std::vector<VertexPartition> parts_of(const CaseContext& ctx, std::initializer_list<const char*> specs) {
  std::vector<VertexPartition> out;
  for (const char* s : specs) out.push_back(ctx.partition(s));
  return out;
}

// All bipartitions of `letters` into a singleton and the rest / a pair and
// the rest, as spec strings.
std::vector<VertexPartition> singleton_splits(const CaseContext& ctx, const std::string& letters,
                                              const std::string& only_from) {
  std::vector<VertexPartition> out;
  for (char x : only_from) {
    std::string rest;
    for (char y : letters)
      if (y != x) rest += y;
    out.push_back(ctx.partition(std::string(1, x) + "|" + rest));
  }
  return out;
}

}  // namespace

bool PairReport::ok() const {
  return std::all_of(parities.begin(), parities.end(), [](const ParityCheck& p) { return p.ok(); }) &&
         std::all_of(involutions.begin(), involutions.end(), [](const InvolutionCheck& c) { return c.ok(); });
}

bool CompletionReport::all_equal() const {
  for (size_t i = 0; i < c2_counts.size(); ++i)
    if (c2_counts[i] != c2_counts[0] || c2_coeff[i] != c2_counts[0]) return false;
  return true;
}

bool CompletionReport::ok() const {
  return all_equal() && std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.ok(); });
}

PairReport check_pair(const CaseContext& ctx, long long c2_v, long long c2_w) {
  PairReport rep;
  rep.v = ctx.v;
  rep.w = ctx.w;
  rep.tag = ctx.tag;
  const Multigraph& h = ctx.h;
  if (ctx.tag == PairCase::AllShared) return rep;
  const std::vector<EdgeBipartition> all = enumerate_bipartitions(h, ctx.marked);
  auto count = [&](const char* spec) { return count_bipartitions(h, ctx.partition(spec)); };
  auto total = [&](const std::vector<VertexPartition>& ps) { return sum_counts(all, ps); };

  if (ctx.tag == PairCase::T) {
    rep.parities.push_back({"c2(G-v) = t_{a|bc}", c2_v, count("a|bc")});
    rep.parities.push_back({"c2(G-w) = t_{d|bc}", c2_w, count("d|bc")});
    const auto d1 = parts_of(ctx, {"a|bcd", "ab|cd"});
    const auto d2 = parts_of(ctx, {"d|abc", "ab|cd"});
    rep.parities.push_back({"t_{a|bcd} + t_{ab|cd}", total(d1), 0});
    rep.parities.push_back({"t_{d|abc} + t_{ab|cd}", total(d2), 0});
    const int b = ctx.label('b'), c = ctx.label('c');
    rep.involutions.push_back(run_involution("swap around b", all, d1,
        [&](const EdgeBipartition& x) { return swap_two_valent(h, x, b, ctx.marked); }));
    rep.involutions.push_back(run_involution("swap around c", all, d2,
        [&](const EdgeBipartition& x) { return swap_two_valent(h, x, c, ctx.marked); }));
  } else if (ctx.tag == PairCase::S) {
    rep.parities.push_back({"c2(G-v) = s_{c|ab}", c2_v, count("c|ab")});
    rep.parities.push_back({"c2(G-w) = s_{c|de}", c2_w, count("c|de")});
    const auto swap_c = parts_of(ctx, {"abc|de", "ab|cde"});
    const auto one_four = singleton_splits(ctx, "abcde", "abde");
    const auto two_three = parts_of(ctx, {"ac|bde", "bc|ade", "cd|abe", "ce|abd"});
    rep.parities.push_back({"s_{abc|de} + s_{ab|cde}", total(swap_c), 0});
    rep.parities.push_back({"sum s_{x|c***}", total(one_four), 0});
    rep.parities.push_back({"sum s_{cx|***}", total(two_three), 0});
    const int c = ctx.label('c');
    rep.involutions.push_back(run_involution("swap around c", all, swap_c,
        [&](const EdgeBipartition& x) { return swap_two_valent(h, x, c, ctx.marked); }));
    rep.involutions.push_back(run_involution("control vertex with c", all, one_four,
        [&](const EdgeBipartition& x) { return involution_S(ctx, x); }));
    rep.involutions.push_back(run_involution("control vertex with c, swapped", all, two_three,
        [&](const EdgeBipartition& x) { return involution_S_swapped(ctx, x); }));
  } else {
    for (const char* spec : {"a|bc", "b|ac", "c|ab"})
      rep.parities.push_back({std::string("c2(G-v) = r_{") + spec + "}", c2_v, count(spec)});
    for (const char* spec : {"d|ef", "e|df", "f|de"})
      rep.parities.push_back({std::string("c2(G-w) = r_{") + spec + "}", c2_w, count(spec)});
    const auto pairs = parts_of(ctx, {"ab|cdef", "ac|bdef", "bc|adef", "de|abcf", "df|abce", "ef|abcd"});
    const auto singles = singleton_splits(ctx, "abcdef", "abcdef");
    rep.parities.push_back({"sum r_{yz|x***}", total(pairs), 0});
    rep.parities.push_back({"sum r_{x|*****}", total(singles), 0});
    rep.involutions.push_back(run_involution("single control vertex", all, pairs,
        [&](const EdgeBipartition& x) { return involution_R_single(ctx, x); }));
    rep.involutions.push_back(run_involution("two control vertices", all, singles,
        [&](const EdgeBipartition& x) { return involution_R_double(ctx, x); }));
  }
  return rep;
}

CompletionReport verify_completion_p2(const Multigraph& g) {
  if (!g.is_regular(4) || !g.is_connected())
    throw DomainError("completion check needs a connected 4-regular graph");
  CompletionReport rep;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    int u = -1;
    for (int x : g.neighbours(v))
      if (g.multiplicity(v, x) == 1 && g.degree(x) - 1 == 3) {
        u = x;
        break;
      }
    if (u < 0) throw DomainError("no vertex of G - v is 3-valent next to v");
    rep.c2_counts.push_back(c2_p2_via_counts(g, v, u));
    rep.c2_coeff.push_back(c2_coeff(decompletion(g, v), 2).value);
  }
  if (!g.is_simple()) {
    rep.cases_skipped = true;
    return rep;
  }
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbours(v)) {
      if (w <= v) continue;
      CaseContext ctx = make_case_context(g, v, w);
      rep.pairs.push_back(check_pair(ctx, rep.c2_counts[v], rep.c2_counts[w]));
    }
  return rep;
}

}  // namespace c2kit
