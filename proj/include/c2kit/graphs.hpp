#pragma once

// Multigraphs with a fixed edge order, structural predicates and
// spanning tree / spanning forest enumeration.
//
// Edges are numbered 1..E in insertion order.  That order is the ordering
// used by every sign convention downstream (expanded Laplacian rows,
// Dodgson signs, incidence determinants).  Vertices are 0-based.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace c2kit {

struct Edge {
  int tail = 0;
  int head = 0;
  bool is_loop() const { return tail == head; }
};

// Sorted list of 1-based edge ids.
using EdgeSet = std::vector<int>;

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // 1-based edge access.
  const Edge& edge(int id) const;
  const std::vector<Edge>& edges() const { return edges_; }

  int add_edge(int tail, int head);

  // Degree counts a self-loop twice.
  int degree(int v) const;
  bool is_regular(int d) const;
  // Ids of edges incident to v (each loop listed once), ascending.
  std::vector<int> incident_edges(int v) const;
  // Distinct neighbours of v other than v itself, ascending.
  std::vector<int> neighbours(int v) const;
  int multiplicity(int u, int v) const;
  bool has_self_loop() const;
  bool is_simple() const;

  int component_count() const;
  bool is_connected() const;
  // l = E - V + C.
  int loop_order() const;

  Multigraph delete_edge(int e) const;
  // Identifies the head of e with its tail; parallel edges become loops.
  Multigraph contract_edge(int e) const;
  // Deletes all edges of `removed` (1-based ids), keeping relative order.
  Multigraph delete_edges(const EdgeSet& removed) const;

  bool operator==(const Multigraph& other) const;

 private:
  void check_vertex(int v) const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Partition of a marked vertex subset into disjoint non-empty parts.
struct VertexPartition {
  std::vector<std::vector<int>> parts;

  VertexPartition() = default;
  VertexPartition(std::initializer_list<std::vector<int>> ps);
  explicit VertexPartition(std::vector<std::vector<int>> ps);

  // Sorted parts, parts ordered by their smallest element.
  VertexPartition canonical() const;
  std::vector<int> marked() const;
  // Index of the part containing v, or -1.
  int part_of(int v) const;
  bool valid() const;
  bool operator==(const VertexPartition& o) const {
    return canonical().parts == o.canonical().parts;
  }
  bool operator<(const VertexPartition& o) const {
    return canonical().parts < o.canonical().parts;
  }
  std::string to_string() const;
};

// A spanning tree together with a complementary spanning forest.
struct EdgeBipartition {
  EdgeSet tree;
  EdgeSet forest;
  VertexPartition partition;

  bool operator==(const EdgeBipartition& o) const {
    return tree == o.tree && forest == o.forest;
  }
  bool operator<(const EdgeBipartition& o) const { return tree < o.tree; }
};

// Union-find over vertex ids, used by all forest enumerations.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

// Component label per vertex for the subgraph formed by `edges`.
std::vector<int> forest_components(const Multigraph& g, const EdgeSet& edges);
bool is_forest(const Multigraph& g, const EdgeSet& edges);
bool is_spanning_tree(const Multigraph& g, const EdgeSet& edges);
// True iff `edges` is a spanning forest with one tree per part of p and
// each part lying in a single tree.
bool is_compatible_forest(const Multigraph& g, const EdgeSet& edges,
                          const VertexPartition& p);
EdgeSet complement(const Multigraph& g, const EdgeSet& edges);

// All spanning trees, lexicographically ordered.  Throws DomainError if g is
// disconnected.
std::vector<EdgeSet> spanning_trees(const Multigraph& g);
// All spanning forests compatible with p (one tree per part).
std::vector<EdgeSet> spanning_forests(const Multigraph& g,
                                      const VertexPartition& p);
// Two-part specialisation.
std::vector<EdgeSet> spanning_2forests(const Multigraph& g,
                                       const VertexPartition& p);
// Number of spanning trees from the reduced graph Laplacian (exact).
long long matrix_tree_count(const Multigraph& g);

// Superficial degree of divergence 4l - 2E.
int sdd(const Multigraph& g);
// E = 2l and every non-empty proper edge subset has E(gamma) > 2 l(gamma).
// Exponential in E; refuses graphs with more than 24 edges.
bool is_primitive(const Multigraph& g);
// 4-regular, connected and every 4-edge cut isolates a single vertex.
bool is_completed_primitive(const Multigraph& g);
// Removes vertex v; remaining vertices and edges are renumbered in order.
Multigraph decompletion(const Multigraph& g, int v);

// Distinct common neighbours of the two ends of edge e.
std::vector<int> triangle_apexes(const Multigraph& g, int e);
// Double triangle reduction on e = (A, B) with A the tail: B is removed,
// one edge each of BA, BC, BD is deleted, B's other edges are reattached to
// A in place, and the new edge (C, D) is appended last.  Vertices above B
// shift down by one.
Multigraph double_triangle_reduce(const Multigraph& g, int e);
// Vertex id of v after double_triangle_reduce(g, e), or -1 if v was removed.
int dtr_vertex_image(const Multigraph& g, int e, int v);

// ---- text formats -------------------------------------------------------

// "V E" header followed by E lines "tail head" (0-based).
Multigraph parse_graph(const std::string& text);
std::string format_graph(const Multigraph& g);
// graph6 (simple graphs only); edges in lexicographic (i<j) order.
Multigraph parse_graph6(const std::string& text);
// Reads plain text or graph6 depending on content.
Multigraph read_graph_auto(const std::string& text);

// ---- generators ---------------------------------------------------------

Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
// Circulant C_n(steps): i ~ i +- s for each step s.
Multigraph circulant(int n, const std::vector<int>& steps);
// Two vertices joined by `m` parallel edges.
Multigraph banana(int m);
// Every edge of g repeated `times` times (copies adjacent in the order).
Multigraph multiply_edges(const Multigraph& g, int times);
// K4 with the labelling used throughout: vertex 0 is the hub; edges
// 1,2,3 join the hub to 1,2,3 and 4 = (1,2), 5 = (2,3), 6 = (1,3).  Edge 2
// is oriented into the hub, which makes Psi^{12,13} = a4 + a5 + a6 and
// Psi^{2,3}_1 = a4 a6 with positive signs.
Multigraph k4_canonical();
// Two graphs glued along vertices (a1,b1) of g1 and (a2,b2) of g2.
Multigraph glue_two_vertices(const Multigraph& g1, int a1, int b1,
                             const Multigraph& g2, int a2, int b2);
// Uniform-ish random connected simple 4-regular graph (configuration model
// with rejection).  Requires n >= 5.
Multigraph random_simple_4regular(int n, std::mt19937_64& rng);
// Random connected multigraph without self-loops.
Multigraph random_connected_multigraph(int vertices, int edges,
                                       std::mt19937_64& rng);
// All connected simple graphs on `vertices` vertices with edge count in
// [min_edges, max_edges], one representative per isomorphism class.
// Intended for vertices <= 6.
std::vector<Multigraph> connected_simple_graphs(int vertices, int min_edges,
                                                int max_edges);

}  // namespace c2kit
