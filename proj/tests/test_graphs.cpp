#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "c2kit/errors.hpp"
#include "c2kit/graphs.hpp"

using namespace c2kit;

namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Three vertices with every pair joined twice (completion of the one-loop
// bubble).
Multigraph doubled_triangle() { return multiply_edges(triangle(), 2); }

Multigraph doubled_square() { return multiply_edges(cycle_graph(4), 2); }

// Brute force: every acyclic edge set with V - 2 edges.
std::vector<EdgeSet> all_two_forests(const Multigraph& g) {
  std::vector<EdgeSet> out;
  const int E = g.edge_count(), k = g.vertex_count() - 2;
  for (unsigned mask = 0; mask < (1u << E); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    EdgeSet s;
    for (int e = 1; e <= E; ++e)
      if (mask >> (e - 1) & 1u) s.push_back(e);
    if (is_forest(g, s)) out.push_back(s);
  }
  return out;
}

std::vector<Multigraph> four_regular_corpus() {
  std::vector<Multigraph> out{complete_graph(5), circulant(7, {1, 2}), circulant(8, {1, 2}), circulant(8, {1, 3}),
                              circulant(6, {1, 2}), doubled_triangle(), doubled_square()};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 12; ++i) out.push_back(random_simple_4regular(5 + i % 4, rng));
  return out;
}

}  // namespace

TEST(SpanningTrees, Triangle) {
  EXPECT_EQ(spanning_trees(triangle()), (std::vector<EdgeSet>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(SpanningTrees, DoubledEdge) { EXPECT_EQ(spanning_trees(banana(2)), (std::vector<EdgeSet>{{1}, {2}})); }

TEST(SpanningTrees, K4HasSixteen) {
  EXPECT_EQ(spanning_trees(complete_graph(4)).size(), 16u);
  EXPECT_EQ(matrix_tree_count(complete_graph(4)), 16);
}

TEST(SpanningTrees, DisconnectedIsAnError) {
  EXPECT_THROW(spanning_trees(Multigraph(3, {{0, 1}})), DomainError);
}

TEST(SpanningTrees, MatrixTreeOracleOnSmallGraphs) {
  for (int v = 2; v <= 5; ++v)
    for (const Multigraph& g : connected_simple_graphs(v, v - 1, v * (v - 1) / 2)) {
      const auto trees = spanning_trees(g);
      EXPECT_EQ(static_cast<long long>(trees.size()), matrix_tree_count(g));
      for (const auto& t : trees) EXPECT_TRUE(is_spanning_tree(g, t));
    }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Multigraph g = random_connected_multigraph(3 + i % 4, 2 + i % 4 + i % 5, rng);
    EXPECT_EQ(static_cast<long long>(spanning_trees(g).size()), matrix_tree_count(g));
  }
}

TEST(SpanningForests, TriangleSeparated) {
  const Multigraph t(3, {{0, 1}, {1, 2}, {0, 2}});  // edges ab, bc, ac
  const auto f = spanning_2forests(t, VertexPartition{{0}, {1}});
  EXPECT_EQ(f, (std::vector<EdgeSet>{{2}, {3}}));
}

TEST(SpanningForests, TrianglePairTogether) {
  const Multigraph t(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(spanning_2forests(t, VertexPartition{{0}, {1, 2}}), (std::vector<EdgeSet>{{2}}));
}

TEST(SpanningForests, PathGivesEmptyForest) {
  EXPECT_EQ(spanning_2forests(Multigraph(2, {{0, 1}}), VertexPartition{{0}, {1}}), (std::vector<EdgeSet>{{}}));
}

TEST(SpanningForests, UnknownVertexIsAnError) {
  EXPECT_THROW(spanning_2forests(triangle(), VertexPartition{{0}, {7}}), DomainError);
}

TEST(SpanningForests, SeparatedAndColocatedPartitionAllTwoForests) {
  std::vector<Multigraph> corpus;
  for (int v = 3; v <= 5; ++v)
    for (const Multigraph& g : connected_simple_graphs(v, v - 1, v * (v - 1) / 2)) corpus.push_back(g);
  corpus.push_back(doubled_triangle());
  for (const Multigraph& g : corpus) {
    const auto all = all_two_forests(g);
    const auto apart = spanning_2forests(g, VertexPartition{{0}, {1}});
    size_t together = 0;
    for (const auto& f : all) {
      const auto comp = forest_components(g, f);
      if (comp[0] == comp[1]) ++together;
      else EXPECT_TRUE(std::binary_search(apart.begin(), apart.end(), f));
    }
    EXPECT_EQ(apart.size() + together, all.size());
  }
}

TEST(Sdd, Examples) {
  EXPECT_EQ(sdd(complete_graph(4)), 0);
  EXPECT_EQ(sdd(banana(2)), 0);
  EXPECT_EQ(sdd(triangle()), -2);
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(complete_graph(4)));
  EXPECT_TRUE(is_primitive(banana(2)));
  Multigraph k4 = complete_graph(4);
  k4.add_edge(0, 1);
  EXPECT_FALSE(is_primitive(k4));
}

TEST(CompletedPrimitive, Examples) {
  EXPECT_TRUE(is_completed_primitive(complete_graph(5)));
  EXPECT_TRUE(is_completed_primitive(doubled_triangle()));
  EXPECT_FALSE(is_completed_primitive(doubled_square()));
  EXPECT_THROW(is_completed_primitive(triangle()), DomainError);
}

TEST(CompletedPrimitive, EquivalentToPrimitiveDecompletions) {
  for (const Multigraph& g : four_regular_corpus()) {
    const bool completed = is_completed_primitive(g);
    for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(completed, is_primitive(decompletion(g, v)));
  }
}

TEST(Decompletion, Examples) {
  const Multigraph k4 = decompletion(complete_graph(5), 2);
  EXPECT_EQ(k4.vertex_count(), 4);
  EXPECT_EQ(k4.edge_count(), 6);
  EXPECT_TRUE(k4.is_simple());
  EXPECT_TRUE(k4.is_regular(3));

  const Multigraph edge = decompletion(triangle(), 0);
  EXPECT_EQ(edge.vertex_count(), 2);
  EXPECT_EQ(edge.edge_count(), 1);

  for (int v = 0; v < 3; ++v) {
    const Multigraph b = decompletion(doubled_triangle(), v);
    EXPECT_EQ(b.vertex_count(), 2);
    EXPECT_EQ(b.edge_count(), 2);
    EXPECT_EQ(b.multiplicity(0, 1), 2);
  }
  EXPECT_THROW(decompletion(triangle(), 5), DomainError);
}

TEST(Decompletion, PreservesRelativeEdgeOrder) {
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  const Multigraph d = decompletion(g, 0);
  ASSERT_EQ(d.edge_count(), 3);
  EXPECT_EQ(d.edge(1).tail, 0);
  EXPECT_EQ(d.edge(1).head, 1);
  EXPECT_EQ(d.edge(2).tail, 1);
  EXPECT_EQ(d.edge(2).head, 2);
  EXPECT_EQ(d.edge(3).tail, 0);
  EXPECT_EQ(d.edge(3).head, 2);
}

TEST(DoubleTriangle, RejectsInapplicableEdges) {
  const Multigraph k5 = complete_graph(5);
  for (int e = 1; e <= k5.edge_count(); ++e) EXPECT_THROW(double_triangle_reduce(k5, e), DomainError);
  EXPECT_THROW(double_triangle_reduce(cycle_graph(5), 1), DomainError);
}

TEST(DoubleTriangle, CirculantC7) {
  const Multigraph c7 = circulant(7, {1, 2});
  int e01 = 0;
  for (int e = 1; e <= c7.edge_count(); ++e)
    if (std::min(c7.edge(e).tail, c7.edge(e).head) == 0 && std::max(c7.edge(e).tail, c7.edge(e).head) == 1) e01 = e;
  ASSERT_GT(e01, 0);
  EXPECT_EQ(triangle_apexes(c7, e01).size(), 2u);
  const Multigraph r = double_triangle_reduce(c7, e01);
  EXPECT_EQ(r.vertex_count(), 6);
  EXPECT_EQ(r.edge_count(), 12);
  EXPECT_TRUE(r.is_regular(4));
  EXPECT_TRUE(r.is_connected());
}

TEST(Euler, HoldsAfterDecompletionAndReduction) {
  for (const Multigraph& g : four_regular_corpus()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Multigraph d = decompletion(g, v);
      EXPECT_EQ(d.loop_order(), d.edge_count() - d.vertex_count() + d.component_count());
      if (d.is_connected()) EXPECT_EQ(d.loop_order(), d.edge_count() - d.vertex_count() + 1);
    }
    for (int e = 1; e <= g.edge_count(); ++e) {
      if (triangle_apexes(g, e).size() != 2) continue;
      Multigraph r;
      try {
        r = double_triangle_reduce(g, e);
      } catch (const DomainError&) {
        continue;
      }
      EXPECT_EQ(r.loop_order(), r.edge_count() - r.vertex_count() + r.component_count());
    }
  }
}

TEST(Formats, TextRoundTrip) {
  const Multigraph g = circulant(7, {1, 2});
  EXPECT_EQ(parse_graph(format_graph(g)), g);
  EXPECT_EQ(read_graph_auto(format_graph(doubled_triangle())), doubled_triangle());
}

TEST(Formats, Graph6) {
  const Multigraph k4 = parse_graph6("C~");
  EXPECT_EQ(k4.vertex_count(), 4);
  EXPECT_EQ(k4.edge_count(), 6);
  EXPECT_TRUE(k4.is_simple());
  EXPECT_EQ(read_graph_auto("C~\n"), k4);
}

TEST(Formats, MalformedText) {
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0 5\n"), ParseError);
}

TEST(Structure, LoopOrderAndPredicates) {
  const Multigraph k5 = complete_graph(5);
  EXPECT_EQ(k5.loop_order(), 6);
  EXPECT_TRUE(k5.is_regular(4));
  EXPECT_TRUE(circulant(8, {1, 2}).is_regular(4));
  EXPECT_EQ(banana(3).loop_order(), 2);
  EXPECT_FALSE(banana(3).is_simple());
}
