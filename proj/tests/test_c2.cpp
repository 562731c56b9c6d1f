#include <gtest/gtest.h>

#include "c2kit/c2.hpp"
#include "c2kit/errors.hpp"

using namespace c2kit;

namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

void expect_routes_agree(const Multigraph& g, long long p, long long expected) {
  const auto values = c2_all(g, p);
  ASSERT_FALSE(values.empty());
  for (const C2Value& v : values) {
    EXPECT_EQ(v.p, p);
    EXPECT_EQ(v.value, expected) << v.method << " p=" << p << "\n" << format_graph(g);
  }
}

// Two copies of K4 minus an edge, joined by two edges: a 2-edge cut (and
// hence a non-trivial cut of size at most 4).
Multigraph two_edge_cut_graph() {
  Multigraph g(8);
  for (int base : {0, 4}) {
    g.add_edge(base, base + 1);
    g.add_edge(base, base + 2);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base + 1, base + 3);
    g.add_edge(base + 2, base + 3);
  }
  g.add_edge(0, 4);
  g.add_edge(3, 7);
  return g;
}

}  // namespace

TEST(C2, K4IsMinusOne) {
  const Multigraph k4 = k4_canonical();
  for (long long p : {2, 3, 5}) {
    expect_routes_agree(k4, p, p - 1);
    if (p > 2) EXPECT_EQ(c2_definition(k4, p).signed_value(), -1);
  }
  EXPECT_EQ(c2_all(k4, 2).size(), 3u);
  EXPECT_EQ(c2_all(k4, 3).size(), 4u);
}

TEST(C2, K4PointCounts) {
  const SparsePoly psi = kirchhoff(k4_canonical());
  EXPECT_EQ(point_count(psi, PrimeField(2), 6), 36);
  EXPECT_EQ(point_count(psi, PrimeField(3), 6), 261);
}

TEST(C2, TriangleByDefinition) {
  // A linear form in three variables has exactly p^2 zeros.
  for (long long p : {2, 3, 5}) EXPECT_EQ(c2_definition(triangle(), p).value, 1);
}

TEST(C2, DecompletionsOfC7) {
  const Multigraph c7 = circulant(7, {1, 2});
  for (int v : {0, 3}) {
    const Multigraph g = decompletion(c7, v);
    for (long long p : {2, 3}) {
      const long long ref = c2_definition(g, p).value;
      expect_routes_agree(g, p, ref);
    }
  }
}

TEST(C2, CompletionInvariantOnK5) {
  // Every decompletion of K5 is K4.
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c2_definition(decompletion(complete_graph(5), v), 3).value, 2);
}

TEST(C2, TripleIndependence) {
  const Multigraph g = decompletion(circulant(7, {1, 2}), 0);
  const long long ref = c2_definition(g, 2).value;
  for (std::array<int, 3> t : {std::array<int, 3>{1, 2, 3}, {4, 9, 2}, {10, 5, 7}, {3, 6, 8}})
    EXPECT_EQ(c2_coeff(g, 2, t).value, ref);
  EXPECT_THROW(c2_coeff(g, 2, {1, 1, 2}), DomainError);
}

TEST(C2, Divisibility) {
  for (int v = 3; v <= 6; ++v)
    for (const Multigraph& g : connected_simple_graphs(v, v - 1, 8))
      for (long long p : {2, 3}) {
        const mpz_class n = point_count(kirchhoff(g), PrimeField(p), g.edge_count());
        EXPECT_EQ(n % static_cast<long>(p * p), 0) << format_graph(g);
      }
}

TEST(C2, WeightDropGivesZero) {
  const Multigraph joined = glue_two_vertices(triangle(), 0, 1, triangle(), 0, 1);
  for (long long p : {2, 3}) expect_routes_agree(joined, p, 0);
}

TEST(C2, SmallCutGivesZero) {
  const Multigraph g = two_edge_cut_graph();
  ASSERT_EQ(g.edge_count(), 12);
  ASSERT_EQ(g.loop_order(), 5);
  // 2l < E: the reduction route returns 0 directly.
  for (long long p : {2, 3}) {
    EXPECT_EQ(c2_denom(g, p).value, 0);
    EXPECT_EQ(c2_definition(g, p).value, 0);
  }
}

TEST(C2, Preconditions) {
  EXPECT_THROW(c2_coeff(triangle(), 2), DomainError);
  EXPECT_THROW(c2_legendre(k4_canonical(), 2), DomainError);
  EXPECT_THROW(c2_denom(triangle(), 2), DomainError);
  EXPECT_THROW(c2_definition(k4_canonical(), 4), DomainError);
}

TEST(C2, SignedDisplay) {
  EXPECT_EQ((C2Value{5, 4, "x"}).signed_value(), -1);
  EXPECT_EQ((C2Value{5, 2, "x"}).signed_value(), 2);
  EXPECT_EQ((C2Value{2, 1, "x"}).signed_value(), 1);
}

TEST(Dtr, InvarianceOnC7) {
  const Multigraph c7 = circulant(7, {1, 2});
  int admissible = 0;
  for (int e = 1; e <= c7.edge_count(); ++e) {
    if (triangle_apexes(c7, e).size() != 2) continue;
    Multigraph r;
    try {
      r = double_triangle_reduce(c7, e);
    } catch (const DomainError&) {
      continue;
    }
    ++admissible;
    const Edge& ed = c7.edge(e);
    for (int v = 0; v < c7.vertex_count(); ++v) {
      if (v == ed.tail || v == ed.head) continue;
      EXPECT_TRUE(dtr_invariance_check(c7, e, v, {2, 3}));
      // Same comparison through point counts of the decompletions.
      const Multigraph before = decompletion(c7, v), after = decompletion(r, dtr_vertex_image(c7, e, v));
      for (long long p : {2, 3}) EXPECT_EQ(c2_definition(before, p).value, c2_definition(after, p).value);
      break;
    }
    if (admissible >= 2) break;
  }
  EXPECT_EQ(admissible, 2);
}

TEST(Dtr, InapplicableEdge) { EXPECT_THROW(dtr_invariance_check(complete_graph(5), 1, 3), DomainError); }
