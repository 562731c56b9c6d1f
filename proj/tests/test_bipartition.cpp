#include <gtest/gtest.h>

#include <random>

#include "c2kit/bipartition.hpp"
#include "c2kit/c2.hpp"
#include "c2kit/errors.hpp"

using namespace c2kit;

namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Brute force: spanning trees whose complement is a 2-forest separating the
// two parts of p.
long long brute_count(const Multigraph& h, const VertexPartition& p) {
  if (!h.is_connected()) return 0;
  long long n = 0;
  for (const EdgeSet& t : spanning_trees(h)) {
    const EdgeSet f = complement(h, t);
    if (!is_forest(h, f)) continue;
    const auto comp = forest_components(h, f);
    std::set<int> roots(comp.begin(), comp.end());
    if (roots.size() != 2) continue;
    bool ok = true;
    for (const auto& part : p.parts)
      for (int x : part) ok = ok && comp[x] == comp[part.front()];
    ok = ok && comp[p.parts[0].front()] != comp[p.parts[1].front()];
    n += ok;
  }
  return n;
}

// A connected 4-regular graph on 8 vertices whose adjacent pair (3, 6)
// shares no neighbour (an R pair).
Multigraph r_counterexample() {
  return parse_graph("8 16\n0 1\n0 2\n0 5\n0 6\n1 3\n1 4\n1 7\n2 3\n2 4\n2 7\n3 6\n3 7\n4 5\n4 6\n5 6\n5 7\n");
}

const InvolutionCheck* find_check(const PairReport& r, const std::string& name) {
  for (const auto& c : r.involutions)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(CountBipartitions, Triangle) {
  EXPECT_EQ(count_bipartitions(triangle(), VertexPartition{{0}, {1}}), 2);
  EXPECT_EQ(count_bipartitions(Multigraph(3, {{0, 1}}), VertexPartition{{0}, {1}}), 0);
}

TEST(CountBipartitions, MatchesBruteForce) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 40; ++i) {
    const int v = 3 + i % 4;
    const Multigraph h = random_connected_multigraph(v, v + 1 + i % 4, rng);
    const VertexPartition p = i % 2 ? VertexPartition{{0}, {1}} : VertexPartition{{0, 2}, {1}};
    EXPECT_EQ(count_bipartitions(h, p), brute_count(h, p)) << format_graph(h);
  }
}

TEST(CaseContext, Tags) {
  EXPECT_EQ(make_case_context(complete_graph(5), 0, 1).tag, PairCase::AllShared);
  const Multigraph c7 = circulant(7, {1, 2});
  EXPECT_EQ(make_case_context(c7, 0, 1).tag, PairCase::T);
  EXPECT_EQ(make_case_context(c7, 0, 2).tag, PairCase::S);
  const CaseContext r = make_case_context(r_counterexample(), 3, 6);
  EXPECT_EQ(r.tag, PairCase::R);
  EXPECT_EQ(r.marked.size(), 6u);
  EXPECT_EQ(r.h.vertex_count(), 6);
  EXPECT_THROW(make_case_context(c7, 0, 3), DomainError);
}

TEST(CaseContext, LabelsFollowSharedNeighbourConvention) {
  const Multigraph g = circulant(8, {1, 2});
  const CaseContext t = make_case_context(g, 0, 1);
  // In the T case b and c are the common neighbours of v and w.
  std::vector<int> back(t.h.vertex_count(), -1);
  for (int x = 0; x < g.vertex_count(); ++x)
    if (t.to_h[x] >= 0) back[t.to_h[x]] = x;
  for (char c : {'b', 'c'}) {
    const int x = back[t.label(c)];
    EXPECT_GT(g.multiplicity(x, 0), 0);
    EXPECT_GT(g.multiplicity(x, 1), 0);
  }
  for (char c : {'a', 'd'}) {
    const int x = back[t.label(c)];
    EXPECT_EQ(g.multiplicity(x, 0) > 0 && g.multiplicity(x, 1) > 0, false);
  }
}

TEST(CountingRoute, K5) {
  const Multigraph k5 = complete_graph(5);
  for (int v = 0; v < 5; ++v)
    for (int u = 0; u < 5; ++u)
      if (u != v) EXPECT_EQ(c2_p2_via_counts(k5, v, u), 1);
}

TEST(CountingRoute, AgreesWithCoefficientExtraction) {
  std::vector<Multigraph> corpus{circulant(7, {1, 2}), circulant(8, {1, 2}), circulant(8, {1, 3})};
  std::mt19937_64 rng(16);
  for (int i = 0; i < 6; ++i) corpus.push_back(random_simple_4regular(7 + i % 2, rng));
  for (const Multigraph& g : corpus)
    for (int v = 0; v < g.vertex_count(); v += 3) {
      const int u = g.neighbours(v).front();
      EXPECT_EQ(c2_p2_via_counts(g, v, u), c2_coeff(decompletion(g, v), 2).value);
    }
}

TEST(Completion, K5) {
  const CompletionReport r = verify_completion_p2(complete_graph(5));
  EXPECT_EQ(r.c2_counts, std::vector<long long>(5, 1));
  EXPECT_EQ(r.c2_coeff, std::vector<long long>(5, 1));
  EXPECT_TRUE(r.all_equal());
  EXPECT_TRUE(r.ok());
}

TEST(Completion, CirculantsPassEverySuite) {
  for (const Multigraph& g : {circulant(7, {1, 2}), circulant(8, {1, 2})}) {
    const CompletionReport r = verify_completion_p2(g);
    EXPECT_TRUE(r.all_equal());
    EXPECT_FALSE(r.cases_skipped);
    for (const PairReport& p : r.pairs) {
      EXPECT_TRUE(p.ok()) << p.v << "," << p.w;
      for (const auto& c : p.involutions) EXPECT_GT(c.domain_size, 0) << c.name;
    }
  }
}

TEST(Completion, TCaseSuites) {
  const CompletionReport r = verify_completion_p2(circulant(8, {1, 2}));
  bool seen = false;
  for (const PairReport& p : r.pairs) {
    if (p.tag != PairCase::T) continue;
    seen = true;
    ASSERT_NE(find_check(p, "swap around b"), nullptr);
    ASSERT_NE(find_check(p, "swap around c"), nullptr);
    for (const auto& q : p.parities) EXPECT_TRUE(q.ok()) << q.name;
  }
  EXPECT_TRUE(seen);
}

TEST(Completion, SCaseSuites) {
  const CompletionReport r = verify_completion_p2(circulant(8, {1, 2}));
  bool seen = false;
  for (const PairReport& p : r.pairs) {
    if (p.tag != PairCase::S) continue;
    seen = true;
    for (const char* name : {"swap around c", "control vertex with c", "control vertex with c, swapped"}) {
      const InvolutionCheck* c = find_check(p, name);
      ASSERT_NE(c, nullptr) << name;
      EXPECT_TRUE(c->ok()) << name;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Completion, RandomGraphsAgreeAtTwo) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const Multigraph g = random_simple_4regular(8, rng);
    const CompletionReport r = verify_completion_p2(g);
    EXPECT_TRUE(r.all_equal()) << format_graph(g);
    // The T and S suites never fail; see RCase below for the R suites.
    for (const PairReport& p : r.pairs)
      if (p.tag != PairCase::R) EXPECT_TRUE(p.ok()) << format_graph(g) << p.v << "," << p.w;
  }
}

TEST(Completion, MultigraphSkipsCaseAnalysis) {
  // C8(1,2) with edges 01 and 23 replaced by second copies of 02 and 13.
  const Multigraph c8 = circulant(8, {1, 2});
  Multigraph g(8);
  for (int e = 1; e <= c8.edge_count(); ++e) {
    const Edge& ed = c8.edge(e);
    const int lo = std::min(ed.tail, ed.head), hi = std::max(ed.tail, ed.head);
    if ((lo == 0 && hi == 1) || (lo == 2 && hi == 3)) continue;
    g.add_edge(ed.tail, ed.head);
  }
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  ASSERT_TRUE(g.is_regular(4));
  ASSERT_FALSE(g.is_simple());
  const CompletionReport r = verify_completion_p2(g);
  EXPECT_TRUE(r.cases_skipped);
  EXPECT_TRUE(r.all_equal());
}

// The single-control-vertex involution and every parity identity hold on
// this R pair, but the two-control-vertex swap sends its whole domain
// outside the set of edge bipartitions (the swapped tree contains a cycle).
TEST(RCase, TwoControlVertexSwapLeavesTheDomain) {
  const CompletionReport r = verify_completion_p2(r_counterexample());
  EXPECT_TRUE(r.all_equal());
  const PairReport* pair = nullptr;
  for (const PairReport& p : r.pairs)
    if (p.tag == PairCase::R && p.v == 3 && p.w == 6) pair = &p;
  ASSERT_NE(pair, nullptr);
  for (const auto& q : pair->parities) EXPECT_TRUE(q.ok()) << q.name;
  const InvolutionCheck* single = find_check(*pair, "single control vertex");
  ASSERT_NE(single, nullptr);
  EXPECT_TRUE(single->ok());
  const InvolutionCheck* dbl = find_check(*pair, "two control vertices");
  ASSERT_NE(dbl, nullptr);
  EXPECT_EQ(dbl->domain_size, 36);
  EXPECT_FALSE(dbl->closed);
  EXPECT_EQ(dbl->failures, 36);
  EXPECT_FALSE(r.ok());
}

TEST(ControlVertices, LeavesOfTheTree) {
  const CaseContext ctx = make_case_context(circulant(8, {1, 2}), 0, 2);
  ASSERT_EQ(ctx.tag, PairCase::S);
  int checked = 0;
  for (const EdgeBipartition& b : enumerate_bipartitions(ctx.h, ctx.marked)) {
    const auto& parts = b.partition.parts;
    const auto& big = parts[0].size() == 4 ? parts[0] : parts[1];
    if (big.size() != 4 || std::find(big.begin(), big.end(), ctx.label('c')) == big.end()) continue;
    const ControlVertexResult r = find_control_vertex(ctx.h, b, big, ctx.label('c'), ControlMode::SingletonOrSelf);
    ASSERT_EQ(r.vertices.size(), 1u);
    ASSERT_EQ(r.tree_edges.size(), 1u);
    int tree_degree = 0;
    for (int e : b.tree) {
      const Edge& ed = ctx.h.edge(e);
      tree_degree += (ed.tail == r.vertices[0]) + (ed.head == r.vertices[0]);
    }
    EXPECT_EQ(tree_degree, 1);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}
