#pragma once

// Edge bipartitions (spanning tree, compatible spanning 2-forest) and the
// fixed-point free involutions behind the p = 2 completion argument.
//
// Throughout, h is G - {v, w} for a 4-regular graph G and adjacent vertices
// v, w; the marked vertices are the neighbours of v and w inside h.  An
// EdgeBipartition stores the induced bipartition of the marked vertices in
// its `partition` field.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c2kit/graphs.hpp"

namespace c2kit {

enum class PairCase { AllShared, T, S, R };

std::string to_string(PairCase c);

// Labelled view of an adjacent pair.  Labels follow the T/S/R pictures: w is
// adjacent to a, b, c (and v); v is adjacent to the remaining letters.
//   T: w ~ {a,b,c}, v ~ {b,c,d}      (b, c shared)
//   S: w ~ {a,b,c}, v ~ {c,d,e}      (c shared)
//   R: w ~ {a,b,c}, v ~ {d,e,f}
// Within each constraint the letters go to vertices in increasing id order.
struct CaseContext {
  Multigraph g;
  int v = -1;
  int w = -1;
  PairCase tag = PairCase::AllShared;
  Multigraph h;               // G - {v, w}
  std::vector<int> to_h;      // vertex of g -> vertex of h (-1 for v, w)
  std::map<char, int> labels; // letter -> vertex of h
  std::vector<int> marked;    // labelled vertices of h, ascending

  int label(char c) const;
  // "a|bcd" -> {{a}, {b, c, d}} in h's vertex ids.
  VertexPartition partition(const std::string& spec) const;
};

// Requires g simple, 4-regular and connected, and v ~ w.
CaseContext make_case_context(const Multigraph& g, int v, int w);

// Removes the listed vertices; map[old] is the new id or -1.
Multigraph remove_vertices(const Multigraph& g, std::vector<int> vertices, std::vector<int>* map = nullptr);

// Number of (tree, 2-forest) edge bipartitions of h whose forest is
// compatible with the two-part partition p (p may cover only some
// vertices).  Zero when h is disconnected.
long long count_bipartitions(const Multigraph& h, const VertexPartition& p);

// Every edge bipartition of h whose forest separates `marked` into two
// non-empty parts, with the induced partition recorded.
std::vector<EdgeBipartition> enumerate_bipartitions(const Multigraph& h, const std::vector<int>& marked);

// Induced bipartition of `marked` by the components of `forest`; nullopt
// unless the forest has exactly two trees and both contain marked vertices.
std::optional<VertexPartition> induced_partition(const Multigraph& h, const EdgeSet& forest,
                                                 const std::vector<int>& marked);

// c2^{(2)}(G - v) from the count of bipartitions of G - {u, v} whose forest
// is compatible with {u3} | {u1, u2}, where u is 3-valent in G - v.  All
// three choices of u3 are evaluated and must agree.
long long c2_p2_via_counts(const Multigraph& g, int v, int u);

// Exchanges the two edges at the 2-valent vertex c between tree and forest.
EdgeBipartition swap_two_valent(const Multigraph& h, const EdgeBipartition& b, int c,
                                const std::vector<int>& marked);

enum class ControlMode { InTwoPart, SingletonOrSelf };
enum class ControlKind { TwoValent, SingleControl, DoubleControl };

struct ControlVertexResult {
  std::vector<int> vertices;
  ControlKind kind = ControlKind::SingleControl;
  // Tree edge at each control vertex (they are leaves of the tree).
  std::vector<int> tree_edges;
};

// Unique vertex of the forest tree t holding the four-element `part` whose
// removal splits the part into a pair and singletons (a control vertex that
// lies in the part counts as a singleton), with x in the pair
// (InTwoPart) or x the vertex itself / a singleton (SingletonOrSelf).
ControlVertexResult find_control_vertex(const Multigraph& h, const EdgeBipartition& b,
                                        const std::vector<int>& part, int x, ControlMode mode);

// Unique non-adjacent pair of vertices of the tree holding the
// five-element `part` whose removal leaves every part vertex alone.
ControlVertexResult find_two_control_vertices(const Multigraph& h, const EdgeBipartition& b,
                                              const std::vector<int>& part);

// S case, domain: shapes {*} | {c,*,*,*}.
EdgeBipartition involution_S(const CaseContext& ctx, const EdgeBipartition& b);
// S case, domain: shapes {c,*} | {*,*,*}.
EdgeBipartition involution_S_swapped(const CaseContext& ctx, const EdgeBipartition& b);
// R case, domain: shapes {y,z} | {x,*,*,*} with {x,y,z} one of the trios.
EdgeBipartition involution_R_single(const CaseContext& ctx, const EdgeBipartition& b);
// R case, domain: shapes {x} | {*,*,*,*,*}.
EdgeBipartition involution_R_double(const CaseContext& ctx, const EdgeBipartition& b);

// Outcome of running one involution over its whole domain.
struct InvolutionCheck {
  std::string name;
  long long domain_size = 0;
  bool involutive = true;
  bool fixed_point_free = true;
  bool closed = true;
  long long failures = 0;  // domain elements violating any of the three
  bool ok() const { return involutive && fixed_point_free && closed; }
};

// A named parity identity (sum of counts expected to be 0 mod 2, or an
// equality of residues).
struct ParityCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool ok() const { return (lhs - rhs) % 2 == 0; }
};

struct PairReport {
  int v = -1;
  int w = -1;
  PairCase tag = PairCase::AllShared;
  std::vector<ParityCheck> parities;
  std::vector<InvolutionCheck> involutions;
  bool ok() const;
};

struct CompletionReport {
  // Per vertex: c2^{(2)}(G - v) by counting and by coefficient extraction.
  std::vector<long long> c2_counts;
  std::vector<long long> c2_coeff;
  std::vector<PairReport> pairs;
  // Pairs skipped because g is not simple (the labelled cases need it).
  bool cases_skipped = false;
  bool all_equal() const;
  bool ok() const;
};

// Checks that every decompletion of the 4-regular graph g has the same
// c2^{(2)} and runs the case identities and involution suites on every
// adjacent pair.
CompletionReport verify_completion_p2(const Multigraph& g);

// Involution suites and parity identities for one adjacent pair.
PairReport check_pair(const CaseContext& ctx, long long c2_v, long long c2_w);

}  // namespace c2kit
