#pragma once

// Graph polynomials: Kirchhoff, signed Dodgson polynomials from the
// expanded Laplacian, spanning forest polynomials and the 5-invariant.

#include <gmpxx.h>

#include <array>
#include <vector>

#include "c2kit/graphs.hpp"
#include "c2kit/poly.hpp"

namespace c2kit {

// A word is an ordered sequence of edge ids; repeated letters are allowed
// and make the associated sign vanish.
using Word = std::vector<int>;

struct DodgsonSpec {
  Word I;
  Word J;
  std::vector<int> K;
};

// Sign of the permutation sorting w increasingly; 0 if w repeats a letter.
int word_sign(const Word& w);

// Sum over spanning trees of the product of the non-tree edge variables.
SparsePoly kirchhoff(const Multigraph& g);

// Square matrix [[Lambda, E^T], [E, 0]] where Lambda = diag(a_1..a_E) and
// E is the signed incidence matrix (+1 at the tail, -1 at the head) with
// the row of `removed_vertex` deleted.  Rows/columns are ordered edges
// 1..E first, then the remaining vertices in increasing order.
struct ExpandedLaplacian {
  int edge_count = 0;
  int removed_vertex = 0;
  std::vector<std::vector<SparsePoly>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  // Exact determinant by fraction-free elimination over the polynomial ring.
  SparsePoly determinant() const;
};

// removed_vertex = -1 selects the last vertex.  Self-loops are rejected.
ExpandedLaplacian expanded_laplacian(const Multigraph& g, int removed_vertex = -1);

// Determinant of a small square polynomial matrix (Bareiss elimination
// with exact polynomial division).
SparsePoly polynomial_determinant(std::vector<std::vector<SparsePoly>> m);

// Determinant of a small integer matrix (Bareiss, exact).
long long integer_determinant(std::vector<std::vector<long long>> m);

// Psi^{I,J}_K = (-1)^{V + sum(I) + sum(J) - 1} sgn(I) sgn(J) det L(I,J)_K,
// where L(I,J)_K is the expanded Laplacian with rows I, columns J removed
// and the variables of K set to zero.
SparsePoly dodgson(const Multigraph& g, const DodgsonSpec& spec, int removed_vertex = -1);

// Sum over spanning forests compatible with p of the product of the
// variables of the edges not in the forest.
SparsePoly spanning_forest_poly(const Multigraph& g, const VertexPartition& p);

struct ForestTerm {
  int sign = 1;
  VertexPartition partition;
};

// Psi^{I,J} = sum_P f_P Phi^P_{G \ (I u J)} for empty K; letters shared by
// I and J are deleted first and P runs over partitions of the ends of the
// remaining letters.
// Signs come from products of incidence determinants and are anchored to
// dodgson() by a single global sign.
std::vector<ForestTerm> dodgson_forest_expansion(const Multigraph& g, const DodgsonSpec& spec);
// Evaluates sum_P f_P Phi^P over the graph with the edges of I and J deleted
// (variable names stay those of g).
SparsePoly forest_expansion_sum(const Multigraph& g, const DodgsonSpec& spec,
                                const std::vector<ForestTerm>& terms);

// Psi^{12,34}_5 Psi^{135,245} - Psi^{13,24}_5 Psi^{125,345} for the given
// edges, with positive leading coefficient.
SparsePoly five_invariant(const Multigraph& g, const std::array<int, 5>& e);

struct ZigzagCoefficient {
  mpq_class value;
  int weight = 0;
};

// Rational coefficient of zeta(2l-3) in the period of the l-loop zig-zag
// graph.
ZigzagCoefficient zigzag_period_coefficient(int loops);

}  // namespace c2kit
