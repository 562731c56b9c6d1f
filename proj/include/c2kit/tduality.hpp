#pragma once

// T-duality: the cyclic shift taking a co-loopless decorated permutation
// with k anti-excedances to a loopless one with k + 1, and the row-by-row
// fill algorithm that produces the Le diagram of the image directly from
// the source diagram, together with the L-shape description of its +'s.
//
// Notation.  The source diagram is D^ (type (k, n), rows b_1 < ... < b_k),
// a_n = pi^(1), and the output diagram is D (type (k + 1, n)) with rows
// {b_1, ..., b_k, a_n}.

#include <string>
#include <vector>

#include "c2kit/positroid.hpp"

namespace c2kit {

// pi(i) = pi^(i + 1) for i < n, pi(n) = pi^(1); fixed points of the image
// are co-loops.  Throws DomainError if p has a co-loop.
DecoratedPermutation tdual_perm(const DecoratedPermutation& p);
// Inverse shift pi^(i) = pi(i - 1), fixed points decorated loop.  Throws
// DomainError if p has a loop.
DecoratedPermutation tdual_perm_inverse(const DecoratedPermutation& p);

struct TdualShape {
  int n = 0;
  int a_n = 0;
  std::vector<int> rows;   // rows of D, ascending
  std::vector<int> shape;  // lambda of D
};

// Shape of D: column a_n removed, row a_n inserted.  Throws DomainError on
// a diagram with an all-0 row (a co-loop).
TdualShape tdual_shape(const LeDiagram& dhat);

enum class RowType { I, II, III };

std::string to_string(RowType t);

struct RowContext {
  int label = 0;     // b_u, or a_n for the inserted row
  int leftmost = 0;  // L_u: column of the leftmost + in D^; n + 1 for row a_n
  int below = 0;     // W_u: next row of D below, or n + 1
  RowType type = RowType::I;
};

// One entry per row of D, top to bottom.
std::vector<RowContext> row_contexts(const LeDiagram& dhat);

// The fill algorithm.  Checks (ConsistencyError) that the result is a Le
// diagram, has a + in every column and has dimension
// dim(D^) - 2k + (n - 1).
LeDiagram tdual_fill(const LeDiagram& dhat);

// A block of the decomposition of D.  An L-shape belongs to a column
// `column` of D^ (not a_n) holding a +: its vertical part is column
// `column` between rows `top` and `bottom`, its horizontal part the boxes
// (bottom, m), ..., (bottom, column - 1).  A string is a horizontal part
// alone, covering columns m..last of row `bottom`.
struct LShape {
  bool is_string = false;
  int column = 0;     // l (L-shape) or the last column covered (string)
  int top = 0;        // b_T (L-shape only)
  int bottom = 0;     // b_B: row holding the horizontal part
  int m = 0;          // first column of the horizontal part
  int s = 0;          // non-last +'s of D^ in column l
  int t = 0;          // last +'s of D^ in column l lying in type II rows
  std::vector<std::pair<int, int>> boxes;  // +'s of D in the block
  // Rows of D holding a + in column l (L-shape only), ascending.
  std::vector<int> vertical_plus_rows() const;
};

// A section of D: the rectangle of columns strictly between row `row` and
// the next row below (or n + 1), with its chain of blocks right to left.
struct Section {
  int row = 0;
  int first_column = 0;
  int last_column = 0;  // first_column > last_column when empty
  std::vector<LShape> chain;
  bool empty() const { return first_column > last_column; }
};

struct LShapeDecomposition {
  std::vector<LShape> lshapes;
  std::vector<LShape> strings;
  std::vector<Section> sections;
  // Every structural statement that failed to hold; empty on success.
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Predicts the blocks from D^ alone and checks them against d: every + of
// d lies in exactly one block, per-column + counts are s + t + 1 (L-shape
// columns) or 1 (all-0 columns of D^), the dimension re-derivation holds,
// and each section is a chain glued as described in the header comment of
// tduality.cpp.  Throws DomainError if d is not tdual_fill(dhat).
LShapeDecomposition lshape_decompose(const LeDiagram& dhat, const LeDiagram& d);

// ASCII rendering of the decomposition, one section per paragraph.
std::string format_lshapes(const LShapeDecomposition& dec, const LeDiagram& d);

struct TdualityIteration {
  std::vector<LeDiagram> diagrams;  // diagrams[0] is the input
  bool stopped_early = false;
  std::string reason;
};

// Applies tdual_fill up to `steps` times, stopping with a reason when the
// current diagram has a co-loop.
TdualityIteration iterate_tduality(const LeDiagram& dhat, int steps);

}  // namespace c2kit
