#pragma once

// Decorated permutations, Le diagrams and the pipe-dream bijection between
// them.
//
// Coordinates.  The south-east border of a Young diagram inside a
// k x (n-k) rectangle is labelled 1..n starting at the top-right corner.
// Vertical steps label rows, horizontal steps label columns.  A box is
// addressed by (row label, column label) and exists iff row < column, so
// column labels increase from right to left: the rightmost column of a row
// has the smallest label.

#include <iosfwd>
#include <string>
#include <vector>

namespace c2kit {

enum class Decoration { None, Loop, CoLoop };

struct DecoratedPermutation {
  // images[i - 1] = pi(i), values in 1..n.
  std::vector<int> images;
  // Per position; non-None exactly at fixed points.
  std::vector<Decoration> decorations;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images.at(i - 1); }
  Decoration decoration(int i) const { return decorations.at(i - 1); }
  bool is_loop(int i) const { return decoration(i) == Decoration::Loop; }
  bool is_coloop(int i) const { return decoration(i) == Decoration::CoLoop; }
  bool has_loop() const;
  bool has_coloop() const;

  // Throws DomainError unless images form a bijection of [n] and exactly
  // the fixed points carry a decoration.
  void validate() const;

  bool operator==(const DecoratedPermutation& o) const = default;
  auto operator<=>(const DecoratedPermutation& o) const = default;
};

// Fixed points are decorated with `fixed`.
DecoratedPermutation make_permutation(std::vector<int> images, Decoration fixed = Decoration::Loop);

// "3,2_,5,1,6,8,7^,4": "_" marks a loop, "^" a co-loop.
DecoratedPermutation parse_permutation(const std::string& text);
std::string format_permutation(const DecoratedPermutation& p);

// Sorted i with pi^{-1}(i) > i, or i a co-loop.
std::vector<int> anti_excedances(const DecoratedPermutation& p);

// Border labelling of a shape.
struct BorderLabels {
  int n = 0;
  std::vector<int> rows;     // ascending
  std::vector<int> columns;  // ascending
};

// Shape lambda (k parts including zeros, each <= n - k, weakly decreasing)
// to its border labels.  Throws DomainError on a malformed shape.
BorderLabels border_labels(int n, const std::vector<int>& shape);
// Row labels to the shape: lambda_r = #{column labels > rows[r]}.
std::vector<int> shape_from_rows(int n, const std::vector<int>& rows);

class LeDiagram {
 public:
  LeDiagram() = default;
  // All-0 filling of the shape whose row labels are `rows`.
  LeDiagram(int n, std::vector<int> rows);
  static LeDiagram from_shape(int n, const std::vector<int>& shape);

  int n() const { return n_; }
  int k() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& columns() const { return cols_; }
  std::vector<int> shape() const { return shape_from_rows(n_, rows_); }

  bool is_row(int label) const;
  bool is_column(int label) const;
  bool has_box(int row, int column) const;
  // Column labels of a row's boxes, ascending (right to left).
  std::vector<int> row_columns(int row) const;
  // Row labels of a column's boxes, ascending (top to bottom).
  std::vector<int> column_rows(int column) const;

  bool plus(int row, int column) const;
  void set(int row, int column, bool value);

  int plus_count() const;
  // Column label of the leftmost + of the row (largest label), or -1.
  int leftmost_plus(int row) const;
  bool row_has_plus(int row) const { return leftmost_plus(row) != -1; }
  bool column_has_plus(int column) const;

  bool operator==(const LeDiagram& o) const = default;

 private:
  int row_index(int label) const;
  int col_index(int label) const;

  int n_ = 0;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<std::vector<char>> plus_;  // [row index][column index]
};

// Text format:
//   line 1: "n k"
//   line 2: lambda, comma separated, zeros included (empty when k = 0)
//   then one line per non-empty row, top to bottom, of '0' / '+' read left
//   to right; the rightmost character is the box with the smallest column
//   label.
LeDiagram parse_le_diagram(const std::string& text);
std::string format_le_diagram(const LeDiagram& d);

// No 0 has both a + above it in its column and a + to its left in its row.
bool is_le(const LeDiagram& d);

// Pipe dream: 0 = cross, + = elbow.  Pipes enter from the south-east border
// labels and leave through the north-west labels; pi(start) = exit label.
// Checks (ConsistencyError) that no two pipes cross twice and that the
// anti-excedances are the row labels.  Requires is_le(d).
DecoratedPermutation le_to_perm(const LeDiagram& d);

// Unique Le diagram with le_to_perm(d) = p, found by exhaustive search over
// the Le fillings of the shape whose rows are the anti-excedances of p.
// Throws DomainError if k is given and differs from the anti-excedance count.
LeDiagram perm_to_le(const DecoratedPermutation& p, int k = -1);

int cell_dimension(const LeDiagram& d);

// Every Le filling of the shape with the given row labels, in DFS order.
std::vector<LeDiagram> le_fillings(int n, const std::vector<int>& rows);
// Every Le diagram of type (k, n) (all shapes).
std::vector<LeDiagram> all_le_diagrams(int n, int k);
// Every Le diagram with n border labels (all k).
std::vector<LeDiagram> all_le_diagrams(int n);
// Every decorated permutation of [n].
std::vector<DecoratedPermutation> all_decorated_permutations(int n);

std::ostream& operator<<(std::ostream& os, const DecoratedPermutation& p);
std::ostream& operator<<(std::ostream& os, const LeDiagram& d);

}  // namespace c2kit
