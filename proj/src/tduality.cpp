#include "c2kit/tduality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "c2kit/errors.hpp"

// Glueing rules checked by lshape_decompose, per non-empty section of D
// (bottom row b, columns first..last between b and the next row below):
//   - the blocks of the section tile its columns contiguously, right to
//     left, so there is at least one block;
//   - there is at most one string, and it is the leftmost block;
//   - the first (rightmost) block has its horizontal part in row b;
//   - every later block has its horizontal part in the row of the
//     bottom-most + of the vertical part of the block to its right.
// Row a_n additionally ends (on the left) in a +.

namespace c2kit {

DecoratedPermutation tdual_perm(const DecoratedPermutation& p) {
  p.validate();
  if (p.has_coloop()) throw DomainError("T-duality needs a co-loopless permutation");
  const int n = p.size();
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i < n ? p(i + 1) : p(1);
  DecoratedPermutation out = make_permutation(std::move(images), Decoration::CoLoop);
  C2KIT_CHECK(!out.has_loop(), "tdual_perm: image has a loop");
  C2KIT_CHECK(anti_excedances(out).size() == anti_excedances(p).size() + 1 || n == 0,
              "tdual_perm: anti-excedance count did not grow by one");
  return out;
}

DecoratedPermutation tdual_perm_inverse(const DecoratedPermutation& p) {
  p.validate();
  if (p.has_loop()) throw DomainError("inverse T-duality needs a loopless permutation");
  const int n = p.size();
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i > 1 ? p(i - 1) : p(n);
  return make_permutation(std::move(images), Decoration::Loop);
}

std::string to_string(RowType t) {
  switch (t) {
    case RowType::I: return "I";
    case RowType::II: return "II";
    case RowType::III: return "III";
  }
  return "?";
}

namespace {

void require_coloopless(const LeDiagram& dhat) {
  for (int r : dhat.rows())
    if (!dhat.row_has_plus(r))
      throw DomainError("T-duality needs a co-loopless diagram; row " + std::to_string(r) + " has no +");
}

}  // namespace

TdualShape tdual_shape(const LeDiagram& dhat) {
  require_coloopless(dhat);
  const int n = dhat.n(), k = dhat.k();
  if (n == 0) throw DomainError("T-duality needs n >= 1");
  TdualShape s;
  s.n = n;
  s.a_n = le_to_perm(dhat)(1);
  C2KIT_CHECK(dhat.is_column(s.a_n), "tdual_shape: a_n is not a column of the source diagram");
  s.rows = dhat.rows();
  s.rows.insert(std::upper_bound(s.rows.begin(), s.rows.end(), s.a_n), s.a_n);
  s.shape = shape_from_rows(n, s.rows);

  // Piecewise description: rows above a_n lose column a_n, row a_n has
  // n - (k + 1) - (a_n - j) boxes, rows below keep their length.
  const std::vector<int> old = dhat.shape();
  const int j = static_cast<int>(std::upper_bound(dhat.rows().begin(), dhat.rows().end(), s.a_n) - dhat.rows().begin()) + 1;
  for (int u = 1; u <= k + 1; ++u) {
    int expect;
    if (u < j) expect = old[u - 1] - 1;
    else if (u == j) expect = n - (k + 1) - (s.a_n - j);
    else expect = old[u - 2];
    C2KIT_CHECK(s.shape[u - 1] == expect, "tdual_shape: shape formula disagrees with the relabelling");
  }
  C2KIT_CHECK(s.shape.front() == n - (k + 1), "tdual_shape: first row of D is not full");
  return s;
}

std::vector<RowContext> row_contexts(const LeDiagram& dhat) {
  const TdualShape s = tdual_shape(dhat);
  const int n = dhat.n();
  std::vector<RowContext> out;
  for (size_t u = 0; u < s.rows.size(); ++u) {
    RowContext c;
    c.label = s.rows[u];
    c.below = u + 1 < s.rows.size() ? s.rows[u + 1] : n + 1;
    if (c.label == s.a_n) {
      c.type = RowType::III;
      c.leftmost = n + 1;
    } else {
      c.leftmost = dhat.leftmost_plus(c.label);
      const bool plus_at_an = dhat.has_box(c.label, s.a_n) && dhat.plus(c.label, s.a_n);
      c.type = plus_at_an ? RowType::II : RowType::I;
    }
    out.push_back(c);
  }
  return out;
}

namespace {

// (r, l) in D^ is a 0 with no + to its left in row r.
bool unrestricted_zero(const LeDiagram& dhat, int r, int l) {
  return !dhat.plus(r, l) && dhat.leftmost_plus(r) < l;
}

// Step 2 conditions for box (b, l).  Only rows of D^ are consulted.
bool step_two(const LeDiagram& dhat, const RowContext& row, int l) {
  const int b = row.label;
  if (row.type != RowType::III && dhat.plus(b, l)) return true;  // (i)
  // (ii): a + further down with only unrestricted 0's in between; (iii):
  // only unrestricted 0's below.
  for (int r : dhat.column_rows(l)) {
    if (r <= b) continue;
    if (dhat.plus(r, l)) return true;
    if (!unrestricted_zero(dhat, r, l)) return false;
  }
  return true;
}

}  // namespace

LeDiagram tdual_fill(const LeDiagram& dhat) {
  const TdualShape s = tdual_shape(dhat);
  const int n = dhat.n(), k = dhat.k();
  LeDiagram d(n, s.rows);
  for (const RowContext& row : row_contexts(dhat)) {
    const int b = row.label, L = row.leftmost, W = row.below;
    for (int c : d.row_columns(b)) {
      bool value;
      if (row.type == RowType::II && c > s.a_n) {
        value = dhat.plus(b, c);  // Step 3 for type II: copy D^ (Step 2(i))
      } else if (c < W) {
        value = c < L;  // Step 1, cut short at L
      } else if (L < W || c >= L) {
        value = false;  // Step 2 skipped, or Step 3
      } else {
        value = step_two(dhat, row, c);
      }
      d.set(b, c, value);
    }
  }
  C2KIT_CHECK(is_le(d), "tdual_fill: output violates the Le condition");
  for (int c : d.columns())
    C2KIT_CHECK(d.column_has_plus(c), "tdual_fill: column " + std::to_string(c) + " of the output has no +");
  C2KIT_CHECK(cell_dimension(d) == cell_dimension(dhat) - 2 * k + (n - 1),
              "tdual_fill: dimension identity fails");
  return d;
}

std::vector<int> LShape::vertical_plus_rows() const {
  std::vector<int> rows;
  if (is_string) return rows;
  for (auto [r, c] : boxes)
    if (c == column) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  return rows;
}

namespace {

std::string box_name(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

}  // namespace

LShapeDecomposition lshape_decompose(const LeDiagram& dhat, const LeDiagram& d) {
  if (!(tdual_fill(dhat) == d)) throw DomainError("lshape_decompose: diagram is not the T-dual fill of the source");
  const TdualShape sh = tdual_shape(dhat);
  const int n = dhat.n(), k = dhat.k(), a_n = sh.a_n;
  const std::vector<RowContext> ctx = row_contexts(dhat);
  std::map<int, RowContext> by_row;
  for (const auto& c : ctx) by_row[c.label] = c;

  LShapeDecomposition dec;
  auto problem = [&](const std::string& s) { dec.problems.push_back(s); };
  std::map<std::pair<int, int>, int> owner;  // + box of D -> number of blocks claiming it
  std::vector<char> covered(n + 2, 0);       // columns of D claimed by an L-shape

  // L-shapes: one per column l != a_n of D^ holding a +.
  for (int l : dhat.columns()) {
    if (l == a_n || !dhat.column_has_plus(l)) continue;
    LShape L;
    L.column = l;
    const std::vector<int> col_rows = dhat.column_rows(l);
    std::vector<int> plus_rows;
    for (int r : col_rows)
      if (dhat.plus(r, l)) plus_rows.push_back(r);
    const int f = plus_rows.front(), g = plus_rows.back();
    std::set<int> counted;
    for (int r : plus_rows) {
      const bool last = dhat.leftmost_plus(r) == l;
      if (!last) ++L.s;
      if (last && by_row[r].type == RowType::II) ++L.t;
      if (!last || by_row[r].type == RowType::II) counted.insert(r);
    }
    L.bottom = (by_row[g].type == RowType::II && g < a_n && a_n < l) ? a_n : g;
    int right = 0;  // m - 1
    for (int x = l - 1; x >= 1; --x)
      if (dhat.is_row(x) || dhat.column_has_plus(x)) {
        right = x;
        break;
      }
    L.m = right + 1;
    if (by_row[f].type == RowType::II && f < a_n && a_n < l) {
      L.top = f;
    } else {
      L.top = 0;
      for (auto it = sh.rows.rbegin(); it != sh.rows.rend(); ++it)
        if (*it < f && by_row[*it].leftmost > l) {
          L.top = *it;
          break;
        }
      if (L.top == 0) problem("column " + std::to_string(l) + ": no row above " + std::to_string(f) + " qualifies as b_T");
    }
    const std::string tag = "L-shape in column " + std::to_string(l) + ": ";
    if (L.top && !(L.top < L.bottom)) problem(tag + "b_T >= b_B");
    if (L.top && L.top > f) problem(tag + "b_T lies below the first + of D^");
    if (L.bottom < g) problem(tag + "b_B lies above the last + of D^");

    // Vertical part.
    std::vector<int> vertical;
    for (int r : d.column_rows(l))
      if (d.plus(r, l)) vertical.push_back(r);
    for (int r : vertical) {
      if (r < L.top || r > L.bottom) problem(tag + "+ at " + box_name(r, l) + " outside rows b_T..b_B");
      L.boxes.push_back({r, l});
    }
    if (L.top && !std::binary_search(vertical.begin(), vertical.end(), L.top))
      problem(tag + "no + at (b_T, l) = " + box_name(L.top, l));
    for (int r : counted)
      if (!std::binary_search(vertical.begin(), vertical.end(), r))
        problem(tag + "expected + at " + box_name(r, l) + " from D^");
    if (static_cast<int>(vertical.size()) != L.s + L.t + 1)
      problem(tag + std::to_string(vertical.size()) + " +'s in the vertical part, expected s + t + 1 = " +
              std::to_string(L.s + L.t + 1));
    // Horizontal part.
    for (int c = L.m; c < l; ++c) {
      if (!d.is_column(c)) {
        problem(tag + "horizontal part crosses row " + std::to_string(c));
        continue;
      }
      covered[c] = 1;
      for (int r : d.column_rows(c)) {
        const bool p = d.plus(r, c);
        if (r == L.bottom && !p) problem(tag + "expected + at " + box_name(r, c));
        if (r != L.bottom && p) problem(tag + "extra + at " + box_name(r, c) + " in the horizontal range");
        if (p) L.boxes.push_back({r, c});
      }
    }
    covered[l] = 1;
    dec.lshapes.push_back(L);
  }

  // Strings: maximal runs of remaining columns of D with no row in between.
  std::vector<std::vector<int>> runs;
  {
    std::vector<int> cur;
    for (int x = 1; x <= n + 1; ++x) {
      const bool free_column = x <= n && d.is_column(x) && !covered[x];
      if (free_column) {
        cur.push_back(x);
      } else if (!cur.empty()) {
        runs.push_back(cur);
        cur.clear();
      }
    }
  }
  for (const auto& run : runs) {
    LShape S;
    S.is_string = true;
    S.m = run.front();
    S.column = run.back();
    const std::string tag = "string over columns " + std::to_string(S.m) + ".." + std::to_string(S.column) + ": ";
    for (int c : run)
      if (dhat.column_has_plus(c)) problem(tag + "column " + std::to_string(c) + " of D^ is not all 0");
    std::set<int> rows_used;
    for (int c : run) {
      int count = 0;
      for (int r : d.column_rows(c))
        if (d.plus(r, c)) {
          ++count;
          rows_used.insert(r);
          S.boxes.push_back({r, c});
        }
      if (count != 1) problem(tag + "column " + std::to_string(c) + " has " + std::to_string(count) + " +'s");
    }
    if (rows_used.size() != 1) {
      problem(tag + "+'s are not in a single row");
    } else {
      S.bottom = *rows_used.begin();
      // Prediction: the lowest row of D above the run whose last + in D^
      // lies beyond the run (row a_n counts as having its last + at n + 1).
      int predicted = 0;
      for (int r : sh.rows)
        if (r < S.m && by_row[r].leftmost > S.column) predicted = r;
      if (predicted != S.bottom)
        problem(tag + "row " + std::to_string(S.bottom) + " differs from the predicted row " + std::to_string(predicted));
    }
    dec.strings.push_back(S);
  }

  // Every + of D lies in exactly one block.
  for (const auto* blocks : {&dec.lshapes, &dec.strings})
    for (const auto& B : *blocks)
      for (auto box : B.boxes) ++owner[box];
  for (int r : d.rows())
    for (int c : d.row_columns(r)) {
      const int claims = owner.count({r, c}) ? owner[{r, c}] : 0;
      if (d.plus(r, c) && claims != 1)
        problem("+ at " + box_name(r, c) + " belongs to " + std::to_string(claims) + " blocks");
      if (!d.plus(r, c) && claims != 0) problem("0 at " + box_name(r, c) + " claimed by a block");
    }

  // Counts.
  int sum_st = 0, total = 0;
  for (const auto& L : dec.lshapes) {
    sum_st += L.s + L.t;
    total += L.s + L.t + 1 + (L.column - L.m);
  }
  for (const auto& S : dec.strings) total += static_cast<int>(S.boxes.size());
  if (sum_st != cell_dimension(dhat) - k) problem("sum of s + t differs from dim(D^) - k");
  if (total != cell_dimension(dhat) - 2 * k + (n - 1)) problem("block sizes do not add up to dim(D)");

  // Sections and chains.
  std::vector<const LShape*> blocks;
  for (const auto& L : dec.lshapes) blocks.push_back(&L);
  for (const auto& S : dec.strings) blocks.push_back(&S);
  std::sort(blocks.begin(), blocks.end(), [](const LShape* x, const LShape* y) { return x->m < y->m; });
  for (size_t u = 0; u < sh.rows.size(); ++u) {
    Section sec;
    sec.row = sh.rows[u];
    sec.first_column = sec.row + 1;
    sec.last_column = (u + 1 < sh.rows.size() ? sh.rows[u + 1] : n + 1) - 1;
    const std::string tag = "section " + std::to_string(sec.row) + ": ";
    for (const LShape* B : blocks)
      if (B->m >= sec.first_column && B->m <= sec.last_column) {
        sec.chain.push_back(*B);
        if (B->column > sec.last_column) problem(tag + "a block spills past the section");
      }
    if (!sec.empty()) {
      if (sec.chain.empty()) {
        problem(tag + "no block");
      } else {
        int expect_m = sec.first_column;
        int strings = 0;
        for (size_t i = 0; i < sec.chain.size(); ++i) {
          const LShape& B = sec.chain[i];
          if (B.m != expect_m) problem(tag + "blocks do not tile the columns contiguously");
          expect_m = B.column + 1;
          if (B.is_string) {
            ++strings;
            if (i + 1 != sec.chain.size()) problem(tag + "a string is not the leftmost block");
          }
          int glue = sec.row;
          if (i > 0) {
            const std::vector<int> prev = sec.chain[i - 1].vertical_plus_rows();
            glue = prev.empty() ? 0 : prev.back();
          }
          if (i > 0 && sec.chain[i - 1].is_string) problem(tag + "a block is glued to a string");
          if (B.bottom != glue)
            problem(tag + "block at columns " + std::to_string(B.m) + ".." + std::to_string(B.column) +
                    " is glued to row " + std::to_string(B.bottom) + ", expected " + std::to_string(glue));
        }
        if (expect_m != sec.last_column + 1) problem(tag + "blocks do not reach the end of the section");
        if (strings > 1) problem(tag + "more than one string");
      }
    }
    dec.sections.push_back(sec);
  }

  // Row a_n ends on the left in a +.
  const std::vector<int> an_cols = d.row_columns(a_n);
  if (!an_cols.empty() && !d.plus(a_n, an_cols.back())) problem("row a_n does not end in a +");
  return dec;
}

std::string format_lshapes(const LShapeDecomposition& dec, const LeDiagram& d) {
  std::ostringstream os;
  // Grid: each + is tagged with a letter naming its block.
  std::map<std::pair<int, int>, char> tag;
  char next = 'A';
  std::vector<std::string> legend;
  auto name_block = [&](const LShape& B) {
    const char c = next <= 'Z' ? next++ : '*';
    for (auto box : B.boxes) tag[box] = c;
    std::ostringstream line;
    line << c << ": ";
    if (B.is_string) {
      line << "string  row " << B.bottom << ", columns " << B.m << ".." << B.column;
    } else {
      line << "L-shape column " << B.column << ", rows " << B.top << ".." << B.bottom;
      if (B.m <= B.column - 1)
        line << ", horizontal columns " << B.m << ".." << B.column - 1;
      else
        line << ", no horizontal part";
      line << ", s=" << B.s << " t=" << B.t;
    }
    legend.push_back(line.str());
  };
  for (const Section& sec : dec.sections) {
    if (sec.empty()) continue;
    for (const LShape& B : sec.chain) name_block(B);
  }
  for (int r : d.rows()) {
    const std::vector<int> cols = d.row_columns(r);
    os << (r < 10 ? " " : "") << r << " |";
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
      auto f = tag.find({r, *it});
      os << ' ' << (f != tag.end() ? f->second : '.');
    }
    os << '\n';
  }
  size_t li = 0;
  for (const Section& sec : dec.sections) {
    if (sec.empty()) continue;
    os << "section " << sec.row << " (columns " << sec.first_column << ".." << sec.last_column << "):\n";
    for (size_t i = 0; i < sec.chain.size(); ++i) os << "  " << legend[li++] << '\n';
  }
  if (!dec.ok())
    for (const auto& p : dec.problems) os << "problem: " << p << '\n';
  return os.str();
}

TdualityIteration iterate_tduality(const LeDiagram& dhat, int steps) {
  TdualityIteration it;
  it.diagrams.push_back(dhat);
  for (int i = 0; i < steps; ++i) {
    const LeDiagram& cur = it.diagrams.back();
    for (int r : cur.rows())
      if (!cur.row_has_plus(r)) {
        it.stopped_early = true;
        it.reason = "step " + std::to_string(i + 1) + ": row " + std::to_string(r) + " has no + (co-loop)";
        return it;
      }
    it.diagrams.push_back(tdual_fill(cur));
  }
  return it;
}

}  // namespace c2kit
