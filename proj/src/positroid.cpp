#include "c2kit/positroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "c2kit/errors.hpp"

namespace c2kit {

bool DecoratedPermutation::has_loop() const {
  return std::find(decorations.begin(), decorations.end(), Decoration::Loop) != decorations.end();
}

bool DecoratedPermutation::has_coloop() const {
  return std::find(decorations.begin(), decorations.end(), Decoration::CoLoop) != decorations.end();
}

void DecoratedPermutation::validate() const {
  const int n = size();
  if (static_cast<int>(decorations.size()) != n)
    throw DomainError("decorated permutation: decoration list has the wrong length");
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = images[i - 1];
    if (v < 1 || v > n) throw DomainError("decorated permutation: image " + std::to_string(v) + " out of range");
    if (seen[v]++) throw DomainError("decorated permutation: image " + std::to_string(v) + " repeated");
    const bool fixed = v == i;
    const bool decorated = decorations[i - 1] != Decoration::None;
    if (fixed && !decorated)
      throw DomainError("decorated permutation: fixed point " + std::to_string(i) + " needs a decoration");
    if (!fixed && decorated)
      throw DomainError("decorated permutation: " + std::to_string(i) + " is not a fixed point but is decorated");
  }
}

DecoratedPermutation make_permutation(std::vector<int> images, Decoration fixed) {
  DecoratedPermutation p;
  p.images = std::move(images);
  p.decorations.assign(p.images.size(), Decoration::None);
  for (int i = 1; i <= p.size(); ++i)
    if (p.images[i - 1] == i) p.decorations[i - 1] = fixed;
  p.validate();
  return p;
}

DecoratedPermutation parse_permutation(const std::string& text) {
  DecoratedPermutation p;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) {
    return p;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("permutation: empty entry");
    Decoration d = Decoration::None;
    if (item.back() == '_' || item.back() == '^') {
      d = item.back() == '_' ? Decoration::Loop : Decoration::CoLoop;
      item.pop_back();
    }
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("permutation: entry '" + item + "' is not a number");
    p.images.push_back(std::stoi(item));
    p.decorations.push_back(d);
  }
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return p;
}

std::string format_permutation(const DecoratedPermutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
    if (p.is_loop(i)) out += '_';
    if (p.is_coloop(i)) out += '^';
  }
  return out;
}

std::vector<int> anti_excedances(const DecoratedPermutation& p) {
  const int n = p.size();
  std::vector<int> inverse(n + 1);
  for (int i = 1; i <= n; ++i) inverse[p(i)] = i;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (inverse[i] > i || p.is_coloop(i)) out.push_back(i);
  return out;
}

BorderLabels border_labels(int n, const std::vector<int>& shape) {
  const int k = static_cast<int>(shape.size());
  if (n < 0 || k > n) throw DomainError("shape: more parts than border labels");
  for (int r = 0; r < k; ++r) {
    if (shape[r] < 0 || shape[r] > n - k)
      throw DomainError("shape: part " + std::to_string(shape[r]) + " outside 0.." + std::to_string(n - k));
    if (r > 0 && shape[r] > shape[r - 1]) throw DomainError("shape: parts must be weakly decreasing");
  }
  BorderLabels b;
  b.n = n;
  int x = n - k, label = 1;
  for (int r = 0; r < k; ++r) {
    while (x > shape[r]) {
      b.columns.push_back(label++);
      --x;
    }
    b.rows.push_back(label++);
  }
  while (label <= n) b.columns.push_back(label++);
  return b;
}

std::vector<int> shape_from_rows(int n, const std::vector<int>& rows) {
  std::vector<int> shape;
  for (int r : rows) {
    int count = 0;
    for (int j = r + 1; j <= n; ++j)
      if (!std::binary_search(rows.begin(), rows.end(), j)) ++count;
    shape.push_back(count);
  }
  return shape;
}

LeDiagram::LeDiagram(int n, std::vector<int> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0) throw DomainError("Le diagram: negative n");
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1 || rows_[i] > n) throw DomainError("Le diagram: row label out of range");
    if (i > 0 && rows_[i] <= rows_[i - 1]) throw DomainError("Le diagram: row labels must increase");
  }
  for (int j = 1; j <= n; ++j)
    if (!std::binary_search(rows_.begin(), rows_.end(), j)) cols_.push_back(j);
  plus_.assign(rows_.size(), std::vector<char>(cols_.size(), 0));
}

LeDiagram LeDiagram::from_shape(int n, const std::vector<int>& shape) {
  return LeDiagram(n, border_labels(n, shape).rows);
}

int LeDiagram::row_index(int label) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), label);
  return it != rows_.end() && *it == label ? static_cast<int>(it - rows_.begin()) : -1;
}

int LeDiagram::col_index(int label) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), label);
  return it != cols_.end() && *it == label ? static_cast<int>(it - cols_.begin()) : -1;
}

bool LeDiagram::is_row(int label) const { return row_index(label) >= 0; }
bool LeDiagram::is_column(int label) const { return col_index(label) >= 0; }

bool LeDiagram::has_box(int row, int column) const {
  return row < column && is_row(row) && is_column(column);
}

std::vector<int> LeDiagram::row_columns(int row) const {
  std::vector<int> out;
  for (int c : cols_)
    if (c > row) out.push_back(c);
  return out;
}

std::vector<int> LeDiagram::column_rows(int column) const {
  std::vector<int> out;
  for (int r : rows_)
    if (r < column) out.push_back(r);
  return out;
}

bool LeDiagram::plus(int row, int column) const {
  if (!has_box(row, column))
    throw DomainError("Le diagram: no box (" + std::to_string(row) + "," + std::to_string(column) + ")");
  return plus_[row_index(row)][col_index(column)] != 0;
}

void LeDiagram::set(int row, int column, bool value) {
  if (!has_box(row, column))
    throw DomainError("Le diagram: no box (" + std::to_string(row) + "," + std::to_string(column) + ")");
  plus_[row_index(row)][col_index(column)] = value ? 1 : 0;
}

int LeDiagram::plus_count() const {
  int total = 0;
  for (const auto& r : plus_) total += static_cast<int>(std::count(r.begin(), r.end(), 1));
  return total;
}

int LeDiagram::leftmost_plus(int row) const {
  const int r = row_index(row);
  if (r < 0) throw DomainError("Le diagram: " + std::to_string(row) + " is not a row");
  for (int c = static_cast<int>(cols_.size()) - 1; c >= 0; --c)
    if (plus_[r][c] && cols_[c] > row) return cols_[c];
  return -1;
}

bool LeDiagram::column_has_plus(int column) const {
  for (int r : column_rows(column))
    if (plus(r, column)) return true;
  return false;
}

LeDiagram parse_le_diagram(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      lines.push_back(line);
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("Le diagram: missing header 'n k'");
  int n = 0, k = 0;
  {
    std::stringstream hs(lines[0]);
    std::string extra;
    if (!(hs >> n >> k) || (hs >> extra)) throw ParseError("Le diagram: header must be 'n k'");
  }
  if (n < 0 || k < 0 || k > n) throw ParseError("Le diagram: need 0 <= k <= n");
  std::vector<int> shape;
  if (lines.size() > 1 && !lines[1].empty()) {
    std::stringstream ls(lines[1]);
    std::string item;
    while (std::getline(ls, item, ',')) {
      try {
        size_t used = 0;
        shape.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("Le diagram: shape entry '" + item + "' is not a number");
      }
    }
  }
  if (static_cast<int>(shape.size()) != k)
    throw ParseError("Le diagram: shape must list exactly k = " + std::to_string(k) + " parts");
  LeDiagram d;
  try {
    d = LeDiagram::from_shape(n, shape);
  } catch (const DomainError& e) {
    throw ParseError(std::string("Le diagram: ") + e.what());
  }
  size_t next = 2;
  for (int r = 0; r < k; ++r) {
    if (shape[r] == 0) continue;
    if (next >= lines.size()) throw ParseError("Le diagram: missing filling row " + std::to_string(r + 1));
    const std::string& row = lines[next++];
    if (static_cast<int>(row.size()) != shape[r])
      throw ParseError("Le diagram: filling row " + std::to_string(r + 1) + " must have " +
                       std::to_string(shape[r]) + " boxes");
    const std::vector<int> cols = d.row_columns(d.rows()[r]);  // ascending = right to left
    for (int x = 0; x < shape[r]; ++x) {
      const char c = row[x];
      if (c != '0' && c != '+') throw ParseError("Le diagram: filling uses only '0' and '+'");
      d.set(d.rows()[r], cols[shape[r] - 1 - x], c == '+');
    }
  }
  if (next < lines.size()) throw ParseError("Le diagram: extra lines after the filling");
  return d;
}

std::string format_le_diagram(const LeDiagram& d) {
  std::ostringstream os;
  os << d.n() << ' ' << d.k() << '\n';
  const std::vector<int> shape = d.shape();
  for (size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
  os << '\n';
  for (int r : d.rows()) {
    const std::vector<int> cols = d.row_columns(r);
    if (cols.empty()) continue;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) os << (d.plus(r, *it) ? '+' : '0');
    os << '\n';
  }
  return os.str();
}

bool is_le(const LeDiagram& d) {
  for (int r : d.rows()) {
    const std::vector<int> cols = d.row_columns(r);
    for (int c : cols) {
      if (d.plus(r, c)) continue;
      bool above = false, left = false;
      for (int r2 : d.rows())
        if (r2 < r && d.plus(r2, c)) above = true;
      for (int c2 : cols)
        if (c2 > c && d.plus(r, c2)) left = true;
      if (above && left) return false;
    }
  }
  return true;
}

namespace {

enum class Dir { Left, Up };

// Traces every pipe; crossings[(row, column)] records the pipes meeting at
// each cross so that repeated crossings can be detected.
DecoratedPermutation trace_pipes(const LeDiagram& d) {
  const int n = d.n();
  DecoratedPermutation p;
  p.images.assign(n, 0);
  p.decorations.assign(n, Decoration::None);
  std::set<std::pair<int, int>> crossed;  // unordered pipe pairs, stored (min, max)
  std::map<std::pair<int, int>, std::vector<int>> at_cross;

  for (int start = 1; start <= n; ++start) {
    int row = 0, col = 0;
    Dir dir;
    int exit = -1;
    if (d.is_row(start)) {
      const std::vector<int> cols = d.row_columns(start);
      if (cols.empty()) exit = start;
      row = start;
      col = cols.empty() ? 0 : cols.front();
      dir = Dir::Left;
    } else {
      const std::vector<int> rows = d.column_rows(start);
      if (rows.empty()) exit = start;
      col = start;
      row = rows.empty() ? 0 : rows.back();
      dir = Dir::Up;
    }
    while (exit < 0) {
      const bool elbow = d.plus(row, col);
      if (!elbow) at_cross[{row, col}].push_back(start);
      if (elbow) dir = dir == Dir::Left ? Dir::Up : Dir::Left;
      if (dir == Dir::Left) {
        // Next box to the left: the next larger column label in this row.
        int next = -1;
        for (int c : d.row_columns(row))
          if (c > col) {
            next = c;
            break;
          }
        if (next < 0) exit = row;
        else col = next;
      } else {
        int next = -1;
        for (int r : d.column_rows(col))
          if (r < row) next = r;
        if (next < 0) exit = col;
        else row = next;
      }
    }
    p.images[start - 1] = exit;
    if (exit == start) p.decorations[start - 1] = d.is_row(start) ? Decoration::CoLoop : Decoration::Loop;
  }
  for (const auto& [box, pipes] : at_cross) {
    C2KIT_CHECK(pipes.size() == 2, "pipe dream: a cross is not traversed by exactly two pipes");
    const std::pair<int, int> key{std::min(pipes[0], pipes[1]), std::max(pipes[0], pipes[1])};
    C2KIT_CHECK(crossed.insert(key).second, "pipe dream: pipes " + std::to_string(key.first) + " and " +
                                                std::to_string(key.second) + " cross twice");
  }
  return p;
}

}  // namespace

DecoratedPermutation le_to_perm(const LeDiagram& d) {
  if (!is_le(d)) throw DomainError("le_to_perm: filling violates the Le condition");
  DecoratedPermutation p = trace_pipes(d);
  p.validate();
  C2KIT_CHECK(anti_excedances(p) == d.rows(), "pipe dream: anti-excedances differ from the row labels");
  return p;
}

int cell_dimension(const LeDiagram& d) { return d.plus_count(); }

std::vector<LeDiagram> le_fillings(int n, const std::vector<int>& rows) {
  LeDiagram d(n, rows);
  // Boxes in filling order: rows top to bottom, each row left to right.
  std::vector<std::pair<int, int>> boxes;
  for (int r : d.rows()) {
    std::vector<int> cols = d.row_columns(r);
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) boxes.push_back({r, *it});
  }
  std::vector<LeDiagram> out;
  std::vector<int> column_plus(n + 2, 0);  // +'s placed so far per column
  auto rec = [&](auto&& self, size_t i, bool row_has_left_plus) -> void {
    if (i == boxes.size()) {
      out.push_back(d);
      return;
    }
    const auto [r, c] = boxes[i];
    const bool new_row = i == 0 || boxes[i - 1].first != r;
    const bool left = new_row ? false : row_has_left_plus;
    // 0 is allowed unless there is a + above and a + to the left.
    if (!(left && column_plus[c] > 0)) {
      d.set(r, c, false);
      self(self, i + 1, left);
    }
    d.set(r, c, true);
    ++column_plus[c];
    self(self, i + 1, true);
    --column_plus[c];
    d.set(r, c, false);
  };
  rec(rec, 0, false);
  return out;
}

namespace {

void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x <= n; ++x) {
    cur.push_back(x);
    subsets(n, k, x + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LeDiagram> all_le_diagrams(int n, int k) {
  std::vector<std::vector<int>> row_sets;
  std::vector<int> cur;
  subsets(n, k, 1, cur, row_sets);
  std::vector<LeDiagram> out;
  for (const auto& rows : row_sets) {
    std::vector<LeDiagram> part = le_fillings(n, rows);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<LeDiagram> all_le_diagrams(int n) {
  std::vector<LeDiagram> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<LeDiagram> part = all_le_diagrams(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
  std::vector<DecoratedPermutation> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (images[i - 1] == i) fixed.push_back(i);
    for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
      DecoratedPermutation p;
      p.images = images;
      p.decorations.assign(n, Decoration::None);
      for (size_t f = 0; f < fixed.size(); ++f)
        p.decorations[fixed[f] - 1] = (mask >> f & 1u) ? Decoration::CoLoop : Decoration::Loop;
      out.push_back(p);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

LeDiagram perm_to_le(const DecoratedPermutation& p, int k) {
  p.validate();
  const std::vector<int> rows = anti_excedances(p);
  if (k >= 0 && k != static_cast<int>(rows.size()))
    throw DomainError("perm_to_le: permutation has " + std::to_string(rows.size()) +
                      " anti-excedances, not k = " + std::to_string(k));
  // Memoized per (n, row set): every Le filling of the shape, keyed by its
  // permutation.
  using Table = std::map<DecoratedPermutation, LeDiagram>;
  static std::map<std::pair<int, std::vector<int>>, Table> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p.size(), rows);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Table t;
    for (const LeDiagram& d : le_fillings(p.size(), rows)) {
      const bool fresh = t.emplace(le_to_perm(d), d).second;
      C2KIT_CHECK(fresh, "perm_to_le: two Le fillings share a permutation");
    }
    it = cache.emplace(key, std::move(t)).first;
  }
  auto found = it->second.find(p);
  C2KIT_CHECK(found != it->second.end(), "perm_to_le: no Le filling realizes " + format_permutation(p));
  return found->second;
}

std::ostream& operator<<(std::ostream& os, const DecoratedPermutation& p) { return os << format_permutation(p); }
std::ostream& operator<<(std::ostream& os, const LeDiagram& d) { return os << format_le_diagram(d); }

}  // namespace c2kit
