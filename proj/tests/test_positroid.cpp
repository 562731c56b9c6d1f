#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "c2kit/errors.hpp"
#include "c2kit/positroid.hpp"

using namespace c2kit;

namespace {

// The (3, 8) diagram: rows {1, 4, 7}, shape (5, 3, 1), +'s at (1,3), (1,5),
// (4,5), (4,6), (4,8).
LeDiagram example38() {
  LeDiagram d(8, {1, 4, 7});
  for (auto [r, c] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {4, 5}, {4, 6}, {4, 8}}) d.set(r, c, true);
  return d;
}

DecoratedPermutation example_perm() { return parse_permutation("3,2_,5,1,6,8,7^,4"); }

// Number of decorated permutations of [n]: every fixed point of a
// permutation takes one of two decorations.
long long decorated_count(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  long long total = 0;
  do {
    int fixed = 0;
    for (int i = 0; i < n; ++i) fixed += p[i] == i;
    total += 1LL << fixed;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST(DecoratedPermutation, FormatRoundTrip) {
  const DecoratedPermutation p = example_perm();
  EXPECT_EQ(p.size(), 8);
  EXPECT_EQ(p(1), 3);
  EXPECT_TRUE(p.is_loop(2));
  EXPECT_TRUE(p.is_coloop(7));
  EXPECT_EQ(format_permutation(p), "3,2_,5,1,6,8,7^,4");
  EXPECT_EQ(parse_permutation(format_permutation(p)), p);
}

TEST(DecoratedPermutation, Validation) {
  EXPECT_THROW(parse_permutation("1,1"), ParseError);
  EXPECT_THROW(parse_permutation("2,1_"), ParseError);
  EXPECT_THROW(parse_permutation("1,x"), ParseError);
  // Fixed points must carry a decoration.
  EXPECT_THROW(parse_permutation("1,3,2"), ParseError);
  EXPECT_TRUE(parse_permutation("1_,3,2").is_loop(1));
  EXPECT_THROW(make_permutation({1, 1}), DomainError);
}

TEST(AntiExcedances, Examples) {
  EXPECT_EQ(anti_excedances(example_perm()), (std::vector<int>{1, 4, 7}));
  EXPECT_TRUE(anti_excedances(make_permutation({1, 2, 3})).empty());
  EXPECT_EQ(anti_excedances(make_permutation({1, 2, 3}, Decoration::CoLoop)), (std::vector<int>{1, 2, 3}));
}

TEST(BorderLabels, Example) {
  const BorderLabels b = border_labels(8, {5, 3, 1});
  EXPECT_EQ(b.rows, (std::vector<int>{1, 4, 7}));
  EXPECT_EQ(b.columns, (std::vector<int>{2, 3, 5, 6, 8}));
  EXPECT_EQ(shape_from_rows(8, {1, 4, 7}), (std::vector<int>{5, 3, 1}));
}

TEST(LeDiagram, Geometry) {
  const LeDiagram d = example38();
  EXPECT_EQ(d.k(), 3);
  EXPECT_EQ(d.shape(), (std::vector<int>{5, 3, 1}));
  EXPECT_TRUE(d.has_box(1, 8));
  EXPECT_TRUE(d.has_box(7, 8));
  EXPECT_FALSE(d.has_box(7, 6));
  EXPECT_EQ(d.row_columns(4), (std::vector<int>{5, 6, 8}));
  EXPECT_EQ(d.column_rows(8), (std::vector<int>{1, 4, 7}));
  EXPECT_EQ(d.leftmost_plus(4), 8);
  EXPECT_EQ(d.leftmost_plus(7), -1);
  EXPECT_TRUE(d.plus(1, 3));
  EXPECT_FALSE(d.plus(1, 2));
}

TEST(LeDiagram, TextFormat) {
  const LeDiagram d = example38();
  const std::string text = format_le_diagram(d);
  EXPECT_EQ(text, "8 3\n5,3,1\n00++0\n+++\n0\n");
  EXPECT_EQ(parse_le_diagram(text), d);
  EXPECT_THROW(parse_le_diagram("8 3\n5,3,1\n00++0\n+++\n"), ParseError);
  EXPECT_THROW(parse_le_diagram("8 3\n5,3,1\n00++\n+++\n0\n"), ParseError);
  EXPECT_THROW(parse_le_diagram("8 3\n3,5,1\n000\n00000\n0\n"), ParseError);
  EXPECT_THROW(parse_le_diagram("3 1\n2\n+x\n"), ParseError);
}

TEST(IsLe, Examples) {
  EXPECT_TRUE(is_le(example38()));
  LeDiagram bad(8, {1, 4, 7});
  bad.set(1, 5, true);
  bad.set(4, 6, true);
  EXPECT_FALSE(is_le(bad));
  EXPECT_TRUE(is_le(LeDiagram(8, {1, 4, 7})));
}

TEST(LeToPerm, Examples) {
  EXPECT_EQ(le_to_perm(example38()), example_perm());
  EXPECT_EQ(cell_dimension(example38()), 5);

  LeDiagram row(3, {1});
  row.set(1, 2, true);
  row.set(1, 3, true);
  EXPECT_EQ(le_to_perm(row), make_permutation({2, 3, 1}));

  EXPECT_EQ(le_to_perm(LeDiagram(4, {})), make_permutation({1, 2, 3, 4}));
  // An all-0 row is a co-loop, an all-0 column a loop.
  const DecoratedPermutation z = le_to_perm(LeDiagram(3, {2}));
  EXPECT_TRUE(z.is_coloop(2));
  EXPECT_TRUE(z.is_loop(3));
  EXPECT_TRUE(z.is_loop(1));
}

TEST(LeToPerm, RejectsNonLeFillings) {
  LeDiagram bad(8, {1, 4, 7});
  bad.set(1, 5, true);
  bad.set(4, 6, true);
  EXPECT_THROW(le_to_perm(bad), DomainError);
}

TEST(PermToLe, Examples) {
  EXPECT_EQ(perm_to_le(example_perm()), example38());
  EXPECT_EQ(perm_to_le(example_perm(), 3), example38());
  EXPECT_THROW(perm_to_le(example_perm(), 2), DomainError);
  EXPECT_EQ(perm_to_le(make_permutation({1, 2, 3})), LeDiagram(3, {}));
}

TEST(CellDimension, TopCell) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<int> rows;
      for (int i = 1; i <= k; ++i) rows.push_back(i);
      LeDiagram d(n, rows);
      for (int r : d.rows())
        for (int c : d.row_columns(r)) d.set(r, c, true);
      EXPECT_TRUE(is_le(d));
      EXPECT_EQ(cell_dimension(d), k * (n - k));
    }
}

TEST(Bijection, ExhaustiveSmallN) {
  for (int n = 0; n <= 6; ++n) {
    const auto diagrams = all_le_diagrams(n);
    const auto perms = all_decorated_permutations(n);
    EXPECT_EQ(static_cast<long long>(perms.size()), decorated_count(n)) << n;
    EXPECT_EQ(diagrams.size(), perms.size()) << n;
    std::set<DecoratedPermutation> images;
    for (const LeDiagram& d : diagrams) {
      ASSERT_TRUE(is_le(d));
      const DecoratedPermutation p = le_to_perm(d);
      EXPECT_EQ(anti_excedances(p), d.rows());
      EXPECT_EQ(perm_to_le(p), d);
      EXPECT_EQ(parse_le_diagram(format_le_diagram(d)), d);
      images.insert(p);
    }
    EXPECT_EQ(images.size(), perms.size());
    for (const DecoratedPermutation& p : perms) {
      EXPECT_EQ(le_to_perm(perm_to_le(p)), p);
      EXPECT_EQ(parse_permutation(format_permutation(p)), p);
    }
  }
}

TEST(Bijection, FillingCountsPerShape) {
  // Cells of Gr(k, n): the number of Le diagrams of type (k, n) equals the
  // number of decorated permutations with k anti-excedances.
  for (int n = 1; n <= 6; ++n) {
    std::map<int, int> by_k;
    for (const auto& p : all_decorated_permutations(n)) ++by_k[static_cast<int>(anti_excedances(p).size())];
    for (int k = 0; k <= n; ++k) EXPECT_EQ(static_cast<int>(all_le_diagrams(n, k).size()), by_k[k]);
  }
}
