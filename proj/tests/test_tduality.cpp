#include <gtest/gtest.h>

#include "c2kit/errors.hpp"
#include "c2kit/positroid.hpp"
#include "c2kit/tduality.hpp"

using namespace c2kit;

namespace {

LeDiagram full_row_13() {
  LeDiagram d(3, {1});
  d.set(1, 2, true);
  d.set(1, 3, true);
  return d;
}

bool has_coloop_row(const LeDiagram& d) {
  for (int r : d.rows())
    if (!d.row_has_plus(r)) return true;
  return false;
}

std::vector<LeDiagram> coloopless(int n) {
  std::vector<LeDiagram> out;
  for (const LeDiagram& d : all_le_diagrams(n))
    if (!has_coloop_row(d)) out.push_back(d);
  return out;
}

}  // namespace

TEST(TdualPerm, Examples) {
  EXPECT_EQ(tdual_perm(make_permutation({2, 3, 1})), make_permutation({3, 1, 2}));
  EXPECT_EQ(tdual_perm(make_permutation({1, 2, 3, 4})), make_permutation({2, 3, 4, 1}));
  EXPECT_THROW(tdual_perm(make_permutation({1, 2}, Decoration::CoLoop)), DomainError);
  // Fixed points of the image are co-loops.
  const DecoratedPermutation q = tdual_perm(parse_permutation("3,2_,1"));
  EXPECT_EQ(format_permutation(q), "2,1,3^");
}

TEST(TdualPerm, InverseOnExhaustiveDomains) {
  for (int n = 1; n <= 6; ++n)
    for (const DecoratedPermutation& p : all_decorated_permutations(n)) {
      if (!p.has_coloop()) {
        const DecoratedPermutation q = tdual_perm(p);
        EXPECT_FALSE(q.has_loop());
        EXPECT_EQ(anti_excedances(q).size(), anti_excedances(p).size() + 1);
        EXPECT_EQ(tdual_perm_inverse(q), p);
      }
      if (!p.has_loop()) EXPECT_EQ(tdual_perm(tdual_perm_inverse(p)), p);
      else EXPECT_THROW(tdual_perm_inverse(p), DomainError);
    }
}

TEST(TdualShape, Examples) {
  const TdualShape s = tdual_shape(full_row_13());
  EXPECT_EQ(s.a_n, 2);
  EXPECT_EQ(s.rows, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.shape, (std::vector<int>{1, 1}));

  const TdualShape e = tdual_shape(LeDiagram(5, {}));
  EXPECT_EQ(e.a_n, 1);
  EXPECT_EQ(e.rows, (std::vector<int>{1}));
  EXPECT_EQ(e.shape, (std::vector<int>{4}));

  const TdualShape last = tdual_shape(perm_to_le(parse_permutation("3,2_,1")));
  EXPECT_EQ(last.a_n, 3);
  EXPECT_EQ(last.rows.back(), 3);
  EXPECT_EQ(last.shape.back(), 0);

  EXPECT_THROW(tdual_shape(LeDiagram(3, {2})), DomainError);
}

TEST(TdualFill, Examples) {
  const LeDiagram d = tdual_fill(full_row_13());
  EXPECT_EQ(d.rows(), (std::vector<int>{1, 2}));
  EXPECT_EQ(d.shape(), (std::vector<int>{1, 1}));
  EXPECT_EQ(d.plus_count(), 2);
  EXPECT_EQ(le_to_perm(d), make_permutation({3, 1, 2}));

  for (int n = 1; n <= 6; ++n) {
    const LeDiagram e = tdual_fill(LeDiagram(n, {}));
    EXPECT_EQ(e.rows(), (std::vector<int>{1}));
    EXPECT_EQ(cell_dimension(e), n - 1);
    std::vector<int> shift;
    for (int i = 2; i <= n; ++i) shift.push_back(i);
    shift.push_back(1);
    // For n = 1 the image is a single co-loop.
    EXPECT_EQ(le_to_perm(e), make_permutation(shift, Decoration::CoLoop));
  }
  EXPECT_THROW(tdual_fill(LeDiagram(3, {2})), DomainError);
}

TEST(TdualFill, RowContexts) {
  // a_n = 2; row 1 holds a + in column a_n, so it is of type II.
  const auto ctx = row_contexts(full_row_13());
  ASSERT_EQ(ctx.size(), 2u);
  EXPECT_EQ(ctx[0].label, 1);
  EXPECT_EQ(ctx[0].leftmost, 3);
  EXPECT_EQ(ctx[0].below, 2);
  EXPECT_EQ(ctx[0].type, RowType::II);
  EXPECT_EQ(ctx[1].label, 2);
  EXPECT_EQ(ctx[1].leftmost, 4);
  EXPECT_EQ(ctx[1].below, 4);
  EXPECT_EQ(ctx[1].type, RowType::III);
}

TEST(TdualFill, ExhaustiveUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const LeDiagram& dhat : coloopless(n)) {
      const LeDiagram d = tdual_fill(dhat);
      EXPECT_TRUE(is_le(d));
      for (int c : d.columns()) EXPECT_TRUE(d.column_has_plus(c));
      EXPECT_EQ(cell_dimension(d), cell_dimension(dhat) - 2 * dhat.k() + (n - 1));
      EXPECT_EQ(le_to_perm(d), tdual_perm(le_to_perm(dhat))) << format_le_diagram(dhat);
    }
}

TEST(LShapes, ExhaustiveUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const LeDiagram& dhat : coloopless(n)) {
      const LeDiagram d = tdual_fill(dhat);
      const LShapeDecomposition dec = lshape_decompose(dhat, d);
      EXPECT_TRUE(dec.ok()) << format_le_diagram(dhat) << (dec.problems.empty() ? "" : dec.problems.front());
      int plus = 0, st = 0;
      for (const LShape& l : dec.lshapes) {
        EXPECT_FALSE(l.is_string);
        EXPECT_LT(l.top, l.bottom);
        EXPECT_TRUE(d.plus(l.top, l.column));
        EXPECT_EQ(static_cast<int>(l.vertical_plus_rows().size()), l.s + l.t + 1);
        plus += static_cast<int>(l.boxes.size());
        st += l.s + l.t;
      }
      for (const LShape& s : dec.strings) {
        EXPECT_TRUE(s.is_string);
        plus += static_cast<int>(s.boxes.size());
      }
      EXPECT_EQ(plus, d.plus_count());
      EXPECT_EQ(st, cell_dimension(dhat) - dhat.k());
      for (const Section& sec : dec.sections) {
        int strings = 0;
        for (const LShape& b : sec.chain) strings += b.is_string;
        EXPECT_LE(strings, 1);
        if (strings == 1) EXPECT_TRUE(sec.chain.back().is_string);
      }
    }
}

TEST(LShapes, RejectsForeignDiagram) {
  const LeDiagram dhat = full_row_13();
  LeDiagram wrong = tdual_fill(dhat);
  wrong.set(1, 3, false);
  EXPECT_THROW(lshape_decompose(dhat, wrong), DomainError);
}

TEST(LShapes, Rendering) {
  const LeDiagram dhat = perm_to_le(parse_permutation("2,4,1,3"));
  const LeDiagram d = tdual_fill(dhat);
  const std::string text = format_lshapes(lshape_decompose(dhat, d), d);
  EXPECT_FALSE(text.empty());
  EXPECT_EQ(text, format_lshapes(lshape_decompose(dhat, d), d));
}

TEST(Iterate, DoubleShift) {
  // All loops: the first two images are cyclic shifts without fixed points.
  const LeDiagram dhat = LeDiagram(4, {});
  const TdualityIteration it = iterate_tduality(dhat, 2);
  ASSERT_EQ(it.diagrams.size(), 3u);
  EXPECT_FALSE(it.stopped_early);
  EXPECT_EQ(it.diagrams[1], tdual_fill(dhat));
  const DecoratedPermutation p = le_to_perm(dhat);
  EXPECT_EQ(le_to_perm(it.diagrams[2]), tdual_perm(tdual_perm(p)));
  EXPECT_EQ(le_to_perm(it.diagrams[2]), make_permutation({3, 4, 1, 2}));

  // 2,4,1,3 maps to 4,1,3^,2, which has a co-loop.
  const TdualityIteration short_run = iterate_tduality(perm_to_le(parse_permutation("2,4,1,3")), 2);
  EXPECT_EQ(short_run.diagrams.size(), 2u);
  EXPECT_TRUE(short_run.stopped_early);
}

TEST(Iterate, StopsAtCoLoop) {
  // a_n = n: the image has an empty row labelled n, i.e. a co-loop.
  const LeDiagram dhat = perm_to_le(parse_permutation("3,2_,1"));
  const TdualityIteration it = iterate_tduality(dhat, 3);
  ASSERT_EQ(it.diagrams.size(), 2u);
  EXPECT_TRUE(it.stopped_early);
  EXPECT_FALSE(it.reason.empty());
  EXPECT_TRUE(le_to_perm(it.diagrams[1]).is_coloop(3));
}
