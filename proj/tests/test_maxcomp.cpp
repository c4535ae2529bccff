#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "overlap/maxcomp.hpp"
#include "overlap/oracle.hpp"
#include "support.hpp"

namespace overlap {
namespace {

// Column of element v in the incidence matrix with rows in LF order.
std::vector<char> column(const SetFamily& f, const LFOrder& lf, Element v) {
  std::vector<char> col;
  for (SetId x : lf.order) {
    const auto s = f.set(x);
    col.push_back(std::find(s.begin(), s.end(), v) != s.end());
  }
  return col;
}

struct Prepared {
  SetFamily f;
  LFOrder lf;
  PfOrder pf;
  std::vector<SetExtent> ext;
};

Prepared prepare(SetFamily f) {
  Prepared p{std::move(f), {}, {}, {}};
  p.lf = lf_order(p.f);
  p.pf = compute_pf(p.f, p.lf);
  p.ext = compute_bounds(p.f, p.pf);
  return p;
}

TEST(ComputePf, FamA) {
  const Prepared p = prepare(testing::fam_a());
  // Tokens "1".."4" are indices 0..3; P_f = (4, 3, 1, 2).
  EXPECT_EQ(p.pf.elem_at, (std::vector<Element>{3, 2, 0, 1}));
  for (Position q = 1; q <= 4; ++q) EXPECT_EQ(p.pf.pos_f[p.pf.element_at(q)], q);
}

TEST(ComputePf, SingleSetGoesLast) {
  const Prepared p = prepare(parse_family("!universe a c\nb\n"));
  EXPECT_EQ(p.pf.pos_f[2], 3u);  // b
}

TEST(ComputePf, AllSingletons) {
  const Prepared p = prepare(parse_family("a\nb\nc\nd\n"));
  std::vector<Element> sorted = p.pf.elem_at;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<Element>{0, 1, 2, 3}));
  OrderedPartition part(4);
  for (SetId x : p.lf.order) part.refine(p.f.set(x));
  EXPECT_EQ(part.part_count(), 4u);
}

// P_f lists columns in non-decreasing lexicographic order (0 < 1, top row
// most significant).
TEST(ComputePf, LexicographicColumnOrder) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Prepared p = prepare(testing::random_family(rng, 25, 30));
    for (Position q = 2; q <= p.pf.size(); ++q)
      ASSERT_LE(column(p.f, p.lf, p.pf.element_at(q - 1)),
                column(p.f, p.lf, p.pf.element_at(q)));
  }
}

TEST(ComputeBounds, FamA) {
  const Prepared p = prepare(testing::fam_a());
  EXPECT_EQ(p.ext[1], (SetExtent{2, 4}));  // X2 = {2,3}
  EXPECT_EQ(p.ext[0], (SetExtent{3, 4}));  // X1 = {1,2}
  EXPECT_EQ(p.ext[3], (SetExtent{1, 4}));  // X4 = V
}

TEST(ComputeBounds, SingletonHasEqualEnds) {
  const Prepared p = prepare(parse_family("a b c\nb\n"));
  EXPECT_EQ(p.ext[1].left, p.ext[1].right);
  EXPECT_EQ(p.ext[0], (SetExtent{1, 3}));
}

TEST(ComputeBounds, ExactMinMax) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const Prepared p = prepare(testing::random_family(rng, 25, 30));
    for (SetId x = 0; x < p.f.set_count(); ++x) {
      Position lo = 1000, hi = 0;
      for (Element v : p.f.set(x)) {
        lo = std::min(lo, p.pf.pos_f[v]);
        hi = std::max(hi, p.pf.pos_f[v]);
      }
      EXPECT_EQ(p.ext[x], (SetExtent{lo, hi}));
      EXPECT_EQ(lo == hi, p.f.size_of(x) == 1);
    }
  }
}

TEST(AMStructure, FamA) {
  const Prepared p = prepare(testing::fam_a());
  AMStructure am(p.f, p.lf, p.ext);
  // right = 4 for X4 (left 1), X2 (left 2), X1 (left 3).
  EXPECT_EQ(am.list(4), (std::vector<SetId>{3, 1, 0}));
  EXPECT_EQ(am.list(2), (std::vector<SetId>{2}));  // X3 = {3,4} at positions 1, 2
  EXPECT_TRUE(am.empty(1));
  EXPECT_TRUE(am.empty(3));

  am.remove_size(4);
  EXPECT_EQ(am.list(4), (std::vector<SetId>{1, 0}));
  am.remove(1);
  EXPECT_EQ(am.list(4), (std::vector<SetId>{0}));
  EXPECT_FALSE(am.contains(1));
  am.remove(1);  // already gone
  EXPECT_EQ(am.live_count(), 2u);
  am.remove_size(2);
  EXPECT_EQ(am.live_count(), 0u);
  EXPECT_TRUE(am.empty(4));
  EXPECT_TRUE(am.empty(2));
}

TEST(AMStructure, ListsSortedByLeft) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const Prepared p = prepare(testing::random_family(rng, 25, 40));
    AMStructure am(p.f, p.lf, p.ext);
    std::size_t seen = 0;
    for (Position q = 1; q <= p.pf.size(); ++q) {
      const auto list = am.list(q);
      seen += list.size();
      for (std::size_t k = 0; k < list.size(); ++k) {
        EXPECT_EQ(p.ext[list[k]].right, q);
        if (k) EXPECT_LE(p.ext[list[k - 1]].left, p.ext[list[k]].left);
      }
    }
    EXPECT_EQ(seen, p.f.set_count());
  }
}

MaxAssignment run_max(const Prepared& p) {
  AMStructure am(p.f, p.lf, p.ext);
  return compute_max(p.f, p.lf, p.pf, p.ext, am);
}

TEST(ComputeMax, FamA) {
  const Prepared p = prepare(testing::fam_a());
  EXPECT_EQ(run_max(p), (MaxAssignment{1, 0, 1, kNoSet}));
  EXPECT_EQ(oracle::max_oracle(p.f, p.lf), (MaxAssignment{1, 0, 1, kNoSet}));
}

TEST(ComputeMax, MutualPairOfEqualSize) {
  const Prepared p = prepare(parse_family("1 2\n2 3\n"));
  EXPECT_EQ(run_max(p), (MaxAssignment{1, 0}));
}

TEST(ComputeMax, NoOverlapMeansNone) {
  for (const char* text : {"a b\nc d\ne\n", "a b\na b\n", "a\na b\na b c\n"}) {
    const Prepared p = prepare(parse_family(text));
    const MaxAssignment max = run_max(p);
    EXPECT_TRUE(std::all_of(max.begin(), max.end(), [](SetId y) { return y == kNoSet; }))
        << text;
  }
}

TEST(ComputeMax, PrefersEarliestInLFOrder) {
  // X1 = {b,c} is overlapped by X2 = {a,b,x} and X3 = {c,d,y}; X2 comes first.
  const Prepared p = prepare(parse_family("b c\na b x\nc d y\n"));
  const MaxAssignment max = run_max(p);
  EXPECT_EQ(max, (MaxAssignment{1, kNoSet, kNoSet}));
}

TEST(ComputeMax, RejectsForeignPfOrder) {
  Prepared p = prepare(testing::fam_a());
  p.pf.elem_at = {0, 1, 2, 3};
  for (Position q = 1; q <= 4; ++q) p.pf.pos_f[q - 1] = q;
  p.ext = compute_bounds(p.f, p.pf);
  EXPECT_THROW(run_max(p), std::logic_error);
}

TEST(ComputeMax, MatchesOracleOnRandomFamilies) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const Prepared p = prepare(testing::random_family(rng, 20, 30));
    const MaxAssignment max = run_max(p);
    ASSERT_EQ(max, oracle::max_oracle(p.f, p.lf)) << format_family(p.f);
    for (SetId x = 0; x < p.f.set_count(); ++x) {
      if (max[x] == kNoSet) continue;
      EXPECT_TRUE(oracle::overlaps(p.f, x, max[x]));
      EXPECT_GE(p.f.size_of(max[x]), p.f.size_of(x));
    }
  }
}

}  // namespace
}  // namespace overlap
