#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "overlap/family.hpp"
#include "support.hpp"

namespace overlap {
namespace {

template <class T>
std::vector<T> as_vec(std::span<const T> s) { return {s.begin(), s.end()}; }

TEST(ParseFamily, TokenizesAndInterns) {
  const SetFamily f = parse_family("a b\nb c\n");
  EXPECT_EQ(f.universe_size(), 3u);
  EXPECT_EQ(f.set_count(), 2u);
  EXPECT_EQ(f.tokens(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(as_vec(f.set(0)), (std::vector<Element>{0, 1}));
  EXPECT_EQ(as_vec(f.set(1)), (std::vector<Element>{1, 2}));
}

TEST(ParseFamily, DropsDuplicateTokensInALine) {
  const SetFamily f = parse_family("a a b\n");
  EXPECT_EQ(f.size_of(0), 2u);
  EXPECT_EQ(f.total_size(), 2u);
}

TEST(ParseFamily, FamA) {
  const SetFamily f = testing::fam_a();
  EXPECT_EQ(f.universe_size(), 4u);
  EXPECT_EQ(f.set_count(), 4u);
  EXPECT_EQ(f.total_size(), 10u);
  // Round trip through the text format.
  const SetFamily g = parse_family(format_family(f));
  EXPECT_EQ(g.tokens(), f.tokens());
  for (SetId i = 0; i < f.set_count(); ++i) EXPECT_EQ(as_vec(g.set(i)), as_vec(f.set(i)));
}

TEST(ParseFamily, CommentsWhitespaceAndUniverseHeader) {
  const SetFamily f = parse_family("# header comment\n!universe z y\n  x\ty  \n   # indented\nx\r\n");
  EXPECT_EQ(f.tokens(), (std::vector<std::string>{"z", "y", "x"}));
  EXPECT_EQ(f.set_count(), 2u);
  EXPECT_EQ(as_vec(f.set(0)), (std::vector<Element>{2, 1}));
  EXPECT_EQ(format_family(f), "!universe z\nx y\nx\n");
}

TEST(ParseFamily, TokensAreByteCompared) {
  const SetFamily f = parse_family("A a\n");
  EXPECT_EQ(f.universe_size(), 2u);
}

TEST(ParseFamily, RejectsEmptyLineWithLineNumber) {
  try {
    parse_family("a b\n\nc\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_family("a\n   \t\n"), ParseError);
}

TEST(ParseFamily, RejectsFamilyWithoutSets) {
  try {
    parse_family("# only comments\n# here\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "no sets");
  }
  EXPECT_THROW(parse_family(""), ParseError);
}

TEST(ParseFamily, UniverseHeaderMustComeFirst) {
  EXPECT_THROW(parse_family("a\n!universe b\n"), ParseError);
  EXPECT_THROW(parse_family("!universeb\na\n"), ParseError);
}

TEST(FromSets, ValidatesInput) {
  EXPECT_THROW(SetFamily::from_sets(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(SetFamily::from_sets(2, {{}}), std::invalid_argument);
  EXPECT_EQ(SetFamily::from_sets(2, {{1, 1, 0}}).size_of(0), 2u);
}

TEST(LFOrder, FamA) {
  const LFOrder lf = lf_order(testing::fam_a());
  EXPECT_EQ(lf.order, (std::vector<SetId>{3, 0, 1, 2}));
  EXPECT_EQ(lf.rank, (std::vector<std::size_t>{1, 2, 3, 0}));
}

TEST(LFOrder, EqualSizesKeepInputOrder) {
  const SetFamily star = parse_family("x1 x2\nx1 x3\nx1 x4\nx1 x5\n");
  EXPECT_EQ(lf_order(star).order, (std::vector<SetId>{0, 1, 2, 3}));
}

TEST(LFOrder, Invariants) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const SetFamily f = testing::random_family(rng, 20, 30);
    const LFOrder lf = lf_order(f);
    for (std::size_t k = 0; k < lf.order.size(); ++k) {
      EXPECT_EQ(lf.rank[lf.order[k]], k);
      if (k == 0) continue;
      const SetId a = lf.order[k - 1], b = lf.order[k];
      EXPECT_TRUE(f.size_of(a) > f.size_of(b) || (f.size_of(a) == f.size_of(b) && a < b));
    }
  }
}

TEST(SLLists, FamA) {
  const SetFamily f = testing::fam_a();
  const SLLists sl = build_sl_lists(f, lf_order(f));
  // Reverse LF is [X3, X2, X1, X4].
  EXPECT_EQ(as_vec(sl[0]), (std::vector<SetId>{0, 3}));
  EXPECT_EQ(as_vec(sl[1]), (std::vector<SetId>{1, 0, 3}));
  EXPECT_EQ(as_vec(sl[2]), (std::vector<SetId>{2, 1, 3}));
  EXPECT_EQ(as_vec(sl[3]), (std::vector<SetId>{2, 3}));
}

TEST(SLLists, IsolatedAndSingleMembershipElements) {
  const SetFamily f = parse_family("!universe lonely\na b\nb\n");
  const SLLists sl = build_sl_lists(f, lf_order(f));
  EXPECT_TRUE(sl[0].empty());
  EXPECT_EQ(as_vec(sl[1]), (std::vector<SetId>{0}));
  EXPECT_EQ(as_vec(sl[2]), (std::vector<SetId>{1, 0}));
}

TEST(SLLists, Invariants) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const SetFamily f = testing::random_family(rng, 20, 30);
    const LFOrder lf = lf_order(f);
    const SLLists sl = build_sl_lists(f, lf);
    EXPECT_EQ(sl.total_size(), f.total_size());
    for (Element v = 0; v < f.universe_size(); ++v) {
      const auto list = sl[v];
      for (SetId x = 0; x < f.set_count(); ++x) {
        const bool member = std::find(f.set(x).begin(), f.set(x).end(), v) != f.set(x).end();
        EXPECT_EQ(member, std::find(list.begin(), list.end(), x) != list.end());
      }
      for (std::size_t k = 1; k < list.size(); ++k) {
        EXPECT_LE(f.size_of(list[k - 1]), f.size_of(list[k]));
        EXPECT_GT(lf.rank[list[k - 1]], lf.rank[list[k]]);  // reverse LF
      }
    }
  }
}

}  // namespace
}  // namespace overlap
