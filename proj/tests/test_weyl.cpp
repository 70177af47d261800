#include "support.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <set>

using namespace kldn;
using kldn::testing::seq;

namespace {

// Breadth-first distance from the identity in the graph whose edges are
// w -- w s_i (whenever w s_i stays in the quotient).
std::map<PMSequence, int> bfs_lengths(int n) {
  std::map<PMSequence, int> dist{{PMSequence::identity(n), 0}};
  std::deque<PMSequence> queue{PMSequence::identity(n)};
  while (!queue.empty()) {
    const PMSequence w = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const Move m = apply_generator(w, GeneratorIndex(i));
      if (m.kind == MoveKind::NotInQuotient) continue;
      if (dist.emplace(*m.target, dist[w] + 1).second) queue.push_back(*m.target);
    }
  }
  return dist;
}

// All partitions in the n x n box, kept if symmetric with an even diagonal.
void partitions(int n, int row, int max_part, std::vector<int>& rows, std::set<std::vector<int>>& out) {
  if (row == n) {
    SymYoungDiagram y(n, rows);
    if (y.is_valid()) out.insert(rows);
    return;
  }
  for (int r = 0; r <= max_part; ++r) {
    rows.push_back(r);
    partitions(n, row + 1, r, rows, out);
    rows.pop_back();
  }
}

} // namespace

TEST(Weyl, EnumerateSmallCases) {
  const auto one = enumerate_wp(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], seq("+"));

  const std::set<PMSequence> expected{seq("++++"), seq("--++"), seq("-+-+"), seq("-++-"),
                                      seq("+--+"), seq("+-+-"), seq("++--"), seq("----")};
  const auto four = enumerate_wp(4);
  EXPECT_EQ(std::set<PMSequence>(four.begin(), four.end()), expected);
  EXPECT_EQ(four.front(), PMSequence::identity(4));
  EXPECT_TRUE(std::is_sorted(four.begin(), four.end()));
  EXPECT_EQ(enumerate_wp(6).size(), 32u);
  EXPECT_THROW(enumerate_wp(0), std::invalid_argument);
}

TEST(Weyl, EnumerateCountsAreTwoToTheNMinusOne) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_wp(n).size(), std::size_t{1} << (n - 1)) << n;
}

TEST(Weyl, ParseAcceptsBracketsAndReportsPositions) {
  EXPECT_EQ(PMSequence::parse("|-+-+]"), seq("-+-+"));
  try {
    PMSequence::parse("-+x+");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(PMSequence::parse("-+++"), ParseError);
  EXPECT_THROW(PMSequence::parse("-+-+", 3), ParseError);
  EXPECT_THROW(PMSequence::parse(""), ParseError);
  EXPECT_THROW(PMSequence({Sign::Minus}), std::invalid_argument);
}

TEST(Weyl, ApplyGeneratorExamples) {
  Move m = apply_generator(seq("-+-+"), GeneratorIndex(3));
  EXPECT_EQ(m.kind, MoveKind::Longer);
  EXPECT_EQ(*m.target, seq("-++-"));
  m = apply_generator(seq("++++"), GeneratorIndex(0));
  EXPECT_EQ(m.kind, MoveKind::Longer);
  EXPECT_EQ(*m.target, seq("--++"));
  EXPECT_EQ(apply_generator(seq("++++"), GeneratorIndex(1)).kind, MoveKind::NotInQuotient);
  EXPECT_EQ(apply_generator(seq("-+-+"), GeneratorIndex(0)).kind, MoveKind::NotInQuotient);
  EXPECT_EQ(apply_generator(seq("+"), GeneratorIndex(0)).kind, MoveKind::NotInQuotient);
  EXPECT_THROW(apply_generator(seq("++++"), GeneratorIndex(4)), std::out_of_range);
  EXPECT_THROW(apply_generator(seq("++++"), GeneratorIndex(-1)), std::out_of_range);
}

TEST(Weyl, ApplyGeneratorIsInvolutive) {
  for (int n = 1; n <= 7; ++n)
    for (const PMSequence& w : enumerate_wp(n))
      for (int i = 0; i < n; ++i) {
        const Move m = apply_generator(w, GeneratorIndex(i));
        if (m.kind == MoveKind::NotInQuotient) continue;
        const Move back = apply_generator(*m.target, GeneratorIndex(i));
        EXPECT_EQ(back.kind, m.kind == MoveKind::Longer ? MoveKind::Shorter : MoveKind::Longer);
        EXPECT_EQ(*back.target, w);
      }
}

TEST(Weyl, YoungDiagramExamples) {
  EXPECT_EQ(young_diagram(seq("++++")).box_count(), 0);
  const SymYoungDiagram staircase = young_diagram(seq("-+-"));
  EXPECT_EQ(staircase.rows(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(staircase.box_count(), 6);
  const SymYoungDiagram ten = young_diagram(seq("+-+-"));
  EXPECT_EQ(ten.rows(), (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(young_diagram(seq("----")).rows(), (std::vector<int>{4, 4, 4, 4}));
}

TEST(Weyl, YoungDiagramIsABijectionOntoSymmetricEvenDiagonalShapes) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::vector<int>> image, expected;
    for (const PMSequence& w : enumerate_wp(n)) {
      const SymYoungDiagram y = young_diagram(w);
      EXPECT_TRUE(y.is_valid()) << w;
      image.insert(y.rows());
    }
    std::vector<int> rows;
    partitions(n, 0, n, rows, expected);
    EXPECT_EQ(image.size(), enumerate_wp(n).size()) << "not injective for n=" << n;
    EXPECT_EQ(image, expected) << n;
  }
}

TEST(Weyl, ReducedWordExamples) {
  EXPECT_TRUE(reduced_word(seq("+++")).empty());
  EXPECT_EQ(reduced_word(seq("+-+-")), (std::vector<int>{0, 2, 3, 1}));
  EXPECT_EQ(reduced_word(seq("----")).size(), 6u);
  EXPECT_EQ(from_reduced_word(4, {0, 2, 3, 1, 2, 0}), seq("----"));
  EXPECT_EQ(length(seq("++++")), 0);
  EXPECT_EQ(length(seq("--++")), 1);
  EXPECT_EQ(length(seq("----")), 6);
  EXPECT_THROW(from_reduced_word(4, {0, 0}), std::invalid_argument);
}

TEST(Weyl, ReducedWordReplaysAndMatchesGraphDistance) {
  for (int n = 1; n <= 8; ++n) {
    const auto dist = bfs_lengths(n);
    ASSERT_EQ(dist.size(), enumerate_wp(n).size());
    for (const PMSequence& w : enumerate_wp(n)) {
      const std::vector<int> word = reduced_word(w);
      EXPECT_EQ(from_reduced_word(n, word), w);
      EXPECT_EQ(static_cast<int>(word.size()), length(w));
      EXPECT_EQ(length(w), dist.at(w)) << w;
    }
  }
}

TEST(Weyl, WordTextFormat) {
  EXPECT_EQ(parse_word("0,2,3,1"), (std::vector<int>{0, 2, 3, 1}));
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_EQ(format_word({0, 2, 3, 1}), "0,2,3,1");
  EXPECT_THROW(parse_word("0,,1"), ParseError);
  EXPECT_THROW(parse_word("0,2,"), ParseError);
  EXPECT_THROW(parse_word("0;2"), ParseError);
}

TEST(Weyl, DynkinDiagram) {
  EXPECT_TRUE(dynkin_adjacent(0, 2));
  EXPECT_TRUE(dynkin_adjacent(1, 2));
  EXPECT_TRUE(dynkin_adjacent(2, 3));
  EXPECT_FALSE(dynkin_adjacent(0, 1));
  EXPECT_FALSE(dynkin_adjacent(1, 3));
  EXPECT_FALSE(dynkin_adjacent(2, 2));
}
