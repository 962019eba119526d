#include <gtest/gtest.h>

#include <set>

#include "kjdt/tableau.hpp"

using namespace kjdt;

namespace {

// every assignment of 1..n to the cells, kept when increasing and gap-free
std::set<IncreasingTableau> brute_force_inc(const SkewShape& shape) {
  const auto cells = shape.cells();
  const int n = static_cast<int>(cells.size());
  std::set<IncreasingTableau> out;
  std::vector<int> v(cells.size(), 1);
  while (true) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
    for (int r = 0; r < shape.outer().length(); ++r) rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.outer()[r]), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) rows[static_cast<std::size_t>(cells[i].row)][static_cast<std::size_t>(cells[i].col)] = v[i];
    try {
      IncreasingTableau t(shape, rows);
      if (t.is_canonical()) out.insert(t);
    } catch (const error&) {
    }
    std::size_t i = 0;
    while (i < v.size() && v[i] == n) v[i++] = 1;
    if (i == v.size()) break;
    ++v[i];
  }
  if (n == 0) out.insert(IncreasingTableau(shape, std::vector<std::vector<int>>(static_cast<std::size_t>(shape.outer().length()))));
  return out;
}

int brute_force_lis(const std::vector<int>& w) {
  int best = 0;
  const std::size_t n = w.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int last = 0, len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (mask >> i & 1u) {
        ok = w[i] > last;
        last = w[i];
        ++len;
      }
    if (ok) best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST(Tableau, ValidatesStrictIncrease) {
  EXPECT_THROW(tableau_from_rows({{1, 1}}), error);
  EXPECT_THROW(tableau_from_rows({{1, 2}, {1}}), error);
  EXPECT_NO_THROW(tableau_from_rows({{1, 2}, {2}}));
  EXPECT_NO_THROW(tableau_from_rows({{0, 1}, {1}}));
}

TEST(Tableau, InnerShapeFromLeadingDots) {
  auto t = tableau_from_rows({{0, 0, 0, 2}, {0, 0, 1, 3}, {0, 1, 2}, {1, 2, 4}});
  EXPECT_EQ(t.inner(), Partition({3, 2, 1}));
  EXPECT_EQ(t.outer(), Partition({4, 4, 3, 3}));
  EXPECT_EQ(t.max_entry(), 4);
  EXPECT_TRUE(t.is_canonical());
  EXPECT_FALSE(t.is_standard());
}

TEST(Tableau, Superstandard) {
  const auto s = superstandard(Partition{3, 2});
  EXPECT_EQ(s, tableau_from_rows({{1, 2, 3}, {4, 5}}));
  EXPECT_TRUE(is_superstandard(s));
  EXPECT_FALSE(is_superstandard(tableau_from_rows({{1, 2, 4}, {3, 5}})));
  EXPECT_TRUE(superstandard(Partition{}).empty());
}

TEST(Tableau, ReadingWordIsBottomUp) {
  auto t = tableau_from_rows({{0, 0, 0, 2}, {0, 0, 2}, {1, 3, 4}});
  EXPECT_EQ(reading_word(t), (std::vector<int>{1, 3, 4, 2, 2}));
  EXPECT_EQ(lis(t), 3);
}

TEST(Tableau, LisMatchesBruteForce) {
  const std::vector<std::vector<int>> words{{}, {1}, {3, 1, 2}, {2, 2, 2}, {1, 3, 4, 2, 2}, {5, 1, 4, 2, 3, 6, 1}};
  for (const auto& w : words) EXPECT_EQ(lis(std::span<const int>(w)), brute_force_lis(w));
}

TEST(ShapeSequence, ExampleChain) {
  auto t = tableau_from_rows({{0, 0, 0, 2}, {0, 0, 1, 3}, {0, 1, 2}, {1, 2, 4}});
  const auto seq = shape_sequence(t);
  const std::vector<Partition> expected{{3, 2, 1}, {3, 3, 2, 1}, {4, 3, 3, 2}, {4, 4, 3, 2}, {4, 4, 3, 3}};
  EXPECT_EQ(seq.chain, expected);
  EXPECT_EQ(from_shape_sequence(seq), t);
}

TEST(ShapeSequence, RoundTripAndErrors) {
  for (const auto& t : enumerate_inc(SkewShape(Partition{3, 2, 1}, Partition{1})))
    EXPECT_EQ(from_shape_sequence(shape_sequence(t)), t);
  EXPECT_THROW(from_shape_sequence({{Partition{1}, Partition{3}}}), error);
  EXPECT_THROW(from_shape_sequence({{Partition{1}, Partition{1}}}), error);
  EXPECT_THROW(from_shape_sequence({}), error);
  EXPECT_THROW(shape_sequence(tableau_from_rows({{1, 3}})), error);
}

TEST(Enumeration, MatchesBruteForce) {
  const std::vector<SkewShape> shapes{
      SkewShape(Partition{}),
      SkewShape(Partition{2, 1}),
      SkewShape(Partition{2, 2}),
      SkewShape(Partition{3, 2}, Partition{1}),
      SkewShape(Partition{3, 2, 1}, Partition{2}),
      SkewShape(Partition{3, 3}, Partition{2, 1}),
      SkewShape(Partition{2, 2, 2}, Partition{1, 1}),
  };
  for (const auto& s : shapes) {
    const auto got = enumerate_inc(s);
    const std::set<IncreasingTableau> uniq(got.begin(), got.end());
    EXPECT_EQ(uniq.size(), got.size()) << s.to_string();
    EXPECT_EQ(uniq, brute_force_inc(s)) << s.to_string();
  }
}

TEST(Enumeration, KnownCounts) {
  // single row: only 1..n; 2x2 square: 1 2/2 3, 1 2/3 4, 1 3/2 4
  EXPECT_EQ(enumerate_inc(SkewShape(Partition{4})).size(), 1u);
  EXPECT_EQ(enumerate_inc(SkewShape(Partition{2, 2})).size(), 3u);
  EXPECT_EQ(enumerate_inc(SkewShape(Partition{2, 2}), 4, true).size(), 2u);
  EXPECT_EQ(enumerate_inc(SkewShape(Partition{1, 1}), 1, false).size(), 0u);
}

TEST(SplitAtLabel, Halves) {
  auto t = tableau_from_rows({{0, 0, 0, 2}, {0, 0, 1, 3}, {0, 1, 2}, {1, 2, 4}});
  auto [low, high] = split_at_label(t, 2);
  EXPECT_EQ(low, tableau_from_rows({{0, 0, 0, 2}, {0, 0, 1}, {0, 1, 2}, {1, 2}}));
  EXPECT_EQ(high.inner(), Partition({4, 3, 3, 2}));
  EXPECT_EQ(high.at({1, 3}), 3);
  EXPECT_EQ(high.at({3, 2}), 4);
}

TEST(PieriFilling, Recognizer) {
  auto a = tableau_from_rows({{0, 0, 0, 0, 0, 4}, {0, 0, 0, 2, 3}, {0, 0}, {1, 2}});
  auto b = tableau_from_rows({{0, 0, 0, 0, 0, 4}, {0, 0, 0, 3, 4}, {0, 0}, {1, 2}});
  auto c = tableau_from_rows({{0, 0, 0, 0, 0, 3}, {0, 0, 0, 2, 3}, {0, 0}, {1, 2}});
  EXPECT_TRUE(is_t_pieri_filling(a, 4));
  EXPECT_TRUE(is_t_pieri_filling(b, 4));
  EXPECT_FALSE(is_t_pieri_filling(c, 4));
  EXPECT_FALSE(is_t_pieri_filling(tableau_from_rows({{0, 1}, {1, 2}}), 2));
}
