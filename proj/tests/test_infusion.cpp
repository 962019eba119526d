#include <gtest/gtest.h>

#include "kjdt/growth.hpp"
#include "kjdt/infusion.hpp"
#include "kjdt/io.hpp"

using namespace kjdt;

namespace {

std::string golden(const std::string& rel) { return read_file(std::string(KJDT_TESTDATA_DIR) + "/" + rel); }

IncreasingTableau load(const std::string& rel) { return parse_tableau(golden(rel)); }

}  // namespace

TEST(Infusion, Example) {
  const auto t = load("infusion/T.txt");
  const auto u = load("infusion/U.txt");
  const auto out = kinfusion(t, u);
  EXPECT_EQ(to_text(out.first), golden("infusion/first.txt"));
  EXPECT_EQ(to_text(out.second), golden("infusion/second.txt"));
  EXPECT_EQ(out.second.inner(), Partition({3, 2, 1}));
  EXPECT_EQ(kinfusion(out.first, out.second), (TableauPair{t, u}));
  EXPECT_EQ(krevinfusion(out.first, out.second), (TableauPair{t, u}));
}

TEST(Infusion, GrowthDiagramEdgesMatch) {
  const auto t = load("infusion/T.txt");
  const auto u = load("infusion/U.txt");
  const auto g = build_growth_diagram(t, u);
  const auto out = kinfusion(t, u);
  EXPECT_EQ(g.bottom_row(), shape_sequence(out.first).chain);
  EXPECT_EQ(g.right_column(), shape_sequence(out.second).chain);
}

TEST(Infusion, EmptySides) {
  const auto t = load("infusion/T.txt");
  const IncreasingTableau on_nu(SkewShape(t.outer(), t.outer()), {{0, 0, 0}, {0, 0}, {0}});
  const IncreasingTableau on_empty(SkewShape(Partition{}, Partition{}), {});
  // nothing of T to slide through: U comes back unchanged
  const auto a = kinfusion(on_empty, t);
  EXPECT_EQ(a.first, t);
  EXPECT_TRUE(a.second.empty());
  const auto b = krevinfusion(t, on_nu);
  EXPECT_TRUE(b.first.empty());
  EXPECT_EQ(b.second, t);
}

TEST(Infusion, ShapesMustAbut) {
  try {
    kinfusion(tableau_from_rows({{1, 2}}), load("infusion/U.txt"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::shapes_do_not_abut);
  }
}

TEST(Infusion, InvolutionOnSmallPairs) {
  long long n = 0;
  for (const auto& nu : enumerate_partitions_in({2, 3}))
    for (const auto& lam : enumerate_partitions_within(nu))
      for (const auto& alpha : enumerate_partitions_within(lam))
        for (const auto& t : enumerate_inc(SkewShape(lam, alpha)))
          for (const auto& u : enumerate_inc(SkewShape(nu, lam))) {
            const auto once = kinfusion(t, u);
            ASSERT_EQ(kinfusion(once.first, once.second), (TableauPair{t, u}));
            ASSERT_EQ(krevinfusion(once.first, once.second), (TableauPair{t, u}));
            ++n;
          }
  EXPECT_GT(n, 100);
}

TEST(Infusion, SplittingTheOuterTableauComposes) {
  // infusion_1(R,T) = infusion_1(R,A) together with infusion_1(infusion_2(R,A), B)
  for (const auto& nu : enumerate_partitions_in({3, 3}))
    for (const auto& lam : enumerate_partitions_within(nu)) {
      if (lam.empty() || lam == nu) continue;
      for (const auto& r : enumerate_inc(SkewShape(lam)))
        for (const auto& t : enumerate_inc(SkewShape(nu, lam)))
          for (int a = 1; a < t.max_entry(); ++a) {
            auto [low, high] = split_at_label(t, a);
            const auto whole = kinfusion(r, t).first;
            const auto first = kinfusion(r, low);
            const auto rest = kinfusion(first.second, high).first;
            // first.first lives on gamma/(), rest on gamma'/gamma
            ASSERT_EQ(whole.outer(), rest.outer());
            for (const Box& b : whole.shape().cells()) {
              const int expected = first.first.outer().has_box(b) ? first.first.at(b) : rest.at(b);
              ASSERT_EQ(whole.at(b), expected);
            }
          }
    }
}

TEST(DualEquivalence, SlidesOnEqualShapesDiverge) {
  const auto u = load("dual_equivalence/U.txt");
  const auto a = kinfusion(load("dual_equivalence/left_a.txt"), u).second;
  const auto b = kinfusion(load("dual_equivalence/left_b.txt"), u).second;
  EXPECT_EQ(to_text(a), golden("dual_equivalence/second_a.txt"));
  EXPECT_EQ(to_text(b), golden("dual_equivalence/second_b.txt"));
  EXPECT_NE(a.shape(), b.shape());
  EXPECT_EQ(a.shape().to_string(), "(3,3,2)/(3,2)");
  EXPECT_EQ(b.shape().to_string(), "(3,3,2)/(3,1)");
}
