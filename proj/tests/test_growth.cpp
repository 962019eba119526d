#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "kjdt/growth.hpp"
#include "kjdt/infusion.hpp"
#include "kjdt/io.hpp"

using namespace kjdt;

namespace {

std::string golden(const std::string& rel) { return read_file(std::string(KJDT_TESTDATA_DIR) + "/" + rel); }

}  // namespace

TEST(LocalRules, ForwardMatchesSingleSlide) {
  // hole at (0,1), the 1 at (1,0) is not next to it: nothing moves
  // and the hole is dropped
  EXPECT_EQ(local_rule_forward(Partition{1}, Partition{2}, Partition{2, 1}), Partition({1, 1}));
  // the 1 at (0,2) moves left into the hole
  EXPECT_EQ(local_rule_forward(Partition{1}, Partition{2}, Partition{3}), Partition({2}));
  EXPECT_EQ(local_rule_forward(Partition{1}, Partition{1}, Partition{2}), Partition({2}));
}

TEST(LocalRules, BackwardInvertsForward) {
  for (const auto& beta : enumerate_partitions_in({3, 3}))
    for (const auto& alpha : enumerate_partitions_within(beta)) {
      if (!is_rook_strip(beta, alpha)) continue;
      for (const auto& gamma : enumerate_partitions_within(alpha)) {
        if (!is_rook_strip(alpha, gamma)) continue;
        const auto delta = local_rule_forward(gamma, alpha, beta);
        EXPECT_TRUE(is_valid_square(alpha, beta, gamma, delta));
        EXPECT_EQ(local_rule_backward(gamma, delta, beta), alpha);
      }
    }
}

TEST(LocalRules, ClassicalCaseAgrees) {
  // Fomin's rule on single-box steps is the K-rule restricted to them
  for (const auto& beta : enumerate_partitions_in({3, 3}))
    for (const auto& alpha : enumerate_partitions_within(beta)) {
      if (beta.size() != alpha.size() + 1) continue;
      for (const auto& gamma : enumerate_partitions_within(alpha)) {
        if (alpha.size() != gamma.size() + 1) continue;
        EXPECT_EQ(classical_local_rule(gamma, alpha, beta), local_rule_forward(gamma, alpha, beta))
            << gamma.to_string() << " " << alpha.to_string() << " " << beta.to_string();
      }
    }
}

TEST(GrowthDiagram, TableOne) {
  const auto r = parse_tableau(golden("growth/left.txt"));
  const auto t = parse_tableau(golden("growth/top.txt"));
  const auto g = build_growth_diagram(r, t);
  EXPECT_EQ(g.to_text(), golden("growth/table.txt"));
  EXPECT_TRUE(g.is_valid());
  EXPECT_TRUE(g.reflected().is_valid());
  EXPECT_EQ(from_shape_sequence({g.bottom_row()}), parse_tableau(golden("growth/rectified.txt")));
}

TEST(GrowthDiagram, RectificationFromOrderTableau) {
  // bottom row equals the rectification along the order the left column encodes
  const auto r = parse_tableau(golden("growth/left.txt"));
  const auto t = parse_tableau(golden("growth/top.txt"));
  RectificationOrder order;
  for (int m = r.max_entry(); m >= 1; --m) order.steps.push_back(r.cells_with(m));
  EXPECT_EQ(krect(t, order), from_shape_sequence({build_growth_diagram(r, t).bottom_row()}));
}

TEST(GrowthDiagram, InvalidSquareDetected) {
  std::vector<std::vector<Partition>> grid{{Partition{1}, Partition{2}}, {Partition{}, Partition{2}}};
  GrowthDiagram g(grid);
  EXPECT_FALSE(g.is_valid());
}

TEST(GrowthCount, MatchesExample) {
  EXPECT_EQ(kgrowth_count(Partition{2, 2}, Partition{2, 1}, Partition{3, 2, 2, 1}), 2);
  EXPECT_EQ(kgrowth_count(Partition{1}, Partition{1}, Partition{2, 1}), 1);
  EXPECT_EQ(kgrowth_count(Partition{}, Partition{2, 1}, Partition{2, 1}), 1);
  EXPECT_EQ(kgrowth_count(Partition{2}, Partition{2, 1}, Partition{2}), 0);
}

TEST(Evacuation, Example) {
  const auto t = parse_tableau(golden("evacuation/input.txt"));
  EXPECT_EQ(delta(t), tableau_from_rows({{1, 2, 3, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(delta(delta(t)), tableau_from_rows({{1, 2, 3}, {2, 3}, {3}}));
  EXPECT_EQ(delta(delta(delta(t))), tableau_from_rows({{1, 2}, {2}}));
  EXPECT_EQ(delta(delta(delta(delta(t)))), tableau_from_rows({{1}}));
  const auto e = k_evacuation(t);
  EXPECT_EQ(to_text(e), golden("evacuation/output.txt"));
  EXPECT_EQ(k_evacuation(e), t);
}

TEST(Evacuation, TriangleTable) {
  const auto t = parse_tableau(golden("evacuation/input.txt"));
  const auto tri = triangular_growth_diagram(t);
  EXPECT_EQ(tri.to_text(), golden("evacuation/triangle.txt"));
  EXPECT_TRUE(tri.is_valid());
  // the right column read upward is the evacuation
  EXPECT_EQ(from_shape_sequence({tri.right_column()}), k_evacuation(t));
}

TEST(Evacuation, Errors) {
  try {
    k_evacuation(tableau_from_rows({{0, 1}}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_straight_shape);
  }
  EXPECT_EQ(k_evacuation(tableau_from_rows({})), tableau_from_rows({}));
}

TEST(Evacuation, InvolutionOnSmallShapes) {
  for (const auto& lam : enumerate_partitions_in({3, 3}))
    for (const auto& t : enumerate_inc(SkewShape(lam))) ASSERT_EQ(k_evacuation(k_evacuation(t)), t);
}

TEST(Evacuation, KeepsShape) {
  // evacuation keeps the shape
  for (const auto& t : enumerate_inc(SkewShape(Partition{3, 2, 1}))) EXPECT_EQ(k_evacuation(t).outer(), t.outer());
}
