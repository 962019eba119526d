#include <gtest/gtest.h>

#include "kjdt/grothendieck.hpp"

using namespace kjdt;

namespace {

SymmetricPolynomial poly(int vars, std::initializer_list<std::pair<std::vector<int>, long long>> terms) {
  SymmetricPolynomial p(vars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

SetValuedTableau svt(Partition shape, std::vector<std::vector<std::vector<int>>> cells) {
  return {std::move(shape), std::move(cells)};
}

}  // namespace

TEST(SetValued, SmallCounts) {
  EXPECT_EQ(enumerate_setvalued(Partition{1}, 2).size(), 3u);
  EXPECT_TRUE(enumerate_setvalued(Partition{1, 1}, 1).empty());
  const auto two = enumerate_setvalued(Partition{2}, 2);
  EXPECT_EQ(two.size(), 5u);
  EXPECT_NE(std::find(two.begin(), two.end(), svt(Partition{2}, {{{1, 2}, {2}}})), two.end());
  EXPECT_EQ(std::find(two.begin(), two.end(), svt(Partition{2}, {{{1, 2}, {1, 2}}})), two.end());
}

TEST(SetValued, BruteForceCount) {
  // shape (2,1), k = 3: all triples of nonempty subsets, filtered by the row and column rules
  int expected = 0;
  for (unsigned a = 1; a < 8; ++a)
    for (unsigned b = 1; b < 8; ++b)
      for (unsigned c = 1; c < 8; ++c) {
        auto hi = [](unsigned m) { return 31 - __builtin_clz(m); };
        auto lo = [](unsigned m) { return __builtin_ctz(m); };
        if (hi(a) <= lo(b) && hi(a) < lo(c)) ++expected;
      }
  EXPECT_EQ(static_cast<int>(enumerate_setvalued(Partition{2, 1}, 3).size()), expected);
}

TEST(SetValued, AppendixWeights) {
  const auto t1 = svt(Partition{5, 3, 1}, {{{1}, {2}, {4}, {4}, {6}}, {{2}, {3}, {5}}, {{4}}});
  const auto w1 = weight(t1, 8);
  EXPECT_EQ(w1.sign, 1);
  EXPECT_EQ(w1.exponents, (std::vector<int>{1, 2, 1, 3, 1, 1, 0, 0}));
  const auto t2 = svt(Partition{5, 3, 1},
                      {{{1, 2}, {2, 3}, {4, 5, 6}, {6, 7}, {7, 8}}, {{3, 4}, {4, 5}, {7}}, {{6, 7, 8}}});
  EXPECT_EQ(t2.entry_count(), 19);
  const auto w2 = weight(t2, 8);
  EXPECT_EQ(w2.sign, 1);
  EXPECT_EQ(w2.exponents, (std::vector<int>{1, 2, 2, 3, 2, 3, 4, 2}));
}

TEST(Polynomials, SmallExamples) {
  EXPECT_EQ(grothendieck_polynomial(Partition{1}, 2), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}));
  EXPECT_EQ(schur_polynomial(Partition{2, 1}, 2), poly(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  const auto g = grothendieck_polynomial(Partition{2, 1}, 3);
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_EQ(g.homogeneous_component(3), schur_polynomial(Partition{2, 1}, 3));
  EXPECT_EQ(grothendieck_polynomial(Partition{}, 2), poly(2, {{{0, 0}, 1}}));
  EXPECT_EQ(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}).to_text(), "0,1: 1\n1,0: 1\n");
}

TEST(Polynomials, Symmetric) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& lam : enumerate_partitions_in({k, 6 / k})) {
      if (lam.size() > 6) continue;
      EXPECT_TRUE(grothendieck_polynomial(lam, k, 7).is_symmetric()) << lam.to_string();
    }
  EXPECT_FALSE(poly(2, {{{1, 0}, 1}}).is_symmetric());
}

TEST(Expansion, BasisElementsAndProducts) {
  EXPECT_EQ(expand_in_g_basis(grothendieck_polynomial(Partition{2, 1}, 3), 3),
            (std::map<Partition, long long>{{Partition{2, 1}, 1}}));
  const auto g1 = grothendieck_polynomial(Partition{1}, 3);
  EXPECT_EQ(expand_in_g_basis(g1 * g1, 3),
            (std::map<Partition, long long>{{Partition{2}, 1}, {Partition{1, 1}, 1}, {Partition{2, 1}, -1}}));
  GrothendieckBasis basis(4, 8);
  const auto p = basis.get(Partition{2, 2}).times(basis.get(Partition{2, 1}), 8);
  EXPECT_EQ(basis.expand(p).at(Partition{3, 2, 2, 1}), -2);
}

TEST(Expansion, RoundTripInThreeByThree) {
  for (const auto& nu : enumerate_partitions_in({3, 3})) {
    GrothendieckBasis basis(3, nu.size() + 2);
    EXPECT_EQ(basis.expand(basis.get(nu)), (std::map<Partition, long long>{{nu, 1}})) << nu.to_string();
  }
}

TEST(Expansion, NotSymmetricIsRejected) {
  try {
    expand_in_g_basis(poly(2, {{{0, 1}, 1}}), 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_in_span);
  }
}

TEST(Oracle, KnownCoefficients) {
  EXPECT_EQ(oracle_coefficient(Partition{2, 2}, Partition{2, 1}, Partition{3, 2, 2, 1}, {4, 3}), -2);
  EXPECT_EQ(oracle_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 3, 1}, {3, 3}), -2);
  EXPECT_EQ(oracle_coefficient(Partition{1}, Partition{1}, Partition{2, 1}, {2, 2}), -1);
  EXPECT_EQ(oracle_coefficient(Partition{}, Partition{2, 1}, Partition{2, 1}, {2, 2}), 1);
}

TEST(Oracle, StableInVariableCount) {
  const Rectangle box{2, 2};
  for (const auto& lam : enumerate_partitions_in(box))
    for (const auto& mu : enumerate_partitions_in(box))
      for (const auto& nu : enumerate_partitions_in(box))
        EXPECT_EQ(oracle_coefficient(lam, mu, nu, box, 2), oracle_coefficient(lam, mu, nu, box, 3));
}

TEST(Oracle, SignsAlternate) {
  const auto e = oracle_expansion(Partition{2, 1}, Partition{1, 1}, {3, 3});
  for (const auto& [nu, c] : e) {
    EXPECT_GE(nu.size(), 5);
    EXPECT_GT(c * ((nu.size() - 5) % 2 == 0 ? 1 : -1), 0) << nu.to_string();
  }
}
