#include "oracles.hpp"

#include "regext/root_system.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace regext;

namespace {

Root r(std::vector<int> c) { return Root{std::move(c)}; }
Weight w(std::vector<int> c) { return Weight{std::move(c)}; }

class EveryType : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST(LieType, RankLimits) {
  EXPECT_NO_THROW(LieType(Family::A, 1));
  EXPECT_THROW(LieType(Family::A, 0), std::invalid_argument);
  EXPECT_THROW(LieType(Family::B, 1), std::invalid_argument);
  EXPECT_NO_THROW(LieType(Family::C, 2));
  EXPECT_THROW(LieType(Family::C, 2, RankConvention::strict), std::invalid_argument);
  EXPECT_NO_THROW(LieType(Family::D, 3));
  EXPECT_THROW(LieType(Family::D, 3, RankConvention::strict), std::invalid_argument);
  EXPECT_THROW(LieType(Family::E, 5), std::invalid_argument);
  EXPECT_THROW(LieType(Family::E, 9), std::invalid_argument);
  EXPECT_THROW(LieType(Family::F, 3), std::invalid_argument);
  EXPECT_THROW(LieType(Family::G, 3), std::invalid_argument);
  EXPECT_EQ(LieType::parse("B3").name(), "B3");
  EXPECT_THROW(LieType::parse("H3"), std::invalid_argument);
  EXPECT_THROW(LieType::parse("A"), std::invalid_argument);
}

TEST(RootSystem, RankOneAndTwo) {
  const RootSystem a1(LieType::parse("A1"));
  EXPECT_EQ(a1.size(), 2);
  EXPECT_EQ(a1.positive_count(), 1);
  EXPECT_EQ(a1.root(0), r({1}));
  EXPECT_EQ(a1.root(1), r({-1}));

  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(a2.size(), 6);
  EXPECT_EQ(a2.positive_count(), 3);
  EXPECT_EQ(a2.root(0), r({1, 0}));
  EXPECT_EQ(a2.root(1), r({0, 1}));
  EXPECT_EQ(a2.root(2), r({1, 1}));
  EXPECT_EQ(RootSystem(LieType::parse("G2")).size(), 12);
  EXPECT_EQ(RootSystem(LieType::parse("E8")).size(), 240);
}

TEST(RootSystem, PairingExamples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(a2.pairing(r({1, 0}), r({1, 0})), 2);
  EXPECT_EQ(a2.pairing(r({1, 0}), r({0, 1})), -1);
  const RootSystem g2(LieType::parse("G2"));
  EXPECT_EQ(g2.pairing(r({1, 0}), r({0, 1})) * g2.pairing(r({0, 1}), r({1, 0})), 3);
  EXPECT_THROW(a2.pairing(r({1, 0}), r({2, 0})), std::invalid_argument);
  EXPECT_EQ(a2.pairing(a2.fundamental_weight(0), r({1, 0})), 1);
  EXPECT_EQ(a2.pairing(a2.fundamental_weight(0), r({0, 1})), 0);
}

TEST(RootSystem, ReflectionExamples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(a2.reflect(r({1, 0}), r({1, 0})), r({-1, 0}));
  EXPECT_EQ(a2.reflect(r({0, 1}), r({1, 0})), r({1, 1}));
  const Weight l1 = a2.fundamental_weight(0);
  EXPECT_EQ(a2.reflect(l1, r({1, 0})), l1 - a2.to_weight(r({1, 0})));
  EXPECT_THROW(a2.reflect(r({0, 1}), r({1, -1})), std::invalid_argument);
}

TEST(RootSystem, DominantWeightGrid) {
  const RootSystem a1(LieType::parse("A1"));
  EXPECT_EQ(dominant_weights_up_to(a1, 2), (std::vector<Weight>{w({1}), w({2})}));
  const RootSystem a2(LieType::parse("A2"));
  const auto grid = dominant_weights_up_to(a2, 1);
  EXPECT_EQ(std::set<Weight>(grid.begin(), grid.end()), (std::set<Weight>{w({1, 0}), w({0, 1}), w({1, 1})}));
  EXPECT_TRUE(dominant_weights_up_to(a2, 0).empty());
  for (const auto& lam : dominant_weights_up_to(a2, 2, 8)) EXPECT_LE(a2.weyl_dimension(lam), 8);
  EXPECT_EQ(dominant_weights_up_to(a2, 2), dominant_weights_up_to(a2, 2));
}

TEST(RootSystem, WeylDimensionExamples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(a2.weyl_dimension(w({1, 0})), 3);
  EXPECT_EQ(a2.weyl_dimension(w({1, 1})), 8);
  EXPECT_EQ(a2.weyl_dimension(w({0, 0})), 1);
  const RootSystem g2(LieType::parse("G2"));
  EXPECT_EQ(g2.weyl_dimension(w({1, 0})), 7);
  EXPECT_EQ(g2.weyl_dimension(w({0, 1})), 14);
  const RootSystem e8(LieType::parse("E8"));
  EXPECT_EQ(e8.weyl_dimension(w({0, 0, 0, 0, 0, 0, 0, 1})), 248);
}

TEST_P(EveryType, MatchesReflectionClosureOracle) {
  const LieType t = LieType::parse(GetParam());
  const RootSystem sys(t);
  const auto g = oracle::gram_of(t);
  EXPECT_EQ(sys.cartan(), oracle::cartan(g));

  const auto expected = oracle::roots_by_reflection(g);
  std::set<oracle::Vec> got;
  for (const auto& a : sys.roots()) got.insert(a.coeffs);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(sys.size(), oracle::expected_root_count(family_letter(t.family()), t.rank()));
  EXPECT_EQ(sys.size(), 2 * sys.positive_count());
}

TEST_P(EveryType, OrderingAndStructure) {
  const RootSystem sys(LieType::parse(GetParam()));
  const int n = sys.rank();
  const int np = sys.positive_count();
  const auto g = oracle::gram_of(sys.type());
  for (int i = 0; i < n; ++i) {
    oracle::Vec e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    EXPECT_EQ(sys.root(i).coeffs, e);
  }
  for (int i = 0; i < sys.size(); ++i) {
    const Root& a = sys.root(i);
    EXPECT_EQ(sys.index_of(a), i);
    EXPECT_EQ(a.is_positive(), i < np);
    EXPECT_EQ(sys.root(sys.negation(i)), -a);
    if (i + 1 < np) {
      EXPECT_LE(a.height(), sys.root(i + 1).height());
    }
    if (i < np && a.height() > 1) {
      bool found = false;
      for (int s = 0; s < n && !found; ++s) {
        auto b = sys.find(a - sys.root(s));
        found = b && sys.is_positive(*b) && sys.root(*b).height() == a.height() - 1;
      }
      EXPECT_TRUE(found) << "positive root without a predecessor";
    }
    for (int s = 0; s < n; ++s) {
      EXPECT_EQ(sys.root(sys.reflect_index(s, i)), sys.reflect(a, sys.root(s)));
    }
    for (int j = 0; j < sys.size(); ++j) {
      const Root& b = sys.root(j);
      EXPECT_EQ(sys.inner_product(a, b), oracle::form(g, a.coeffs, b.coeffs));
      const int p = sys.pairing(a, b);
      EXPECT_TRUE(p >= -3 && p <= 3);
      const int s = sys.sum_index(i, j);
      const auto expected = sys.find(a + b);
      EXPECT_EQ(s, expected ? *expected : -1);
    }
  }
  for (int s = 0; s < n; ++s) {
    std::vector<int> perm = sys.reflection_permutation(s);
    std::sort(perm.begin(), perm.end());
    for (int i = 0; i < sys.size(); ++i) EXPECT_EQ(perm[i], i);
  }
}

TEST_P(EveryType, WeylDimensionMatchesOracle) {
  const RootSystem sys(LieType::parse(GetParam()));
  if (sys.rank() > 6) GTEST_SKIP() << "kept short";
  const auto g = oracle::gram_of(sys.type());
  for (int i = 0; i < sys.rank(); ++i) {
    const Weight lam = sys.fundamental_weight(i);
    EXPECT_EQ(sys.weyl_dimension(lam), oracle::weyl_dimension(g, lam.coords));
  }
  EXPECT_EQ(sys.weyl_dimension(sys.rho()), oracle::weyl_dimension(g, sys.rho().coords));
}

TEST_P(EveryType, WeightFormIsConsistent) {
  const RootSystem sys(LieType::parse(GetParam()));
  for (int i = 0; i < sys.rank(); ++i) {
    for (int j = 0; j < sys.rank(); ++j) {
      // <lambda_i, a_j^vee> = delta_ij
      EXPECT_EQ(sys.pairing(sys.fundamental_weight(i), sys.root(j)), i == j ? 1 : 0);
      // (to_weight(a_i), to_weight(a_j)) = (a_i, a_j)
      EXPECT_EQ(sys.inner_product(sys.to_weight(sys.root(i)), sys.to_weight(sys.root(j))),
                Rational(sys.inner_product(sys.root(i), sys.root(j))));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllTypes, EveryType, ::testing::ValuesIn(oracle::types_up_to_rank(8)),
                         [](const auto& info) { return info.param; });
