#include "oracles.hpp"

#include "regext/closed_sets.hpp"
#include "regext/errors.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace regext;

namespace {

Root r(std::vector<int> c) { return Root{std::move(c)}; }

RootSubset subset(const RootSystem& sys, std::vector<Root> roots) { return RootSubset::from_roots(sys, roots); }

class SmallType : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST(RootSubset, SetAlgebra) {
  const RootSystem a2(LieType::parse("A2"));
  const RootSubset s = subset(a2, {r({1, 0}), r({1, 1})});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(r({1, 1})));
  EXPECT_FALSE(s.contains(r({0, 1})));
  EXPECT_EQ(s.negated(), subset(a2, {r({-1, 0}), r({-1, -1})}));
  EXPECT_EQ(s.complement().size(), 4);
  EXPECT_EQ((s | s.complement()), RootSubset::full(a2));
  EXPECT_TRUE((s & s.complement()).empty());
  EXPECT_TRUE(subset(a2, {r({1, 0}), r({-1, 0})}).is_symmetric());
  EXPECT_THROW(subset(a2, {r({2, 0})}), std::invalid_argument);
}

TEST(IsClosed, Examples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_TRUE(is_closed(RootSubset(a2)));
  EXPECT_TRUE(is_closed(RootSubset::full(a2)));
  EXPECT_FALSE(is_closed(subset(a2, {r({1, 0}), r({0, 1})})));
  EXPECT_TRUE(is_closed(subset(a2, {r({1, 0}), r({1, 1})})));
  const auto bad = closedness_violation(subset(a2, {r({1, 0}), r({0, 1})}));
  ASSERT_TRUE(bad.has_value());
}

TEST(Closure, Examples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_TRUE(closure(RootSubset(a2)).empty());
  EXPECT_EQ(closure(subset(a2, {r({1, 0}), r({0, 1})})), subset(a2, {r({1, 0}), r({0, 1}), r({1, 1})}));
  EXPECT_EQ(closure(subset(a2, {r({1, 0}), r({-1, 0})})), subset(a2, {r({1, 0}), r({-1, 0})}));
}

TEST(Closure, IdempotentMonotoneMinimal) {
  const RootSystem b3(LieType::parse("B3"));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    RootSubset s(b3);
    for (int i = 0; i < b3.size(); ++i) {
      if (rng() % 5 == 0) s.insert(i);
    }
    const RootSubset c = closure(s);
    EXPECT_TRUE(is_closed(c));
    EXPECT_TRUE(s.is_subset_of(c));
    EXPECT_EQ(closure(c), c);
    RootSubset bigger = s;
    bigger.insert(static_cast<int>(rng() % b3.size()));
    EXPECT_TRUE(c.is_subset_of(closure(bigger)));
    // Minimality: every closed superset of s contains c.
    for (int i = 0; i < b3.size(); ++i) {
      if (c.contains(i) && !s.contains(i)) {
        RootSubset without = c;
        without.erase(i);
        EXPECT_FALSE(is_closed(without) && s.is_subset_of(without));
      }
    }
  }
}

TEST(Decompose, Examples) {
  const RootSystem a2(LieType::parse("A2"));
  const auto d1 = decompose(subset(a2, {r({1, 0}), r({-1, 0})}));
  EXPECT_EQ(d1.kind, SubalgebraKind::semisimple);
  EXPECT_TRUE(d1.special.empty());
  const auto d2 = decompose(subset(a2, {r({1, 0})}));
  EXPECT_EQ(d2.kind, SubalgebraKind::solvable);
  EXPECT_TRUE(d2.symmetric.empty());
  const auto d3 = decompose(subset(a2, {r({1, 0}), r({-1, 0}), r({0, 1}), r({1, 1})}));
  EXPECT_EQ(d3.kind, SubalgebraKind::levi_decomposable);
  EXPECT_EQ(d3.symmetric, subset(a2, {r({1, 0}), r({-1, 0})}));
  EXPECT_EQ(d3.special, subset(a2, {r({0, 1}), r({1, 1})}));
  EXPECT_EQ(decompose(RootSubset(a2)).kind, SubalgebraKind::solvable);
  EXPECT_THROW(decompose(subset(a2, {r({1, 0}), r({0, 1})})), std::invalid_argument);
}

TEST(Enumerate, RankOne) {
  const RootSystem a1(LieType::parse("A1"));
  const auto all = enumerate_closed(a1);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_TRUE(all[0].empty());
  EXPECT_EQ(all[3], RootSubset::full(a1));
}

TEST(Enumerate, CapRejects) {
  const RootSystem a5(LieType::parse("A5"));
  EXPECT_THROW(enumerate_closed(a5), BudgetExceeded);
}

TEST_P(SmallType, EnumerationMatchesBruteForce) {
  const RootSystem sys(LieType::parse(GetParam()));
  std::vector<oracle::Vec> roots;
  for (const auto& a : sys.roots()) roots.push_back(a.coeffs);
  const auto all = enumerate_closed(sys);
  EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::count_closed_bruteforce(roots));
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(is_closed(all[i]));
    distinct.insert(all[i].mask().to_string());
    if (i > 0) {
      EXPECT_TRUE(enumeration_less(all[i - 1], all[i]));
    }
  }
  EXPECT_EQ(distinct.size(), all.size());
}

TEST_P(SmallType, DecompositionPartitions) {
  const RootSystem sys(LieType::parse(GetParam()));
  int counts[3] = {0, 0, 0};
  for (const auto& s : enumerate_closed(sys)) {
    const auto d = decompose(s);
    EXPECT_EQ(d.symmetric | d.special, s);
    EXPECT_TRUE((d.symmetric & d.special).empty());
    for (int i : s.indices()) EXPECT_EQ(d.symmetric.contains(i), s.contains(sys.negation(i)));
    counts[static_cast<int>(d.kind)]++;
  }
  EXPECT_EQ(counts[0] + counts[1] + counts[2], static_cast<int>(enumerate_closed(sys).size()));
}

TEST_P(SmallType, WeylCanonicalIsClassFunction) {
  const RootSystem sys(LieType::parse(GetParam()));
  for (const auto& s : enumerate_closed(sys)) {
    const RootSubset c = weyl_canonical(s);
    for (int i = 0; i < sys.rank(); ++i) {
      const RootSubset t = reflect(s, i);
      EXPECT_TRUE(is_closed(t));
      EXPECT_EQ(weyl_canonical(t), c);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, SmallType, ::testing::Values("A1", "A2", "A3", "B2", "G2"),
                         [](const auto& info) { return info.param; });

TEST(WeylCanonical, Examples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(weyl_canonical(subset(a2, {r({1, 0}), r({-1, 0})})), weyl_canonical(subset(a2, {r({0, 1}), r({0, -1})})));
  EXPECT_EQ(weyl_canonical(RootSubset::full(a2)), RootSubset::full(a2));
  EXPECT_TRUE(weyl_canonical(RootSubset(a2)).empty());
  EXPECT_NE(weyl_canonical(subset(a2, {r({1, 0})})), weyl_canonical(subset(a2, {r({1, 0}), r({-1, 0})})));
  EXPECT_EQ(weyl_orbit(subset(a2, {r({1, 0}), r({-1, 0})})).size(), 3u);
}

TEST(WeylOrbit, BudgetRejects) {
  const RootSystem e8(LieType::parse("E8"));
  EXPECT_THROW(weyl_orbit(subset(e8, {r({1, 0, 0, 0, 0, 0, 0, 0})}), 10), BudgetExceeded);
}

TEST(ClosedSets, LargerBruteForceCounts) {
  for (const char* t : {"B3", "C3"}) {
    const RootSystem sys(LieType::parse(t));
    std::vector<oracle::Vec> roots;
    for (const auto& a : sys.roots()) roots.push_back(a.coeffs);
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_closed(sys).size()), oracle::count_closed_bruteforce(roots)) << t;
  }
}
