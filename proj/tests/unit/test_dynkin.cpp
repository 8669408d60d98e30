#include "oracles.hpp"

#include "regext/dynkin.hpp"
#include "regext/errors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace regext;

namespace {

Root r(std::vector<int> c) { return Root{std::move(c)}; }

RootSubset blocked_simple(const RootSystem& sys, std::vector<int> simple) {
  RootSubset s(sys);
  for (int i : simple) {
    s.insert(i);
    s.insert(sys.negation(i));
  }
  return s;
}

class EveryType : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST(Diagram, Examples) {
  const RootSystem a3(LieType::parse("A3"));
  const DynkinDiagram d3 = build_diagram(a3);
  using E = std::tuple<int, int, int>;
  EXPECT_EQ(d3.edges(), (std::vector<E>{{0, 1, 1}, {1, 2, 1}}));

  const RootSystem g2(LieType::parse("G2"));
  EXPECT_EQ(build_diagram(g2).edges(), (std::vector<E>{{0, 1, 3}}));

  const RootSystem e8(LieType::parse("E8"));
  const DynkinDiagram d8 = build_diagram(e8);
  EXPECT_TRUE(d8.adjacent(1, 3));  // a_2 - a_4
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}) {
    EXPECT_TRUE(d8.adjacent(i, j));
  }
  EXPECT_EQ(d8.edges().size(), 7u);
}

TEST_P(EveryType, DiagramInvariants) {
  const RootSystem sys(LieType::parse(GetParam()));
  const DynkinDiagram d(sys);
  EXPECT_TRUE(d.is_connected());
  EXPECT_EQ(static_cast<int>(d.edges().size()), sys.rank() - 1);  // a tree
  for (int i = 0; i < sys.rank(); ++i) {
    EXPECT_EQ(d.multiplicity(i, i), 0);
    for (int j = 0; j < sys.rank(); ++j) {
      EXPECT_EQ(d.multiplicity(i, j), d.multiplicity(j, i));
      EXPECT_GE(d.multiplicity(i, j), 0);
      EXPECT_LE(d.multiplicity(i, j), 3);
    }
  }
}

TEST(PartialSums, Examples) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(path_partial_sums(SimpleRootPath{{0, 1}}, a2), (std::vector<Root>{r({1, 0}), r({1, 1}), r({0, 1})}));
  EXPECT_EQ(path_partial_sums(SimpleRootPath{{0}}, a2), (std::vector<Root>{r({1, 0})}));

  const RootSystem e8(LieType::parse("E8"));
  const SimpleRootPath p{{1, 3, 4, 5}};
  validate_path(p, DynkinDiagram(e8));
  const auto sums = path_partial_sums(p, e8);
  EXPECT_EQ(sums.size(), 10u);
  for (const auto& s : sums) EXPECT_TRUE(e8.find(s).has_value());
  EXPECT_EQ(format_path(p), "(2,4,5,6)");
}

TEST(ValidatePath, Rejections) {
  const RootSystem a3(LieType::parse("A3"));
  const DynkinDiagram d(a3);
  EXPECT_THROW(validate_path(SimpleRootPath{{}}, d), std::invalid_argument);
  EXPECT_THROW(validate_path(SimpleRootPath{{0, 2}}, d), std::invalid_argument);
  EXPECT_THROW(validate_path(SimpleRootPath{{0, 1, 0}}, d), std::invalid_argument);
  EXPECT_THROW(validate_path(SimpleRootPath{{0, 5}}, d), std::invalid_argument);
  EXPECT_NO_THROW(validate_path(SimpleRootPath{{2, 1, 0}}, d));
}

TEST_P(EveryType, EveryPathHasRootPartialSums) {
  const RootSystem sys(LieType::parse(GetParam()));
  const DynkinDiagram d(sys);
  const auto g = oracle::gram_of(sys.type());
  const auto roots = oracle::roots_by_reflection(g);
  const auto paths = all_simple_paths(d);
  std::size_t expected = 0;
  for (int s = 0; s < sys.rank(); ++s) expected += oracle::simple_paths_from(g, s).size();
  EXPECT_EQ(paths.size(), expected);
  for (const auto& p : paths) {
    ASSERT_NO_THROW(validate_path(p, d));
    const auto sums = path_partial_sums(p, sys);
    EXPECT_EQ(static_cast<int>(sums.size()), p.length() * (p.length() + 1) / 2);
    for (const auto& s : sums) EXPECT_TRUE(roots.count(s.coeffs)) << format_path(p);
  }
}

INSTANTIATE_TEST_SUITE_P(AllTypes, EveryType, ::testing::ValuesIn(oracle::types_up_to_rank(8)),
                         [](const auto& info) { return info.param; });

TEST(EscapePath, Examples) {
  const RootSystem a2(LieType::parse("A2"));
  const DynkinDiagram d2(a2);
  EXPECT_EQ(escape_path(0, blocked_simple(a2, {0}), d2), (SimpleRootPath{{0, 1}}));
  const RootSystem a3(LieType::parse("A3"));
  const DynkinDiagram d3(a3);
  EXPECT_EQ(escape_path(0, blocked_simple(a3, {0, 1}), d3), (SimpleRootPath{{0, 1, 2}}));
  EXPECT_THROW(escape_path(1, blocked_simple(a3, {0}), d3), std::invalid_argument);
  EXPECT_THROW(escape_path(0, RootSubset::full(a3), d3), std::invalid_argument);
}

TEST(EscapePath, TiesGoToLowestIndex) {
  // D4: a_2 is the centre; blocking only a_2 leaves neighbours a_1, a_3, a_4.
  const RootSystem d4(LieType::parse("D4"));
  EXPECT_EQ(escape_path(1, blocked_simple(d4, {1}), DynkinDiagram(d4)), (SimpleRootPath{{1, 0}}));
  // E6: from a_4 with a_4, a_5 blocked, a_2 and a_3 are both one step away.
  const RootSystem e6(LieType::parse("E6"));
  EXPECT_EQ(escape_path(3, blocked_simple(e6, {3, 4}), DynkinDiagram(e6)), (SimpleRootPath{{3, 1}}));
}

TEST(EscapePath, MinimalAgainstBruteForce) {
  for (const auto& name : oracle::types_up_to_rank(5)) {
    const RootSystem sys(LieType::parse(name));
    const DynkinDiagram d(sys);
    const auto g = oracle::gram_of(sys.type());
    const int n = sys.rank();
    for (int bits = 1; bits < (1 << n) - 1; ++bits) {
      std::vector<int> simple;
      for (int i = 0; i < n; ++i) {
        if (bits >> i & 1) simple.push_back(i);
      }
      const RootSubset blocked = blocked_simple(sys, simple);
      for (int start : simple) {
        const SimpleRootPath p = escape_path(start, blocked, d);
        ASSERT_NO_THROW(validate_path(p, d));
        EXPECT_EQ(p.vertices.front(), start);
        EXPECT_FALSE(blocked.contains(p.vertices.back()));
        for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) EXPECT_TRUE(blocked.contains(p.vertices[k]));
        std::size_t best = 100;
        for (const auto& q : oracle::simple_paths_from(g, start)) {
          bool ok = !(bits >> q.back() & 1);
          for (std::size_t k = 0; k + 1 < q.size(); ++k) ok = ok && (bits >> q[k] & 1);
          if (ok) best = std::min(best, q.size());
        }
        EXPECT_EQ(p.vertices.size(), best) << name << " start " << start;
      }
    }
  }
}
