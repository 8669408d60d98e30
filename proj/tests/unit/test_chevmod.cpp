#include "oracles.hpp"

#include "regext/character.hpp"
#include "regext/chevalley.hpp"
#include "regext/dynkin.hpp"
#include "regext/errors.hpp"
#include "regext/module.hpp"
#include "regext/oracle.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <random>

using namespace regext;

namespace {

Root r(std::vector<int> c) { return Root{std::move(c)}; }
Weight w(std::vector<int> c) { return Weight{std::move(c)}; }

struct Algebra {
  explicit Algebra(const std::string& t)
      : sys(std::make_unique<RootSystem>(LieType::parse(t))), basis(std::make_unique<ChevalleyBasis>(*sys)) {}
  std::unique_ptr<RootSystem> sys;
  std::unique_ptr<ChevalleyBasis> basis;
};

RootSubset subset(const RootSystem& sys, std::vector<Root> roots) { return RootSubset::from_roots(sys, roots); }

// [X, Y] on the adjoint basis must match the module commutator for all generators.
void expect_module_relations(const ModuleRealization& m) {
  const RootSystem& sys = m.system();
  const ChevalleyBasis& cb = m.chevalley();
  const int n = sys.rank();
  for (int a = 0; a < sys.size(); ++a) {
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(commutator(m.h(i), m.e(a)), m.e(a) * Rational(sys.pairing(sys.root(a), sys.root(i))));
    }
    for (int b = 0; b < sys.size(); ++b) {
      const SparseMatrix lhs = commutator(m.e(a), m.e(b));
      SparseMatrix rhs(m.dimension(), m.dimension());
      if (b == sys.negation(a)) {
        for (int i = 0; i < n; ++i) rhs += m.h(i) * Rational(cb.coroot(a)[i]);
      } else if (const int s = sys.sum_index(a, b); s >= 0) {
        rhs = m.e(s) * Rational(cb.structure_constant(a, b));
      }
      EXPECT_EQ(lhs, rhs) << "roots " << a << ", " << b;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) EXPECT_TRUE(commutator(m.h(i), m.h(j)).is_zero());
  }
}

class Jacobi : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST(Chevalley, Examples) {
  Algebra a2("A2");
  const auto& sys = *a2.sys;
  const int a1 = sys.index_of(r({1, 0}));
  const int a2i = sys.index_of(r({0, 1}));
  EXPECT_EQ(std::abs(a2.basis->structure_constant(a1, a2i)), 1);
  EXPECT_EQ(a2.basis->structure_constant(a1, a2i), -a2.basis->structure_constant(a2i, a1));
  EXPECT_EQ(a2.basis->structure_constant(a1, a1), 0);
  EXPECT_EQ(a2.basis->structure_constant(a1, sys.index_of(r({1, 1}))), 0);
  const auto pair = a2.basis->extraspecial_pair(sys.index_of(r({1, 1})));
  EXPECT_EQ(pair.first, 0);
  EXPECT_EQ(a2.basis->structure_constant(pair.first, pair.second), 1);
  EXPECT_THROW(a2.basis->extraspecial_pair(a1), std::invalid_argument);
}

TEST(Chevalley, StringLengthRule) {
  for (const auto& t : oracle::types_up_to_rank(8)) {
    Algebra alg(t);
    const auto& sys = *alg.sys;
    for (int a = 0; a < sys.size(); ++a) {
      for (int b = 0; b < sys.size(); ++b) {
        const int nab = alg.basis->structure_constant(a, b);
        if (sys.sum_index(a, b) < 0) {
          ASSERT_EQ(nab, 0);
        } else {
          ASSERT_EQ(std::abs(nab), alg.basis->string_length(a, b) + 1) << t;
        }
      }
    }
  }
}

TEST(Chevalley, Sl2Relations) {
  Algebra b3("B3");
  const auto& sys = *b3.sys;
  const int n = sys.rank();
  for (int a = 0; a < sys.positive_count(); ++a) {
    const int na = sys.negation(a);
    ChevalleyBasis::Element h = b3.basis->bracket(a + n, na + n);
    ChevalleyBasis::Element expected;
    for (int i = 0; i < n; ++i) {
      if (b3.basis->coroot(a)[i] != 0) expected[i] = b3.basis->coroot(a)[i];
    }
    EXPECT_EQ(h, expected);
    EXPECT_EQ(b3.basis->bracket(h, {{a + n, 1}}), (ChevalleyBasis::Element{{a + n, 2}}));
    EXPECT_EQ(b3.basis->bracket(h, {{na + n, 1}}), (ChevalleyBasis::Element{{na + n, -2}}));
  }
}

TEST_P(Jacobi, HoldsOnAllBasisTriples) {
  Algebra alg(GetParam());
  const ChevalleyBasis& cb = *alg.basis;
  const int d = cb.dimension();
  for (int x = 0; x < d; ++x) {
    for (int y = x + 1; y < d; ++y) {
      const auto xy = cb.bracket(x, y);
      for (int z = y + 1; z < d; ++z) {
        ChevalleyBasis::Element sum = cb.bracket(xy, {{z, 1}});
        for (const auto& [k, v] : cb.bracket(cb.bracket(y, z), {{x, 1}})) sum[k] += v;
        for (const auto& [k, v] : cb.bracket(cb.bracket(z, x), {{y, 1}})) sum[k] += v;
        for (const auto& [k, v] : sum) ASSERT_EQ(v, 0) << GetParam() << " triple " << x << "," << y << "," << z;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallRank, Jacobi,
                         ::testing::Values("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"),
                         [](const auto& info) { return info.param; });

TEST(Character, Examples) {
  const RootSystem a1(LieType::parse("A1"));
  const Character c1 = expected_character(a1, w({2}));
  EXPECT_EQ(c1.dimension, 3);
  EXPECT_EQ(c1.weights.multiplicity(w({2})), 1);
  EXPECT_EQ(c1.weights.multiplicity(w({0})), 1);
  EXPECT_EQ(c1.weights.multiplicity(w({-2})), 1);

  const RootSystem a2(LieType::parse("A2"));
  const Character c2 = expected_character(a2, w({1, 0}));
  EXPECT_EQ(c2.dimension, 3);
  const Weight l1 = w({1, 0});
  EXPECT_TRUE(c2.weights.contains(l1 - a2.to_weight(r({1, 0}))));
  EXPECT_TRUE(c2.weights.contains(l1 - a2.to_weight(r({1, 1}))));
  const Character adj = expected_character(a2, w({1, 1}));
  EXPECT_EQ(adj.dimension, 8);
  EXPECT_EQ(adj.weights.multiplicity(w({0, 0})), 2);

  EXPECT_THROW(expected_character(a2, w({-1, 0})), std::invalid_argument);
  EXPECT_THROW(expected_character(a2, w({5, 5}), 100), BudgetExceeded);
}

TEST(Character, WeylInvariantAndSumsToWeylDimension) {
  for (const char* t : {"A3", "B3", "C3", "G2", "F4"}) {
    const RootSystem sys(LieType::parse(t));
    for (const auto& lam : dominant_weights_up_to(sys, 1, 2000)) {
      const Character c = expected_character(sys, lam);
      std::int64_t total = 0;
      for (const auto& [mu, mult] : c.weights.multiplicities) {
        total += mult;
        for (int i = 0; i < sys.rank(); ++i) {
          EXPECT_EQ(c.weights.multiplicity(sys.reflect(mu, sys.root(i))), mult);
        }
        EXPECT_TRUE(is_weight_of(sys, lam, mu));
      }
      EXPECT_EQ(total, c.dimension);
      EXPECT_EQ(mpz_class(c.dimension), oracle::weyl_dimension(oracle::gram_of(sys.type()), lam.coords));
      EXPECT_EQ(c.weights.multiplicity(lam), 1);
    }
  }
}

TEST(Character, DominantConjugateAndMembership) {
  const RootSystem a2(LieType::parse("A2"));
  EXPECT_EQ(dominant_conjugate(a2, w({-1, 0})), w({0, 1}));
  EXPECT_TRUE(is_weight_of(a2, w({1, 1}), w({-1, -1})));
  EXPECT_FALSE(is_weight_of(a2, w({1, 0}), w({0, 0})));  // 0 is not in the root-lattice coset of l1
  EXPECT_TRUE(is_weight_of(a2, w({1, 1}), w({0, 0})));
  EXPECT_FALSE(is_weight_of(a2, w({1, 0}), w({2, -1})));
  EXPECT_EQ(weight_difference(a2, w({1, 1}), w({0, 0})), r({1, 1}));
  EXPECT_FALSE(weight_difference(a2, w({1, 0}), w({0, 0})).has_value());
}

TEST(Module, RankOneStrings) {
  Algebra a1("A1");
  for (int m = 0; m <= 6; ++m) {
    const ModuleRealization mod = build_module(*a1.basis, w({m}));
    EXPECT_EQ(mod.dimension(), m + 1);
    expect_module_relations(mod);
  }
}

TEST(Module, A2Examples) {
  Algebra a2("A2");
  const ModuleRealization v = build_module(*a2.basis, w({1, 0}));
  EXPECT_EQ(v.dimension(), 3);
  const Vector hv = v.highest_weight_vector();
  const int a1 = 0, a2i = 1, a12 = a2.sys->index_of(r({1, 1}));
  EXPECT_TRUE(is_zero(v.f(a2i).apply(hv)));
  EXPECT_FALSE(is_zero(v.f(a1).apply(hv)));
  EXPECT_FALSE(is_zero(v.f(a12).apply(hv)));
  EXPECT_EQ(act(v, {}, hv), hv);
  EXPECT_EQ(act(v, {Generator::raising(a2.sys->negation(a1))}, hv), v.f(a1).apply(hv));
  for (int i = 0; i < 2; ++i) EXPECT_TRUE(is_zero(v.e(i).apply(hv)));

  const ModuleRealization adj = build_module(*a2.basis, w({1, 1}));
  EXPECT_EQ(adj.dimension(), 8);
  expect_module_relations(adj);
  EXPECT_THROW(build_module(*a2.basis, w({1, -1})), std::invalid_argument);
  EXPECT_THROW(build_module(*a2.basis, w({3, 3}), 20), BudgetExceeded);
}

TEST(Module, MatchesWeylAndFreudenthal) {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    Algebra alg(t);
    const auto g = oracle::gram_of(alg.sys->type());
    for (const auto& lam : dominant_weights_up_to(*alg.sys, 2, 64)) {
      const ModuleRealization m = build_module(*alg.basis, lam, 64);
      EXPECT_EQ(mpz_class(m.dimension()), oracle::weyl_dimension(g, lam.coords)) << t;
      const Character c = expected_character(*alg.sys, lam);
      for (const auto& s : m.weight_spaces()) EXPECT_EQ(s.dim, c.weights.multiplicity(s.weight));
      EXPECT_EQ(m.weight_spaces().size(), c.weights.multiplicities.size());
    }
  }
}

TEST(Module, BracketRelationsSmallModules) {
  for (const char* t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    Algebra alg(t);
    for (const auto& lam : dominant_weights_up_to(*alg.sys, 1, 27)) {
      expect_module_relations(build_module(*alg.basis, lam, 64));
    }
  }
}

TEST(Module, CartanActsDiagonallyByWeight) {
  Algebra g2("G2");
  const ModuleRealization m = build_module(*g2.basis, w({1, 1}), 64);
  for (int i = 0; i < 2; ++i) {
    for (int b = 0; b < m.dimension(); ++b) {
      EXPECT_EQ(m.h(i).get(b, b), m.basis_weights()[b].coords[i]);
      EXPECT_EQ(m.h(i).row(b).size(), m.basis_weights()[b].coords[i] == 0 ? 0u : 1u);
    }
  }
}

TEST(Span, Examples) {
  Algebra a2("A2");
  const ModuleRealization v = build_module(*a2.basis, w({1, 0}));
  const auto& sys = *a2.sys;
  EXPECT_EQ(subalgebra_span(v, RootSubset::full(sys)).dimension, 3);
  EXPECT_EQ(subalgebra_span(v, subset(sys, {r({0, 1}), r({0, -1})})).dimension, 1);
  const SubmoduleSpan s = subalgebra_span(v, subset(sys, {r({1, 0}), r({-1, 0})}));
  EXPECT_EQ(s.dimension, 2);
  EXPECT_TRUE(s.has_weight(w({1, 0})));
  EXPECT_FALSE(s.has_weight(w({0, -1})));
  EXPECT_THROW(subalgebra_span(v, subset(sys, {r({1, 0}), r({0, 1})})), std::invalid_argument);
}

TEST(Oracle, Examples) {
  Algebra a1("A1");
  const ModuleRealization v = build_module(*a1.basis, w({2}));
  const CommutantData full = is_indecomposable_oracle(v, RootSubset::full(*a1.sys));
  EXPECT_TRUE(full.indecomposable());
  EXPECT_EQ(full.commutant_dim, 1);
  const CommutantData cartan = is_indecomposable_oracle(v, RootSubset(*a1.sys));
  EXPECT_FALSE(cartan.indecomposable());
  EXPECT_EQ(cartan.commutant_dim, 3);
  EXPECT_EQ(cartan.radical_dim, 0);

  Algebra a2("A2");
  const ModuleRealization u = build_module(*a2.basis, w({1, 0}));
  const CommutantData d = is_indecomposable_oracle(u, subset(*a2.sys, {r({1, 0}), r({-1, 0})}));
  EXPECT_EQ(d.semisimple_dim(), 2);
  EXPECT_FALSE(d.indecomposable());
  EXPECT_THROW(is_indecomposable_oracle(build_module(*a2.basis, w({2, 2})), RootSubset(*a2.sys), 10), BudgetExceeded);
}

TEST(Oracle, BorelHasNilpotentCommutantPart) {
  Algebra a1("A1");
  const ModuleRealization v = build_module(*a1.basis, w({1}));
  // Upper-triangular e alone: commutant {aI + bE}, radical spanned by E.
  const CommutantData d = analyze_commutant({v.e(0)}, 2);
  EXPECT_EQ(d.commutant_dim, 2);
  EXPECT_EQ(d.radical_dim, 1);
  EXPECT_TRUE(d.indecomposable());
}

TEST(Oracle, BlockRouteMatchesGenericRoute) {
  for (const char* t : {"A2", "B2", "G2"}) {
    Algebra alg(t);
    const auto subsets = enumerate_closed(*alg.sys);
    for (const auto& lam : dominant_weights_up_to(*alg.sys, 1, 16)) {
      const ModuleRealization m = build_module(*alg.basis, lam, 64);
      for (std::size_t k = 0; k < subsets.size(); k += 3) {
        const CommutantData block = is_indecomposable_oracle(m, subsets[k]);
        const CommutantData generic = analyze_commutant(restricted_generators(m, subsets[k]), m.dimension());
        EXPECT_EQ(block.commutant_dim, generic.commutant_dim) << t;
        EXPECT_EQ(block.radical_dim, generic.radical_dim) << t;
      }
    }
  }
}

TEST(Oracle, RescalingChangesNothing) {
  std::mt19937 rng(20240611);
  for (const char* t : {"A2", "B2", "G2"}) {
    Algebra alg(t);
    const auto subsets = enumerate_closed(*alg.sys);
    for (const auto& lam : dominant_weights_up_to(*alg.sys, 1, 16)) {
      const ModuleRealization m = build_module(*alg.basis, lam, 64);
      const int simple = static_cast<int>(rng() % alg.sys->rank());
      const ModuleRealization scaled = m.rescaled(simple, Rational(2));
      const ModuleRealization scaled2 = m.rescaled(simple, fraction(-3, 5));
      for (const auto& T : subsets) {
        const CommutantData a = is_indecomposable_oracle(m, T);
        for (const auto* other : {&scaled, &scaled2}) {
          const CommutantData b = is_indecomposable_oracle(*other, T);
          EXPECT_EQ(a.commutant_dim, b.commutant_dim);
          EXPECT_EQ(a.radical_dim, b.radical_dim);
          EXPECT_EQ(subalgebra_span(m, T).dimension, subalgebra_span(*other, T).dimension);
        }
      }
    }
  }
}

TEST(PathLemma, CompositeLoweringIsNonzero) {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    Algebra alg(t);
    const DynkinDiagram d(*alg.sys);
    for (const auto& lam : dominant_weights_up_to(*alg.sys, 2, 64)) {
      const ModuleRealization m = build_module(*alg.basis, lam, 64);
      const Vector hv = m.highest_weight_vector();
      for (const auto& p : all_simple_paths(d)) {
        if (lam.coords[p.vertices.front()] == 0) continue;
        const int beta = alg.sys->index_of(path_sum(p, *alg.sys));
        EXPECT_FALSE(is_zero(m.f(beta).apply(hv))) << t << " path " << format_path(p);
      }
    }
  }
}
