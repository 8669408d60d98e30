#pragma once

// Indecomposability via the commutant.
//
// A module M over an algebra is indecomposable iff its commutant C = End(M)
// is local. Over a field of characteristic zero the radical of a matrix
// algebra is the kernel of its trace form (x, y) -> tr(xy), and C is local
// (over the algebraic closure) iff dim C - dim rad C = 1. All dimensions are
// computed over Q, which gives the same numbers as over C.

#include "regext/closed_sets.hpp"
#include "regext/linalg.hpp"
#include "regext/module.hpp"

#include <cstdint>
#include <vector>

namespace regext {

struct CommutantData {
  int commutant_dim = 0;
  int radical_dim = 0;
  /// dim C - dim rad C, i.e. the sum of n_i^2 over the simple factors M_{n_i} of C / rad C.
  int semisimple_dim() const { return commutant_dim - radical_dim; }
  bool indecomposable() const { return semisimple_dim() == 1; }
};

/// Commutant of an arbitrary family of n x n matrices, solved over all n^2 unknowns.
CommutantData analyze_commutant(const std::vector<SparseMatrix>& generators, int n);

inline constexpr std::int64_t kDefaultOracleCap = 64;

/// Restricts V(lambda) to the regular subalgebra spanned by h and the root
/// spaces g_b, b in T, and decides indecomposability from its commutant.
///
/// The toral part is all of h. The commutant then preserves every weight
/// space, so only block-diagonal unknowns are solved for. Throws
/// BudgetExceeded when dim V(lambda) > cap.
CommutantData is_indecomposable_oracle(const ModuleRealization& m, const RootSubset& T,
                                       std::int64_t cap = kDefaultOracleCap);

/// Generators h_1..h_n and e_b (b in T) as matrices on m, for the generic route.
std::vector<SparseMatrix> restricted_generators(const ModuleRealization& m, const RootSubset& T);

}  // namespace regext
