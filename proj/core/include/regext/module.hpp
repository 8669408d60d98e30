#pragma once

// Explicit simple highest-weight modules V(lambda) over Q.
//
// The module is realized weight space by weight space, going down from the
// highest weight. A vector of weight mu != lambda in V(lambda) is zero exactly
// when every raising operator e_i kills it, so each weight space is identified
// with the span of the "e-signatures" (e_1 u, ..., e_n u) of the vectors
// f_i b coming from the spaces one level up. That yields the simple quotient
// directly; Freudenthal multiplicities serve as the certificate that the
// construction is complete.

#include "regext/chevalley.hpp"
#include "regext/character.hpp"
#include "regext/closed_sets.hpp"
#include "regext/linalg.hpp"
#include "regext/root_system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace regext {

struct WeightSpace {
  Weight weight;
  int depth = 0;   // height of lambda - weight
  int offset = 0;  // first basis index
  int dim = 0;
};

class ModuleRealization {
 public:
  const RootSystem& system() const { return basis_->system(); }
  const ChevalleyBasis& chevalley() const { return *basis_; }
  const Weight& highest_weight() const { return lambda_; }
  int dimension() const { return dim_; }

  const std::vector<WeightSpace>& weight_spaces() const { return spaces_; }
  std::optional<int> space_of(const Weight& mu) const;
  /// Weight of every basis vector.
  const std::vector<Weight>& basis_weights() const { return basis_weights_; }

  /// e_b for any root index b (negative roots give the lowering operators f).
  const SparseMatrix& e(int root) const { return root_ops_.at(static_cast<std::size_t>(root)); }
  /// f_b = e_{-b} for a positive root index b.
  const SparseMatrix& f(int positive_root) const { return e(system().negation(positive_root)); }
  const SparseMatrix& h(int simple) const { return cartan_ops_.at(static_cast<std::size_t>(simple)); }

  /// v_lambda, the first basis vector.
  Vector highest_weight_vector() const;

  /// Same module with e_{a_i} scaled by c and f_{a_i} by 1/c (composites rebuilt).
  ModuleRealization rescaled(int simple, const Rational& c) const;

 private:
  friend ModuleRealization build_module(const ChevalleyBasis&, const Weight&, std::int64_t);
  void build_composites();

  const ChevalleyBasis* basis_ = nullptr;
  Weight lambda_;
  int dim_ = 0;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, int> space_index_;
  std::vector<Weight> basis_weights_;
  std::vector<SparseMatrix> root_ops_;
  std::vector<SparseMatrix> cartan_ops_;
};

inline constexpr std::int64_t kDefaultModuleCap = 4096;

/// Builds V(lambda). Throws std::invalid_argument for non-dominant lambda,
/// BudgetExceeded when dim V(lambda) > cap, InternalError if the result
/// disagrees with Freudenthal. `basis` must outlive the result.
ModuleRealization build_module(const ChevalleyBasis& basis, const Weight& lambda,
                               std::int64_t cap = kDefaultModuleCap);

struct Generator {
  enum class Kind { e, h };
  Kind kind = Kind::e;
  int index = 0;  // root index for e, simple index for h

  static Generator raising(int root) { return {Kind::e, root}; }
  static Generator cartan(int simple) { return {Kind::h, simple}; }
};

/// g_1 g_2 ... g_k . v (the rightmost generator acts first).
Vector act(const ModuleRealization& m, const std::vector<Generator>& word, const Vector& v);

/// [T u -T] . lambda: the least subspace containing v_lambda and stable under
/// e_{-b} for every negative root -b of closure(T u -T).
struct SubmoduleSpan {
  int dimension = 0;
  std::map<Weight, int> weight_dims;  // Pi(U) with the dimension of each U_mu

  bool has_weight(const Weight& mu) const { return weight_dims.count(mu) != 0; }
};

/// T must be closed (std::invalid_argument otherwise).
SubmoduleSpan subalgebra_span(const ModuleRealization& m, const RootSubset& T);

}  // namespace regext
