#pragma once

// Irreducible crystallographic root systems.
//
// Roots are integer vectors in the simple-root basis, weights are integer
// vectors in the fundamental-weight basis. Nodes are numbered the Bourbaki way
// (in E-types the branch node a_2 hangs off a_4; in G2 a_1 is the short root).
//
// The Cartan matrix is stored as cartan[i][j] = <a_i, a_j> = 2(a_i,a_j)/(a_j,a_j),
// so row i of the matrix is the simple root a_i written in fundamental weights.
// The symmetric form is recovered as (a_i, a_j) = cartan[i][j] * d_j with
// d_j = (a_j, a_j) / 2, short roots having squared length 2.

#include "regext/linalg.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regext {

enum class Family { A, B, C, D, E, F, G };

/// Lower rank limits for the B/C/D families. Permissive admits C2 (= B2) and
/// D3 (= A3); strict follows the classification without repetitions.
enum class RankConvention { permissive, strict };

class LieType {
 public:
  /// Throws std::invalid_argument when the rank is not admissible for the family.
  LieType(Family family, int rank, RankConvention convention = RankConvention::permissive);

  /// Parses a literal such as "B3" or "e8".
  static LieType parse(const std::string& literal,
                       RankConvention convention = RankConvention::permissive);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

char family_letter(Family f);

struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct Weight {
  std::vector<int> coords;

  bool is_dominant() const;
  bool is_zero() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(const LieType& type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  /// |Phi|.
  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_count_; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int index) const { return roots_.at(static_cast<std::size_t>(index)); }
  std::optional<int> find(const Root& r) const;
  /// Like find() but throws std::invalid_argument for non-roots.
  int index_of(const Root& r) const;

  /// Simple root a_i sits at index i.
  bool is_positive(int index) const { return index < positive_count_; }
  bool is_simple(int index) const { return index < rank(); }
  int negation(int index) const {
    return index < positive_count_ ? index + positive_count_ : index - positive_count_;
  }
  /// Index of root(a) + root(b), or -1 when the sum is not a root.
  int sum_index(int a, int b) const { return sum_table_[static_cast<std::size_t>(a * size() + b)]; }
  /// Index of s_{a_i}(root(index)).
  int reflect_index(int simple, int index) const {
    return reflection_perm_[static_cast<std::size_t>(simple)][static_cast<std::size_t>(index)];
  }
  const std::vector<int>& reflection_permutation(int simple) const {
    return reflection_perm_.at(static_cast<std::size_t>(simple));
  }

  /// Symmetric form (x, y) on the root lattice; short roots have (a, a) = 2.
  int inner_product(const Root& x, const Root& y) const;
  /// (lambda, beta) for a weight against a root lattice element.
  int inner_product(const Weight& lambda, const Root& beta) const;
  /// (x, y) on weights; rational in general.
  Rational inner_product(const Weight& x, const Weight& y) const;

  /// <x, beta> = 2(x, beta)/(beta, beta). Throws if beta is not a root.
  int pairing(const Root& x, const Root& beta) const;
  int pairing(const Weight& x, const Root& beta) const;

  /// s_beta(x) = x - <x, beta> beta. Throws if beta is not a root.
  Root reflect(const Root& x, const Root& beta) const;
  Weight reflect(const Weight& x, const Root& beta) const;

  /// Root lattice element written in fundamental weights.
  Weight to_weight(const Root& r) const;
  /// Fundamental weight lambda_i (0-based).
  Weight fundamental_weight(int i) const;
  Weight zero_weight() const { return Weight{std::vector<int>(static_cast<std::size_t>(rank()), 0)}; }
  /// rho = sum of fundamental weights.
  Weight rho() const { return Weight{std::vector<int>(static_cast<std::size_t>(rank()), 1)}; }

  /// dim V(lambda) by Weyl's dimension formula; lambda must be dominant.
  mpz_class weyl_dimension(const Weight& lambda) const;

 private:
  void check_weight(const Weight& w) const;
  void check_root_vector(const Root& r) const;

  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<std::vector<int>> form_;  // (a_i, a_j)
  std::vector<std::vector<Rational>> weight_gram_;  // (lambda_i, lambda_j)
  std::vector<Root> roots_;
  int positive_count_ = 0;
  std::map<std::vector<int>, int> index_;
  std::vector<int> sum_table_;
  std::vector<std::vector<int>> reflection_perm_;
};

/// Cartan matrix of the given type under the convention described above.
std::vector<std::vector<int>> cartan_matrix(const LieType& type);

/// Nonzero dominant weights with every coordinate <= coeff_bound and Weyl
/// dimension <= dim_cap (no cap when absent). Ordered by coordinate sum, then
/// lexicographically descending.
std::vector<Weight> dominant_weights_up_to(const RootSystem& sys, int coeff_bound,
                                           std::optional<std::int64_t> dim_cap = std::nullopt);

}  // namespace regext
