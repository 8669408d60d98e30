#pragma once

// Chevalley basis structure constants.
//
// Basis of g: h_1..h_n (coroots of the simple roots) followed by e_a for every
// root a in the root system's order; e_{-a} plays the role of f_a for positive a.
// Signs are fixed by declaring N_{a_i, g} = +(p + 1) on every extraspecial pair
// (a_i, g), where a_i is the lowest-index simple root with b - a_i a root; all
// remaining constants follow from the usual identities and are checked at
// construction.

#include "regext/root_system.hpp"

#include <map>
#include <utility>
#include <vector>

namespace regext {

class ChevalleyBasis {
 public:
  /// Throws InternalError if the derived constants fail antisymmetry, the
  /// |N| = p + 1 rule, or integrality.
  explicit ChevalleyBasis(const RootSystem& sys);

  const RootSystem& system() const { return *sys_; }

  /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; zero when a + b is not a root.
  int structure_constant(int a, int b) const {
    return table_[static_cast<std::size_t>(a * sys_->size() + b)];
  }

  /// Largest p with root(b) - p root(a) a root.
  int string_length(int a, int b) const;

  /// Extraspecial pair (i, g) of a positive non-simple root b: b = a_i + root(g).
  std::pair<int, int> extraspecial_pair(int b) const;

  /// Coefficients c with h_b = sum_i c_i h_i.
  const std::vector<int>& coroot(int b) const { return coroots_.at(static_cast<std::size_t>(b)); }

  // Adjoint structure, for identity checks. Basis index k < rank is h_k,
  // otherwise e_{root(k - rank)}.
  int dimension() const { return sys_->rank() + sys_->size(); }
  using Element = std::map<int, long>;
  Element bracket(int x, int y) const;
  Element bracket(const Element& x, const Element& y) const;

 private:
  int compute(int a, int b);

  const RootSystem* sys_;
  std::vector<int> table_;
  std::vector<char> known_;
  std::vector<std::pair<int, int>> extraspecial_;
  std::vector<std::vector<int>> coroots_;
};

}  // namespace regext
