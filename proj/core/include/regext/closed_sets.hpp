#pragma once

// Subsets of a root system, closedness, closure and Weyl conjugacy.

#include "regext/root_system.hpp"

#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regext {

inline constexpr int kMaxRoots = 256;  // E8 has 240
using RootMask = std::bitset<kMaxRoots>;

/// A set of roots of one system, stored as a bit mask over the system's root order.
class RootSubset {
 public:
  explicit RootSubset(const RootSystem& sys) : sys_(&sys) {}
  RootSubset(const RootSystem& sys, const RootMask& mask);

  static RootSubset full(const RootSystem& sys);
  static RootSubset from_indices(const RootSystem& sys, const std::vector<int>& indices);
  /// Throws std::invalid_argument if any vector is not a root.
  static RootSubset from_roots(const RootSystem& sys, const std::vector<Root>& roots);

  const RootSystem& system() const { return *sys_; }
  const RootMask& mask() const { return mask_; }

  bool contains(int index) const { return mask_.test(static_cast<std::size_t>(index)); }
  bool contains(const Root& r) const;
  void insert(int index);
  void erase(int index) { mask_.reset(static_cast<std::size_t>(index)); }

  int size() const { return static_cast<int>(mask_.count()); }
  bool empty() const { return mask_.none(); }
  std::vector<int> indices() const;
  std::vector<Root> roots() const;

  /// -S.
  RootSubset negated() const;
  RootSubset complement() const;
  bool is_subset_of(const RootSubset& other) const { return (mask_ & ~other.mask_).none(); }
  bool is_symmetric() const { return negated() == *this; }

  RootSubset operator|(const RootSubset& other) const;
  RootSubset operator&(const RootSubset& other) const;
  friend bool operator==(const RootSubset& a, const RootSubset& b) {
    return a.sys_ == b.sys_ && a.mask_ == b.mask_;
  }

 private:
  const RootSystem* sys_;
  RootMask mask_;
};

/// Enumeration order: by size, then by the mask read as a binary number
/// (bit i has weight 2^i).
bool enumeration_less(const RootSubset& a, const RootSubset& b);

/// Among subsets of equal size: the one whose sorted index list is
/// lexicographically smaller.
bool lex_less(const RootSubset& a, const RootSubset& b);

/// A pair (x, y) of indices in s with x + y a root missing from s, if any.
std::optional<std::pair<int, int>> closedness_violation(const RootSubset& s);
bool is_closed(const RootSubset& s);

/// Smallest closed subset containing s.
RootSubset closure(const RootSubset& s);

enum class SubalgebraKind { semisimple, solvable, levi_decomposable };
std::string to_string(SubalgebraKind kind);

struct ClosedDecomposition {
  RootSubset subset;
  RootSubset symmetric;  // T^r
  RootSubset special;    // T^u
  SubalgebraKind kind;
};

/// Splits a closed subset into its symmetric and special parts. The empty set
/// is solvable (the toral part alone). Throws std::invalid_argument for a
/// non-closed input, naming a violating pair.
ClosedDecomposition decompose(const RootSubset& s);

inline constexpr int kDefaultEnumerationCap = 24;

/// Visits every closed subset exactly once, in depth-first order over the
/// root list. Throws BudgetExceeded if |Phi| exceeds max_roots.
void for_each_closed(const RootSystem& sys, const std::function<void(const RootSubset&)>& visit,
                     int max_roots = kDefaultEnumerationCap);

/// Every closed subset, sorted by enumeration_less.
std::vector<RootSubset> enumerate_closed(const RootSystem& sys, int max_roots = kDefaultEnumerationCap);

inline constexpr std::int64_t kDefaultOrbitBudget = 2'000'000;

/// Orbit of s under the Weyl group, generated by simple reflections. Throws
/// BudgetExceeded when the orbit grows beyond the budget.
std::vector<RootSubset> weyl_orbit(const RootSubset& s, std::int64_t budget = kDefaultOrbitBudget);

/// Lexicographically least member (lex_less) of the Weyl orbit of s.
RootSubset weyl_canonical(const RootSubset& s, std::int64_t budget = kDefaultOrbitBudget);

/// Image of s under the simple reflection s_{a_i}.
RootSubset reflect(const RootSubset& s, int simple);

}  // namespace regext
