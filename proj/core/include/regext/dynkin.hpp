#pragma once

// Dynkin diagrams and simple root paths.

#include "regext/closed_sets.hpp"
#include "regext/root_system.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace regext {

class DynkinDiagram {
 public:
  explicit DynkinDiagram(const RootSystem& sys);

  const RootSystem& system() const { return *sys_; }
  int rank() const { return static_cast<int>(adjacency_.size()); }

  /// <a_i, a_j><a_j, a_i> for i != j, 0 on the diagonal.
  int multiplicity(int i, int j) const { return adjacency_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  bool adjacent(int i, int j) const { return i != j && multiplicity(i, j) > 0; }
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(static_cast<std::size_t>(i)); }

  /// Edges (i, j, multiplicity) with i < j, sorted.
  std::vector<std::tuple<int, int, int>> edges() const;
  bool is_connected() const;

 private:
  const RootSystem* sys_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

DynkinDiagram build_diagram(const RootSystem& sys);

/// Distinct simple-root indices (0-based), consecutive ones adjacent in the diagram.
struct SimpleRootPath {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const SimpleRootPath&, const SimpleRootPath&) = default;
};

/// Throws std::invalid_argument unless p is a simple root path of d: nonempty,
/// distinct vertices, <b_i, b_{i+1}> < 0 and <b_i, b_j> = 0 for |i - j| > 1.
void validate_path(const SimpleRootPath& p, const DynkinDiagram& d);

/// b_1 + ... + b_k.
Root path_sum(const SimpleRootPath& p, const RootSystem& sys);

/// All contiguous sums b_i + ... + b_j for i <= j, ordered by (i, j). Each is
/// checked against the root list; throws InternalError if one is not a root.
std::vector<Root> path_partial_sums(const SimpleRootPath& p, const RootSystem& sys);

/// Shortest path from a_start through simple roots of `blocked` to the nearest
/// simple root outside it; ties go to the smallest vertex index.
///
/// Throws std::invalid_argument when a_start is not blocked or when every
/// simple root is blocked.
SimpleRootPath escape_path(int start, const RootSubset& blocked, const DynkinDiagram& d);

/// Every simple root path of the diagram, both orientations, single vertices included.
std::vector<SimpleRootPath> all_simple_paths(const DynkinDiagram& d);

/// "(1,2,3)" with 1-based vertex labels.
std::string format_path(const SimpleRootPath& p);

}  // namespace regext
