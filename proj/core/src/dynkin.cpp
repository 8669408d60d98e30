#include "regext/dynkin.hpp"

#include "regext/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace regext {

DynkinDiagram::DynkinDiagram(const RootSystem& sys) : sys_(&sys) {
  const int n = sys.rank();
  const auto& c = sys.cartan();
  adjacency_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  neighbors_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      adjacency_[i][j] = c[i][j] * c[j][i];
      if (adjacency_[i][j] > 0) neighbors_[i].push_back(j);
    }
  }
}

std::vector<std::tuple<int, int, int>> DynkinDiagram::edges() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 0; i < rank(); ++i) {
    for (int j = i + 1; j < rank(); ++j) {
      if (adjacency_[i][j] > 0) out.emplace_back(i, j, adjacency_[i][j]);
    }
  }
  return out;
}

bool DynkinDiagram::is_connected() const {
  if (rank() == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(rank()), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : neighbors_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == rank();
}

DynkinDiagram build_diagram(const RootSystem& sys) { return DynkinDiagram(sys); }

void validate_path(const SimpleRootPath& p, const DynkinDiagram& d) {
  if (p.vertices.empty()) throw std::invalid_argument("empty simple root path");
  const auto& cartan = d.system().cartan();
  std::set<int> distinct;
  for (int v : p.vertices) {
    if (v < 0 || v >= d.rank()) throw std::invalid_argument("path vertex out of range");
    if (!distinct.insert(v).second) throw std::invalid_argument("path repeats vertex " + std::to_string(v + 1));
  }
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
      const int a = p.vertices[i];
      const int b = p.vertices[j];
      if (j == i + 1 && cartan[a][b] >= 0) {
        throw std::invalid_argument("path vertices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                    " are not adjacent");
      }
      if (j > i + 1 && cartan[a][b] != 0) {
        throw std::invalid_argument("non-consecutive path vertices " + std::to_string(a + 1) + " and " +
                                    std::to_string(b + 1) + " are adjacent");
      }
    }
  }
}

Root path_sum(const SimpleRootPath& p, const RootSystem& sys) {
  Root r{std::vector<int>(static_cast<std::size_t>(sys.rank()), 0)};
  for (int v : p.vertices) r.coeffs.at(static_cast<std::size_t>(v)) += 1;
  return r;
}

std::vector<Root> path_partial_sums(const SimpleRootPath& p, const RootSystem& sys) {
  validate_path(p, DynkinDiagram(sys));
  std::vector<Root> out;
  const int k = p.length();
  for (int i = 0; i < k; ++i) {
    Root r{std::vector<int>(static_cast<std::size_t>(sys.rank()), 0)};
    for (int j = i; j < k; ++j) {
      r.coeffs[p.vertices[j]] += 1;
      if (!sys.find(r)) throw InternalError("partial sum of a simple root path is not a root");
      out.push_back(r);
    }
  }
  return out;
}

SimpleRootPath escape_path(int start, const RootSubset& blocked, const DynkinDiagram& d) {
  const int n = d.rank();
  if (start < 0 || start >= n) throw std::invalid_argument("start vertex out of range");
  if (!blocked.contains(start)) {
    throw std::invalid_argument("simple root " + std::to_string(start + 1) + " is not blocked; no escape path needed");
  }
  bool any_free = false;
  for (int i = 0; i < n; ++i) any_free = any_free || !blocked.contains(i);
  if (!any_free) throw std::invalid_argument("every simple root is blocked; no escape path exists");

  // BFS visiting neighbours in ascending order; the first unblocked vertex
  // dequeued is the nearest one with the smallest index at its distance.
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  parent[start] = -1;
  dist[start] = 0;
  std::deque<int> queue{start};
  std::vector<int> frontier;
  int target = -1;
  while (!queue.empty() && target < 0) {
    // Process one BFS layer at a time so ties resolve by index, not discovery order.
    const int layer = dist[queue.front()];
    frontier.clear();
    while (!queue.empty() && dist[queue.front()] == layer) {
      frontier.push_back(queue.front());
      queue.pop_front();
    }
    std::vector<int> next;
    for (int v : frontier) {
      if (!blocked.contains(v)) continue;  // unblocked vertices end paths, never extend them
      for (int w : d.neighbors(v)) {
        if (dist[w] >= 0) continue;
        dist[w] = layer + 1;
        parent[w] = v;
        next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    for (int w : next) {
      if (!blocked.contains(w)) {
        target = w;
        break;
      }
    }
    for (int w : next) queue.push_back(w);
  }
  if (target < 0) throw InternalError("Dynkin diagram is disconnected");

  SimpleRootPath p;
  for (int v = target; v != -1; v = parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

std::vector<SimpleRootPath> all_simple_paths(const DynkinDiagram& d) {
  std::vector<SimpleRootPath> out;
  std::vector<int> current;
  std::vector<bool> used(static_cast<std::size_t>(d.rank()), false);
  std::function<void(int)> extend = [&](int v) {
    current.push_back(v);
    used[v] = true;
    out.push_back(SimpleRootPath{current});
    for (int w : d.neighbors(v)) {
      // A new vertex may not touch any earlier path vertex except its predecessor.
      bool ok = !used[w];
      for (std::size_t k = 0; ok && k + 1 < current.size(); ++k) ok = !d.adjacent(w, current[k]);
      if (ok) extend(w);
    }
    used[v] = false;
    current.pop_back();
  };
  for (int v = 0; v < d.rank(); ++v) extend(v);
  return out;
}

std::string format_path(const SimpleRootPath& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) s += (i ? "," : "") + std::to_string(p.vertices[i] + 1);
  return s + ")";
}

}  // namespace regext
