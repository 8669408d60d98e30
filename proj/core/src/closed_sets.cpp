#include "regext/closed_sets.hpp"

#include "regext/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace regext {

RootSubset::RootSubset(const RootSystem& sys, const RootMask& mask) : sys_(&sys), mask_(mask) {
  for (int i = sys.size(); i < kMaxRoots; ++i) {
    if (mask_.test(static_cast<std::size_t>(i))) throw std::invalid_argument("mask has bits beyond |Phi|");
  }
}

RootSubset RootSubset::full(const RootSystem& sys) {
  RootSubset s(sys);
  for (int i = 0; i < sys.size(); ++i) s.mask_.set(static_cast<std::size_t>(i));
  return s;
}

RootSubset RootSubset::from_indices(const RootSystem& sys, const std::vector<int>& indices) {
  RootSubset s(sys);
  for (int i : indices) s.insert(i);
  return s;
}

RootSubset RootSubset::from_roots(const RootSystem& sys, const std::vector<Root>& roots) {
  RootSubset s(sys);
  for (const auto& r : roots) s.insert(sys.index_of(r));
  return s;
}

bool RootSubset::contains(const Root& r) const {
  auto idx = sys_->find(r);
  return idx && contains(*idx);
}

void RootSubset::insert(int index) {
  if (index < 0 || index >= sys_->size()) throw std::out_of_range("root index out of range");
  mask_.set(static_cast<std::size_t>(index));
}

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < sys_->size(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<Root> RootSubset::roots() const {
  std::vector<Root> out;
  for (int i : indices()) out.push_back(sys_->root(i));
  return out;
}

RootSubset RootSubset::negated() const {
  RootSubset s(*sys_);
  for (int i = 0; i < sys_->size(); ++i) {
    if (contains(i)) s.mask_.set(static_cast<std::size_t>(sys_->negation(i)));
  }
  return s;
}

RootSubset RootSubset::complement() const { return RootSubset(*sys_, ~mask_ & full(*sys_).mask_); }

RootSubset RootSubset::operator|(const RootSubset& other) const {
  if (sys_ != other.sys_) throw std::invalid_argument("subsets of different root systems");
  return RootSubset(*sys_, mask_ | other.mask_);
}

RootSubset RootSubset::operator&(const RootSubset& other) const {
  if (sys_ != other.sys_) throw std::invalid_argument("subsets of different root systems");
  return RootSubset(*sys_, mask_ & other.mask_);
}

bool enumeration_less(const RootSubset& a, const RootSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = a.system().size() - 1; i >= 0; --i) {
    if (a.contains(i) != b.contains(i)) return b.contains(i);
  }
  return false;
}

bool lex_less(const RootSubset& a, const RootSubset& b) {
  for (int i = 0; i < a.system().size(); ++i) {
    if (a.contains(i) != b.contains(i)) return a.contains(i);
  }
  return false;
}

std::optional<std::pair<int, int>> closedness_violation(const RootSubset& s) {
  const auto& sys = s.system();
  const auto idx = s.indices();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    for (std::size_t q = p + 1; q < idx.size(); ++q) {
      const int sum = sys.sum_index(idx[p], idx[q]);
      if (sum >= 0 && !s.contains(sum)) return std::make_pair(idx[p], idx[q]);
    }
  }
  return std::nullopt;
}

bool is_closed(const RootSubset& s) { return !closedness_violation(s).has_value(); }

RootSubset closure(const RootSubset& s) {
  const auto& sys = s.system();
  RootSubset out = s;
  std::vector<int> members = s.indices();
  std::deque<int> work(members.begin(), members.end());
  while (!work.empty()) {
    const int x = work.front();
    work.pop_front();
    const std::size_t current = members.size();
    for (std::size_t k = 0; k < current; ++k) {
      const int sum = sys.sum_index(x, members[k]);
      if (sum >= 0 && !out.contains(sum)) {
        out.insert(sum);
        members.push_back(sum);
        work.push_back(sum);
      }
    }
  }
  return out;
}

std::string to_string(SubalgebraKind kind) {
  switch (kind) {
    case SubalgebraKind::semisimple: return "semisimple";
    case SubalgebraKind::solvable: return "solvable";
    case SubalgebraKind::levi_decomposable: return "levi_decomposable";
  }
  return "unknown";
}

ClosedDecomposition decompose(const RootSubset& s) {
  if (auto bad = closedness_violation(s)) {
    const auto& sys = s.system();
    const int sum = sys.sum_index(bad->first, bad->second);
    auto lit = [&](int i) {
      std::string out;
      for (std::size_t k = 0; k < sys.root(i).coeffs.size(); ++k) {
        out += (k ? "," : "") + std::to_string(sys.root(i).coeffs[k]);
      }
      return "(" + out + ")";
    };
    throw std::invalid_argument("subset is not closed: " + lit(bad->first) + " + " + lit(bad->second) + " = " +
                                lit(sum) + " is missing");
  }
  const RootSubset symmetric = s & s.negated();
  const RootSubset special(s.system(), s.mask() & ~symmetric.mask());
  SubalgebraKind kind = SubalgebraKind::levi_decomposable;
  if (symmetric.empty()) {
    kind = SubalgebraKind::solvable;
  } else if (special.empty()) {
    kind = SubalgebraKind::semisimple;
  }
  return {s, symmetric, special, kind};
}

void for_each_closed(const RootSystem& sys, const std::function<void(const RootSubset&)>& visit, int max_roots) {
  const int m = sys.size();
  if (m > max_roots) {
    throw BudgetExceeded("|Phi| = " + std::to_string(m) + " for " + sys.type().name() +
                         " exceeds the enumeration cap " + std::to_string(max_roots) +
                         "; raise the cap to enumerate it");
  }
  // For each root i: the pairs (j, k), j < k < i, with root j + root k = root i.
  std::vector<std::vector<std::pair<int, int>>> makers(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const int s = sys.sum_index(j, k);
      if (s > k) makers[s].emplace_back(j, k);
    }
  }

  RootMask included;
  // Decisions are made in index order; a sum pointing back below the current
  // index is checked when its larger summand is decided, a sum pointing
  // forward is checked when the sum itself is decided.
  std::function<void(int)> descend = [&](int i) {
    if (i == m) {
      visit(RootSubset(sys, included));
      return;
    }
    bool can_exclude = true;
    for (const auto& [j, k] : makers[i]) {
      if (included.test(static_cast<std::size_t>(j)) && included.test(static_cast<std::size_t>(k))) {
        can_exclude = false;
        break;
      }
    }
    if (can_exclude) descend(i + 1);

    bool can_include = true;
    for (int j = 0; j < i && can_include; ++j) {
      if (!included.test(static_cast<std::size_t>(j))) continue;
      const int s = sys.sum_index(i, j);
      if (s >= 0 && s < i && !included.test(static_cast<std::size_t>(s))) can_include = false;
    }
    if (can_include) {
      included.set(static_cast<std::size_t>(i));
      descend(i + 1);
      included.reset(static_cast<std::size_t>(i));
    }
  };
  descend(0);
}

std::vector<RootSubset> enumerate_closed(const RootSystem& sys, int max_roots) {
  std::vector<RootSubset> out;
  for_each_closed(sys, [&](const RootSubset& s) { out.push_back(s); }, max_roots);
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

RootSubset reflect(const RootSubset& s, int simple) {
  const auto& sys = s.system();
  const auto& perm = sys.reflection_permutation(simple);
  RootMask image;
  for (int i = 0; i < sys.size(); ++i) {
    if (s.contains(i)) image.set(static_cast<std::size_t>(perm[i]));
  }
  return RootSubset(sys, image);
}

std::vector<RootSubset> weyl_orbit(const RootSubset& s, std::int64_t budget) {
  const auto& sys = s.system();
  std::unordered_set<RootMask> seen{s.mask()};
  std::vector<RootSubset> orbit{s};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < sys.rank(); ++i) {
      RootSubset image = reflect(orbit[head], i);
      if (seen.insert(image.mask()).second) {
        orbit.push_back(image);
        if (static_cast<std::int64_t>(orbit.size()) > budget) {
          throw BudgetExceeded("Weyl orbit exceeds budget of " + std::to_string(budget) + " subsets");
        }
      }
    }
  }
  return orbit;
}

RootSubset weyl_canonical(const RootSubset& s, std::int64_t budget) {
  const auto orbit = weyl_orbit(s, budget);
  return *std::min_element(orbit.begin(), orbit.end(), lex_less);
}

}  // namespace regext
