#pragma once

// Weight multiplicities of V(lambda) by Freudenthal's recursion.

#include "regext/root_system.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace regext {

/// Weight -> multiplicity, for the weights of one module (multiplicities >= 1).
struct WeightDiagram {
  std::map<Weight, std::int64_t> multiplicities;

  std::int64_t multiplicity(const Weight& mu) const {
    auto it = multiplicities.find(mu);
    return it == multiplicities.end() ? 0 : it->second;
  }
  bool contains(const Weight& mu) const { return multiplicities.count(mu) != 0; }
};

struct Character {
  Weight highest_weight;
  WeightDiagram weights;
  std::int64_t dimension = 0;
};

inline constexpr std::int64_t kDefaultCharacterCap = 200'000;

/// Freudenthal multiplicities of V(lambda). Throws std::invalid_argument for a
/// non-dominant lambda and BudgetExceeded when dim V(lambda) > cap.
Character expected_character(const RootSystem& sys, const Weight& lambda,
                             std::int64_t cap = kDefaultCharacterCap);

/// Root-lattice coordinates of lambda - mu, or nullopt when the difference is
/// not in the root lattice.
std::optional<Root> weight_difference(const RootSystem& sys, const Weight& lambda, const Weight& mu);

/// The dominant weight in the Weyl orbit of mu.
Weight dominant_conjugate(const RootSystem& sys, const Weight& mu);

/// Whether mu is a weight of V(lambda), decided without building anything:
/// the dominant conjugate nu of mu must satisfy lambda - nu in Q+.
bool is_weight_of(const RootSystem& sys, const Weight& lambda, const Weight& mu);

}  // namespace regext
