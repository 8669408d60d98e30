#include "regext/character.hpp"

#include "regext/errors.hpp"

#include <stdexcept>
#include <vector>

namespace regext {

std::optional<Root> weight_difference(const RootSystem& sys, const Weight& lambda, const Weight& mu) {
  // lambda - mu = sum_i k_i a_i  <=>  cartan^T k = (lambda - mu) in fundamental weights.
  const int n = sys.rank();
  const Weight diff = lambda - mu;
  const auto& c = sys.cartan();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = c[j][i];
    a[i][n] = diff.coords[i];
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    const Rational lead = a[col][col];
    for (auto& x : a[col]) x /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int k = 0; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  Root k{std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) {
    if (a[i][n].get_den() != 1) return std::nullopt;
    k.coeffs[i] = static_cast<int>(a[i][n].get_num().get_si());
  }
  return k;
}

Weight dominant_conjugate(const RootSystem& sys, const Weight& mu) {
  Weight w = mu;
  const int n = sys.rank();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (w.coords[i] < 0) {
        w = sys.reflect(w, sys.root(i));
        moved = true;
      }
    }
  }
  return w;
}

bool is_weight_of(const RootSystem& sys, const Weight& lambda, const Weight& mu) {
  const Weight nu = dominant_conjugate(sys, mu);
  auto k = weight_difference(sys, lambda, nu);
  if (!k) return false;
  for (int c : k->coeffs) {
    if (c < 0) return false;
  }
  return true;
}

Character expected_character(const RootSystem& sys, const Weight& lambda, std::int64_t cap) {
  if (static_cast<int>(lambda.coords.size()) != sys.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("expected_character needs a dominant weight");
  const mpz_class dim = sys.weyl_dimension(lambda);
  if (dim > mpz_class(static_cast<long>(cap))) {
    throw BudgetExceeded("dim V(lambda) = " + dim.get_str() + " exceeds the character cap " + std::to_string(cap));
  }

  const int n = sys.rank();
  const Weight rho = sys.rho();
  const Rational top = sys.inner_product(lambda + rho, lambda + rho);

  // Weights are tracked by their depth vector k (mu = lambda - sum k_i a_i).
  std::map<std::vector<int>, std::int64_t> mult;
  std::map<std::vector<int>, Weight> weight_of;
  const std::vector<int> zero(static_cast<std::size_t>(n), 0);
  mult[zero] = 1;
  weight_of[zero] = lambda;

  std::vector<std::vector<int>> layer{zero};
  while (!layer.empty()) {
    std::map<std::vector<int>, Weight> candidates;
    for (const auto& k : layer) {
      for (int i = 0; i < n; ++i) {
        auto next = k;
        ++next[i];
        if (mult.count(next) || candidates.count(next)) continue;
        candidates.emplace(next, weight_of[k] - sys.to_weight(sys.root(i)));
      }
    }
    std::vector<std::vector<int>> next_layer;
    for (const auto& [k, mu] : candidates) {
      Rational sum = 0;
      for (int a = 0; a < sys.positive_count(); ++a) {
        const Root& alpha = sys.root(a);
        auto kk = k;
        for (int j = 1;; ++j) {
          bool inside = true;
          for (int t = 0; t < n; ++t) {
            kk[t] -= alpha.coeffs[t];
            inside = inside && kk[t] >= 0;
          }
          if (!inside) break;
          auto it = mult.find(kk);
          if (it == mult.end()) continue;
          const Weight shifted = weight_of[kk];
          sum += Rational(it->second) * sys.inner_product(shifted, alpha);
        }
      }
      const Rational denom = top - sys.inner_product(mu + rho, mu + rho);
      if (sum == 0) continue;
      if (denom <= 0) throw InternalError("Freudenthal denominator vanished below the top weight");
      const Rational m = 2 * sum / denom;
      if (m.get_den() != 1 || m < 0) throw InternalError("non-integral Freudenthal multiplicity");
      if (m == 0) continue;
      mult[k] = m.get_num().get_si();
      weight_of[k] = mu;
      next_layer.push_back(k);
    }
    layer = std::move(next_layer);
  }

  Character ch;
  ch.highest_weight = lambda;
  for (const auto& [k, m] : mult) {
    ch.weights.multiplicities[weight_of[k]] = m;
    ch.dimension += m;
  }
  if (mpz_class(static_cast<long>(ch.dimension)) != dim) {
    throw InternalError("Freudenthal total " + std::to_string(ch.dimension) + " disagrees with Weyl dimension " +
                        dim.get_str());
  }
  return ch;
}

}  // namespace regext
