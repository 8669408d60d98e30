#include "regext/oracle.hpp"

#include "regext/errors.hpp"

#include <stdexcept>

namespace regext {

namespace {

using DenseBlock = std::vector<Vector>;

// tr(XY) for square dense X, Y.
Rational trace_of_product(const DenseBlock& x, const DenseBlock& y) {
  Rational t = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] != 0 && y[k][i] != 0) t += x[i][k] * y[k][i];
    }
  }
  return t;
}

int radical_dimension(const std::vector<std::vector<DenseBlock>>& basis) {
  // basis[a] = the blocks of the a-th commutant element.
  const std::size_t k = basis.size();
  std::vector<Vector> gram(k, Vector(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Rational t = 0;
      for (std::size_t blk = 0; blk < basis[a].size(); ++blk) t += trace_of_product(basis[a][blk], basis[b][blk]);
      gram[a][b] = t;
      gram[b][a] = t;
    }
  }
  return static_cast<int>(k) - rank(gram);
}

}  // namespace

CommutantData analyze_commutant(const std::vector<SparseMatrix>& generators, int n) {
  // Unknown X[r][c] has index r * n + c. Equation (XA - AX)[r][c] = 0.
  RowReducer reducer(n * n);
  for (const auto& a : generators) {
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("generator size mismatch");
    const SparseMatrix at = a.transpose();
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        // (XA)[r][c] = sum_k X[r][k] A[k][c];  (AX)[r][c] = sum_k A[r][k] X[k][c]
        std::map<int, Rational> eq;
        for (const auto& e : at.row(c)) eq[r * n + e.col] += e.value;
        for (const auto& e : a.row(r)) eq[e.col * n + c] -= e.value;
        SparseRow row;
        for (auto& [col, v] : eq) {
          if (v != 0) row.push_back({col, v});
        }
        if (!row.empty()) reducer.add_row(row);
      }
    }
  }
  const auto kernel = reducer.nullspace();
  std::vector<std::vector<DenseBlock>> basis;
  for (const auto& x : kernel) {
    DenseBlock blk(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) blk[r][c] = x[r * n + c];
    }
    basis.push_back({std::move(blk)});
  }
  CommutantData out;
  out.commutant_dim = static_cast<int>(kernel.size());
  out.radical_dim = radical_dimension(basis);
  return out;
}

std::vector<SparseMatrix> restricted_generators(const ModuleRealization& m, const RootSubset& T) {
  std::vector<SparseMatrix> gens;
  for (int i = 0; i < m.system().rank(); ++i) gens.push_back(m.h(i));
  for (int b : T.indices()) gens.push_back(m.e(b));
  return gens;
}

CommutantData is_indecomposable_oracle(const ModuleRealization& m, const RootSubset& T, std::int64_t cap) {
  if (m.dimension() > cap) {
    throw BudgetExceeded("oracle needs dim V <= " + std::to_string(cap) + ", got " + std::to_string(m.dimension()));
  }
  const RootSystem& sys = m.system();
  const auto& spaces = m.weight_spaces();

  // Unknowns: one square block per weight space.
  std::vector<int> unknown_offset(spaces.size());
  int unknowns = 0;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    unknown_offset[s] = unknowns;
    unknowns += spaces[s].dim * spaces[s].dim;
  }
  auto var = [&](std::size_t s, int r, int c) { return unknown_offset[s] + r * spaces[s].dim + c; };

  RowReducer reducer(unknowns);
  for (int b : T.indices()) {
    const SparseMatrix& op = m.e(b);
    const Weight shift = sys.to_weight(sys.root(b));
    for (std::size_t s = 0; s < spaces.size(); ++s) {
      auto t_opt = m.space_of(spaces[s].weight + shift);
      if (!t_opt) continue;
      const std::size_t t = static_cast<std::size_t>(*t_opt);
      const WeightSpace& from = spaces[s];
      const WeightSpace& to = spaces[t];
      // B: V_from -> V_to. Equation X_to B - B X_from = 0, entry (r, c).
      DenseBlock block(static_cast<std::size_t>(to.dim), Vector(static_cast<std::size_t>(from.dim)));
      for (int r = 0; r < to.dim; ++r) {
        for (const auto& e : op.row(to.offset + r)) {
          if (e.col >= from.offset && e.col < from.offset + from.dim) block[r][e.col - from.offset] = e.value;
        }
      }
      for (int r = 0; r < to.dim; ++r) {
        for (int c = 0; c < from.dim; ++c) {
          std::map<int, Rational> eq;
          for (int k = 0; k < to.dim; ++k) {
            if (block[k][c] != 0) eq[var(t, r, k)] += block[k][c];
          }
          for (int k = 0; k < from.dim; ++k) {
            if (block[r][k] != 0) eq[var(s, k, c)] -= block[r][k];
          }
          SparseRow row;
          for (auto& [col, v] : eq) {
            if (v != 0) row.push_back({col, v});
          }
          if (!row.empty()) reducer.add_row(row);
        }
      }
    }
  }

  const auto kernel = reducer.nullspace();
  std::vector<std::vector<DenseBlock>> basis;
  basis.reserve(kernel.size());
  for (const auto& x : kernel) {
    std::vector<DenseBlock> blocks;
    for (std::size_t s = 0; s < spaces.size(); ++s) {
      const int d = spaces[s].dim;
      DenseBlock blk(static_cast<std::size_t>(d), Vector(static_cast<std::size_t>(d)));
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) blk[r][c] = x[var(s, r, c)];
      }
      blocks.push_back(std::move(blk));
    }
    basis.push_back(std::move(blocks));
  }
  CommutantData out;
  out.commutant_dim = static_cast<int>(kernel.size());
  out.radical_dim = radical_dimension(basis);
  return out;
}

}  // namespace regext
