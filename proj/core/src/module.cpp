#include "regext/module.hpp"

#include "regext/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace regext {

namespace {

using Block = std::vector<Vector>;  // block[row][col]

struct LocalSpace {
  Weight weight;
  int depth = 0;
  int dim = 0;
  std::vector<std::optional<Block>> e_to;  // e_i : this -> weight + a_i
  std::vector<std::optional<Block>> f_to;  // f_i : this -> weight - a_i
};

Vector block_column(const Block& b, int col) {
  Vector v(b.size());
  for (std::size_t r = 0; r < b.size(); ++r) v[r] = b[r][static_cast<std::size_t>(col)];
  return v;
}

Vector block_apply(const Block& b, const Vector& x) {
  Vector y(b.size());
  for (std::size_t r = 0; r < b.size(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] != 0 && b[r][c] != 0) acc += b[r][c] * x[c];
    }
    y[r] = acc;
  }
  return y;
}

}  // namespace

std::optional<int> ModuleRealization::space_of(const Weight& mu) const {
  auto it = space_index_.find(mu);
  if (it == space_index_.end()) return std::nullopt;
  return it->second;
}

Vector ModuleRealization::highest_weight_vector() const {
  Vector v(static_cast<std::size_t>(dim_));
  v[0] = 1;
  return v;
}

void ModuleRealization::build_composites() {
  const RootSystem& sys = system();
  const ChevalleyBasis& cb = *basis_;
  for (int b = sys.rank(); b < sys.positive_count(); ++b) {
    const auto [i, g] = cb.extraspecial_pair(b);
    const int nb = sys.negation(b);
    const int ni = sys.negation(i);
    const int ng = sys.negation(g);
    root_ops_[b] = commutator(root_ops_[i], root_ops_[g]) * fraction(1, cb.structure_constant(i, g));
    Rational down(1, 1);
    down /= cb.structure_constant(ni, ng);
    root_ops_[nb] = commutator(root_ops_[ni], root_ops_[ng]) * down;
  }
}

ModuleRealization ModuleRealization::rescaled(int simple, const Rational& c) const {
  if (c == 0) throw std::invalid_argument("rescaling factor must be nonzero");
  ModuleRealization out = *this;
  const RootSystem& sys = system();
  out.root_ops_[simple] *= c;
  out.root_ops_[sys.negation(simple)] *= Rational(1) / c;
  out.build_composites();
  return out;
}

ModuleRealization build_module(const ChevalleyBasis& basis, const Weight& lambda, std::int64_t cap) {
  const RootSystem& sys = basis.system();
  const int n = sys.rank();
  if (static_cast<int>(lambda.coords.size()) != n) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("build_module needs a dominant weight");
  const mpz_class expected_dim = sys.weyl_dimension(lambda);
  if (expected_dim > mpz_class(static_cast<long>(cap))) {
    throw BudgetExceeded("dim V(lambda) = " + expected_dim.get_str() + " exceeds the module cap " +
                         std::to_string(cap));
  }

  std::vector<Weight> simple_weights;
  for (int i = 0; i < n; ++i) simple_weights.push_back(sys.to_weight(sys.root(i)));

  std::vector<LocalSpace> spaces;
  std::map<Weight, int> index;
  auto add_space = [&](const Weight& w, int depth, int dim) {
    LocalSpace s;
    s.weight = w;
    s.depth = depth;
    s.dim = dim;
    s.e_to.assign(static_cast<std::size_t>(n), std::nullopt);
    s.f_to.assign(static_cast<std::size_t>(n), std::nullopt);
    index.emplace(w, static_cast<int>(spaces.size()));
    spaces.push_back(std::move(s));
    return static_cast<int>(spaces.size()) - 1;
  };
  auto find_space = [&](const Weight& w) -> int {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  };

  add_space(lambda, 0, 1);
  std::int64_t total = 1;
  std::vector<int> layer{0};
  for (int depth = 1; !layer.empty(); ++depth) {
    std::map<Weight, std::vector<std::pair<int, int>>> candidates;  // mu -> (i, source space)
    for (int s : layer) {
      for (int i = 0; i < n; ++i) {
        if (spaces[s].weight.coords[i] <= 0 && spaces[s].depth == 0) continue;  // f_i v_lambda = 0
        candidates[spaces[s].weight - simple_weights[i]].emplace_back(i, s);
      }
    }
    std::vector<int> next_layer;
    for (auto& [mu, sources] : candidates) {
      std::sort(sources.begin(), sources.end());
      std::vector<int> target(static_cast<std::size_t>(n), -1);
      std::vector<int> seg(static_cast<std::size_t>(n), 0);
      int sig_len = 0;
      for (int j = 0; j < n; ++j) {
        target[j] = find_space(mu + simple_weights[j]);
        seg[j] = sig_len;
        if (target[j] >= 0) sig_len += spaces[target[j]].dim;
      }
      if (sig_len == 0) continue;

      // e_j f_i b = f_i e_j b + delta_ij <nu, a_i> b, with nu = mu + a_i the weight of b.
      struct Candidate {
        int i;
        int source;
        int k;
        Vector sig;
      };
      std::vector<Candidate> cands;
      for (const auto& [i, src] : sources) {
        const LocalSpace& nu = spaces[src];
        for (int k = 0; k < nu.dim; ++k) {
          Vector sig(static_cast<std::size_t>(sig_len));
          for (int j = 0; j < n; ++j) {
            if (target[j] < 0) continue;
            if (nu.e_to[j]) {
              const int above = find_space(nu.weight + simple_weights[j]);
              const auto& down = spaces[above].f_to[i];
              if (down) {
                const Vector y = block_apply(*down, block_column(*nu.e_to[j], k));
                for (std::size_t t = 0; t < y.size(); ++t) sig[seg[j] + t] += y[t];
              }
            }
            if (j == i) sig[seg[j] + k] += nu.weight.coords[i];
          }
          cands.push_back({i, src, k, std::move(sig)});
        }
      }

      EchelonBasis echelon(sig_len);
      std::vector<const Candidate*> accepted;
      for (const auto& c : cands) {
        if (echelon.insert(c.sig)) accepted.push_back(&c);
      }
      const int dim = echelon.rank();
      if (dim == 0) continue;
      total += dim;
      if (total > cap) throw BudgetExceeded("module construction exceeded cap " + std::to_string(cap));

      const int id = add_space(mu, depth, dim);
      for (int j = 0; j < n; ++j) {
        if (target[j] < 0) continue;
        const int rows = spaces[target[j]].dim;
        Block e(static_cast<std::size_t>(rows), Vector(static_cast<std::size_t>(dim)));
        for (int col = 0; col < dim; ++col) {
          for (int r = 0; r < rows; ++r) e[r][col] = accepted[col]->sig[seg[j] + r];
        }
        spaces[id].e_to[j] = std::move(e);
      }
      for (const auto& [i, src] : sources) {
        Block f(static_cast<std::size_t>(dim), Vector(static_cast<std::size_t>(spaces[src].dim)));
        for (const auto& c : cands) {
          if (c.i != i) continue;
          auto coords = echelon.coordinates(c.sig);
          if (!coords) throw InternalError("candidate outside its own span");
          for (int r = 0; r < dim; ++r) f[r][c.k] = (*coords)[r];
        }
        spaces[src].f_to[i] = std::move(f);
      }
      next_layer.push_back(id);
    }
    layer = std::move(next_layer);
  }

  // Certificate: per-weight dimensions must match Freudenthal.
  const Character ch = expected_character(sys, lambda, cap);
  if (ch.dimension != total || static_cast<std::size_t>(ch.weights.multiplicities.size()) != spaces.size()) {
    throw InternalError("module dimension " + std::to_string(total) + " disagrees with Freudenthal " +
                        std::to_string(ch.dimension));
  }
  for (const auto& s : spaces) {
    if (ch.weights.multiplicity(s.weight) != s.dim) {
      throw InternalError("weight multiplicity disagrees with Freudenthal");
    }
  }

  ModuleRealization m;
  m.basis_ = &basis;
  m.lambda_ = lambda;
  m.dim_ = static_cast<int>(total);
  int offset = 0;
  for (const auto& s : spaces) {
    m.space_index_.emplace(s.weight, static_cast<int>(m.spaces_.size()));
    m.spaces_.push_back({s.weight, s.depth, offset, s.dim});
    for (int k = 0; k < s.dim; ++k) m.basis_weights_.push_back(s.weight);
    offset += s.dim;
  }

  const int dim = m.dim_;
  m.root_ops_.assign(static_cast<std::size_t>(sys.size()), SparseMatrix(dim, dim));
  for (int i = 0; i < n; ++i) {
    SparseMatrix& e = m.root_ops_[i];
    SparseMatrix& f = m.root_ops_[sys.negation(i)];
    std::vector<Rational> diag(static_cast<std::size_t>(dim));
    for (std::size_t sidx = 0; sidx < spaces.size(); ++sidx) {
      const auto& s = spaces[sidx];
      const int from = m.spaces_[sidx].offset;
      for (int k = 0; k < s.dim; ++k) diag[from + k] = s.weight.coords[i];
      if (s.e_to[i]) {
        const int to = m.spaces_[static_cast<std::size_t>(find_space(s.weight + simple_weights[i]))].offset;
        const Block& b = *s.e_to[i];
        for (std::size_t r = 0; r < b.size(); ++r) {
          for (int c = 0; c < s.dim; ++c) {
            if (b[r][c] != 0) e.set(to + static_cast<int>(r), from + c, b[r][c]);
          }
        }
      }
      if (s.f_to[i]) {
        const int to = m.spaces_[static_cast<std::size_t>(find_space(s.weight - simple_weights[i]))].offset;
        const Block& b = *s.f_to[i];
        for (std::size_t r = 0; r < b.size(); ++r) {
          for (int c = 0; c < s.dim; ++c) {
            if (b[r][c] != 0) f.set(to + static_cast<int>(r), from + c, b[r][c]);
          }
        }
      }
    }
    m.cartan_ops_.push_back(SparseMatrix::diagonal(diag));
  }
  m.build_composites();
  return m;
}

Vector act(const ModuleRealization& m, const std::vector<Generator>& word, const Vector& v) {
  if (static_cast<int>(v.size()) != m.dimension()) {
    throw std::invalid_argument("vector dimension " + std::to_string(v.size()) + " does not match module dimension " +
                                std::to_string(m.dimension()));
  }
  Vector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == Generator::Kind::h) {
      if (it->index < 0 || it->index >= m.system().rank()) throw std::invalid_argument("bad Cartan generator index");
      out = m.h(it->index).apply(out);
    } else {
      if (it->index < 0 || it->index >= m.system().size()) throw std::invalid_argument("bad root generator index");
      out = m.e(it->index).apply(out);
    }
  }
  return out;
}

SubmoduleSpan subalgebra_span(const ModuleRealization& m, const RootSubset& T) {
  if (!is_closed(T)) throw std::invalid_argument("subalgebra_span needs a closed subset");
  const RootSystem& sys = m.system();
  const RootSubset sym = closure(T | T.negated());

  std::vector<int> lowering;
  std::vector<Weight> lowering_weight;
  for (int b = sys.positive_count(); b < sys.size(); ++b) {
    if (sym.contains(b)) {
      lowering.push_back(b);
      lowering_weight.push_back(sys.to_weight(sys.root(b)));
    }
  }

  const auto& spaces = m.weight_spaces();
  std::vector<std::optional<EchelonBasis>> span(spaces.size());
  std::deque<std::pair<int, Vector>> work;  // (space, local vector)
  span[0].emplace(1);
  span[0]->insert(Vector{Rational(1)});
  work.emplace_back(0, Vector{Rational(1)});

  while (!work.empty()) {
    auto [sidx, local] = std::move(work.front());
    work.pop_front();
    const WeightSpace& from = spaces[static_cast<std::size_t>(sidx)];
    for (std::size_t t = 0; t < lowering.size(); ++t) {
      auto to_idx = m.space_of(from.weight + lowering_weight[t]);
      if (!to_idx) continue;
      const WeightSpace& to = spaces[static_cast<std::size_t>(*to_idx)];
      const SparseMatrix& op = m.e(lowering[t]);
      Vector image(static_cast<std::size_t>(to.dim));
      for (int r = 0; r < to.dim; ++r) {
        Rational acc = 0;
        for (const auto& e : op.row(to.offset + r)) {
          if (e.col >= from.offset && e.col < from.offset + from.dim) acc += e.value * local[e.col - from.offset];
        }
        image[r] = acc;
      }
      if (is_zero(image)) continue;
      auto& target = span[static_cast<std::size_t>(*to_idx)];
      if (!target) target.emplace(to.dim);
      if (target->insert(image)) work.emplace_back(*to_idx, std::move(image));
    }
  }

  SubmoduleSpan out;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    if (span[s] && span[s]->rank() > 0) {
      out.weight_dims[spaces[s].weight] = span[s]->rank();
      out.dimension += span[s]->rank();
    }
  }
  return out;
}

}  // namespace regext
