#include "regext/chevalley.hpp"

#include "regext/errors.hpp"

#include <cstdlib>

namespace regext {

ChevalleyBasis::ChevalleyBasis(const RootSystem& sys) : sys_(&sys) {
  const int m = sys.size();
  const int n = sys.rank();
  const int npos = sys.positive_count();
  table_.assign(static_cast<std::size_t>(m * m), 0);
  known_.assign(static_cast<std::size_t>(m * m), 0);

  extraspecial_.assign(static_cast<std::size_t>(npos), {-1, -1});
  for (int b = n; b < npos; ++b) {
    for (int i = 0; i < n; ++i) {
      const Root rest = sys.root(b) - sys.root(i);
      if (auto g = sys.find(rest); g && sys.is_positive(*g)) {
        extraspecial_[b] = {i, *g};
        break;
      }
    }
    if (extraspecial_[b].first < 0) throw InternalError("positive root without a simple-root predecessor");
  }

  coroots_.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int b = 0; b < m; ++b) {
    const Root& r = sys.root(b);
    const int len = sys.inner_product(r, r);
    for (int i = 0; i < n; ++i) {
      const int num = r.coeffs[i] * 2 * sys.symmetrizer()[i];
      if (num % len != 0) throw InternalError("non-integral coroot coefficient");
      coroots_[b][i] = num / len;
    }
  }

  // Positive pairs by height of their sum, so the recursion only ever looks down.
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) compute(a, b);
  }

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int nab = structure_constant(a, b);
      if (nab != -structure_constant(b, a)) throw InternalError("structure constants are not antisymmetric");
      if (sys.sum_index(a, b) < 0) {
        if (nab != 0) throw InternalError("nonzero N for a non-root sum");
        continue;
      }
      if (std::abs(nab) != string_length(a, b) + 1) throw InternalError("|N_{a,b}| != p + 1");
      if (structure_constant(sys.negation(a), sys.negation(b)) != -nab) {
        throw InternalError("N_{-a,-b} != -N_{a,b}");
      }
    }
  }
}

int ChevalleyBasis::string_length(int a, int b) const {
  const Root& ra = sys_->root(a);
  Root r = sys_->root(b);
  int p = 0;
  while (true) {
    r = r - ra;
    if (!sys_->find(r)) break;
    ++p;
  }
  return p;
}

std::pair<int, int> ChevalleyBasis::extraspecial_pair(int b) const {
  if (!sys_->is_positive(b) || sys_->is_simple(b)) {
    throw std::invalid_argument("extraspecial pairs exist only for positive non-simple roots");
  }
  return extraspecial_[static_cast<std::size_t>(b)];
}

int ChevalleyBasis::compute(int a, int b) {
  const RootSystem& sys = *sys_;
  const int m = sys.size();
  const std::size_t slot = static_cast<std::size_t>(a * m + b);
  if (known_[slot]) return table_[slot];
  const int s = sys.sum_index(a, b);
  int value = 0;
  auto norm = [&](int r) { return sys.inner_product(sys.root(r), sys.root(r)); };
  if (s < 0) {
    value = 0;
  } else if (sys.is_positive(a) && sys.is_positive(b)) {
    const auto [i, g] = extraspecial_[static_cast<std::size_t>(s)];
    if (a == i && b == g) {
      value = string_length(a, b) + 1;
    } else if (b == i && a == g) {
      value = -compute(b, a);
    } else {
      // Four-term identity for a + b + (-a_i) + (-g) = 0.
      const int na = sys.negation(i);
      const int ng = sys.negation(g);
      Rational acc = 0;
      if (const int d = sys.sum_index(b, na); d >= 0) {
        acc += fraction(compute(b, na) * compute(a, ng), norm(d));
      }
      if (const int d = sys.sum_index(a, na); d >= 0) {
        acc += fraction(compute(na, a) * compute(b, ng), norm(d));
      }
      Rational v = acc * norm(s) / compute(i, g);
      if (v.get_den() != 1) throw InternalError("non-integral structure constant");
      value = static_cast<int>(v.get_num().get_si());
    }
  } else if (!sys.is_positive(a) && !sys.is_positive(b)) {
    value = -compute(sys.negation(a), sys.negation(b));
  } else {
    // a + b + c = 0 gives N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b);
    // rotate to the pair whose members share a sign.
    const int c = sys.negation(s);
    Rational v;
    if (sys.is_positive(b) == sys.is_positive(c)) {
      v = fraction(norm(c), norm(a)) * compute(b, c);
    } else {
      v = fraction(norm(c), norm(b)) * compute(c, a);
    }
    if (v.get_den() != 1) throw InternalError("non-integral structure constant");
    value = static_cast<int>(v.get_num().get_si());
  }
  table_[slot] = value;
  known_[slot] = 1;
  return value;
}

ChevalleyBasis::Element ChevalleyBasis::bracket(int x, int y) const {
  const int n = sys_->rank();
  Element out;
  if (x < n && y < n) return out;
  if (x < n || y < n) {
    // [h_i, e_a] = <a, a_i> e_a
    const bool swap = y < n;
    const int h = swap ? y : x;
    const int e = (swap ? x : y) - n;
    const auto& cart = sys_->cartan();
    int p = 0;
    for (int j = 0; j < n; ++j) p += sys_->root(e).coeffs[j] * cart[j][h];
    if (p != 0) out[e + n] = swap ? -p : p;
    return out;
  }
  const int a = x - n;
  const int b = y - n;
  if (b == sys_->negation(a)) {
    const auto& c = coroots_[static_cast<std::size_t>(a)];
    for (int i = 0; i < n; ++i) {
      if (c[i] != 0) out[i] = c[i];
    }
    return out;
  }
  const int s = sys_->sum_index(a, b);
  if (s >= 0) out[s + n] = structure_constant(a, b);
  return out;
}

ChevalleyBasis::Element ChevalleyBasis::bracket(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, u] : x) {
    for (const auto& [j, v] : y) {
      for (const auto& [k, w] : bracket(i, j)) out[k] += u * v * w;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace regext
