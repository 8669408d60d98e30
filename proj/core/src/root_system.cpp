#include "regext/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace regext {

namespace {

std::string rank_error(Family f, int rank) {
  return std::string("invalid rank ") + std::to_string(rank) + " for type " + family_letter(f);
}

void validate_rank(Family f, int rank, RankConvention conv) {
  const bool strict = conv == RankConvention::strict;
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= (strict ? 3 : 2); break;
    case Family::D: ok = rank >= (strict ? 4 : 3); break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument(rank_error(f, rank));
}

// Symmetric matrix (a_i, a_j) for a Cartan matrix with column symmetrizer d.
std::vector<std::vector<int>> symmetric_form(const std::vector<std::vector<int>>& cartan,
                                             const std::vector<int>& d) {
  const std::size_t n = cartan.size();
  std::vector<std::vector<int>> form(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) form[i][j] = cartan[i][j] * d[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (form[i][j] != form[j][i]) throw std::logic_error("symmetrizer does not symmetrize");
    }
  }
  return form;
}

std::vector<int> symmetrizer_for(const LieType& t) {
  const int n = t.rank();
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  switch (t.family()) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d = {2, 2, 1, 1};
      break;
    case Family::G:
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

// Inverse of an integer matrix over Q (Gauss-Jordan).
std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[p], a[c]);
    const Rational lead = a[c][c];
    for (auto& x : a[c]) x /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// LieType

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

LieType::LieType(Family family, int rank, RankConvention convention) : family_(family), rank_(rank) {
  validate_rank(family, rank, convention);
}

LieType LieType::parse(const std::string& literal, RankConvention convention) {
  if (literal.size() < 2) throw std::invalid_argument("bad Lie type literal: '" + literal + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(literal[0])));
  if (letter < 'A' || letter > 'G') throw std::invalid_argument("bad Lie type family in '" + literal + "'");
  const std::string digits = literal.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("bad Lie type rank in '" + literal + "'");
  }
  return LieType(static_cast<Family>(letter - 'A'), std::stoi(digits), convention);
}

std::string LieType::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

// ---------------------------------------------------------------------------
// Root / Weight

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("rank mismatch");
  Root r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("rank mismatch");
  Weight w = a;
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += b.coords[i];
  return w;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("rank mismatch");
  Weight w = a;
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] -= b.coords[i];
  return w;
}

// ---------------------------------------------------------------------------
// Cartan matrices

std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  const int n = t.rank();
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) {  // simply laced edge, 1-based
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (t.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // long a_{n-1} against short a_n
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;  // long a_n
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = 0;
      c[n - 1][n - 2] = 0;
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case Family::G:
      c[0][1] = -1;
      c[1][0] = -3;  // a_2 long
      break;
  }
  return c;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(const LieType& type)
    : type_(type), cartan_(cartan_matrix(type)), symmetrizer_(symmetrizer_for(type)) {
  const int n = rank();
  form_ = symmetric_form(cartan_, symmetrizer_);

  // (lambda_i, a_j) = delta_ij d_j and a_j = sum_k cartan[j][k] lambda_k give
  // Gram(lambda) * cartan^T = diag(d).
  std::vector<std::vector<int>> cartan_t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cartan_t[i][j] = cartan_[j][i];
  }
  const auto inv = inverse(cartan_t);
  weight_gram_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) weight_gram_[i][j] = Rational(symmetrizer_[i]) * inv[i][j];
  }

  // Orbit closure of the simple roots and their negatives under simple reflections.
  auto reflect_coeffs = [&](const std::vector<int>& b, int i) {
    int p = 0;
    for (int j = 0; j < n; ++j) p += b[j] * cartan_[j][i];
    std::vector<int> out = b;
    out[i] -= p;
    return out;
  };
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    for (int sign : {1, -1}) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[i] = sign;
      if (seen.insert(e).second) queue.push_back(e);
    }
  }
  while (!queue.empty()) {
    const auto b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      auto r = reflect_coeffs(b, i);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }

  std::vector<Root> positives;
  for (const auto& c : seen) {
    Root r{c};
    if (r.is_positive()) {
      positives.push_back(r);
    } else if (!r.is_negative()) {
      throw std::logic_error("mixed-sign root generated for " + type_.name());
    }
  }
  std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs > b.coeffs;
  });
  positive_count_ = static_cast<int>(positives.size());
  roots_ = positives;
  for (const auto& r : positives) roots_.push_back(-r);
  if (static_cast<int>(seen.size()) != size()) throw std::logic_error("root list not closed under negation");
  for (int i = 0; i < size(); ++i) index_.emplace(roots_[i].coeffs, i);

  const int m = size();
  sum_table_.assign(static_cast<std::size_t>(m * m), -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      auto it = index_.find((roots_[a] + roots_[b]).coeffs);
      if (it != index_.end()) sum_table_[static_cast<std::size_t>(a * m + b)] = it->second;
    }
  }

  reflection_perm_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      auto it = index_.find(reflect_coeffs(roots_[a].coeffs, i));
      if (it == index_.end()) throw std::logic_error("simple reflection leaves the root system");
      reflection_perm_[i][a] = it->second;
    }
  }
}

std::optional<int> RootSystem::find(const Root& r) const {
  auto it = index_.find(r.coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_of(const Root& r) const {
  check_root_vector(r);
  auto idx = find(r);
  if (!idx) {
    std::string s;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(r.coeffs[i]);
    throw std::invalid_argument("(" + s + ") is not a root of " + type_.name());
  }
  return *idx;
}

void RootSystem::check_weight(const Weight& w) const {
  if (static_cast<int>(w.coords.size()) != rank()) {
    throw std::invalid_argument("weight has " + std::to_string(w.coords.size()) + " coordinates, expected " +
                                std::to_string(rank()));
  }
}

void RootSystem::check_root_vector(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) {
    throw std::invalid_argument("root has " + std::to_string(r.coeffs.size()) + " coefficients, expected " +
                                std::to_string(rank()));
  }
}

int RootSystem::inner_product(const Root& x, const Root& y) const {
  check_root_vector(x);
  check_root_vector(y);
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += x.coeffs[i] * y.coeffs[j] * form_[i][j];
  }
  return s;
}

int RootSystem::inner_product(const Weight& lambda, const Root& beta) const {
  check_weight(lambda);
  check_root_vector(beta);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += lambda.coords[j] * beta.coeffs[j] * symmetrizer_[j];
  return s;
}

Rational RootSystem::inner_product(const Weight& x, const Weight& y) const {
  check_weight(x);
  check_weight(y);
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (y.coords[j] != 0) s += weight_gram_[i][j] * (x.coords[i] * y.coords[j]);
    }
  }
  return s;
}

int RootSystem::pairing(const Root& x, const Root& beta) const {
  index_of(beta);
  const int num = 2 * inner_product(x, beta);
  const int den = inner_product(beta, beta);
  if (num % den != 0) throw std::logic_error("non-integral root pairing");
  return num / den;
}

int RootSystem::pairing(const Weight& x, const Root& beta) const {
  index_of(beta);
  const int num = 2 * inner_product(x, beta);
  const int den = inner_product(beta, beta);
  if (num % den != 0) throw std::logic_error("non-integral weight pairing");
  return num / den;
}

Root RootSystem::reflect(const Root& x, const Root& beta) const {
  const int p = pairing(x, beta);
  Root r = x;
  for (int i = 0; i < rank(); ++i) r.coeffs[i] -= p * beta.coeffs[i];
  return r;
}

Weight RootSystem::reflect(const Weight& x, const Root& beta) const {
  const int p = pairing(x, beta);
  return x - Weight{[&] {
           auto w = to_weight(beta).coords;
           for (int& c : w) c *= p;
           return w;
         }()};
}

Weight RootSystem::to_weight(const Root& r) const {
  check_root_vector(r);
  Weight w = zero_weight();
  for (int i = 0; i < rank(); ++i) {
    if (r.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) w.coords[j] += r.coeffs[i] * cartan_[i][j];
  }
  return w;
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("fundamental weight index");
  Weight w = zero_weight();
  w.coords[i] = 1;
  return w;
}

mpz_class RootSystem::weyl_dimension(const Weight& lambda) const {
  check_weight(lambda);
  if (!lambda.is_dominant()) throw std::invalid_argument("Weyl dimension needs a dominant weight");
  const Weight shifted = lambda + rho();
  mpz_class num = 1;
  mpz_class den = 1;
  for (int a = 0; a < positive_count_; ++a) {
    const Root& beta = roots_[a];
    num *= inner_product(shifted, beta);
    den *= inner_product(rho(), beta);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula is not integral");
  return num / den;
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& sys, int coeff_bound,
                                           std::optional<std::int64_t> dim_cap) {
  if (coeff_bound < 0) throw std::invalid_argument("coefficient bound must be >= 0");
  if (dim_cap && *dim_cap < 1) throw std::invalid_argument("dimension cap must be >= 1");
  std::vector<Weight> out;
  const int n = sys.rank();
  std::vector<int> coords(static_cast<std::size_t>(n), 0);
  while (true) {
    int k = 0;
    while (k < n && coords[k] == coeff_bound) coords[k++] = 0;
    if (k == n) break;
    ++coords[k];
    Weight w{coords};
    if (dim_cap && sys.weyl_dimension(w) > mpz_class(static_cast<long>(*dim_cap))) continue;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    int sa = 0;
    int sb = 0;
    for (int c : a.coords) sa += c;
    for (int c : b.coords) sb += c;
    if (sa != sb) return sa < sb;
    return a.coords > b.coords;
  });
  return out;
}

}  // namespace regext
