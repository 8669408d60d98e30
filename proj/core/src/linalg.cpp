#include "regext/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace regext {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Rational fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Rational>& diag) {
  const int n = static_cast<int>(diag.size());
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (diag[i] != 0) m.data_[i].push_back({i, diag[i]});
  }
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& value) {
  auto& row = data_.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, int col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (value == 0) {
      row.erase(it);
    } else {
      it->value = value;
    }
  } else if (value != 0) {
    row.insert(it, {c, value});
  }
}

void SparseMatrix::add_to(int r, int c, const Rational& value) {
  if (value == 0) return;
  auto& row = data_.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, int col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (it->value == 0) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

Rational SparseMatrix::get(int r, int c) const {
  const auto& row = data_.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, int col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += get(i, i);
  return t;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("dimension mismatch in matrix-vector product");
  }
  Vector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (const auto& e : data_[r]) {
      if (v[e.col] != 0) acc += e.value * v[e.col];
    }
    out[r] = acc;
  }
  return out;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
  if (s == 0) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_) {
    for (auto& e : r) e.value *= s;
  }
  return *this;
}

namespace {

SparseRow merge_rows(const SparseRow& a, const SparseRow& b, int sign) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, sign > 0 ? Rational(b[j].value) : Rational(-b[j].value)});
      ++j;
    } else {
      Rational v = sign > 0 ? Rational(a[i].value + b[j].value) : Rational(a[i].value - b[j].value);
      if (v != 0) out.push_back({a[i].col, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("dimension mismatch in matrix sum");
  }
  for (int r = 0; r < rows_; ++r) data_[r] = merge_rows(data_[r], other.data_[r], +1);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("dimension mismatch in matrix difference");
  }
  for (int r = 0; r < rows_; ++r) data_[r] = merge_rows(data_[r], other.data_[r], -1);
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  SparseMatrix out(a.rows_, b.cols_);
  std::map<int, Rational> acc;
  for (int r = 0; r < a.rows_; ++r) {
    acc.clear();
    for (const auto& ea : a.data_[r]) {
      for (const auto& eb : b.data_[ea.col]) acc[eb.col] += ea.value * eb.value;
    }
    auto& row = out.data_[r];
    for (auto& [c, v] : acc) {
      if (v != 0) row.push_back({c, v});
    }
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (int r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].col != y[k].col || x[k].value != y[k].value) return false;
    }
  }
  return true;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra) {
    for (int rb = 0; rb < b.rows(); ++rb) {
      const int r = ra * b.rows() + rb;
      for (const auto& ea : a.row(ra)) {
        for (const auto& eb : b.row(rb)) out.set(r, ea.col * b.cols() + eb.col, ea.value * eb.value);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

bool EchelonBasis::contains(const Vector& v) const { return coordinates(v).has_value(); }

std::optional<Vector> EchelonBasis::coordinates(const Vector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  Vector residual = v;
  Vector coords(rows_.size());
  for (const auto& row : rows_) {
    const Rational c = v[row.pivot];
    if (c == 0) continue;
    for (int k = 0; k < dim_; ++k) {
      if (row.values[k] != 0) residual[k] -= c * row.values[k];
    }
    for (std::size_t k = 0; k < row.combination.size(); ++k) {
      if (row.combination[k] != 0) coords[k] += c * row.combination[k];
    }
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool EchelonBasis::insert(const Vector& v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  const std::size_t accepted = rows_.size();
  Vector residual = v;
  Vector combination(accepted + 1);
  combination[accepted] = 1;
  for (const auto& row : rows_) {
    const Rational c = residual[row.pivot];
    if (c == 0) continue;
    for (int k = 0; k < dim_; ++k) {
      if (row.values[k] != 0) residual[k] -= c * row.values[k];
    }
    for (std::size_t k = 0; k < row.combination.size(); ++k) {
      if (row.combination[k] != 0) combination[k] -= c * row.combination[k];
    }
  }
  int pivot = -1;
  for (int k = 0; k < dim_; ++k) {
    if (residual[k] != 0) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) return false;

  const Rational lead = residual[pivot];
  for (auto& x : residual) x /= lead;
  for (auto& x : combination) x /= lead;

  // Keep the basis fully reduced: clear the new pivot column from older rows.
  for (auto& row : rows_) {
    row.combination.resize(accepted + 1);
    const Rational c = row.values[pivot];
    if (c == 0) continue;
    for (int k = 0; k < dim_; ++k) {
      if (residual[k] != 0) row.values[k] -= c * residual[k];
    }
    for (std::size_t k = 0; k <= accepted; ++k) {
      if (combination[k] != 0) row.combination[k] -= c * combination[k];
    }
  }
  rows_.push_back({pivot, std::move(residual), std::move(combination)});
  return true;
}

// ---------------------------------------------------------------------------
// RowReducer

void RowReducer::reduce(WorkRow& work) const {
  auto it = work.begin();
  while (it != work.end()) {
    if (it->second == 0) {
      it = work.erase(it);
      continue;
    }
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const Rational factor = it->second;
    for (const auto& [c, v] : p->second) work[c] -= factor * v;
    it = work.lower_bound(col);
  }
}

bool RowReducer::add_row(const SparseRow& row) {
  WorkRow work;
  for (const auto& e : row) {
    if (e.col < 0 || e.col >= columns_) throw std::out_of_range("column index out of range");
    if (e.value != 0) work[e.col] += e.value;
  }
  reduce(work);
  if (work.empty()) return false;
  const Rational lead = work.begin()->second;
  for (auto& [c, v] : work) v /= lead;
  const int pivot = work.begin()->first;
  pivots_.emplace(pivot, std::move(work));
  return true;
}

std::vector<Vector> RowReducer::nullspace() const {
  // Back-substitute to reduced row echelon form.
  std::map<int, WorkRow> reduced = pivots_;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    const int col = it->first;
    const WorkRow& source = it->second;
    for (auto& [other_col, other] : reduced) {
      if (other_col >= col) break;
      auto hit = other.find(col);
      if (hit == other.end()) continue;
      const Rational factor = hit->second;
      for (const auto& [c, v] : source) {
        Rational& slot = other[c];
        slot -= factor * v;
      }
      for (auto e = other.begin(); e != other.end();) {
        e = (e->second == 0) ? other.erase(e) : std::next(e);
      }
    }
  }

  std::vector<Vector> basis;
  for (int free = 0; free < columns_; ++free) {
    if (reduced.count(free) != 0) continue;
    Vector x(static_cast<std::size_t>(columns_));
    x[free] = 1;
    for (const auto& [pivot, row] : reduced) {
      auto hit = row.find(free);
      if (hit != row.end()) x[pivot] = -hit->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(static_cast<int>(rows.front().size()));
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

}  // namespace regext
