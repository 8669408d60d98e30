#pragma once

// Exact linear algebra over the rationals.
//
// Everything here is characteristic zero and exact: ranks, kernels and
// commutants are decided without any floating point. Matrices that come out of
// highest-weight modules are very sparse (each Chevalley generator maps one
// weight space into one other), so the matrix type is row-sparse.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regext {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" into a normalized rational.
Rational parse_rational(const std::string& text);
/// num / den in lowest terms; throws std::invalid_argument for den = 0.
Rational fraction(long num, long den);
std::string to_string(const Rational& q);

bool is_zero(const Vector& v);

struct SparseEntry {
  int col;
  Rational value;
};

using SparseRow = std::vector<SparseEntry>;

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  static SparseMatrix identity(int n);
  static SparseMatrix diagonal(const std::vector<Rational>& diag);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Overwrites entry (r, c); setting zero removes it.
  void set(int r, int c, const Rational& value);
  void add_to(int r, int c, const Rational& value);
  Rational get(int r, int c) const;

  const SparseRow& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

  bool is_zero() const;
  std::size_t nonzeros() const;
  Rational trace() const;
  SparseMatrix transpose() const;

  Vector apply(const Vector& v) const;

  SparseMatrix& operator*=(const Rational& s);
  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& s) { return a *= s; }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseRow> data_;
};

/// [a, b] = ab - ba.
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Kronecker product a (x) b acting on the tensor product of the spaces.
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

/// Incrementally maintained reduced row echelon basis of a subspace of Q^dim.
///
/// Besides membership it can express a vector in terms of the vectors that
/// were accepted by insert(), in acceptance order.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  int ambient_dimension() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds v when it is independent of the current span. Returns whether it was.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;

  /// Coefficients of v over the accepted vectors, or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  struct Row {
    int pivot;
    Vector values;
    Vector combination;  // over accepted vectors
  };
  int dim_;
  std::vector<Row> rows_;
};

/// Sparse Gaussian elimination over rows of a homogeneous linear system.
class RowReducer {
 public:
  explicit RowReducer(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Returns true if the row increased the rank.
  bool add_row(const SparseRow& row);

  /// Basis of {x : row . x = 0 for every added row}.
  std::vector<Vector> nullspace() const;

 private:
  using WorkRow = std::map<int, Rational>;
  void reduce(WorkRow& work) const;

  int columns_;
  std::map<int, WorkRow> pivots_;  // pivot column -> row with leading 1
};

/// Rank of a dense matrix given as a list of rows.
int rank(const std::vector<Vector>& rows);

}  // namespace regext
