// Exact sparse linear algebra over Q(z).
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qhyper/cyclo.hpp"

namespace qhyper {

/// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVec {
public:
  using Entry = std::pair<int, CycloNum>;

  SparseVec() = default;
  static SparseVec unit(int i, const CycloNum& c = CycloNum(1L));
  /// Sums duplicate indices and drops zeros.
  static SparseVec from_entries(std::vector<Entry> entries);
  static SparseVec from_dense(const std::vector<CycloNum>& v);

  const std::vector<Entry>& entries() const noexcept { return e_; }
  bool is_zero() const noexcept { return e_.empty(); }
  std::size_t nnz() const noexcept { return e_.size(); }
  /// Index of the first nonzero entry; -1 if zero.
  int lead() const noexcept { return e_.empty() ? -1 : e_.front().first; }
  CycloNum get(int i) const;

  /// this += a * x
  void axpy(const CycloNum& a, const SparseVec& x);
  void scale(const CycloNum& a);
  SparseVec scaled(const CycloNum& a) const;
  SparseVec shifted(int offset) const;
  std::vector<CycloNum> dense(int n) const;

  SparseVec& operator+=(const SparseVec& o) { axpy(CycloNum(1L), o); return *this; }
  SparseVec& operator-=(const SparseVec& o) { axpy(CycloNum(-1L), o); return *this; }
  bool operator==(const SparseVec& o) const { return e_ == o.e_; }
  bool operator!=(const SparseVec& o) const { return !(e_ == o.e_); }

private:
  std::vector<Entry> e_;
};

inline SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
inline SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }

/// Accumulates entries in any order.
class SparseAccum {
public:
  void add(int i, const CycloNum& c);
  void add(const SparseVec& v, const CycloNum& c = CycloNum(1L));
  SparseVec finish();

private:
  std::map<int, CycloNum> m_;
};

/// Sparse matrix stored by columns.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<CycloNum>& d);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const SparseVec& col(int j) const { return cols_data_.at(j); }
  void set_col(int j, SparseVec v);
  CycloNum at(int i, int j) const { return cols_data_.at(j).get(i); }
  /// Adds c at (i, j).
  void add(int i, int j, const CycloNum& c);

  SparseVec apply(const SparseVec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const CycloNum& c) const;
  Matrix transpose() const;
  Matrix pow(int e) const;
  /// Row i as a sparse vector (by scanning columns).
  SparseVec row(int i) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  std::vector<std::vector<CycloNum>> dense() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> cols_data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Incrementally built row-echelon basis.  Each stored row has leading
/// coefficient 1 at its lead index, and no two rows share a lead.
class Echelon {
public:
  /// Returns true if v was independent of the current span (and adds it).
  bool add(const SparseVec& v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  /// Rows after full back-substitution, sorted by lead.
  std::vector<SparseVec> reduced_rows() const;
  bool is_pivot(int i) const { return pivot_.count(i) != 0; }

private:
  std::vector<SparseVec> rows_;
  std::map<int, std::size_t> pivot_;
};

/// Basis of {x : row . x = 0 for all rows}, x of length ncols.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols);
/// A particular solution of rows . x = rhs (free variables set to 0), if any.
std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, const std::vector<CycloNum>& rhs,
                               int ncols);
/// Coefficients expressing target in the given vectors, if it lies in their span.
std::optional<std::vector<CycloNum>> coordinates(const std::vector<SparseVec>& basis,
                                                 const SparseVec& target);

std::size_t rank(const std::vector<SparseVec>& vecs);
bool span_contains(const std::vector<SparseVec>& span, const SparseVec& v);
bool span_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b);
/// Basis of span(a) intersected with span(b); vectors live in [0, n).
std::vector<SparseVec> span_intersect(const std::vector<SparseVec>& a,
                                      const std::vector<SparseVec>& b, int n);
/// Independent basis of span(v).
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& v);

}  // namespace qhyper
