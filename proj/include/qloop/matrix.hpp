#pragma once

#include <optional>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

using QVec = std::vector<Scalar>;

/// Dense matrix over the rationals. All operations are exact.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(long rows, long cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static QMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Scalar& at(long i, long j) { return a_[i * cols_ + j]; }
  const Scalar& at(long i, long j) const { return a_[i * cols_ + j]; }

  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const QMat& o) const;
  QMat operator*(const Scalar& c) const;
  QMat operator-() const;
  bool operator==(const QMat& o) const;

  QMat transpose() const;
  bool is_zero() const;
  QVec apply(const QVec& v) const;  // matrix * column vector

  /// Largest absolute value of an entry (for residual reports).
  Scalar max_abs() const;

 private:
  long rows_, cols_;
  std::vector<Scalar> a_;
};

inline QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

/// Incrementally maintained reduced row echelon basis of a subspace.
class RowEchelon {
 public:
  explicit RowEchelon(long width) : width_(width) {}

  /// Reduce v against the basis; if a nonzero remainder survives,
  /// normalize and insert it. Returns true when the rank grew.
  bool insert(QVec v);
  bool contains(QVec v) const;

  /// Remainder of v after reduction (zero iff contained).
  QVec reduce(QVec v) const;

  long rank() const { return long(rows_.size()); }
  long width() const { return width_; }
  const std::vector<QVec>& basis() const { return rows_; }
  const std::vector<long>& pivots() const { return pivots_; }

  /// Coordinates of v in the echelon basis, if v lies in the span.
  std::optional<QVec> coordinates(const QVec& v) const;

 private:
  long width_;
  std::vector<QVec> rows_;    // reduced, pivot entries 1
  std::vector<long> pivots_;  // pivot column per row
};

long rank(const QMat& m);

/// Basis of the right kernel {v : M v = 0}, one vector per row of the result.
std::vector<QVec> kernel_basis(const QMat& m);

/// One exact solution of A x = b, if the system is consistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

QVec scale(const QVec& v, const Scalar& c);
QVec add(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);

}  // namespace qloop
