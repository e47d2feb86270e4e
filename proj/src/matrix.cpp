#include "qloop/matrix.hpp"

#include <stdexcept>

namespace qloop {

QMat QMat::identity(long n) {
  QMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMat r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x == 0) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

QMat QMat::operator*(const Scalar& c) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

QMat QMat::operator-() const { return (*this) * Scalar(-1); }

bool QMat::operator==(const QMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

QVec QMat::apply(const QVec& v) const {
  if (long(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  QVec r(rows_, Scalar(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Scalar QMat::max_abs() const {
  Scalar m(0);
  for (const auto& x : a_) {
    Scalar v = abs(x);
    if (v > m) m = v;
  }
  return m;
}

QVec RowEchelon::reduce(QVec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c == 0) continue;
    Scalar f = c;  // pivot entries are 1
    for (long j = 0; j < width_; ++j)
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowEchelon::insert(QVec v) {
  v = reduce(std::move(v));
  long p = -1;
  for (long j = 0; j < width_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Scalar inv = Scalar(1) / v[p];
  for (long j = 0; j < width_; ++j) v[j] *= inv;
  // back-substitute into existing rows to keep the basis reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r][p];
    if (c == 0) continue;
    for (long j = 0; j < width_; ++j)
      if (v[j] != 0) rows_[r][j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowEchelon::contains(QVec v) const { return is_zero(reduce(std::move(v))); }

std::optional<QVec> RowEchelon::coordinates(const QVec& v) const {
  QVec w = v;
  QVec coord(rows_.size(), Scalar(0));
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = w[pivots_[r]];
    if (c == 0) continue;
    coord[r] = c;
    for (long j = 0; j < width_; ++j)
      if (rows_[r][j] != 0) w[j] -= c * rows_[r][j];
  }
  if (!is_zero(w)) return std::nullopt;
  return coord;
}

long rank(const QMat& m) {
  RowEchelon e(m.cols());
  for (long i = 0; i < m.rows(); ++i) {
    QVec row(m.cols());
    for (long j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    e.insert(std::move(row));
  }
  return e.rank();
}

std::vector<QVec> kernel_basis(const QMat& m) {
  const long n = m.cols();
  RowEchelon e(n);
  for (long i = 0; i < m.rows(); ++i) {
    QVec row(n);
    for (long j = 0; j < n; ++j) row[j] = m.at(i, j);
    e.insert(std::move(row));
  }
  std::vector<bool> is_pivot(n, false);
  for (long p : e.pivots()) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (long j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    QVec v(n, Scalar(0));
    v[j] = 1;
    for (size_t r = 0; r < e.basis().size(); ++r)
      v[e.pivots()[r]] = -e.basis()[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (long(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const long n = a.cols();
  RowEchelon e(n + 1);
  for (long i = 0; i < a.rows(); ++i) {
    QVec row(n + 1);
    for (long j = 0; j < n; ++j) row[j] = a.at(i, j);
    row[n] = b[i];
    e.insert(std::move(row));
  }
  QVec x(n, Scalar(0));
  for (size_t r = 0; r < e.basis().size(); ++r) {
    if (e.pivots()[r] == n) return std::nullopt;  // 0 = 1 row: inconsistent
  }
  // assign pivot variables from the reduced rows, free variables 0
  for (size_t r = 0; r < e.basis().size(); ++r) {
    long p = e.pivots()[r];
    Scalar v = e.basis()[r][n];
    // subtract contributions of free columns (all zero) — nothing to do
    x[p] = v;
  }
  // verify (free columns with nonzero coefficients would falsify)
  QVec check = a.apply(x);
  for (long i = 0; i < a.rows(); ++i)
    if (check[i] != b[i]) return std::nullopt;
  return x;
}

QVec scale(const QVec& v, const Scalar& c) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace qloop
