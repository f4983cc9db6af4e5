#include "superfft/rational_matrix.hpp"

#include <stdexcept>

namespace superfft {

RationalMatrix RationalMatrix::identity(size_t n) {
  RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!superfft::is_zero(x)) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (superfft::is_zero(aik)) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        if (is_zero(b.at(k, j))) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix c = a;
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix c = a;
  for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

size_t RationalMatrix::rref() {
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    size_t sel = pivot_row;
    while (sel < rows_ && superfft::is_zero(at(sel, col))) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pivot_row, j));
    Rational inv = 1 / at(pivot_row, col);
    for (size_t j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row || superfft::is_zero(at(i, col))) continue;
      Rational f = at(i, col);
      for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref();
}

Rational RationalMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix m = *this;
  Rational d(1);
  for (size_t col = 0; col < cols_; ++col) {
    size_t sel = col;
    while (sel < rows_ && superfft::is_zero(m.at(sel, col))) ++sel;
    if (sel == rows_) return Rational(0);
    if (sel != col) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = 1 / m.at(col, col);
    for (size_t i = col + 1; i < rows_; ++i) {
      if (superfft::is_zero(m.at(i, col))) continue;
      Rational f = m.at(i, col) * inv;
      for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

bool RationalMatrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  RationalMatrix aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  if (aug.rref() < rows_) throw std::domain_error("matrix is singular");
  RationalMatrix inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

RationalMatrix RationalMatrix::kernel() const {
  RationalMatrix r = *this;
  size_t rank = r.rref();
  std::vector<size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rank; ++col) {
    if (!superfft::is_zero(r.at(row, col))) {
      pivot_col.push_back(col);
      is_pivot[col] = true;
      ++row;
    }
  }
  size_t nfree = cols_ - rank;
  RationalMatrix k(cols_, nfree);
  size_t out = 0;
  for (size_t col = 0; col < cols_; ++col) {
    if (is_pivot[col]) continue;
    k.at(col, out) = 1;
    for (size_t p = 0; p < rank; ++p) k.at(pivot_col[p], out) = -r.at(p, col);
    ++out;
  }
  return k;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  size_t rank = r.rref();
  RationalMatrix out(rank, m.cols());
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

}  // namespace superfft
