#pragma once

// Dense exact rational matrices. The elimination routines use a fixed pivot
// scan (columns left to right, first nonzero row), so echelon forms, kernels
// and ranks are deterministic and reproducible across runs.

#include <cstddef>
#include <vector>

#include "superfft/rational.hpp"

namespace superfft {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transposed() const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  /// In-place reduced row echelon form; returns the rank.
  size_t rref();
  size_t rank() const;

  Rational det() const;  // square only
  bool is_invertible() const;
  RationalMatrix inverse() const;  // throws when singular

  /// Columns form the canonical basis of {x : Ax = 0} (from the RREF, one
  /// column per free variable, unit entry at the free index).
  RationalMatrix kernel() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Canonical basis of the row space: RREF rows with zero rows dropped.
/// Two matrices with the same row space yield bit-identical results.
RationalMatrix row_space_basis(const RationalMatrix& m);

}  // namespace superfft
