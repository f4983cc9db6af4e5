#include "superfft/supermatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superfft {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

SuperMatrix::SuperMatrix(RingPtr ring, SuperDim dim_out, SuperDim dim_in, Parity declared)
    : ring_(std::move(ring)), dim_out_(dim_out), dim_in_(dim_in), parity_(declared) {
  if (!ring_) fail("supermatrix requires a ring");
  entries_.assign(size_t{dim_out_.total()} * dim_in_.total(), GPoly::zero(ring_));
}

SuperMatrix SuperMatrix::identity(RingPtr ring, SuperDim dim) {
  SuperMatrix m(std::move(ring), dim, dim, Parity::Even);
  for (uint32_t i = 0; i < dim.total(); ++i)
    m.set(i, i, GPoly::constant(m.ring_, Rational(1)));
  return m;
}

SuperMatrix SuperMatrix::from_rational(RingPtr ring, SuperDim dim_out, SuperDim dim_in,
                                       Parity declared, const RationalMatrix& values) {
  if (values.rows() != dim_out.total() || values.cols() != dim_in.total())
    fail("rational matrix shape does not match the super dimensions");
  SuperMatrix m(std::move(ring), dim_out, dim_in, declared);
  for (uint32_t i = 0; i < dim_out.total(); ++i)
    for (uint32_t j = 0; j < dim_in.total(); ++j)
      if (!is_zero(values.at(i, j)))
        m.set(i, j, GPoly::constant(m.ring_, values.at(i, j)));
  return m;
}

const GPoly& SuperMatrix::at(uint32_t i, uint32_t j) const {
  if (i >= dim_out_.total() || j >= dim_in_.total()) fail("supermatrix index out of range");
  return entries_[size_t{i} * dim_in_.total() + j];
}

void SuperMatrix::set(uint32_t i, uint32_t j, GPoly value) {
  if (i >= dim_out_.total() || j >= dim_in_.total()) fail("supermatrix index out of range");
  if (!same_ring(ring_, value.ring())) fail("entry ring mismatch");
  if (!value.is_homogeneous(entry_parity(i, j)))
    fail("entry parity violates the declared block pattern");
  entries_[size_t{i} * dim_in_.total() + j] = std::move(value);
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.dim_in_ == b.dim_out_)) fail("supermatrix dimension mismatch");
  if (!same_ring(a.ring_, b.ring_)) fail("supermatrix ring mismatch");
  SuperMatrix c(a.ring_, a.dim_out_, b.dim_in_, a.parity_ + b.parity_);
  for (uint32_t i = 0; i < a.dim_out_.total(); ++i)
    for (uint32_t j = 0; j < b.dim_in_.total(); ++j) {
      GPoly acc = GPoly::zero(a.ring_);
      for (uint32_t k = 0; k < a.dim_in_.total(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      c.set(i, j, std::move(acc));
    }
  return c;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  return same_ring(a.ring_, b.ring_) && a.dim_out_ == b.dim_out_ && a.dim_in_ == b.dim_in_ &&
         a.parity_ == b.parity_ && a.entries_ == b.entries_;
}

SuperVector apply(const SuperMatrix& a, const SuperVector& v) {
  if (v.dim != a.dim_in() || v.coords.size() != a.dim_in().total())
    fail("vector dimension mismatch");
  for (uint32_t j = 0; j < v.coords.size(); ++j)
    if (!v.coords[j].is_homogeneous(v.dim.index_parity(j) + v.shift))
      fail("vector coordinate parity mismatch");
  SuperVector out;
  out.dim = a.dim_out();
  out.shift = v.shift + a.declared_parity();
  out.coords.reserve(out.dim.total());
  for (uint32_t i = 0; i < a.dim_out().total(); ++i) {
    GPoly acc = GPoly::zero(a.ring());
    for (uint32_t j = 0; j < a.dim_in().total(); ++j) {
      if (a.at(i, j).is_zero() || v.coords[j].is_zero()) continue;
      acc += a.at(i, j) * v.coords[j];
    }
    out.coords.push_back(std::move(acc));
  }
  return out;
}

GPoly gpoly_det(const std::vector<std::vector<GPoly>>& m, const RingPtr& ring) {
  size_t n = m.size();
  GPoly det = GPoly::zero(ring);
  if (n == 0) return GPoly::constant(ring, Rational(1));
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    GPoly prod = GPoly::constant(ring, Rational((inversions & 1) ? -1 : 1));
    for (size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m[i][perm[i]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

std::vector<std::vector<GPoly>> block(const SuperMatrix& a, bool row_odd, bool col_odd) {
  SuperDim dout = a.dim_out(), din = a.dim_in();
  uint32_t r0 = row_odd ? dout.even : 0, r1 = row_odd ? dout.total() : dout.even;
  uint32_t c0 = col_odd ? din.even : 0, c1 = col_odd ? din.total() : din.even;
  std::vector<std::vector<GPoly>> out;
  for (uint32_t i = r0; i < r1; ++i) {
    std::vector<GPoly> row;
    for (uint32_t j = c0; j < c1; ++j) row.push_back(a.at(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<GPoly>> adjugate(const std::vector<std::vector<GPoly>>& m,
                                         const RingPtr& ring) {
  size_t n = m.size();
  std::vector<std::vector<GPoly>> adj(n, std::vector<GPoly>(n, GPoly::zero(ring)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<GPoly>> minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<GPoly> row;
        for (size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      GPoly cof = gpoly_det(minor, ring);
      if ((i + j) & 1) cof = -cof;
      adj[i][j] = std::move(cof);
    }
  }
  return adj;
}

std::vector<std::vector<GPoly>> mat_mul(const std::vector<std::vector<GPoly>>& a,
                                        const std::vector<std::vector<GPoly>>& b,
                                        const RingPtr& ring) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  std::vector<std::vector<GPoly>> c(n, std::vector<GPoly>(p, GPoly::zero(ring)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < p; ++j) {
        if (b[t][j].is_zero()) continue;
        c[i][j] += a[i][t] * b[t][j];
      }
    }
  return c;
}

GPoly berezinian_impl(const SuperMatrix& a, bool via_even) {
  if (a.declared_parity() != Parity::Even)
    throw std::invalid_argument("berezinian is defined for even-parity matrices");
  if (!(a.dim_out() == a.dim_in()))
    throw std::invalid_argument("berezinian of a non-square matrix");
  const RingPtr& ring = a.ring();

  // Reading the roles: pivot block is inverted, the Schur complement of the
  // other block is formed.
  bool pivot_odd = !via_even;
  auto pivot = block(a, pivot_odd, pivot_odd);
  auto other = block(a, !pivot_odd, !pivot_odd);
  auto upper = block(a, !pivot_odd, pivot_odd);  // other-rows x pivot-cols
  auto lower = block(a, pivot_odd, !pivot_odd);  // pivot-rows x other-cols

  GPoly pivot_det = gpoly_det(pivot, ring);
  if (pivot_det.reduced_part().is_zero())
    throw std::domain_error(via_even ? "singular reduced even-even block"
                                     : "singular reduced odd-odd block");
  auto adj = adjugate(pivot, ring);

  // schur_scaled = pivot_det*other - upper*adj(pivot)*lower  (= pivot_det * Schur)
  auto correction = mat_mul(mat_mul(upper, adj, ring), lower, ring);
  size_t n = other.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) other[i][j] = pivot_det * other[i][j] - correction[i][j];
  GPoly numerator = gpoly_det(other, ring);

  // Ber = det(Schur) / det(pivot) when pivoting on the odd block, and
  // det(pivot) / det(Schur) when pivoting on the even block.
  GPoly denominator = pow(pivot_det, static_cast<unsigned>(n) + 1);
  std::optional<GPoly> result;
  if (!via_even) {
    result = divide_exact(numerator, denominator);
  } else {
    result = divide_exact(denominator, numerator);
  }
  if (!result)
    throw std::domain_error("berezinian denominator does not divide exactly over this ring");
  return *result;
}

}  // namespace

GPoly berezinian(const SuperMatrix& a) { return berezinian_impl(a, false); }

GPoly berezinian_via_even_block(const SuperMatrix& a) { return berezinian_impl(a, true); }

}  // namespace superfft
