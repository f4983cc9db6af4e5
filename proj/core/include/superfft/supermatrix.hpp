#pragma once

// Parity-graded matrices over a supercommutative polynomial ring (or the
// rationals, as constant polynomials), with the Berezinian.
//
// Convention: coordinates are taken in a fixed homogeneous basis, even
// indices first, and matrices act on coordinate columns. All Koszul signs
// live in the entries' own arithmetic, so composition is the ordinary
// row-by-column product and is associative by construction.

#include <cstdint>
#include <span>
#include <vector>

#include "superfft/gpoly.hpp"
#include "superfft/rational_matrix.hpp"

namespace superfft {

struct SuperDim {
  uint32_t even = 0;
  uint32_t odd = 0;

  uint32_t total() const { return even + odd; }
  Parity index_parity(uint32_t i) const { return i < even ? Parity::Even : Parity::Odd; }
  bool operator==(const SuperDim&) const = default;
};

/// A homogeneous matrix: for declared parity even, diagonal blocks carry even
/// entries and cross blocks odd ones; for declared parity odd, the opposite.
/// Zero entries are allowed anywhere; set() enforces the block pattern.
class SuperMatrix {
 public:
  SuperMatrix(RingPtr ring, SuperDim dim_out, SuperDim dim_in, Parity declared);
  static SuperMatrix identity(RingPtr ring, SuperDim dim);
  /// Embeds a rational matrix; every entry must land in an allowed block.
  static SuperMatrix from_rational(RingPtr ring, SuperDim dim_out, SuperDim dim_in,
                                   Parity declared, const RationalMatrix& values);

  const RingPtr& ring() const { return ring_; }
  SuperDim dim_out() const { return dim_out_; }
  SuperDim dim_in() const { return dim_in_; }
  Parity declared_parity() const { return parity_; }

  const GPoly& at(uint32_t i, uint32_t j) const;
  void set(uint32_t i, uint32_t j, GPoly value);

  /// Parity an entry at (i, j) must have (when nonzero).
  Parity entry_parity(uint32_t i, uint32_t j) const {
    return dim_out_.index_parity(i) + dim_in_.index_parity(j) + parity_;
  }

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

 private:
  RingPtr ring_;
  SuperDim dim_out_, dim_in_;
  Parity parity_;
  std::vector<GPoly> entries_;  // row-major
};

/// Coordinates of a point of the super space, with a parity shift: coordinate
/// i is homogeneous of parity p(i) + shift (an even R-point has shift 0).
struct SuperVector {
  SuperDim dim;
  Parity shift = Parity::Even;
  std::vector<GPoly> coords;
};

/// Matrix-vector product; output shift = input shift + declared parity.
SuperVector apply(const SuperMatrix& a, const SuperVector& v);

/// Berezinian of an even matrix whose odd-odd block D has a determinant with
/// nonzero reduced part: det(A_ee - A_eo D^-1 A_oe) / det(D), computed in the
/// localization at det(D) and cleared to a polynomial by exact division.
/// Throws std::domain_error when the reduced D block is singular or the
/// denominator does not divide exactly.
GPoly berezinian(const SuperMatrix& a);

/// Alternative route through the even-even block: det(A_ee) / det(A_oo -
/// A_oe A_ee^-1 A_eo). Cross-check; both blocks must be invertible.
GPoly berezinian_via_even_block(const SuperMatrix& a);

/// Determinant of a square matrix of even-parity entries (they commute), by
/// permutation expansion in a fixed order.
GPoly gpoly_det(const std::vector<std::vector<GPoly>>& m, const RingPtr& ring);

}  // namespace superfft
