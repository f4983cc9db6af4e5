#pragma once

// Even and odd super-symmetric bilinear forms over the rationals: standard
// models, constructive standardization (super Gram-Schmidt), the Lie
// superalgebra of a form and the component-group representatives.
//
// Group invariance is operationalized throughout the project as invariance
// under the Lie algebra basis (even and odd generators) plus invariance under
// the component representatives.

#include <optional>
#include <span>
#include <vector>

#include "superfft/rational_matrix.hpp"
#include "superfft/supermatrix.hpp"

namespace superfft {

/// Gram matrix of a non-degenerate super-symmetric bilinear form. For an
/// even form B pairs like parities (symmetric on the even part, alternating
/// on the odd part); for an odd form it pairs opposite parities, with
/// g[i][j] = g[j][i] on the even-odd blocks.
struct FormSpec {
  SuperDim dim;
  Parity form_parity = Parity::Even;
  RationalMatrix gram;

  /// B(e_i, e_i) = 1 for the m even vectors; B(e_{m+i}, e_{m+i+n}) = -1 and
  /// B(e_{m+i+n}, e_{m+i}) = +1 for the n hyperbolic odd pairs.
  static FormSpec standard_even(uint32_t m, uint32_t n);

  /// dim n|n, pairing e_i with f_i, value 1 both ways.
  static FormSpec standard_odd(uint32_t n);

  bool is_super_symmetric() const;
  bool is_nondegenerate() const { return gram.is_invertible(); }
  /// Throws std::invalid_argument when the shape, symmetry or block pattern
  /// is violated, or the form is degenerate.
  void validate() const;
};

/// Evaluation of the form on coordinate vectors over a polynomial ring:
/// B(u, v) = sum_{i,j} (-1)^{p(i)|v_j|} u_i v_j g_ij, each v_j split into
/// homogeneous parts. For an odd form the value is the coefficient of the
/// odd target generator.
GPoly evaluate_bilinear(const FormSpec& f, std::span<const GPoly> u,
                        std::span<const GPoly> v);

/// Upper-triangular data of a quadratic form q(x) = sum a_ij x_i x_j over
/// admissible pairs: i <= j, with i < j when e_i is odd; nonzero a_ij
/// requires p(i)+p(j) equal to the form parity.
struct QuadraticForm {
  SuperDim dim;
  Parity parity = Parity::Even;
  std::vector<std::pair<std::pair<uint32_t, uint32_t>, Rational>> coeffs;

  void validate() const;
};

struct PolarizationResult {
  FormSpec form;
  bool degenerate = false;
};

/// Gram matrix of B(x, y) = q(x + y) - q(x) - q(y), computed symbolically.
/// A degenerate result is reported through the flag, not an error.
PolarizationResult bilinear_from_quadratic(const QuadraticForm& q);

/// Outcome of the constructive standardization. On success, basis_change T
/// satisfies T^t * gram * T = standard.gram exactly. When a rescaling would
/// need an irrational square root, ok is false and obstruction holds the
/// rational value 1/B(v, v) that failed to be a perfect square.
struct StandardizeResult {
  bool ok = false;
  RationalMatrix basis_change;
  FormSpec standard;
  Rational obstruction;
};

StandardizeResult standardize(const FormSpec& f);

/// Homogeneous solution of B(Xu, v) + (-1)^{|X| |u|} B(u, Xv) = 0, as a
/// rational matrix in the block pattern of its parity.
struct LieGenerator {
  Parity parity = Parity::Even;
  RationalMatrix matrix;
};

/// Deterministic echelon basis of the Lie superalgebra of the form, even
/// generators first.
std::vector<LieGenerator> lie_algebra_basis(const FormSpec& f);

/// Exact check of the defining identity on all pairs of basis vectors.
bool preserves_form_infinitesimally(const FormSpec& f, const LieGenerator& x);

/// g^t G g == G for a rational (even) group element.
bool preserves_form(const FormSpec& f, const RationalMatrix& g);

/// Representatives of the component group: [I, diag(-1,1,...,1 | I)] for the
/// standard even form with m >= 1, [I] for m = 0 and for odd forms.
std::vector<RationalMatrix> component_representatives(const FormSpec& f);

/// diag(1,...,1 | -1,...,-1).
RationalMatrix parity_automorphism(SuperDim dim);

SuperMatrix to_supermatrix(const RingPtr& ring, SuperDim dim, Parity declared,
                           const RationalMatrix& values);

}  // namespace superfft
