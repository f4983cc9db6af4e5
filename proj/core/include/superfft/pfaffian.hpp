#pragma once

// Sergeev's super Pfaffian on generic vectors: the polynomial square root of
// det(B(v_i, v_j))^{2n+1}, certified by exact division, squared back, and
// checked for invariance under the Lie superalgebra plus the reflection.

#include <cstdint>
#include <optional>
#include <vector>

#include "superfft/forms.hpp"
#include "superfft/gpoly.hpp"

namespace superfft {

/// Generic vectors v_1,...,v_m of a super space of dimension m|2n as points
/// with coordinates x{i}_{a} (even) and y{i}_{b} (odd), plus reserved
/// parameter variables t (even) and tau (odd) for directional derivatives.
///
/// The bilinear form is the standard even form normalized so that
/// B(v, v) = sum_a x_a^2 + sum_b y_b y_{b+n} on a single generic vector
/// (odd hyperbolic entries -1/2, +1/2).
struct GenericConfig {
  uint32_t m = 0;
  uint32_t n = 0;
  RingPtr ring;
  FormSpec form;

  static GenericConfig make(uint32_t m, uint32_t n);

  std::string even_coord_name(uint32_t slot, uint32_t a) const;
  std::string odd_coord_name(uint32_t slot, uint32_t b) const;
  /// Coordinates of v_slot as ring variables, slot in [0, m).
  std::vector<GPoly> point(uint32_t slot) const;
};

/// D = det(B(v_i, v_j)), an even polynomial; fixed permutation-expansion
/// order.
GPoly gram_det(const GenericConfig& cfg);

/// vol = det of the m x m matrix of even coordinates; vol^2 equals the
/// reduced part of D exactly.
GPoly vol_form(const GenericConfig& cfg);

/// Closed form for m = 1:
/// sum_{k=0}^{n} C(n+1/2, k) x^{2n+1-2k} (sum_i y_i y_{i+n})^k.
GPoly pf_m1_closed(const GenericConfig& cfg);

struct PfaffianCertificate {
  uint32_t m = 0;
  uint32_t n = 0;
  GPoly delta_pow;       // the computed Delta^{2n+1} (valid when is_polynomial)
  bool is_polynomial = false;
  bool square_ok = false;
  bool lie_invariant = false;
  Rational reflection_sign = 0;  // -1 expected; 0 when not proportional
  std::optional<bool> m1_closed_form_ok;
};

/// Builds Delta^{2n+1} by the localized binomial series
/// vol^{2n+1} * (D/red(D))^{(2n+1)/2} and clears the denominator by exact
/// division; is_polynomial records whether the division succeeded and
/// square_ok whether (Delta^{2n+1})^2 = D^{2n+1} holds exactly. Failures are
/// recorded flags, not errors.
PfaffianCertificate super_pfaffian(const GenericConfig& cfg);

/// Checks D * D1 = B(w, w) exactly, where D1 is the leading (m-1)-minor of
/// the Gram matrix and w = D1*v_m - (projection of v_m onto v_1..v_{m-1},
/// cleared of its D1 denominator). Requires m >= 2.
bool verify_gram_factorization(const GenericConfig& cfg);

/// Substitutes v_i <- v_i + t*Xv_i (even X) or v_i <- v_i + tau*Xv_i (odd X)
/// for every Lie algebra basis element X and requires the parameter
/// coefficient to vanish; then applies the reflection diag(-1,1,...,1|I) and
/// records the sign it produces (expected -1). Requires cert.is_polynomial.
void verify_sosp_invariance(const GenericConfig& cfg, PfaffianCertificate& cert);

}  // namespace superfft
