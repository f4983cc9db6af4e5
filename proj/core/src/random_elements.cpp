#include "superfft/random_elements.hpp"

#include <stdexcept>

namespace superfft {

Rational random_rational(Rng& rng, long max_abs_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational random_nonzero_rational(Rng& rng, long max_abs_num, long max_den) {
  for (;;) {
    Rational r = random_rational(rng, max_abs_num, max_den);
    if (!is_zero(r)) return r;
  }
}

GPoly random_gpoly(Rng& rng, const RingPtr& ring, unsigned max_terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> n_terms(0, max_terms);
  GPoly p = GPoly::zero(ring);
  unsigned terms = n_terms(rng);
  for (unsigned t = 0; t < terms; ++t) {
    GPoly term = GPoly::constant(ring, random_nonzero_rational(rng));
    for (uint32_t v = 0; v < ring->even_count(); ++v) {
      std::uniform_int_distribution<unsigned> e(0, max_exp);
      unsigned exp = e(rng);
      if (exp) term *= pow(GPoly::variable(ring, ring->even_name(v)), exp);
    }
    for (uint32_t v = 0; v < ring->odd_count(); ++v) {
      std::uniform_int_distribution<int> coin(0, 1);
      if (coin(rng)) term *= GPoly::variable(ring, ring->odd_name(v));
    }
    p += term;
  }
  return p;
}

GPoly random_homogeneous_gpoly(Rng& rng, const RingPtr& ring, Parity parity,
                               unsigned max_terms, unsigned max_exp) {
  GPoly::TermMap keep;
  GPoly p = random_gpoly(rng, ring, max_terms, max_exp);
  for (const auto& [m, c] : p.terms())
    if (m.parity() == parity) keep.emplace(m, c);
  return GPoly::from_terms(ring, std::move(keep));
}

RationalMatrix random_invertible_rational(Rng& rng, size_t n) {
  RationalMatrix m = RationalMatrix::identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (size_t step = 0; step < 3 * n + 2; ++step) {
    size_t i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j
        if (i == j) break;
        Rational c = random_rational(rng, 3, 2);
        for (size_t k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
        break;
      }
      case 1: {  // row_i *= nonzero c
        Rational c = random_nonzero_rational(rng, 3, 2);
        for (size_t k = 0; k < n; ++k) m.at(i, k) *= c;
        break;
      }
      default: {  // swap
        if (i == j) break;
        for (size_t k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
        break;
      }
    }
  }
  return m;
}

RationalMatrix random_form_preserving(Rng& rng, const FormSpec& f) {
  std::vector<LieGenerator> basis = lie_algebra_basis(f);
  size_t t = f.dim.total();
  for (int attempt = 0; attempt < 32; ++attempt) {
    RationalMatrix x(t, t);
    for (const LieGenerator& gen : basis) {
      if (gen.parity != Parity::Even) continue;  // rational points need even directions
      Rational c = random_rational(rng, 2, 3);
      if (is_zero(c)) continue;
      for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) x.at(i, j) += c * gen.matrix.at(i, j);
    }
    RationalMatrix eye = RationalMatrix::identity(t);
    RationalMatrix denom = eye - x;
    if (!denom.is_invertible()) continue;
    RationalMatrix g = denom.inverse() * (eye + x);
    if (!preserves_form(f, g)) throw std::logic_error("cayley transform lost the form");
    return g;
  }
  throw std::runtime_error("failed to sample an invertible cayley denominator");
}

}  // namespace superfft
