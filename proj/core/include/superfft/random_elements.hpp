#pragma once

// Deterministic random algebra elements for the self-check and property
// suites. Everything is driven by a seeded engine, never by entropy, so any
// failure reproduces from the seed alone.

#include <random>

#include "superfft/forms.hpp"
#include "superfft/gpoly.hpp"
#include "superfft/rational_matrix.hpp"

namespace superfft {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long max_abs_num = 6, long max_den = 4);
Rational random_nonzero_rational(Rng& rng, long max_abs_num = 6, long max_den = 4);

GPoly random_gpoly(Rng& rng, const RingPtr& ring, unsigned max_terms = 5,
                   unsigned max_exp = 3);
GPoly random_homogeneous_gpoly(Rng& rng, const RingPtr& ring, Parity parity,
                               unsigned max_terms = 5, unsigned max_exp = 3);

/// Product of random elementary row operations on the identity: always
/// invertible, entries stay small.
RationalMatrix random_invertible_rational(Rng& rng, size_t n);

/// Exact rational point of the identity component of the group preserving f:
/// the Cayley transform (I - X)^-1 (I + X) of a random even Lie combination.
RationalMatrix random_form_preserving(Rng& rng, const FormSpec& f);

}  // namespace superfft
