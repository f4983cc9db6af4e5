#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace superfft {

// All coefficient arithmetic in this project is exact. GMP rationals keep
// every identity check bit-reproducible.
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses "a", "-a" or "a/b" (b > 0 after canonicalization). Throws
/// std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view s);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& r);

/// Exact square root when r is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

bool is_perfect_square(const Rational& r);

/// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!
Rational binomial(const Rational& alpha, unsigned k);

}  // namespace superfft
