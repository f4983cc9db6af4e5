#include "superfft/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superfft {

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational literal: " + std::string(s));
  }
  Rational r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + std::string(s));
  if (is_zero(Rational(r.get_den())))
    throw std::invalid_argument("zero denominator: " + std::string(s));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational root(sn, sd);
  root.canonicalize();
  return root;
}

bool is_perfect_square(const Rational& r) { return exact_sqrt(r).has_value(); }

Rational binomial(const Rational& alpha, unsigned k) {
  Rational acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= alpha - Rational(static_cast<long>(i));
    acc /= Rational(static_cast<long>(i) + 1);
  }
  return acc;
}

}  // namespace superfft
