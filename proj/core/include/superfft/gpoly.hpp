#pragma once

// Exact supercommutative polynomial arithmetic over the rationals.
//
// A ring is freely generated by named commuting (even) variables and
// anticommuting (odd) variables; odd variables square to zero. Elements are
// kept in a canonical normal form: in every monomial the odd variables are
// stored as a strictly ascending set (reordering signs are absorbed into the
// coefficient) and zero coefficients are never stored, so equality is a
// structural comparison. All values are immutable after construction and all
// operations are pure, so concurrent reads are safe.
//
// Canonical text format: terms joined by " + " / " - ", coefficient printed
// as "a/b" (omitted when 1), factors joined by "*", even exponents as "^k",
// e.g. "x^2 + 3/2*x*y1*y2". Variables print in ring order, even before odd.
// parse_gpoly accepts exactly this grammar (print -> parse is the identity).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superfft/rational.hpp"

namespace superfft {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b)) & 1);
}

/// Homogeneity classification of a polynomial: Even/Odd when every monomial
/// has that parity (zero counts as Even), Mixed otherwise.
enum class ParityClass : uint8_t { Even = 0, Odd = 1, Mixed = 2 };

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

struct VarId {
  Parity parity;
  uint32_t index;  // position within its parity class
  bool operator==(const VarId&) const = default;
};

/// Generator names and their fixed order. The order defines the canonical
/// monomial normal form of every polynomial over the ring.
class RingSpec {
 public:
  static constexpr size_t kMaxOddVars = 64;  // odd sets are 64-bit masks

  static RingPtr make(std::vector<std::string> even_vars,
                      std::vector<std::string> odd_vars);

  size_t even_count() const { return even_.size(); }
  size_t odd_count() const { return odd_.size(); }
  const std::string& even_name(uint32_t i) const { return even_.at(i); }
  const std::string& odd_name(uint32_t i) const { return odd_.at(i); }
  std::optional<VarId> find(std::string_view name) const;

  bool same_as(const RingSpec& other) const {
    return this == &other || (even_ == other.even_ && odd_ == other.odd_);
  }

 private:
  RingSpec(std::vector<std::string> even_vars, std::vector<std::string> odd_vars)
      : even_(std::move(even_vars)), odd_(std::move(odd_vars)) {}

  std::vector<std::string> even_;
  std::vector<std::string> odd_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// One monomial in canonical form: sparse even exponents sorted by variable
/// index, odd variables as a bitmask (ascending order is implicit).
struct Monomial {
  std::vector<std::pair<uint32_t, uint32_t>> even;  // (var, exp), exp > 0
  uint64_t odd = 0;

  unsigned even_degree() const;
  int odd_count() const;
  unsigned total_degree() const { return even_degree() + odd_count(); }
  Parity parity() const { return Parity(odd_count() & 1); }
  bool operator==(const Monomial&) const = default;
};

/// Term order: odd strata ascending by (count, mask), then graded
/// lexicographic descending on the even part, so iteration starts at the
/// reduced part with its leading term first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// a <- a*b in the even part; returns the Koszul sign of merging the odd
/// sets, or 0 when they overlap (theta^2 = 0).
int merge_monomials(Monomial& a, const Monomial& b);

class GPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;
  using Bindings = std::map<std::string, GPoly>;

  GPoly() = default;  // detached zero; attach a ring before use
  static GPoly zero(RingPtr ring);
  static GPoly constant(RingPtr ring, Rational value);
  static GPoly variable(RingPtr ring, std::string_view name);
  static GPoly from_terms(RingPtr ring, TermMap terms);  // normalizes

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  ParityClass parity_class() const;
  bool is_homogeneous(Parity p) const;  // zero counts as homogeneous

  /// Image under setting every odd variable to zero.
  GPoly reduced_part() const;
  bool is_nilpotent() const { return reduced_part().is_zero(); }

  /// Constant term when the polynomial is a constant, nullopt otherwise.
  std::optional<Rational> as_constant() const;

  /// Simultaneous substitution; unbound variables map to themselves. Each
  /// binding must be homogeneous of the variable's parity (zero is fine;
  /// nilpotent even values are fine for even variables).
  GPoly substitute(const Bindings& bindings) const;

  /// Coefficient of var^exp: terms with that exact exponent, with the factor
  /// removed.
  GPoly coefficient_of_even(std::string_view var, unsigned exp) const;

  /// Writes p = p0 + theta*p1 with theta factored to the front and returns p1.
  GPoly coefficient_of_odd(std::string_view var) const;

  GPoly& operator+=(const GPoly& rhs);
  GPoly& operator-=(const GPoly& rhs);
  GPoly& operator*=(const GPoly& rhs);
  GPoly& operator*=(const Rational& c);

  friend bool operator==(const GPoly& a, const GPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend GPoly operator*(const GPoly& a, const GPoly& b);

 private:
  void add_term(const Monomial& m, const Rational& c);

  RingPtr ring_;
  TermMap terms_;
};

GPoly operator+(GPoly a, const GPoly& b);
GPoly operator-(GPoly a, const GPoly& b);
GPoly operator-(GPoly a);
GPoly operator*(const GPoly& a, const GPoly& b);
GPoly operator*(const Rational& c, GPoly p);
GPoly pow(const GPoly& p, unsigned k);

/// Exact division. Requires d nonzero, homogeneous even, with nonzero
/// reduced part; returns q with q*d = p, or nullopt when p is not divisible.
/// Proceeds stratum by stratum in the odd filtration, with graded-lex
/// single-divisor division in the even subring.
std::optional<GPoly> divide_exact(const GPoly& p, const GPoly& d);

std::string to_string(const GPoly& p);
GPoly parse_gpoly(const RingPtr& ring, std::string_view text);

}  // namespace superfft
