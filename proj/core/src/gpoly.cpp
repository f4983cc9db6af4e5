#include "superfft/gpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace superfft {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_ring(const RingPtr& ring) {
  if (!ring) fail("operation on a detached polynomial (no ring attached)");
}

// Exponent-vector comparison for graded lex with earlier variables ranked
// higher. Returns <0, 0, >0 like a three-way compare, a vs b.
int even_grlex_cmp(const std::vector<std::pair<uint32_t, uint32_t>>& a,
                   const std::vector<std::pair<uint32_t, uint32_t>>& b) {
  unsigned da = 0, db = 0;
  for (const auto& [v, e] : a) da += e;
  for (const auto& [v, e] : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) {
      // the one owning the earlier variable is lex-greater
      return a[i].first < b[j].first ? 1 : -1;
    }
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

}  // namespace

RingPtr RingSpec::make(std::vector<std::string> even_vars,
                       std::vector<std::string> odd_vars) {
  if (odd_vars.size() > kMaxOddVars)
    fail("ring supports at most 64 odd variables");
  std::unordered_set<std::string> seen;
  for (const auto& n : even_vars)
    if (n.empty() || !seen.insert(n).second) fail("duplicate or empty variable name: " + n);
  for (const auto& n : odd_vars)
    if (n.empty() || !seen.insert(n).second) fail("duplicate or empty variable name: " + n);
  return RingPtr(new RingSpec(std::move(even_vars), std::move(odd_vars)));
}

std::optional<VarId> RingSpec::find(std::string_view name) const {
  for (uint32_t i = 0; i < even_.size(); ++i)
    if (even_[i] == name) return VarId{Parity::Even, i};
  for (uint32_t i = 0; i < odd_.size(); ++i)
    if (odd_[i] == name) return VarId{Parity::Odd, i};
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

unsigned Monomial::even_degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : even) d += e;
  return d;
}

int Monomial::odd_count() const { return std::popcount(odd); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int ca = a.odd_count(), cb = b.odd_count();
  if (ca != cb) return ca < cb;
  if (a.odd != b.odd) return a.odd < b.odd;
  return even_grlex_cmp(a.even, b.even) > 0;  // leading term first
}

int merge_monomials(Monomial& a, const Monomial& b) {
  if (a.odd & b.odd) return 0;
  // Koszul sign: inversions between a's odd word (left) and b's (right).
  int inversions = 0;
  uint64_t rest = b.odd;
  while (rest) {
    uint32_t j = static_cast<uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    if (j + 1 < 64) inversions += std::popcount(a.odd >> (j + 1));
  }
  a.odd |= b.odd;

  if (!b.even.empty()) {
    std::vector<std::pair<uint32_t, uint32_t>> merged;
    merged.reserve(a.even.size() + b.even.size());
    size_t i = 0, j = 0;
    while (i < a.even.size() || j < b.even.size()) {
      if (j == b.even.size() || (i < a.even.size() && a.even[i].first < b.even[j].first)) {
        merged.push_back(a.even[i++]);
      } else if (i == a.even.size() || b.even[j].first < a.even[i].first) {
        merged.push_back(b.even[j++]);
      } else {
        merged.emplace_back(a.even[i].first, a.even[i].second + b.even[j].second);
        ++i, ++j;
      }
    }
    a.even = std::move(merged);
  }
  return (inversions & 1) ? -1 : 1;
}

GPoly GPoly::zero(RingPtr ring) {
  require_ring(ring);
  GPoly p;
  p.ring_ = std::move(ring);
  return p;
}

GPoly GPoly::constant(RingPtr ring, Rational value) {
  GPoly p = zero(std::move(ring));
  if (!superfft::is_zero(value)) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

GPoly GPoly::variable(RingPtr ring, std::string_view name) {
  require_ring(ring);
  auto id = ring->find(name);
  if (!id) fail("unknown variable: " + std::string(name));
  Monomial m;
  if (id->parity == Parity::Even)
    m.even.emplace_back(id->index, 1);
  else
    m.odd = uint64_t{1} << id->index;
  GPoly p = zero(std::move(ring));
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

GPoly GPoly::from_terms(RingPtr ring, TermMap terms) {
  GPoly p = zero(std::move(ring));
  for (auto& [m, c] : terms) {
    if (p.ring_->odd_count() < 64 && (m.odd >> p.ring_->odd_count()) != 0)
      fail("monomial references odd variables outside the ring");
    for (const auto& [v, e] : m.even)
      if (v >= p.ring_->even_count() || e == 0)
        fail("monomial references even variables outside the ring");
    if (!superfft::is_zero(c)) p.terms_.emplace(m, c);
  }
  return p;
}

ParityClass GPoly::parity_class() const {
  bool has_even = false, has_odd = false;
  for (const auto& [m, c] : terms_)
    (m.parity() == Parity::Even ? has_even : has_odd) = true;
  if (has_even && has_odd) return ParityClass::Mixed;
  if (has_odd) return ParityClass::Odd;
  return ParityClass::Even;
}

bool GPoly::is_homogeneous(Parity p) const {
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return false;
  return true;
}

GPoly GPoly::reduced_part() const {
  GPoly out = *this;
  std::erase_if(out.terms_, [](const auto& t) { return t.first.odd != 0; });
  return out;
}

std::optional<Rational> GPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{})
    return terms_.begin()->second;
  return std::nullopt;
}

void GPoly::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (superfft::is_zero(it->second)) terms_.erase(it);
  }
}

GPoly& GPoly::operator+=(const GPoly& rhs) {
  if (!same_ring(ring_, rhs.ring_)) fail("ring mismatch in addition");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GPoly& GPoly::operator-=(const GPoly& rhs) {
  if (!same_ring(ring_, rhs.ring_)) fail("ring mismatch in subtraction");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GPoly& GPoly::operator*=(const GPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

GPoly& GPoly::operator*=(const Rational& c) {
  if (superfft::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

GPoly operator+(GPoly a, const GPoly& b) {
  a += b;
  return a;
}

GPoly operator-(GPoly a, const GPoly& b) {
  a -= b;
  return a;
}

GPoly operator-(GPoly a) {
  a *= Rational(-1);
  return a;
}

GPoly operator*(const GPoly& a, const GPoly& b) {
  if (!same_ring(a.ring(), b.ring())) fail("ring mismatch in multiplication");
  GPoly::TermMap out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      int s = merge_monomials(m, mb);
      if (s == 0) continue;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      auto [it, inserted] = out.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  GPoly r = GPoly::zero(a.ring());
  r.terms_ = std::move(out);
  return r;
}

GPoly operator*(const Rational& c, GPoly p) {
  p *= c;
  return p;
}

GPoly pow(const GPoly& p, unsigned k) {
  GPoly acc = GPoly::constant(p.ring(), Rational(1));
  GPoly base = p;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

GPoly GPoly::substitute(const Bindings& bindings) const {
  require_ring(ring_);
  std::unordered_map<uint32_t, const GPoly*> even_map;
  std::unordered_map<uint32_t, const GPoly*> odd_map;
  for (const auto& [name, value] : bindings) {
    auto id = ring_->find(name);
    if (!id) fail("binding for unknown variable: " + name);
    if (!same_ring(ring_, value.ring())) fail("binding value lives in a different ring");
    ParityClass pc = value.parity_class();
    if (pc == ParityClass::Mixed)
      fail("binding for " + name + " is not homogeneous");
    if (!value.is_zero() && static_cast<uint8_t>(pc) != static_cast<uint8_t>(id->parity))
      fail("parity mismatch in binding for " + name);
    (id->parity == Parity::Even ? even_map : odd_map)[id->index] = &value;
  }

  GPoly result = GPoly::zero(ring_);
  for (const auto& [m, c] : terms_) {
    GPoly term = GPoly::constant(ring_, c);
    for (const auto& [v, e] : m.even) {
      auto it = even_map.find(v);
      if (it == even_map.end()) {
        Monomial factor;
        factor.even.emplace_back(v, e);
        GPoly::TermMap one;
        one.emplace(std::move(factor), Rational(1));
        term = term * GPoly::from_terms(ring_, std::move(one));
      } else {
        term = term * pow(*it->second, e);
      }
      if (term.is_zero()) break;
    }
    uint64_t rest = m.odd;
    while (rest && !term.is_zero()) {
      uint32_t v = static_cast<uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      auto it = odd_map.find(v);
      if (it == odd_map.end()) {
        Monomial factor;
        factor.odd = uint64_t{1} << v;
        GPoly::TermMap one;
        one.emplace(std::move(factor), Rational(1));
        term = term * GPoly::from_terms(ring_, std::move(one));
      } else {
        term = term * *it->second;
      }
    }
    result += term;
  }
  return result;
}

GPoly GPoly::coefficient_of_even(std::string_view var, unsigned exp) const {
  require_ring(ring_);
  auto id = ring_->find(var);
  if (!id || id->parity != Parity::Even) fail("not an even variable: " + std::string(var));
  GPoly out = GPoly::zero(ring_);
  for (const auto& [m, c] : terms_) {
    unsigned got = 0;
    Monomial stripped = m;
    for (size_t i = 0; i < stripped.even.size(); ++i) {
      if (stripped.even[i].first == id->index) {
        got = stripped.even[i].second;
        stripped.even.erase(stripped.even.begin() + static_cast<long>(i));
        break;
      }
    }
    if (got == exp) out.add_term(stripped, c);
  }
  return out;
}

GPoly GPoly::coefficient_of_odd(std::string_view var) const {
  require_ring(ring_);
  auto id = ring_->find(var);
  if (!id || id->parity != Parity::Odd) fail("not an odd variable: " + std::string(var));
  uint64_t bit = uint64_t{1} << id->index;
  GPoly out = GPoly::zero(ring_);
  for (const auto& [m, c] : terms_) {
    if (!(m.odd & bit)) continue;
    Monomial stripped = m;
    stripped.odd &= ~bit;
    // sign of moving theta to the front past the earlier odd variables
    int before = std::popcount(m.odd & (bit - 1));
    out.add_term(stripped, (before & 1) ? -c : c);
  }
  return out;
}

namespace {

// Single-divisor exact division in the even subring (odd-free monomials),
// graded lex. Returns false as soon as the leading term is not divisible.
bool even_subring_divide(GPoly::TermMap& f, const GPoly::TermMap& d0,
                         GPoly::TermMap& quotient_out) {
  const auto& [lead_m, lead_c] = *d0.begin();
  while (!f.empty()) {
    const auto& [fm, fc] = *f.begin();
    // divisibility of even exponents
    Monomial q;
    bool divisible = true;
    size_t i = 0;
    for (const auto& [v, e] : fm.even) {
      while (i < lead_m.even.size() && lead_m.even[i].first < v) {
        divisible = false;
        break;
      }
      if (!divisible) break;
      if (i < lead_m.even.size() && lead_m.even[i].first == v) {
        if (lead_m.even[i].second > e) {
          divisible = false;
          break;
        }
        if (e > lead_m.even[i].second) q.even.emplace_back(v, e - lead_m.even[i].second);
        ++i;
      } else {
        q.even.emplace_back(v, e);
      }
    }
    if (i < lead_m.even.size()) divisible = false;
    if (!divisible) return false;

    Rational qc = fc / lead_c;
    quotient_out.emplace(q, qc);
    // f -= qc * q * d0
    for (const auto& [dm, dc] : d0) {
      Monomial m = q;
      merge_monomials(m, dm);  // all even, sign +1
      Rational c = qc * dc;
      auto [it, inserted] = f.try_emplace(m, -c);
      if (!inserted) {
        it->second -= c;
        if (is_zero(it->second)) f.erase(it);
      }
    }
  }
  return true;
}

}  // namespace

std::optional<GPoly> divide_exact(const GPoly& p, const GPoly& d) {
  if (!same_ring(p.ring(), d.ring())) fail("ring mismatch in division");
  if (d.is_zero()) fail("division by zero");
  ParityClass pc = d.parity_class();
  if (pc != ParityClass::Even) fail("divisor must be homogeneous even");
  GPoly d0_poly = d.reduced_part();
  if (d0_poly.is_zero()) fail("divisor has zero reduced part");

  GPoly::TermMap d0;
  for (const auto& [m, c] : d0_poly.terms()) d0.emplace(m, c);

  GPoly q = GPoly::zero(p.ring());
  GPoly r = p;
  while (!r.is_zero()) {
    // lowest odd stratum of the remainder
    uint64_t stratum = r.terms().begin()->first.odd;
    GPoly::TermMap slice;
    for (const auto& [m, c] : r.terms()) {
      if (m.odd != stratum) break;  // map order groups strata contiguously? no: only within count
      slice.emplace(Monomial{m.even, 0}, c);
    }
    // map order sorts by (odd_count, mask) first, so the first run of equal
    // masks is exactly the lowest stratum
    GPoly::TermMap q_slice;
    if (!even_subring_divide(slice, d0, q_slice)) return std::nullopt;
    GPoly::TermMap q_terms;
    for (const auto& [m, c] : q_slice) {
      Monomial withodd = m;
      withodd.odd = stratum;
      q_terms.emplace(std::move(withodd), c);
    }
    GPoly q_part = GPoly::from_terms(p.ring(), std::move(q_terms));
    q += q_part;
    r -= q_part * d;
  }
  return q;
}

}  // namespace superfft
