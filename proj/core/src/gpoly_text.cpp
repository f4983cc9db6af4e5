#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "superfft/gpoly.hpp"

namespace superfft {

std::string to_string(const GPoly& p) {
  if (p.is_zero()) return "0";
  const RingSpec& ring = *p.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (sign(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      if (sign(a) < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    std::vector<std::string> factors;
    if (!(a == Rational(1)) || (m.even.empty() && m.odd == 0))
      factors.push_back(to_string(a));
    for (const auto& [v, e] : m.even) {
      std::string f = ring.even_name(v);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    uint64_t rest = m.odd;
    while (rest) {
      uint32_t v = static_cast<uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      factors.push_back(ring.odd_name(v));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  // ASCII '-' or the U+2212 minus sign
  bool eat_minus() {
    skip_ws();
    if (pos < s.size() && s[pos] == '-') {
      ++pos;
      return true;
    }
    if (pos + 3 <= s.size() && s.substr(pos, 3) == "\xe2\x88\x92") {
      pos += 3;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
  }
};

Rational parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected a number");
  std::string text(c.s.substr(start, c.pos - start));
  if (c.eat('/')) {
    size_t dstart = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == dstart) c.fail("expected a denominator");
    text += "/" + std::string(c.s.substr(dstart, c.pos - dstart));
  }
  return rational_from_string(text);
}

std::string parse_name(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.pos >= c.s.size() || !(std::isalpha(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
    c.fail("expected a variable name");
  while (c.pos < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
    ++c.pos;
  return std::string(c.s.substr(start, c.pos - start));
}

GPoly parse_term(const RingPtr& ring, Cursor& c) {
  GPoly term = GPoly::constant(ring, Rational(1));
  bool expect_factor = true;
  bool saw_any = false;
  while (expect_factor) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      term *= parse_number(c);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name = parse_name(c);
      GPoly v = GPoly::variable(ring, name);
      unsigned e = 1;
      if (c.eat('^')) {
        Rational n = parse_number(c);
        if (!(n.get_den() == 1) || sgn(n) < 0) c.fail("exponent must be a non-negative integer");
        e = static_cast<unsigned>(n.get_num().get_ui());
      }
      term *= pow(v, e);
    } else {
      c.fail("expected a coefficient or variable");
    }
    saw_any = true;
    expect_factor = c.eat('*');
  }
  if (!saw_any) c.fail("empty term");
  return term;
}

}  // namespace

GPoly parse_gpoly(const RingPtr& ring, std::string_view text) {
  Cursor c{text};
  GPoly result = GPoly::zero(ring);
  if (c.done()) c.fail("empty input");

  bool negative = c.eat_minus();
  while (true) {
    GPoly term = parse_term(ring, c);
    if (negative) term *= Rational(-1);
    result += term;
    if (c.done()) break;
    if (c.eat('+')) {
      negative = false;
    } else if (c.eat_minus()) {
      negative = true;
    } else {
      c.fail("expected '+' or '-'");
    }
  }
  return result;
}

}  // namespace superfft
