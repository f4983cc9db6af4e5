#include <doctest.h>

#include "superfft/forms.hpp"
#include "superfft/random_elements.hpp"
#include "superfft/supermatrix.hpp"

using namespace superfft;

namespace {

RingPtr const_ring() { return RingSpec::make({}, {}); }

SuperMatrix reflection(const RingPtr& ring, SuperDim dim) {
  RationalMatrix r = RationalMatrix::identity(dim.total());
  r.at(0, 0) = -1;
  return SuperMatrix::from_rational(ring, dim, dim, Parity::Even, r);
}

}  // namespace

TEST_CASE("identity and involution products") {
  RingPtr ring = RingSpec::make({"x"}, {"a", "b"});
  SuperDim dim{2, 2};
  SuperMatrix id = SuperMatrix::identity(ring, dim);
  SuperMatrix a(ring, dim, dim, Parity::Even);
  a.set(0, 0, parse_gpoly(ring, "x"));
  a.set(1, 1, parse_gpoly(ring, "1 + a*b"));
  a.set(0, 2, parse_gpoly(ring, "a"));
  a.set(3, 1, parse_gpoly(ring, "b"));
  CHECK(id * a == a);
  CHECK(a * id == a);

  SuperMatrix r = reflection(ring, dim);
  CHECK(r * r == id);
}

TEST_CASE("product against entry-wise expansion on a Grassmann 1|1 pair") {
  RingPtr ring = RingSpec::make({"u", "v"}, {"p", "q", "r", "s"});
  SuperDim dim{1, 1};
  SuperMatrix a(ring, dim, dim, Parity::Even), b(ring, dim, dim, Parity::Even);
  a.set(0, 0, parse_gpoly(ring, "u"));
  a.set(0, 1, parse_gpoly(ring, "p"));
  a.set(1, 0, parse_gpoly(ring, "q"));
  a.set(1, 1, parse_gpoly(ring, "2"));
  b.set(0, 0, parse_gpoly(ring, "v"));
  b.set(0, 1, parse_gpoly(ring, "r"));
  b.set(1, 0, parse_gpoly(ring, "s"));
  b.set(1, 1, parse_gpoly(ring, "3 + p*q"));

  SuperMatrix c = a * b;
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t j = 0; j < 2; ++j)
      CHECK(c.at(i, j) == a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j));
  CHECK(c.declared_parity() == Parity::Even);
}

TEST_CASE("block pattern is enforced") {
  RingPtr ring = RingSpec::make({"x"}, {"a"});
  SuperDim dim{1, 1};
  SuperMatrix m(ring, dim, dim, Parity::Even);
  CHECK_THROWS_AS(m.set(0, 1, parse_gpoly(ring, "x")), std::invalid_argument);
  CHECK_THROWS_AS(m.set(0, 0, parse_gpoly(ring, "a")), std::invalid_argument);
  SuperMatrix modd(ring, dim, dim, Parity::Odd);
  CHECK_THROWS_AS(modd.set(0, 0, parse_gpoly(ring, "x")), std::invalid_argument);
  modd.set(0, 0, parse_gpoly(ring, "a"));  // odd matrix carries odd diagonal blocks
  CHECK(modd.at(0, 0) == parse_gpoly(ring, "a"));
}

TEST_CASE("apply: identity, reflection, parity validation") {
  RingPtr ring = RingSpec::make({"x", "x1", "x2"}, {"th", "th1", "th2"});
  SuperDim dim{1, 1};
  SuperVector v{dim, Parity::Even, {parse_gpoly(ring, "x"), parse_gpoly(ring, "th")}};
  SuperVector image = apply(SuperMatrix::identity(ring, dim), v);
  CHECK(image.coords == v.coords);

  SuperDim dim22{2, 2};
  SuperVector w{dim22,
                Parity::Even,
                {parse_gpoly(ring, "x1"), parse_gpoly(ring, "x2"), parse_gpoly(ring, "th1"),
                 parse_gpoly(ring, "th2")}};
  SuperVector rw = apply(reflection(ring, dim22), w);
  CHECK(rw.coords[0] == parse_gpoly(ring, "-x1"));
  CHECK(rw.coords[1] == parse_gpoly(ring, "x2"));
  CHECK(rw.coords[2] == parse_gpoly(ring, "th1"));
  CHECK(rw.coords[3] == parse_gpoly(ring, "th2"));

  SuperVector bad{dim, Parity::Even, {parse_gpoly(ring, "th"), parse_gpoly(ring, "th")}};
  CHECK_THROWS_AS(apply(SuperMatrix::identity(ring, dim), bad), std::invalid_argument);
}

TEST_CASE("a random group element preserves the form on a generic vector") {
  FormSpec f = FormSpec::standard_even(2, 1);
  RingPtr ring = RingSpec::make({"x1", "x2"}, {"th1", "th2"});
  std::vector<GPoly> v{parse_gpoly(ring, "x1"), parse_gpoly(ring, "x2"),
                       parse_gpoly(ring, "th1"), parse_gpoly(ring, "th2")};
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    RationalMatrix g = random_form_preserving(rng, f);
    SuperMatrix sg = to_supermatrix(ring, f.dim, Parity::Even, g);
    SuperVector gv = apply(sg, SuperVector{f.dim, Parity::Even, v});
    CHECK(evaluate_bilinear(f, gv.coords, gv.coords) == evaluate_bilinear(f, v, v));
  }
}

TEST_CASE("berezinian basics") {
  RingPtr ring = const_ring();
  SuperDim dim{2, 2};
  CHECK(berezinian(SuperMatrix::identity(ring, dim)) == GPoly::constant(ring, 1));
  CHECK(berezinian(reflection(ring, dim)) == GPoly::constant(ring, -1));

  RationalMatrix singular(4, 4);
  singular.at(0, 0) = 1;
  singular.at(1, 1) = 1;  // odd-odd block stays zero
  SuperMatrix s = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, singular);
  CHECK_THROWS_AS(berezinian(s), std::domain_error);
}

TEST_CASE("berezinian multiplicativity on rational pairs") {
  RingPtr ring = const_ring();
  Rng rng(31);
  for (auto [m, n] : std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}, {2, 2}, {1, 2}}) {
    SuperDim dim{m, n};
    for (int i = 0; i < 40; ++i) {
      RationalMatrix a(dim.total(), dim.total()), b(dim.total(), dim.total());
      RationalMatrix ae = random_invertible_rational(rng, m);
      RationalMatrix ao = random_invertible_rational(rng, n);
      RationalMatrix be = random_invertible_rational(rng, m);
      RationalMatrix bo = random_invertible_rational(rng, n);
      for (uint32_t r = 0; r < m; ++r)
        for (uint32_t c = 0; c < m; ++c) {
          a.at(r, c) = ae.at(r, c);
          b.at(r, c) = be.at(r, c);
        }
      for (uint32_t r = 0; r < n; ++r)
        for (uint32_t c = 0; c < n; ++c) {
          a.at(m + r, m + c) = ao.at(r, c);
          b.at(m + r, m + c) = bo.at(r, c);
        }
      SuperMatrix sa = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, a);
      SuperMatrix sb = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, b);
      CHECK(berezinian(sa * sb) == berezinian(sa) * berezinian(sb));
      CHECK(berezinian_via_even_block(sa) == berezinian(sa));
    }
  }
}

TEST_CASE("berezinian multiplicativity with odd entries") {
  RingPtr ring = RingSpec::make({}, {"p", "q", "r", "s"});
  SuperDim dim{1, 1};
  SuperMatrix a(ring, dim, dim, Parity::Even), b(ring, dim, dim, Parity::Even);
  a.set(0, 0, parse_gpoly(ring, "2"));
  a.set(0, 1, parse_gpoly(ring, "p"));
  a.set(1, 0, parse_gpoly(ring, "q"));
  a.set(1, 1, parse_gpoly(ring, "3"));
  b.set(0, 0, parse_gpoly(ring, "1"));
  b.set(0, 1, parse_gpoly(ring, "r"));
  b.set(1, 0, parse_gpoly(ring, "s"));
  b.set(1, 1, parse_gpoly(ring, "5 + p*q"));

  CHECK(berezinian(a) == parse_gpoly(ring, "2/3 - 1/9*p*q"));
  CHECK(berezinian(a * b) == berezinian(a) * berezinian(b));
  CHECK(berezinian_via_even_block(a) == berezinian(a));
}

TEST_CASE("berezinian of orthosymplectic elements is a sign") {
  RingPtr ring = const_ring();
  FormSpec f = FormSpec::standard_even(2, 1);
  Rng rng(37);
  for (int i = 0; i < 25; ++i) {
    RationalMatrix g = random_form_preserving(rng, f);
    SuperMatrix sg = to_supermatrix(ring, f.dim, Parity::Even, g);
    CHECK(berezinian(sg) == GPoly::constant(ring, 1));
    RationalMatrix refl = RationalMatrix::identity(f.dim.total());
    refl.at(0, 0) = -1;
    SuperMatrix sr = to_supermatrix(ring, f.dim, Parity::Even, refl * g);
    CHECK(berezinian(sr) == GPoly::constant(ring, -1));
  }
}
