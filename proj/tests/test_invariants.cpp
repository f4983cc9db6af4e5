#include <doctest.h>

#include <algorithm>

#include "superfft/invariants.hpp"
#include "superfft/random_elements.hpp"

using namespace superfft;

namespace {

// Independent combinatorial oracle for even-form matching tensors:
// reorder slots into pair order with the Koszul rule, multiply gram entries.
Rational combinatorial_value(const FormSpec& f, const Matching& p,
                             const std::vector<uint32_t>& tuple) {
  std::vector<uint32_t> word;  // slots in pair order
  Rational prod(1);
  for (auto [a, b] : p.pairs) {
    word.push_back(a);
    word.push_back(b);
    prod *= f.gram.at(tuple[a], tuple[b]);
    if (is_zero(prod)) return Rational(0);
  }
  auto odd_slot = [&](uint32_t s) { return f.dim.index_parity(tuple[s]) == Parity::Odd; };
  int inversions = 0;
  for (size_t i = 0; i < word.size(); ++i)
    for (size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j] && odd_slot(word[i]) && odd_slot(word[j])) ++inversions;
  int odd_slots = 0;
  for (uint32_t s = 0; s < tuple.size(); ++s)
    if (odd_slot(s)) ++odd_slots;
  int pair_sign = 0;
  for (auto [a, b] : p.pairs)
    if (odd_slot(a) && odd_slot(b)) ++pair_sign;
  int exponent = inversions + odd_slots * (odd_slots - 1) / 2 + pair_sign;
  return (exponent & 1) ? -prod : prod;
}

LieGenerator even_generator(const RationalMatrix& m) { return LieGenerator{Parity::Even, m}; }

}  // namespace

TEST_CASE("matching enumeration") {
  CHECK(enumerate_matchings(2).size() == 1);
  CHECK(enumerate_matchings(4).size() == 3);
  CHECK(enumerate_matchings(6).size() == 15);
  CHECK(enumerate_matchings(3).empty());
  CHECK(enumerate_matchings(0).size() == 1);  // the empty matching

  auto m4 = enumerate_matchings(4);
  CHECK(m4[0].pairs == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {2, 3}});
  CHECK(m4[1].pairs == std::vector<std::pair<uint32_t, uint32_t>>{{0, 2}, {1, 3}});
  CHECK(m4[2].pairs == std::vector<std::pair<uint32_t, uint32_t>>{{0, 3}, {1, 2}});
}

TEST_CASE("matching tensor value tables") {
  FormSpec even10 = FormSpec::standard_even(1, 0);
  TensorForm t10 = matching_tensor(even10, enumerate_matchings(2)[0]);
  CHECK(t10.at({0, 0}) == Rational(1));
  CHECK(t10.coeffs().size() == 1);

  FormSpec even01 = FormSpec::standard_even(0, 1);
  TensorForm t01 = matching_tensor(even01, enumerate_matchings(2)[0]);
  CHECK(t01.at({0, 1}) == Rational(-1));
  CHECK(t01.at({1, 0}) == Rational(1));
  CHECK(t01.coeffs().size() == 2);

  // crossing matching {(1,3),(2,4)} on 0|2-dimensional space
  Matching crossing{{{0, 2}, {1, 3}}};
  TensorForm tc = matching_tensor(even01, crossing);
  CHECK(tc.at({0, 0, 1, 1}) == Rational(-1));
  CHECK(tc.at({0, 1, 1, 0}) == Rational(1));
  CHECK(tc.at({1, 0, 0, 1}) == Rational(1));
  CHECK(tc.at({1, 1, 0, 0}) == Rational(-1));
  CHECK(tc.coeffs().size() == 4);
}

TEST_CASE("matching tensors against the combinatorial sign oracle") {
  for (FormSpec f : {FormSpec::standard_even(1, 1), FormSpec::standard_even(0, 2),
                     FormSpec::standard_even(2, 1)}) {
    for (const Matching& p : enumerate_matchings(4)) {
      TensorForm t = matching_tensor(f, p);
      for (const auto& tuple : enumerate_tuples(4, f.dim, Parity::Even))
        CHECK(t.at(tuple) == combinatorial_value(f, p, tuple));
    }
  }
}

TEST_CASE("dual action: identity and zero") {
  FormSpec f = FormSpec::standard_even(1, 1);
  TensorForm t = matching_tensor(f, enumerate_matchings(4)[1]);
  RationalMatrix eye = RationalMatrix::identity(3);
  TensorForm acted = lie_act_dual(even_generator(eye), t);
  for (const auto& [tuple, c] : t.coeffs()) CHECK(acted.at(tuple) == Rational(-4) * c);

  RationalMatrix zero(3, 3);
  CHECK(lie_act_dual(even_generator(zero), t).is_zero());
}

TEST_CASE("matching tensors are annihilated by the lie algebra and fixed by components") {
  struct Config {
    Group group;
    uint32_t m, n, N;
  };
  for (Config c : {Config{Group::OSp, 1, 1, 2}, Config{Group::OSp, 1, 1, 4},
                   Config{Group::OSp, 2, 1, 4}, Config{Group::OSp, 0, 2, 4},
                   Config{Group::Pe, 1, 1, 2}, Config{Group::Pe, 2, 2, 4}}) {
    FormSpec f = (c.group == Group::OSp) ? FormSpec::standard_even(c.m, c.n)
                                         : FormSpec::standard_odd(c.n);
    auto lie = lie_algebra_basis(f);
    auto comps = component_representatives(f);
    for (const Matching& p : enumerate_matchings(c.N)) {
      TensorForm t = matching_tensor(f, p);
      for (const auto& x : lie) CHECK(lie_act_dual(x, t).is_zero());
      for (const auto& g : comps) CHECK(group_act(g, t) == t);
    }
  }
}

TEST_CASE("koszul equivariance under slot permutations") {
  Rng rng(17);
  for (FormSpec f : {FormSpec::standard_even(1, 1), FormSpec::standard_even(0, 2)}) {
    for (uint32_t arity : {4u, 6u}) {
      auto matchings = enumerate_matchings(arity);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<uint32_t> sigma(arity);
        for (uint32_t i = 0; i < arity; ++i) sigma[i] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const Matching& p = matchings[trial % matchings.size()];
        CHECK(permute_slots(sigma, matching_tensor(f, p)) ==
              matching_tensor(f, relabel(sigma, p)));
      }
    }
  }
  // odd forms: the B factors anticommute, so equivariance holds up to the
  // sign of the induced pair reordering
  FormSpec podd = FormSpec::standard_odd(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<uint32_t> sigma{0, 1, 2, 3};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    for (const Matching& p : enumerate_matchings(4)) {
      TensorForm expected = matching_tensor(podd, relabel(sigma, p));
      if (relabel_sign(sigma, p) < 0) {
        TensorForm negated(expected.arity(), expected.dim(), expected.parity());
        for (const auto& [tuple, c] : expected.coeffs()) negated.set(tuple, -c);
        expected = negated;
      }
      CHECK(permute_slots(sigma, matching_tensor(podd, p)) == expected);
    }
  }
}

TEST_CASE("invariant subspace: osp(1|2) at two slots") {
  FormSpec f = FormSpec::standard_even(1, 1);
  auto lie = lie_algebra_basis(f);
  auto comps = component_representatives(f);
  InvariantBasis inv = invariant_subspace(lie, comps, 2, f.dim, Parity::Even);
  REQUIRE(inv.dimension() == 1);
  // spanned by the matching tensor: proportional coefficient tables
  TensorForm b = matching_tensor(f, enumerate_matchings(2)[0]);
  const TensorForm& s = inv.basis[0];
  Rational ratio = b.coeffs().begin()->second / s.at(b.coeffs().begin()->first);
  for (const auto& [tuple, c] : b.coeffs()) CHECK(s.at(tuple) * ratio == c);
  CHECK(b.coeffs().size() == s.coeffs().size());
}

TEST_CASE("invariant subspace vanishes for odd slot counts") {
  FormSpec f = FormSpec::standard_even(1, 1);
  auto lie = lie_algebra_basis(f);
  auto comps = component_representatives(f);
  for (Parity p : {Parity::Even, Parity::Odd})
    CHECK(invariant_subspace(lie, comps, 3, f.dim, p).dimension() == 0);
}

TEST_CASE("parity-1 stratum carries no orthosymplectic invariants") {
  FormSpec f = FormSpec::standard_even(1, 1);
  auto lie = lie_algebra_basis(f);
  auto comps = component_representatives(f);
  CHECK(invariant_subspace(lie, comps, 2, f.dim, Parity::Odd).dimension() == 0);
  CHECK(invariant_subspace(lie, comps, 4, f.dim, Parity::Odd).dimension() == 0);
}

TEST_CASE("periplectic strata at two slots") {
  FormSpec f = FormSpec::standard_odd(1);
  auto lie = lie_algebra_basis(f);
  std::vector<RationalMatrix> comps = component_representatives(f);
  InvariantBasis odd_stratum = invariant_subspace(lie, comps, 2, f.dim, Parity::Odd);
  CHECK(odd_stratum.dimension() == 1);
  TensorForm b = matching_tensor(f, enumerate_matchings(2)[0]);
  CHECK(odd_stratum.basis[0].at({0, 1}) == odd_stratum.basis[0].at({1, 0}));
  CHECK(b.at({0, 1}) == Rational(1));
  CHECK(b.at({1, 0}) == Rational(1));

  InvariantBasis even_stratum = invariant_subspace(lie, comps, 2, f.dim, Parity::Even);
  CHECK(even_stratum.dimension() == 0);
}

TEST_CASE("solver output is canonical, invariant and idempotent") {
  FormSpec f = FormSpec::standard_even(1, 1);
  auto lie = lie_algebra_basis(f);
  auto comps = component_representatives(f);
  InvariantBasis inv = invariant_subspace(lie, comps, 4, f.dim, Parity::Even);
  for (const TensorForm& t : inv.basis) {
    for (const auto& x : lie) CHECK(lie_act_dual(x, t).is_zero());
    for (const auto& g : comps) CHECK(group_act(g, t) == t);
  }
  auto columns = enumerate_tuples(4, f.dim, Parity::Even);
  std::map<std::vector<uint32_t>, uint32_t> index;
  for (uint32_t i = 0; i < columns.size(); ++i) index.emplace(columns[i], i);
  RationalMatrix rows(inv.dimension(), columns.size());
  for (size_t r = 0; r < inv.dimension(); ++r)
    for (const auto& [tuple, c] : inv.basis[r].coeffs()) rows.at(r, index.at(tuple)) = c;
  CHECK(row_space_basis(rows) == rows);

  InvariantBasis again = invariant_subspace(lie, comps, 4, f.dim, Parity::Even);
  CHECK(again.basis == inv.basis);
}

TEST_CASE("spanning reports") {
  FftReport r1 = fft_spanning_report(Group::OSp, 1, 1, 2);
  CHECK(r1.pass);
  CHECK(r1.rank == 1);
  CHECK(r1.invariant_dim == 1);

  FftReport r2 = fft_spanning_report(Group::OSp, 2, 1, 4);
  CHECK(r2.pass);
  CHECK(r2.n_matchings == 3);

  FftReport r3 = fft_spanning_report(Group::Pe, 0, 2, 4);
  CHECK(r3.pass);

  FftReport odd_n = fft_spanning_report(Group::OSp, 1, 1, 3);
  CHECK(odd_n.pass);
  CHECK(odd_n.invariant_dim == 0);
  CHECK(odd_n.n_matchings == 0);
}

TEST_CASE("cell guard") {
  CHECK_THROWS_AS(fft_spanning_report(Group::OSp, 2, 2, 8, 1000), GuardExceeded);
  CHECK_THROWS_AS(invariant_subspace({}, {}, 8, SuperDim{3, 3}, Parity::Even, 1000),
                  GuardExceeded);
}
