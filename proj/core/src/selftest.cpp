#include "superfft/selftest.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "superfft/forms.hpp"
#include "superfft/invariants.hpp"
#include "superfft/pfaffian.hpp"
#include "superfft/random_elements.hpp"
#include "superfft/supermatrix.hpp"

namespace superfft {

namespace {

// ---------------------------------------------------------------------------
// Independent reference multiplier: odd factors as explicit words, the sign
// counted by bubble-sorting the concatenation. Shares nothing with the
// GPoly multiplication path.

struct RefTerm {
  Rational coeff;
  std::map<uint32_t, uint32_t> even;
  std::vector<uint32_t> odd_word;
};

std::vector<RefTerm> ref_of(const GPoly& p) {
  std::vector<RefTerm> out;
  for (const auto& [m, c] : p.terms()) {
    RefTerm t;
    t.coeff = c;
    for (const auto& [v, e] : m.even) t.even[v] = e;
    uint64_t rest = m.odd;
    while (rest) {
      t.odd_word.push_back(static_cast<uint32_t>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// canonical key after sorting; nullopt when an odd variable repeats
std::optional<std::pair<std::vector<uint32_t>, int>> sort_word(std::vector<uint32_t> word,
                                                               bool faulty_sign) {
  int swaps = 0;
  for (size_t i = 0; i + 1 < word.size(); ++i)
    for (size_t j = 0; j + 1 < word.size() - i; ++j)
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        ++swaps;
      }
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return std::nullopt;
  int sign = (swaps % 2 == 0) ? 1 : -1;
  if (faulty_sign) sign = 1;  // deliberately broken Koszul rule
  return std::make_pair(std::move(word), sign);
}

GPoly ref_multiply(const GPoly& a, const GPoly& b, bool faulty_sign) {
  using Key = std::pair<std::vector<std::pair<uint32_t, uint32_t>>, std::vector<uint32_t>>;
  std::map<Key, Rational> acc;
  for (const RefTerm& ta : ref_of(a)) {
    for (const RefTerm& tb : ref_of(b)) {
      std::vector<uint32_t> word = ta.odd_word;
      word.insert(word.end(), tb.odd_word.begin(), tb.odd_word.end());
      auto sorted = sort_word(std::move(word), faulty_sign);
      if (!sorted) continue;
      std::map<uint32_t, uint32_t> even = ta.even;
      for (const auto& [v, e] : tb.even) even[v] += e;
      Key key{{even.begin(), even.end()}, sorted->first};
      acc[key] += ta.coeff * tb.coeff * sorted->second;
    }
  }
  GPoly::TermMap terms;
  for (const auto& [key, c] : acc) {
    if (is_zero(c)) continue;
    Monomial m;
    m.even = key.first;
    for (uint32_t v : key.second) m.odd |= uint64_t{1} << v;
    terms.emplace(std::move(m), c);
  }
  return GPoly::from_terms(a.ring(), std::move(terms));
}

// ---------------------------------------------------------------------------

struct Context {
  const SelftestOptions& options;
  Rng rng;
  std::optional<SelftestFailure> failure;

  bool want(const std::string& suite) const {
    return !failure && (options.only.empty() || options.only == suite);
  }
  void record(std::string suite, std::string check, std::string message) {
    if (!failure) failure = SelftestFailure{std::move(suite), std::move(check), std::move(message)};
  }
};

RingPtr selftest_ring() {
  return RingSpec::make({"x", "y", "z"}, {"th1", "th2", "th3", "th4"});
}

void suite_grassmann(Context& ctx) {
  const std::string suite = "grassmann";
  RingPtr ring = selftest_ring();
  for (unsigned i = 0; i < ctx.options.cases && !ctx.failure; ++i) {
    GPoly a = random_gpoly(ctx.rng, ring, 4, 2);
    GPoly b = random_gpoly(ctx.rng, ring, 4, 2);
    GPoly c = random_gpoly(ctx.rng, ring, 3, 2);

    if (!(a * b == ref_multiply(a, b, ctx.options.inject_sign_fault))) {
      ctx.record(suite, "reference_multiplier",
                 "product disagrees with the independent reference on case " + std::to_string(i));
      return;
    }
    if (!((a * b) * c == a * (b * c))) {
      ctx.record(suite, "associativity", "case " + std::to_string(i));
      return;
    }
    if (!(a * (b + c) == a * b + a * c)) {
      ctx.record(suite, "distributivity", "case " + std::to_string(i));
      return;
    }
    for (Parity pa : {Parity::Even, Parity::Odd})
      for (Parity pb : {Parity::Even, Parity::Odd}) {
        GPoly ha = random_homogeneous_gpoly(ctx.rng, ring, pa, 4, 2);
        GPoly hb = random_homogeneous_gpoly(ctx.rng, ring, pb, 4, 2);
        GPoly rhs = hb * ha;
        if (pa == Parity::Odd && pb == Parity::Odd) rhs = -rhs;
        if (!(ha * hb == rhs)) {
          ctx.record(suite, "supercommutativity", "case " + std::to_string(i));
          return;
        }
      }
    GPoly odd = random_homogeneous_gpoly(ctx.rng, ring, Parity::Odd, 5, 2);
    if (!(odd * odd).is_zero()) {
      ctx.record(suite, "odd_square", "case " + std::to_string(i));
      return;
    }
    GPoly nil = random_gpoly(ctx.rng, ring, 4, 1) - GPoly::zero(ring);
    nil = nil - nil.reduced_part();
    if (!pow(nil, static_cast<unsigned>(ring->odd_count()) + 1).is_zero()) {
      ctx.record(suite, "nilpotency_bound", "case " + std::to_string(i));
      return;
    }
    GPoly d = random_homogeneous_gpoly(ctx.rng, ring, Parity::Even, 3, 2);
    if (d.reduced_part().is_zero())
      d += GPoly::constant(ring, random_nonzero_rational(ctx.rng));
    GPoly q = random_gpoly(ctx.rng, ring, 3, 2);
    auto back = divide_exact(q * d, d);
    if (!back || !(*back == q)) {
      ctx.record(suite, "division_roundtrip", "case " + std::to_string(i));
      return;
    }
    GPoly printed = random_gpoly(ctx.rng, ring, 5, 3);
    if (!(parse_gpoly(ring, to_string(printed)) == printed)) {
      ctx.record(suite, "text_roundtrip", to_string(printed));
      return;
    }
  }
}

void suite_superlinalg(Context& ctx) {
  const std::string suite = "superlinalg";
  RingPtr ring = RingSpec::make({}, {});
  struct Shape {
    uint32_t m, n;
  };
  for (Shape shape : {Shape{1, 1}, Shape{2, 2}, Shape{1, 2}}) {
    SuperDim dim{shape.m, shape.n};
    for (unsigned i = 0; i < ctx.options.cases / 4 + 8 && !ctx.failure; ++i) {
      RationalMatrix ae = random_invertible_rational(ctx.rng, shape.m);
      RationalMatrix ao = random_invertible_rational(ctx.rng, shape.n);
      RationalMatrix be = random_invertible_rational(ctx.rng, shape.m);
      RationalMatrix bo = random_invertible_rational(ctx.rng, shape.n);
      RationalMatrix a(dim.total(), dim.total()), b(dim.total(), dim.total());
      for (uint32_t r = 0; r < shape.m; ++r)
        for (uint32_t c = 0; c < shape.m; ++c) {
          a.at(r, c) = ae.at(r, c);
          b.at(r, c) = be.at(r, c);
        }
      for (uint32_t r = 0; r < shape.n; ++r)
        for (uint32_t c = 0; c < shape.n; ++c) {
          a.at(shape.m + r, shape.m + c) = ao.at(r, c);
          b.at(shape.m + r, shape.m + c) = bo.at(r, c);
        }
      SuperMatrix sa = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, a);
      SuperMatrix sb = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, b);
      GPoly lhs = berezinian(sa * sb);
      GPoly rhs = berezinian(sa) * berezinian(sb);
      if (!(lhs == rhs)) {
        ctx.record(suite, "berezinian_multiplicativity",
                   "dims " + std::to_string(shape.m) + "|" + std::to_string(shape.n));
        return;
      }
    }
  }
  FormSpec f = FormSpec::standard_even(2, 1);
  for (unsigned i = 0; i < 16 && !ctx.failure; ++i) {
    RationalMatrix g = random_form_preserving(ctx.rng, f);
    SuperMatrix sg = SuperMatrix::from_rational(ring, f.dim, f.dim, Parity::Even, g);
    GPoly ber = berezinian(sg);
    auto val = ber.as_constant();
    if (!val || !(*val == Rational(1))) {
      ctx.record(suite, "identity_component_berezinian", "expected +1");
      return;
    }
  }
}

void suite_forms(Context& ctx) {
  const std::string suite = "forms";
  for (unsigned i = 0; i < ctx.options.cases / 8 + 4 && !ctx.failure; ++i) {
    FormSpec base = FormSpec::standard_even(2, 1);
    // congruence by a random block-diagonal invertible T
    RationalMatrix te = random_invertible_rational(ctx.rng, 2);
    RationalMatrix to = random_invertible_rational(ctx.rng, 2);
    RationalMatrix t(4, 4);
    for (uint32_t r = 0; r < 2; ++r)
      for (uint32_t c = 0; c < 2; ++c) {
        t.at(r, c) = te.at(r, c);
        t.at(2 + r, 2 + c) = to.at(r, c);
      }
    FormSpec f = base;
    f.gram = t.transposed() * base.gram * t;
    StandardizeResult res = standardize(f);
    if (res.ok) {
      RationalMatrix conj = res.basis_change.transposed() * f.gram * res.basis_change;
      if (!(conj == res.standard.gram)) {
        ctx.record(suite, "standardize_roundtrip", "case " + std::to_string(i));
        return;
      }
    } else if (is_perfect_square(res.obstruction)) {
      ctx.record(suite, "standardize_obstruction", "reported a square as an obstruction");
      return;
    }
  }
  for (auto [m, n] : std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}, {2, 1}, {0, 2}}) {
    FormSpec f = FormSpec::standard_even(m, n);
    for (const LieGenerator& x : lie_algebra_basis(f))
      if (!preserves_form_infinitesimally(f, x)) {
        ctx.record(suite, "lie_identity", "osp generator failed");
        return;
      }
    if (!preserves_form(f, parity_automorphism(f.dim))) {
      ctx.record(suite, "parity_automorphism", "not preserved");
      return;
    }
    RationalMatrix minus = RationalMatrix::identity(f.dim.total());
    for (uint32_t i = 0; i < f.dim.total(); ++i) minus.at(i, i) = -1;
    if (!preserves_form(f, minus)) {
      ctx.record(suite, "minus_identity", "not preserved");
      return;
    }
  }
  FormSpec podd = FormSpec::standard_odd(2);
  for (const LieGenerator& x : lie_algebra_basis(podd))
    if (!preserves_form_infinitesimally(podd, x)) {
      ctx.record(suite, "lie_identity", "periplectic generator failed");
      return;
    }
}

void suite_invariants(Context& ctx) {
  const std::string suite = "invariants";
  FftReport r = fft_spanning_report(Group::OSp, 1, 1, 2);
  if (!r.pass || r.invariant_dim != 1) {
    ctx.record(suite, "osp_1_2_arity2", "expected a one-dimensional invariant space");
    return;
  }
  FftReport rpe = fft_spanning_report(Group::Pe, 0, 1, 2);
  if (!rpe.pass) {
    ctx.record(suite, "pe_1_arity2", "spanning report failed");
    return;
  }
  // Koszul equivariance under random slot permutations
  FormSpec f = FormSpec::standard_even(1, 1);
  auto matchings = enumerate_matchings(4);
  for (unsigned i = 0; i < 8 && !ctx.failure; ++i) {
    std::vector<uint32_t> sigma{0, 1, 2, 3};
    std::shuffle(sigma.begin(), sigma.end(), ctx.rng);
    const Matching& p = matchings[i % matchings.size()];
    if (!(permute_slots(sigma, matching_tensor(f, p)) == matching_tensor(f, relabel(sigma, p)))) {
      ctx.record(suite, "permutation_equivariance", "case " + std::to_string(i));
      return;
    }
  }
}

void suite_superpfaffian(Context& ctx) {
  const std::string suite = "superpfaffian";
  GenericConfig cfg = GenericConfig::make(1, 1);
  PfaffianCertificate cert = super_pfaffian(cfg);
  if (!cert.is_polynomial || !cert.square_ok ||
      !(cert.m1_closed_form_ok && *cert.m1_closed_form_ok)) {
    ctx.record(suite, "certificate_1_1", "construction flags");
    return;
  }
  verify_sosp_invariance(cfg, cert);
  if (!cert.lie_invariant || !(cert.reflection_sign == Rational(-1))) {
    ctx.record(suite, "invariance_1_1", "lie or reflection check failed");
    return;
  }
  GenericConfig big = GenericConfig::make(2, 1);
  GPoly vol = vol_form(big);
  if (!(vol * vol == gram_det(big).reduced_part())) {
    ctx.record(suite, "vol_squared", "m=2 n=1");
    return;
  }
}

}  // namespace

std::optional<SelftestFailure> run_selftest(const SelftestOptions& options) {
  Context ctx{options, Rng(options.seed), std::nullopt};
  if (ctx.want("grassmann")) suite_grassmann(ctx);
  if (ctx.want("superlinalg")) suite_superlinalg(ctx);
  if (ctx.want("forms")) suite_forms(ctx);
  if (ctx.want("invariants")) suite_invariants(ctx);
  if (ctx.want("superpfaffian")) suite_superpfaffian(ctx);
  return ctx.failure;
}

}  // namespace superfft
