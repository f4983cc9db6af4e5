// Acceptance suite: every check is exact (rational identity or integer
// equality); the only tolerances are the wall-clock budgets stated inline.
// Prints one pass/fail line per criterion and exits with the failure count.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "superfft/invariants.hpp"
#include "superfft/pfaffian.hpp"
#include "superfft/random_elements.hpp"
#include "superfft/supermatrix.hpp"

using namespace superfft;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("criterion %2d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++failures;
}

bool grassmann_property_suite(unsigned cases, double budget_seconds, double& elapsed) {
  Clock::time_point start = Clock::now();
  RingPtr ring = RingSpec::make({"x", "y"}, {"th1", "th2", "th3", "th4"});
  Rng rng(2026);
  bool ok = true;
  for (unsigned i = 0; i < cases && ok; ++i) {
    GPoly a = random_gpoly(rng, ring, 4, 2);
    GPoly b = random_gpoly(rng, ring, 4, 2);
    GPoly c = random_gpoly(rng, ring, 3, 2);
    ok = ok && ((a * b) * c == a * (b * c));
    ok = ok && (a * (b + c) == a * b + a * c);
    for (Parity pa : {Parity::Even, Parity::Odd})
      for (Parity pb : {Parity::Even, Parity::Odd}) {
        GPoly ha = random_homogeneous_gpoly(rng, ring, pa, 4, 2);
        GPoly hb = random_homogeneous_gpoly(rng, ring, pb, 4, 2);
        GPoly flipped = hb * ha;
        if (pa == Parity::Odd && pb == Parity::Odd) flipped = -flipped;
        ok = ok && (ha * hb == flipped);
      }
    GPoly odd = random_homogeneous_gpoly(rng, ring, Parity::Odd, 5, 2);
    ok = ok && (odd * odd).is_zero();
    GPoly divisor = random_homogeneous_gpoly(rng, ring, Parity::Even, 3, 2);
    if (divisor.reduced_part().is_zero())
      divisor += GPoly::constant(ring, random_nonzero_rational(rng));
    GPoly q = random_gpoly(rng, ring, 3, 2);
    auto back = divide_exact(q * divisor, divisor);
    ok = ok && back.has_value() && *back == q;
  }
  elapsed = seconds_since(start);
  return ok && elapsed < budget_seconds;
}

}  // namespace

int main() {
  // 1. randomized exact property suite for the polynomial kernel
  {
    double elapsed = 0.0;
    bool ok = grassmann_property_suite(1000, 10.0, elapsed);
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "grassmann kernel properties, 1000 randomized cases in %.2f s (budget 10 s)",
                  elapsed);
    report(1, ok, buf);
  }

  // 2. closed form at one generic vector, n = 1
  {
    GenericConfig cfg = GenericConfig::make(1, 1);
    bool ok = pf_m1_closed(cfg) == parse_gpoly(cfg.ring, "x1_1^3 + 3/2*x1_1*y1_1*y1_2");
    report(2, ok, "closed form x^3 + 3/2*x*y1*y2 reproduced term for term");
  }

  // 3 & 4. square identity / polynomiality, then invariance, same configs
  {
    Clock::time_point start = Clock::now();
    std::vector<std::pair<uint32_t, uint32_t>> configs{{1, 0}, {1, 1}, {1, 2}, {2, 1}, {3, 1}};
    bool square_ok = true, invariance_ok = true;
    std::string detail_square, detail_inv;
    for (auto [m, n] : configs) {
      GenericConfig cfg = GenericConfig::make(m, n);
      PfaffianCertificate cert = super_pfaffian(cfg);
      bool sq = cert.is_polynomial && cert.square_ok;
      square_ok = square_ok && sq;
      if (!sq) detail_square += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
      if (cert.is_polynomial) {
        verify_sosp_invariance(cfg, cert);
        bool inv = cert.lie_invariant && cert.reflection_sign == Rational(-1);
        invariance_ok = invariance_ok && inv;
        if (!inv) detail_inv += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
      } else {
        invariance_ok = false;
      }
    }
    double elapsed = seconds_since(start);
    bool within = elapsed < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "(Delta^{2n+1})^2 = D^{2n+1} and polynomiality on 5 configs in %.1f s "
                  "(budget 300 s)%s",
                  elapsed, detail_square.c_str());
    report(3, square_ok && within, buf);
    std::snprintf(buf, sizeof(buf),
                  "lie annihilation and reflection sign -1 on the same configs%s",
                  detail_inv.c_str());
    report(4, invariance_ok, buf);
  }

  // 5. spanning for the even-form groups
  {
    Clock::time_point start = Clock::now();
    struct Shape {
      uint32_t m, n;
    };
    bool ok = true;
    std::string detail;
    for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{3, 1}, Shape{1, 2}}) {
      for (uint32_t N : {2u, 4u}) {
        FftReport r = fft_spanning_report(Group::OSp, s.m, s.n, N);
        ok = ok && r.pass;
        if (!r.pass)
          detail += " osp(" + std::to_string(s.m) + "|" + std::to_string(2 * s.n) + ")N" +
                    std::to_string(N);
      }
    }
    FftReport six = fft_spanning_report(Group::OSp, 1, 1, 6);
    ok = ok && six.pass;
    if (!six.pass) detail += " osp(1|2)N6";
    double elapsed = seconds_since(start);
    bool within = elapsed < 600.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "rank(matchings) = dim(invariants), 9 orthosymplectic configs in %.1f s "
                  "(budget 600 s)%s",
                  elapsed, detail.c_str());
    report(5, ok && within, buf);
  }

  // 6. spanning for the odd-form groups
  {
    bool ok = true;
    std::string detail;
    for (uint32_t n : {1u, 2u}) {
      for (uint32_t N : {2u, 4u}) {
        FftReport r = fft_spanning_report(Group::Pe, n, n, N);
        ok = ok && r.pass;
        if (!r.pass) detail += " pe(" + std::to_string(n) + ")N" + std::to_string(N);
      }
    }
    report(6, ok, "rank = dim in the matching parity stratum, 4 periplectic configs" + detail);
  }

  // 7. parity vanishing at odd slot counts
  {
    bool ok = true;
    for (uint32_t N : {1u, 3u, 5u}) {
      FftReport r = fft_spanning_report(Group::OSp, 1, 1, N);
      ok = ok && r.pass && r.invariant_dim == 0;
    }
    FftReport r22 = fft_spanning_report(Group::OSp, 2, 1, 3);
    ok = ok && r22.pass && r22.invariant_dim == 0;
    for (uint32_t n : {1u, 2u})
      for (uint32_t N : {1u, 3u}) {
        FftReport r = fft_spanning_report(Group::Pe, n, n, N);
        ok = ok && r.pass && r.invariant_dim == 0;
      }
    report(7, ok, "no invariants at odd slot counts (both value parities, both groups)");
  }

  // 8. vol^2 = reduced gram determinant
  {
    bool ok = true;
    for (auto [m, n] : std::vector<std::pair<uint32_t, uint32_t>>{
             {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}, {3, 1}}) {
      GenericConfig cfg = GenericConfig::make(m, n);
      GPoly vol = vol_form(cfg);
      ok = ok && (vol * vol == gram_det(cfg).reduced_part());
    }
    report(8, ok, "vol^2 = reduced(D) for every m <= 3 configuration");
  }

  // 9. gram factorization after clearing denominators
  {
    bool ok = true;
    std::string detail;
    for (auto [m, n] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 0}, {2, 1}, {3, 1}}) {
      bool one = verify_gram_factorization(GenericConfig::make(m, n));
      ok = ok && one;
      if (!one) detail += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
    report(9, ok, "D*D1 = B(w,w) for (2,0), (2,1), (3,1)" + detail);
  }

  // 10. berezinian multiplicativity and the reflection value
  {
    RingPtr ring = RingSpec::make({}, {});
    Rng rng(424242);
    bool ok = true;
    struct Shape {
      uint32_t m, n;
    };
    std::vector<Shape> shapes{{1, 1}, {2, 2}, {1, 2}};
    for (unsigned i = 0; i < 500 && ok; ++i) {
      Shape s = shapes[i % shapes.size()];
      SuperDim dim{s.m, s.n};
      RationalMatrix a(dim.total(), dim.total()), b(dim.total(), dim.total());
      RationalMatrix ae = random_invertible_rational(rng, s.m);
      RationalMatrix ao = random_invertible_rational(rng, s.n);
      RationalMatrix be = random_invertible_rational(rng, s.m);
      RationalMatrix bo = random_invertible_rational(rng, s.n);
      for (uint32_t r = 0; r < s.m; ++r)
        for (uint32_t c = 0; c < s.m; ++c) {
          a.at(r, c) = ae.at(r, c);
          b.at(r, c) = be.at(r, c);
        }
      for (uint32_t r = 0; r < s.n; ++r)
        for (uint32_t c = 0; c < s.n; ++c) {
          a.at(s.m + r, s.m + c) = ao.at(r, c);
          b.at(s.m + r, s.m + c) = bo.at(r, c);
        }
      SuperMatrix sa = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, a);
      SuperMatrix sb = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, b);
      ok = berezinian(sa * sb) == berezinian(sa) * berezinian(sb);
    }
    SuperDim dim{1, 2};
    RationalMatrix refl = RationalMatrix::identity(dim.total());
    refl.at(0, 0) = -1;
    ok = ok && berezinian(SuperMatrix::from_rational(ring, dim, dim, Parity::Even, refl)) ==
                   GPoly::constant(ring, -1);
    report(10, ok, "berezinian multiplicativity on 500 random invertible pairs; reflection -> -1");
  }

  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures, failures == 1 ? "" : "s");
  return failures;
}
