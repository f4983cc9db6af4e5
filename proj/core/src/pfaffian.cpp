#include "superfft/pfaffian.hpp"

#include <stdexcept>

#include "superfft/supermatrix.hpp"

namespace superfft {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

GenericConfig GenericConfig::make(uint32_t m, uint32_t n) {
  GenericConfig cfg;
  cfg.m = m;
  cfg.n = n;

  std::vector<std::string> even_names{"t"};
  std::vector<std::string> odd_names{"tau"};
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t a = 0; a < m; ++a) even_names.push_back(cfg.even_coord_name(i, a));
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t b = 0; b < 2 * n; ++b) odd_names.push_back(cfg.odd_coord_name(i, b));
  cfg.ring = RingSpec::make(std::move(even_names), std::move(odd_names));

  cfg.form = FormSpec::standard_even(m, n);
  for (uint32_t i = 0; i < n; ++i) {
    cfg.form.gram.at(m + i, m + i + n) = Rational(-1, 2);
    cfg.form.gram.at(m + i + n, m + i) = Rational(1, 2);
  }
  return cfg;
}

std::string GenericConfig::even_coord_name(uint32_t slot, uint32_t a) const {
  return "x" + std::to_string(slot + 1) + "_" + std::to_string(a + 1);
}

std::string GenericConfig::odd_coord_name(uint32_t slot, uint32_t b) const {
  return "y" + std::to_string(slot + 1) + "_" + std::to_string(b + 1);
}

std::vector<GPoly> GenericConfig::point(uint32_t slot) const {
  if (slot >= m) fail("slot out of range");
  std::vector<GPoly> coords;
  coords.reserve(m + 2 * n);
  for (uint32_t a = 0; a < m; ++a)
    coords.push_back(GPoly::variable(ring, even_coord_name(slot, a)));
  for (uint32_t b = 0; b < 2 * n; ++b)
    coords.push_back(GPoly::variable(ring, odd_coord_name(slot, b)));
  return coords;
}

namespace {

std::vector<std::vector<GPoly>> gram_entries(const GenericConfig& cfg, uint32_t size) {
  std::vector<std::vector<GPoly>> points;
  for (uint32_t i = 0; i < size; ++i) points.push_back(cfg.point(i));
  std::vector<std::vector<GPoly>> g(size, std::vector<GPoly>(size, GPoly::zero(cfg.ring)));
  for (uint32_t i = 0; i < size; ++i)
    for (uint32_t j = 0; j < size; ++j)
      g[i][j] = evaluate_bilinear(cfg.form, points[i], points[j]);
  return g;
}

}  // namespace

GPoly gram_det(const GenericConfig& cfg) {
  return gpoly_det(gram_entries(cfg, cfg.m), cfg.ring);
}

GPoly vol_form(const GenericConfig& cfg) {
  std::vector<std::vector<GPoly>> x(cfg.m, std::vector<GPoly>(cfg.m, GPoly::zero(cfg.ring)));
  for (uint32_t i = 0; i < cfg.m; ++i)
    for (uint32_t a = 0; a < cfg.m; ++a)
      x[i][a] = GPoly::variable(cfg.ring, cfg.even_coord_name(i, a));
  return gpoly_det(x, cfg.ring);
}

GPoly pf_m1_closed(const GenericConfig& cfg) {
  if (cfg.m != 1) fail("closed form is defined for m = 1");
  GPoly x = GPoly::variable(cfg.ring, cfg.even_coord_name(0, 0));
  GPoly quad = GPoly::zero(cfg.ring);
  for (uint32_t i = 0; i < cfg.n; ++i)
    quad += GPoly::variable(cfg.ring, cfg.odd_coord_name(0, i)) *
            GPoly::variable(cfg.ring, cfg.odd_coord_name(0, i + cfg.n));
  Rational alpha = Rational(cfg.n) + Rational(1, 2);
  GPoly acc = GPoly::zero(cfg.ring);
  for (uint32_t k = 0; k <= cfg.n; ++k)
    acc += binomial(alpha, k) * (pow(x, 2 * cfg.n + 1 - 2 * k) * pow(quad, k));
  return acc;
}

PfaffianCertificate super_pfaffian(const GenericConfig& cfg) {
  if (cfg.m < 1) fail("super pfaffian requires m >= 1");
  PfaffianCertificate cert;
  cert.m = cfg.m;
  cert.n = cfg.n;

  GPoly d = gram_det(cfg);
  GPoly d0 = d.reduced_part();
  GPoly nil = d - d0;  // numerator of D/red(D) - 1 over red(D)
  GPoly vol = vol_form(cfg);

  // (D/red(D))^{(2n+1)/2} as a terminating binomial series; nil^k vanishes
  // beyond k = m*n, so the common denominator is red(D)^{m*n}.
  unsigned truncation = cfg.m * cfg.n;
  Rational alpha = Rational(2 * cfg.n + 1, 2);
  GPoly series_num = GPoly::zero(cfg.ring);
  for (unsigned k = 0; k <= truncation; ++k)
    series_num += binomial(alpha, k) * (pow(nil, k) * pow(d0, truncation - k));

  GPoly candidate_num = pow(vol, 2 * cfg.n + 1) * series_num;
  std::optional<GPoly> delta = divide_exact(candidate_num, pow(d0, truncation));
  cert.is_polynomial = delta.has_value();
  if (cert.is_polynomial) {
    cert.delta_pow = *delta;
    cert.square_ok = (cert.delta_pow * cert.delta_pow) == pow(d, 2 * cfg.n + 1);
    if (cfg.m == 1) cert.m1_closed_form_ok = (cert.delta_pow == pf_m1_closed(cfg));
  }
  return cert;
}

bool verify_gram_factorization(const GenericConfig& cfg) {
  if (cfg.m < 2) fail("gram factorization check requires m >= 2");
  GPoly d = gram_det(cfg);

  auto g = gram_entries(cfg, cfg.m);
  std::vector<std::vector<GPoly>> leading(cfg.m - 1);
  for (uint32_t i = 0; i + 1 < cfg.m; ++i)
    for (uint32_t j = 0; j + 1 < cfg.m; ++j) leading[i].push_back(g[i][j]);
  GPoly d1 = gpoly_det(leading, cfg.ring);

  // adjugate of the leading minor via cofactors
  uint32_t r = cfg.m - 1;
  std::vector<std::vector<GPoly>> adj(r, std::vector<GPoly>(r, GPoly::zero(cfg.ring)));
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < r; ++j) {
      std::vector<std::vector<GPoly>> minor;
      for (uint32_t a = 0; a < r; ++a) {
        if (a == j) continue;
        std::vector<GPoly> row;
        for (uint32_t b = 0; b < r; ++b) {
          if (b == i) continue;
          row.push_back(g[a][b]);
        }
        minor.push_back(std::move(row));
      }
      GPoly cof = gpoly_det(minor, cfg.ring);
      if ((i + j) & 1) cof = -cof;
      adj[i][j] = std::move(cof);
    }

  // w = D1*v_m - sum_i (adj * b)_i v_i clears the localization denominator
  // of the orthogonal complement v_m'' of v_m
  std::vector<GPoly> w;
  std::vector<std::vector<GPoly>> points;
  for (uint32_t i = 0; i < cfg.m; ++i) points.push_back(cfg.point(i));
  std::vector<GPoly> coeffs(r, GPoly::zero(cfg.ring));
  for (uint32_t i = 0; i < r; ++i)
    for (uint32_t j = 0; j < r; ++j) coeffs[i] += adj[i][j] * g[cfg.m - 1][j];
  uint32_t total = cfg.form.dim.total();
  for (uint32_t c = 0; c < total; ++c) {
    GPoly acc = d1 * points[cfg.m - 1][c];
    for (uint32_t i = 0; i < r; ++i) acc -= coeffs[i] * points[i][c];
    w.push_back(std::move(acc));
  }

  GPoly bww = evaluate_bilinear(cfg.form, w, w);
  return d * d1 == bww;
}

void verify_sosp_invariance(const GenericConfig& cfg, PfaffianCertificate& cert) {
  if (!cert.is_polynomial) fail("invariance check requires a polynomial certificate");
  const GPoly& delta = cert.delta_pow;
  uint32_t total = cfg.form.dim.total();

  std::vector<std::vector<GPoly>> points;
  for (uint32_t i = 0; i < cfg.m; ++i) points.push_back(cfg.point(i));

  auto coord_name = [&](uint32_t slot, uint32_t c) {
    return c < cfg.m ? cfg.even_coord_name(slot, c) : cfg.odd_coord_name(slot, c - cfg.m);
  };

  bool all_zero = true;
  for (const LieGenerator& x : lie_algebra_basis(cfg.form)) {
    GPoly param = GPoly::variable(cfg.ring, x.parity == Parity::Even ? "t" : "tau");
    GPoly::Bindings bindings;
    for (uint32_t slot = 0; slot < cfg.m; ++slot) {
      for (uint32_t c = 0; c < total; ++c) {
        GPoly moved = GPoly::zero(cfg.ring);
        for (uint32_t dcoord = 0; dcoord < total; ++dcoord) {
          Rational e = x.matrix.at(c, dcoord);
          if (is_zero(e)) continue;
          // R-linear extension of an odd map twists by the coordinate
          // parity: X(r x e_d) = (-1)^{|r||X|} r Xe_d
          if (x.parity == Parity::Odd && cfg.form.dim.index_parity(dcoord) == Parity::Odd)
            e = -e;
          moved += e * points[slot][dcoord];
        }
        if (moved.is_zero()) continue;
        bindings[coord_name(slot, c)] = points[slot][c] + param * moved;
      }
    }
    GPoly image = delta.substitute(bindings);
    GPoly derivative = (x.parity == Parity::Even) ? image.coefficient_of_even("t", 1)
                                                  : image.coefficient_of_odd("tau");
    if (!derivative.is_zero()) all_zero = false;
  }
  cert.lie_invariant = all_zero;

  GPoly::Bindings reflect;
  for (uint32_t slot = 0; slot < cfg.m; ++slot)
    reflect[cfg.even_coord_name(slot, 0)] =
        -GPoly::variable(cfg.ring, cfg.even_coord_name(slot, 0));
  GPoly reflected = delta.substitute(reflect);
  if (reflected == -delta)
    cert.reflection_sign = -1;
  else if (reflected == delta)
    cert.reflection_sign = 1;
  else
    cert.reflection_sign = 0;
}

}  // namespace superfft
