#include "superfft/forms.hpp"

#include <stdexcept>

namespace superfft {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int parity_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

GPoly homogeneous_component(const GPoly& p, Parity target) {
  GPoly::TermMap keep;
  for (const auto& [m, c] : p.terms())
    if (m.parity() == target) keep.emplace(m, c);
  return GPoly::from_terms(p.ring(), std::move(keep));
}
}  // namespace

FormSpec FormSpec::standard_even(uint32_t m, uint32_t n) {
  FormSpec f;
  f.dim = SuperDim{m, 2 * n};
  f.form_parity = Parity::Even;
  f.gram = RationalMatrix(f.dim.total(), f.dim.total());
  for (uint32_t i = 0; i < m; ++i) f.gram.at(i, i) = 1;
  for (uint32_t i = 0; i < n; ++i) {
    f.gram.at(m + i, m + i + n) = -1;
    f.gram.at(m + i + n, m + i) = 1;
  }
  return f;
}

FormSpec FormSpec::standard_odd(uint32_t n) {
  FormSpec f;
  f.dim = SuperDim{n, n};
  f.form_parity = Parity::Odd;
  f.gram = RationalMatrix(2 * n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    f.gram.at(i, n + i) = 1;
    f.gram.at(n + i, i) = 1;
  }
  return f;
}

bool FormSpec::is_super_symmetric() const {
  uint32_t t = dim.total();
  if (gram.rows() != t || gram.cols() != t) return false;
  for (uint32_t i = 0; i < t; ++i) {
    for (uint32_t j = 0; j < t; ++j) {
      Parity pi = dim.index_parity(i), pj = dim.index_parity(j);
      Rational expect = gram.at(j, i);
      if (parity_sign(pi, pj) < 0) expect = -expect;
      if (!(gram.at(i, j) == expect)) return false;
      bool allowed = (form_parity == Parity::Even) ? (pi == pj) : (pi != pj);
      if (!allowed && !is_zero(gram.at(i, j))) return false;
    }
  }
  return true;
}

void FormSpec::validate() const {
  if (!is_super_symmetric()) fail("gram matrix is not super-symmetric for this parity");
  if (!is_nondegenerate()) fail("degenerate form");
}

GPoly evaluate_bilinear(const FormSpec& f, std::span<const GPoly> u,
                        std::span<const GPoly> v) {
  uint32_t t = f.dim.total();
  if (u.size() != t || v.size() != t) fail("coordinate vector length mismatch");
  if (t == 0) fail("cannot evaluate an empty form without a ring");
  const RingPtr& ring = u[0].ring();
  GPoly acc = GPoly::zero(ring);
  for (uint32_t j = 0; j < t; ++j) {
    if (v[j].is_zero()) continue;
    GPoly vj_even = homogeneous_component(v[j], Parity::Even);
    GPoly vj_odd = homogeneous_component(v[j], Parity::Odd);
    for (uint32_t i = 0; i < t; ++i) {
      const Rational& g = f.gram.at(i, j);
      if (is_zero(g) || u[i].is_zero()) continue;
      // sign rule: pulling v_j's coefficient past e_i
      if (!vj_even.is_zero()) acc += g * (u[i] * vj_even);
      if (!vj_odd.is_zero()) {
        GPoly part = g * (u[i] * vj_odd);
        if (f.dim.index_parity(i) == Parity::Odd) part = -part;
        acc += part;
      }
    }
  }
  return acc;
}

void QuadraticForm::validate() const {
  for (const auto& [ij, a] : coeffs) {
    auto [i, j] = ij;
    if (i >= dim.total() || j >= dim.total() || i > j)
      fail("quadratic coefficient outside the admissible index range");
    Parity pi = dim.index_parity(i), pj = dim.index_parity(j);
    if (i == j && pi == Parity::Odd) fail("square of an odd coordinate vanishes");
    if (!is_zero(a) && (pi + pj) != parity)
      fail("quadratic coefficient parity does not match the form parity");
  }
}

PolarizationResult bilinear_from_quadratic(const QuadraticForm& q) {
  q.validate();
  uint32_t t = q.dim.total();
  std::vector<std::string> even_names, odd_names;
  for (uint32_t i = 0; i < t; ++i)
    (q.dim.index_parity(i) == Parity::Even ? even_names : odd_names)
        .push_back("u" + std::to_string(i));
  for (uint32_t i = 0; i < t; ++i)
    (q.dim.index_parity(i) == Parity::Even ? even_names : odd_names)
        .push_back("v" + std::to_string(i));
  RingPtr ring = RingSpec::make(even_names, odd_names);

  std::vector<GPoly> us, vs, sums;
  for (uint32_t i = 0; i < t; ++i) {
    us.push_back(GPoly::variable(ring, "u" + std::to_string(i)));
    vs.push_back(GPoly::variable(ring, "v" + std::to_string(i)));
    sums.push_back(us.back() + vs.back());
  }
  auto q_at = [&](const std::vector<GPoly>& w) {
    GPoly acc = GPoly::zero(ring);
    for (const auto& [ij, a] : q.coeffs) acc += a * (w[ij.first] * w[ij.second]);
    return acc;
  };
  GPoly polarized = q_at(sums) - q_at(us) - q_at(vs);

  PolarizationResult out;
  out.form.dim = q.dim;
  out.form.form_parity = q.parity;
  out.form.gram = RationalMatrix(t, t);
  for (uint32_t k = 0; k < t; ++k) {
    for (uint32_t l = 0; l < t; ++l) {
      GPoly mono = us[k] * vs[l];
      if (mono.is_zero()) continue;
      auto it = polarized.terms().find(mono.terms().begin()->first);
      if (it == polarized.terms().end()) continue;
      Rational g = it->second;
      if (parity_sign(q.dim.index_parity(k), q.dim.index_parity(l)) < 0) g = -g;
      out.form.gram.at(k, l) = g;
    }
  }
  out.degenerate = !out.form.is_nondegenerate();
  return out;
}

namespace {

Rational gram_pair(const RationalMatrix& g, const std::vector<Rational>& a,
                   const std::vector<Rational>& b) {
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      acc += a[i] * g.at(i, j) * b[j];
    }
  }
  return acc;
}

}  // namespace

StandardizeResult standardize(const FormSpec& f) {
  f.validate();
  StandardizeResult out;
  uint32_t t = f.dim.total();
  uint32_t ne = f.dim.even, no = f.dim.odd;

  auto unit = [&](uint32_t i) {
    std::vector<Rational> v(t);
    v[i] = 1;
    return v;
  };
  auto pair_with = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return gram_pair(f.gram, a, b);
  };

  std::vector<std::vector<Rational>> basis;  // new basis, old coordinates

  if (f.form_parity == Parity::Odd) {
    // Over the rationals B(e, e) vanishes for even e, so the construction
    // reduces to normalizing the even-odd pairing.
    if (ne != no) fail("odd form requires dimension n|n");
    RationalMatrix pairing(ne, no);
    for (uint32_t i = 0; i < ne; ++i)
      for (uint32_t j = 0; j < no; ++j) pairing.at(i, j) = f.gram.at(i, ne + j);
    RationalMatrix minv = pairing.inverse();
    for (uint32_t i = 0; i < ne; ++i) basis.push_back(unit(i));
    for (uint32_t j = 0; j < no; ++j) {
      std::vector<Rational> v(t);
      for (uint32_t l = 0; l < no; ++l) v[ne + l] = minv.at(l, j);
      basis.push_back(std::move(v));
    }
    out.standard = FormSpec::standard_odd(ne);
  } else {
    // Even part: peel vectors with B(v, v) a unit, rescaling by a square
    // root of 1/B(v, v).
    std::vector<std::vector<Rational>> work;
    for (uint32_t i = 0; i < ne; ++i) work.push_back(unit(i));
    for (uint32_t k = 0; k < ne; ++k) {
      uint32_t pivot = k;
      while (pivot < ne && is_zero(pair_with(work[pivot], work[pivot]))) ++pivot;
      if (pivot == ne) {
        // characteristic zero: some B(w_i, w_j) is nonzero, make a diagonal
        bool found = false;
        for (uint32_t i = k; i < ne && !found; ++i)
          for (uint32_t j = i + 1; j < ne && !found; ++j)
            if (!is_zero(pair_with(work[i], work[j]))) {
              for (uint32_t c = 0; c < t; ++c) work[i][c] += work[j][c];
              pivot = i;
              found = true;
            }
        if (!found) fail("degenerate even block");
      }
      std::swap(work[k], work[pivot]);
      Rational value = pair_with(work[k], work[k]);
      auto root = exact_sqrt(1 / value);
      if (!root) {
        out.ok = false;
        out.obstruction = 1 / value;
        return out;
      }
      for (uint32_t c = 0; c < t; ++c) work[k][c] *= *root;
      for (uint32_t i = k + 1; i < ne; ++i) {
        Rational proj = pair_with(work[i], work[k]);
        if (is_zero(proj)) continue;
        for (uint32_t c = 0; c < t; ++c) work[i][c] -= proj * work[k][c];
      }
    }
    for (auto& w : work) basis.push_back(std::move(w));

    // Odd part: hyperbolic pairs (a, b) with B(a, b) = -1.
    std::vector<std::vector<Rational>> pool;
    for (uint32_t i = 0; i < no; ++i) pool.push_back(unit(ne + i));
    std::vector<std::vector<Rational>> firsts, seconds;
    while (!pool.empty()) {
      std::vector<Rational> a = std::move(pool.front());
      pool.erase(pool.begin());
      size_t mate = pool.size();
      for (size_t j = 0; j < pool.size(); ++j)
        if (!is_zero(pair_with(a, pool[j]))) {
          mate = j;
          break;
        }
      if (mate == pool.size()) fail("degenerate odd block");
      std::vector<Rational> b = std::move(pool[mate]);
      pool.erase(pool.begin() + static_cast<long>(mate));
      Rational scale = -1 / pair_with(a, b);
      for (auto& c : b) c *= scale;
      for (auto& v : pool) {
        Rational alpha = pair_with(v, b);   // coefficient on a
        Rational beta = pair_with(v, a);    // coefficient on b
        for (uint32_t c = 0; c < t; ++c) v[c] += alpha * a[c] - beta * b[c];
      }
      firsts.push_back(std::move(a));
      seconds.push_back(std::move(b));
    }
    for (auto& v : firsts) basis.push_back(std::move(v));
    for (auto& v : seconds) basis.push_back(std::move(v));
    out.standard = FormSpec::standard_even(ne, no / 2);
  }

  out.basis_change = RationalMatrix(t, t);
  for (uint32_t j = 0; j < t; ++j)
    for (uint32_t i = 0; i < t; ++i) out.basis_change.at(i, j) = basis[j][i];
  out.ok = true;
  return out;
}

std::vector<LieGenerator> lie_algebra_basis(const FormSpec& f) {
  f.validate();
  uint32_t t = f.dim.total();
  std::vector<LieGenerator> result;

  for (Parity xp : {Parity::Even, Parity::Odd}) {
    // unknowns: entries (r, c) in the block pattern of parity xp
    std::vector<std::pair<uint32_t, uint32_t>> slots;
    for (uint32_t r = 0; r < t; ++r)
      for (uint32_t c = 0; c < t; ++c)
        if ((f.dim.index_parity(r) + f.dim.index_parity(c)) == xp) slots.emplace_back(r, c);
    if (slots.empty()) continue;

    RationalMatrix system(size_t{t} * t, slots.size());
    for (uint32_t i = 0; i < t; ++i) {
      for (uint32_t j = 0; j < t; ++j) {
        size_t row = size_t{i} * t + j;
        int s = (xp == Parity::Odd && f.dim.index_parity(i) == Parity::Odd) ? -1 : 1;
        for (size_t u = 0; u < slots.size(); ++u) {
          auto [r, c] = slots[u];
          Rational coeff(0);
          if (c == i) coeff += f.gram.at(r, j);                    // B(Xe_i, e_j)
          if (c == j) coeff += Rational(s) * f.gram.at(i, r);      // +- B(e_i, Xe_j)
          if (!is_zero(coeff)) system.at(row, u) = coeff;
        }
      }
    }
    RationalMatrix kernel = system.kernel();
    for (size_t b = 0; b < kernel.cols(); ++b) {
      LieGenerator gen;
      gen.parity = xp;
      gen.matrix = RationalMatrix(t, t);
      for (size_t u = 0; u < slots.size(); ++u)
        gen.matrix.at(slots[u].first, slots[u].second) = kernel.at(u, b);
      result.push_back(std::move(gen));
    }
  }
  return result;
}

bool preserves_form_infinitesimally(const FormSpec& f, const LieGenerator& x) {
  uint32_t t = f.dim.total();
  for (uint32_t i = 0; i < t; ++i)
    for (uint32_t j = 0; j < t; ++j) {
      Rational acc(0);
      for (uint32_t k = 0; k < t; ++k) {
        acc += x.matrix.at(k, i) * f.gram.at(k, j);
        Rational second = x.matrix.at(k, j) * f.gram.at(i, k);
        if (x.parity == Parity::Odd && f.dim.index_parity(i) == Parity::Odd)
          acc -= second;
        else
          acc += second;
      }
      if (!is_zero(acc)) return false;
    }
  return true;
}

bool preserves_form(const FormSpec& f, const RationalMatrix& g) {
  return g.transposed() * f.gram * g == f.gram;
}

std::vector<RationalMatrix> component_representatives(const FormSpec& f) {
  f.validate();
  uint32_t t = f.dim.total();
  std::vector<RationalMatrix> reps;
  reps.push_back(RationalMatrix::identity(t));
  if (f.form_parity == Parity::Odd || f.dim.even == 0) return reps;
  FormSpec std_form = FormSpec::standard_even(f.dim.even, f.dim.odd / 2);
  if (!(f.gram == std_form.gram))
    fail("component representatives require the standard even form");
  RationalMatrix reflection = RationalMatrix::identity(t);
  reflection.at(0, 0) = -1;
  reps.push_back(std::move(reflection));
  return reps;
}

RationalMatrix parity_automorphism(SuperDim dim) {
  RationalMatrix m = RationalMatrix::identity(dim.total());
  for (uint32_t i = dim.even; i < dim.total(); ++i) m.at(i, i) = -1;
  return m;
}

SuperMatrix to_supermatrix(const RingPtr& ring, SuperDim dim, Parity declared,
                           const RationalMatrix& values) {
  return SuperMatrix::from_rational(ring, dim, dim, declared, values);
}

}  // namespace superfft
