#include "superfft/invariants.hpp"

#include <algorithm>
#include <bit>

namespace superfft {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

Rational TensorForm::at(const std::vector<uint32_t>& tuple) const {
  auto it = coeffs_.find(tuple);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Parity TensorForm::tuple_parity(const std::vector<uint32_t>& tuple) const {
  int odd = 0;
  for (uint32_t i : tuple)
    if (dim_.index_parity(i) == Parity::Odd) ++odd;
  return Parity(odd & 1);
}

void TensorForm::set(const std::vector<uint32_t>& tuple, Rational value) {
  if (tuple.size() != arity_) fail("tuple length mismatch");
  for (uint32_t i : tuple)
    if (i >= dim_.total()) fail("tuple index out of range");
  if (tuple_parity(tuple) != parity_) fail("tuple parity violates the declared stratum");
  if (superfft::is_zero(value))
    coeffs_.erase(tuple);
  else
    coeffs_[tuple] = std::move(value);
}

void TensorForm::add(const std::vector<uint32_t>& tuple, const Rational& value) {
  if (superfft::is_zero(value)) return;
  auto it = coeffs_.find(tuple);
  if (it == coeffs_.end()) {
    set(tuple, value);
  } else {
    it->second += value;
    if (superfft::is_zero(it->second)) coeffs_.erase(it);
  }
}

std::vector<std::vector<uint32_t>> enumerate_tuples(uint32_t arity, SuperDim dim,
                                                    Parity parity) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> tuple(arity, 0);
  uint32_t t = dim.total();
  if (t == 0) {
    if (arity == 0 && parity == Parity::Even) out.push_back({});
    return out;
  }
  while (true) {
    int odd = 0;
    for (uint32_t i : tuple)
      if (dim.index_parity(i) == Parity::Odd) ++odd;
    if (Parity(odd & 1) == parity) out.push_back(tuple);
    uint32_t k = arity;
    while (k > 0) {
      if (++tuple[k - 1] < t) break;
      tuple[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

TensorForm matching_tensor(const FormSpec& f, const Matching& p) {
  uint32_t arity = p.arity();
  const SuperDim dim = f.dim;
  const uint32_t total = dim.total();

  Parity table_parity = Parity::Even;
  if (f.form_parity == Parity::Odd) table_parity = Parity((p.pairs.size()) & 1);
  TensorForm out(arity, dim, table_parity);
  if (arity == 0) {
    out.set({}, Rational(1));
    return out;
  }

  // generic points: one coordinate variable per (slot, basis index), odd
  // variables in slot-major order so slot monomials read off signlessly
  std::vector<std::string> even_names, odd_names;
  for (uint32_t k = 0; k < arity; ++k)
    for (uint32_t i = 0; i < total; ++i) {
      std::string name = "z" + std::to_string(k) + "_" + std::to_string(i);
      (dim.index_parity(i) == Parity::Even ? even_names : odd_names).push_back(name);
    }
  RingPtr ring = RingSpec::make(even_names, odd_names);

  std::vector<std::vector<GPoly>> points(arity);
  // var id of coordinate i of slot k, and the reverse map
  std::vector<std::vector<VarId>> coord_ids(arity, std::vector<VarId>(total));
  std::map<std::pair<Parity, uint32_t>, std::pair<uint32_t, uint32_t>> slot_of;
  for (uint32_t k = 0; k < arity; ++k)
    for (uint32_t i = 0; i < total; ++i) {
      std::string name = "z" + std::to_string(k) + "_" + std::to_string(i);
      GPoly v = GPoly::variable(ring, name);
      VarId id = *ring->find(name);
      coord_ids[k][i] = id;
      slot_of[{id.parity, id.index}] = {k, i};
      points[k].push_back(std::move(v));
    }

  GPoly product = GPoly::constant(ring, Rational(1));
  for (const auto& [a, b] : p.pairs)
    product = product * evaluate_bilinear(f, points[a], points[b]);

  for (const auto& [mono, coeff] : product.terms()) {
    // one variable per slot; recover the tuple
    std::vector<uint32_t> tuple(arity, total);
    for (const auto& [v, e] : mono.even) {
      if (e != 1) fail("unexpected exponent in a matching product");
      auto [k, i] = slot_of.at({Parity::Even, v});
      tuple[k] = i;
    }
    uint64_t rest = mono.odd;
    while (rest) {
      uint32_t v = static_cast<uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      auto [k, i] = slot_of.at({Parity::Odd, v});
      tuple[k] = i;
    }
    // dictionary between functions of generic points and value tables:
    // epsilon = (-1)^{#(unordered odd slot pairs)}
    int odd_slots = 0;
    for (uint32_t i : tuple)
      if (dim.index_parity(i) == Parity::Odd) ++odd_slots;
    Rational value = coeff;
    if ((odd_slots * (odd_slots - 1) / 2) & 1) value = -value;
    out.add(tuple, value);
  }
  return out;
}

TensorForm lie_act_dual(const LieGenerator& x, const TensorForm& t) {
  uint32_t total = t.dim().total();
  if (x.matrix.rows() != total || x.matrix.cols() != total)
    fail("generator dimension mismatch");
  for (uint32_t i = 0; i < total; ++i)
    for (uint32_t j = 0; j < total; ++j)
      if (!is_zero(x.matrix.at(i, j)) &&
          (t.dim().index_parity(i) + t.dim().index_parity(j)) != x.parity)
        fail("generator entries violate its declared parity block pattern");
  TensorForm out(t.arity(), t.dim(), t.parity() + x.parity);
  for (const auto& [tuple, c] : t.coeffs()) {
    for (uint32_t k = 0; k < t.arity(); ++k) {
      // t-entry at (..., tuple[k], ...) feeds output tuples with slot k
      // replaced by i whenever X[tuple[k]][i] != 0
      for (uint32_t i = 0; i < total; ++i) {
        const Rational& xe = x.matrix.at(tuple[k], i);
        if (is_zero(xe)) continue;
        std::vector<uint32_t> target = tuple;
        target[k] = i;
        int prefix_odd = 0;
        for (uint32_t r = 0; r < k; ++r)
          if (t.dim().index_parity(target[r]) == Parity::Odd) ++prefix_odd;
        Rational contrib = -(xe * c);
        if (x.parity == Parity::Odd && (prefix_odd & 1)) contrib = -contrib;
        out.add(target, contrib);
      }
    }
  }
  return out;
}

TensorForm group_act(const RationalMatrix& g, const TensorForm& t) {
  uint32_t total = t.dim().total();
  if (g.rows() != total || g.cols() != total) fail("group element dimension mismatch");
  for (uint32_t i = 0; i < total; ++i)
    for (uint32_t j = 0; j < total; ++j)
      if (t.dim().index_parity(i) != t.dim().index_parity(j) && !is_zero(g.at(i, j)))
        fail("group_act requires a parity-preserving rational element");

  TensorForm out(t.arity(), t.dim(), t.parity());
  std::vector<std::vector<uint32_t>> tuples = enumerate_tuples(t.arity(), t.dim(), t.parity());
  for (const auto& tau : tuples) {
    // sum over source tuples sigma of prod_k g[sigma_k][tau_k] * t(sigma)
    Rational acc(0);
    for (const auto& [sigma, c] : t.coeffs()) {
      Rational prod = c;
      bool dead = false;
      for (uint32_t k = 0; k < t.arity() && !dead; ++k) {
        const Rational& e = g.at(sigma[k], tau[k]);
        if (is_zero(e))
          dead = true;
        else
          prod *= e;
      }
      if (!dead) acc += prod;
    }
    if (!is_zero(acc)) out.set(tau, acc);
  }
  return out;
}

Matching relabel(const std::vector<uint32_t>& sigma, const Matching& p) {
  Matching out;
  for (auto [a, b] : p.pairs) {
    uint32_t x = sigma[a], y = sigma[b];
    out.pairs.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

int relabel_sign(const std::vector<uint32_t>& sigma, const Matching& p) {
  std::vector<std::pair<uint32_t, uint32_t>> image;
  for (auto [a, b] : p.pairs) {
    uint32_t x = sigma[a], y = sigma[b];
    image.emplace_back(std::min(x, y), std::max(x, y));
  }
  int inversions = 0;
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return (inversions & 1) ? -1 : 1;
}

TensorForm permute_slots(const std::vector<uint32_t>& sigma, const TensorForm& t) {
  if (sigma.size() != t.arity()) fail("permutation length mismatch");
  TensorForm out(t.arity(), t.dim(), t.parity());
  for (const auto& [stored, c] : t.coeffs()) {
    // stored = tau o sigma; recover tau with tau[sigma[k]] = stored[k]
    std::vector<uint32_t> tau(t.arity());
    for (uint32_t k = 0; k < t.arity(); ++k) tau[sigma[k]] = stored[k];
    int sign_exponent = 0;
    for (uint32_t k = 0; k < t.arity(); ++k)
      for (uint32_t l = k + 1; l < t.arity(); ++l)
        if (sigma[k] > sigma[l] && t.dim().index_parity(tau[sigma[k]]) == Parity::Odd &&
            t.dim().index_parity(tau[sigma[l]]) == Parity::Odd)
          ++sign_exponent;
    Rational value = (sign_exponent & 1) ? Rational(-c) : c;
    out.add(tau, value);
  }
  return out;
}

namespace {

// Incremental exact RREF over sparse rows, lexicographic pivot order. Rows
// of a nearly full-rank reduced system stay sparse: a reduced row has its
// unit pivot plus entries only at the free columns.
class SparseEliminator {
 public:
  using Row = std::vector<std::pair<uint32_t, Rational>>;  // sorted by column

  explicit SparseEliminator(uint32_t cols) : cols_(cols) {}

  void add_row(Row row) {
    reduce(row);
    if (row.empty()) return;
    uint32_t lead = row.front().first;
    Rational inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    // back-substitute into existing rows to keep the form reduced
    for (auto& [p, existing] : rows_) {
      Rational factor = value_at(existing, lead);
      if (is_zero(factor)) continue;
      axpy(existing, row, -factor);
    }
    rows_.emplace(lead, std::move(row));
  }

  size_t rank() const { return rows_.size(); }

  /// Canonical kernel basis, one column per free variable.
  std::vector<Row> kernel_columns() const {
    std::vector<Row> out;
    for (uint32_t col = 0; col < cols_; ++col) {
      if (rows_.count(col)) continue;
      Row k;
      for (const auto& [p, row] : rows_) {
        Rational v = value_at(row, col);
        if (!is_zero(v)) k.emplace_back(p, -v);
      }
      k.emplace_back(col, Rational(1));
      std::sort(k.begin(), k.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(k));
    }
    return out;
  }

 private:
  static Rational value_at(const Row& row, uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, uint32_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : Rational(0);
  }

  // a += factor * b
  static void axpy(Row& a, const Row& b, const Rational& factor) {
    Row merged;
    merged.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        merged.push_back(std::move(a[i++]));
      } else if (i == a.size() || b[j].first < a[i].first) {
        merged.emplace_back(b[j].first, factor * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second + factor * b[j].second;
        if (!is_zero(v)) merged.emplace_back(a[i].first, std::move(v));
        ++i, ++j;
      }
    }
    a = std::move(merged);
  }

  void reduce(Row& row) const {
    // Eliminate every pivot-column entry. Pivot rows carry entries only at
    // free columns elsewhere, so each step removes one pivot column and
    // introduces none.
    while (true) {
      size_t idx = row.size();
      for (size_t i = 0; i < row.size(); ++i)
        if (rows_.count(row[i].first)) {
          idx = i;
          break;
        }
      if (idx == row.size()) return;
      Rational factor = -row[idx].second;  // pivot rows are normalized
      axpy(row, rows_.at(row[idx].first), factor);
    }
  }

  uint32_t cols_;
  std::map<uint32_t, Row> rows_;  // pivot column -> reduced row
};

uint64_t cell_count(uint32_t arity, SuperDim dim) {
  uint64_t cells = 1;
  for (uint32_t k = 0; k < arity; ++k) {
    if (dim.total() != 0 && cells > UINT64_MAX / dim.total()) return UINT64_MAX;
    cells *= dim.total();
  }
  return cells;
}

}  // namespace

InvariantBasis invariant_subspace(const std::vector<LieGenerator>& lie,
                                  const std::vector<RationalMatrix>& comps,
                                  uint32_t arity, SuperDim dim, Parity target,
                                  uint64_t max_cells) {
  if (cell_count(arity, dim) > max_cells)
    throw GuardExceeded("request exceeds the cell budget of " + std::to_string(max_cells));

  std::vector<std::vector<uint32_t>> columns = enumerate_tuples(arity, dim, target);
  std::map<std::vector<uint32_t>, uint32_t> column_index;
  for (uint32_t i = 0; i < columns.size(); ++i) column_index.emplace(columns[i], i);

  SparseEliminator elim(static_cast<uint32_t>(columns.size()));

  for (const LieGenerator& x : lie) {
    // rows indexed by output tuples (parity target + |X|); entries over the
    // input stratum: (X.t)(tau) = -sum_k s * X[j][tau_k] * t(tau with k->j)
    auto outputs = enumerate_tuples(arity, dim, target + x.parity);
    for (const auto& tau : outputs) {
      std::map<uint32_t, Rational> row_acc;
      int prefix_odd = 0;
      for (uint32_t k = 0; k < arity; ++k) {
        int s = (x.parity == Parity::Odd && (prefix_odd & 1)) ? 1 : -1;
        for (uint32_t j = 0; j < dim.total(); ++j) {
          const Rational& xe = x.matrix.at(j, tau[k]);
          if (is_zero(xe)) continue;
          std::vector<uint32_t> source = tau;
          source[k] = j;
          auto it = column_index.find(source);
          if (it == column_index.end()) continue;  // off-stratum, coefficient zero
          Rational& slot = row_acc[it->second];
          slot += Rational(s) * xe;
        }
        if (dim.index_parity(tau[k]) == Parity::Odd) ++prefix_odd;
      }
      SparseEliminator::Row row;
      for (auto& [c, v] : row_acc)
        if (!is_zero(v)) row.emplace_back(c, std::move(v));
      if (!row.empty()) elim.add_row(std::move(row));
    }
  }

  for (const RationalMatrix& g : comps) {
    for (uint32_t i = 0; i < dim.total(); ++i)
      for (uint32_t j = 0; j < dim.total(); ++j)
        if (dim.index_parity(i) != dim.index_parity(j) && !is_zero(g.at(i, j)))
          fail("component representatives must preserve parity blocks");
    // rows of (g.t - t)(tau) = sum_sigma prod_k g[sigma_k][tau_k] t(sigma) - t(tau)
    for (uint32_t ti = 0; ti < columns.size(); ++ti) {
      const auto& tau = columns[ti];
      std::map<uint32_t, Rational> row_acc;
      // enumerate sigma with all g[sigma_k][tau_k] nonzero
      std::vector<uint32_t> sigma(arity, 0);
      std::vector<std::vector<uint32_t>> choices(arity);
      for (uint32_t k = 0; k < arity; ++k)
        for (uint32_t s = 0; s < dim.total(); ++s)
          if (!is_zero(g.at(s, tau[k]))) choices[k].push_back(s);
      std::vector<uint32_t> pick(arity, 0);
      bool more = true;
      for (uint32_t k = 0; k < arity; ++k)
        if (choices[k].empty()) more = false;
      while (more) {
        Rational prod(1);
        for (uint32_t k = 0; k < arity; ++k) {
          sigma[k] = choices[k][pick[k]];
          prod *= g.at(sigma[k], tau[k]);
        }
        auto it = column_index.find(sigma);
        if (it != column_index.end()) row_acc[it->second] += prod;
        uint32_t k = arity;
        while (k > 0) {
          if (++pick[k - 1] < choices[k - 1].size()) break;
          pick[k - 1] = 0;
          --k;
        }
        if (k == 0) more = false;
      }
      row_acc[ti] -= 1;
      SparseEliminator::Row row;
      for (auto& [c, v] : row_acc)
        if (!is_zero(v)) row.emplace_back(c, std::move(v));
      if (!row.empty()) elim.add_row(std::move(row));
    }
  }

  auto kernel = elim.kernel_columns();

  // canonicalize: reduced row echelon over the lex column order
  RationalMatrix rows(kernel.size(), columns.size());
  for (size_t r = 0; r < kernel.size(); ++r)
    for (const auto& [c, v] : kernel[r]) rows.at(r, c) = v;
  RationalMatrix canon = row_space_basis(rows);

  InvariantBasis out;
  out.arity = arity;
  out.dim = dim;
  out.target_parity = target;
  for (size_t r = 0; r < canon.rows(); ++r) {
    TensorForm t(arity, dim, target);
    for (size_t c = 0; c < canon.cols(); ++c)
      if (!is_zero(canon.at(r, c))) t.set(columns[c], canon.at(r, c));
    out.basis.push_back(std::move(t));
  }
  return out;
}

namespace {

size_t matching_rank(const std::vector<TensorForm>& tensors,
                     const std::vector<std::vector<uint32_t>>& columns) {
  std::map<std::vector<uint32_t>, uint32_t> column_index;
  for (uint32_t i = 0; i < columns.size(); ++i) column_index.emplace(columns[i], i);
  RationalMatrix m(tensors.size(), columns.size());
  for (size_t r = 0; r < tensors.size(); ++r)
    for (const auto& [tuple, c] : tensors[r].coeffs()) m.at(r, column_index.at(tuple)) = c;
  return m.rank();
}

}  // namespace

FftReport fft_spanning_report(Group group, uint32_t m, uint32_t n, uint32_t arity,
                              uint64_t max_cells, bool emit_basis) {
  FormSpec f = (group == Group::OSp) ? FormSpec::standard_even(m, n)
                                     : FormSpec::standard_odd(n);
  if (cell_count(arity, f.dim) > max_cells)
    throw GuardExceeded("request exceeds the cell budget of " + std::to_string(max_cells));

  FftReport report;
  report.group = group;
  report.m = (group == Group::OSp) ? m : n;
  report.n = n;
  report.arity = arity;

  std::vector<LieGenerator> lie = lie_algebra_basis(f);
  std::vector<RationalMatrix> comps = component_representatives(f);

  std::vector<Matching> matchings = enumerate_matchings(arity);
  report.n_matchings = matchings.size();

  std::vector<TensorForm> tensors;
  tensors.reserve(matchings.size());
  for (const auto& p : matchings) tensors.push_back(matching_tensor(f, p));

  bool invariant = true;
  for (const auto& t : tensors) {
    for (const auto& x : lie)
      if (!lie_act_dual(x, t).is_zero()) invariant = false;
    for (const auto& g : comps)
      if (!(group_act(g, t) == t)) invariant = false;
  }
  report.all_matchings_invariant = invariant;

  if (arity % 2 != 0) {
    // no matchings; the invariant space should vanish in both strata
    size_t total_dim = 0;
    for (Parity p : {Parity::Even, Parity::Odd})
      total_dim += invariant_subspace(lie, comps, arity, f.dim, p, max_cells).dimension();
    report.rank = 0;
    report.invariant_dim = total_dim;
    report.pass = (total_dim == 0);
    return report;
  }

  Parity target = Parity::Even;
  if (group == Group::Pe) target = Parity((arity / 2) & 1);

  InvariantBasis inv = invariant_subspace(lie, comps, arity, f.dim, target, max_cells);
  report.invariant_dim = inv.dimension();
  report.rank = tensors.empty() ? 0 : matching_rank(tensors, enumerate_tuples(arity, f.dim, target));
  report.pass = invariant && (report.rank == report.invariant_dim);
  if (emit_basis) report.basis = std::move(inv);
  return report;
}

}  // namespace superfft
