#pragma once

// Multilinear forms on V^N over the rationals, matching-tensor generators,
// the infinitesimal dual action, and the exactly-computed subspace of
// group-invariant forms. Spanning verification compares the rank of the
// matching tensors with the dimension of the invariant subspace.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superfft/forms.hpp"
#include "superfft/matchings.hpp"

namespace superfft {

/// Thrown when a request exceeds the configured cell budget
/// ((total dimension)^N coefficients).
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficient table of a multilinear form V^N -> C (or the odd line, for
/// odd-parity tables): tuple -> value on the corresponding basis vectors.
/// All stored tuples share the declared total parity; zero entries are not
/// stored.
class TensorForm {
 public:
  TensorForm(uint32_t arity, SuperDim dim, Parity parity)
      : arity_(arity), dim_(dim), parity_(parity) {}

  uint32_t arity() const { return arity_; }
  SuperDim dim() const { return dim_; }
  Parity parity() const { return parity_; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<std::vector<uint32_t>, Rational>& coeffs() const { return coeffs_; }
  Rational at(const std::vector<uint32_t>& tuple) const;
  void set(const std::vector<uint32_t>& tuple, Rational value);
  void add(const std::vector<uint32_t>& tuple, const Rational& value);

  Parity tuple_parity(const std::vector<uint32_t>& tuple) const;

  bool operator==(const TensorForm&) const = default;

 private:
  uint32_t arity_;
  SuperDim dim_;
  Parity parity_;
  std::map<std::vector<uint32_t>, Rational> coeffs_;
};

/// All index tuples of the given total parity, lexicographic.
std::vector<std::vector<uint32_t>> enumerate_tuples(uint32_t arity, SuperDim dim,
                                                    Parity parity);

/// The form v_1,...,v_N -> prod B(v_a, v_b) over the pairs of P in canonical
/// order, with every Koszul sign produced by evaluating the product on
/// generic points inside a supercommutative ring. Value tables of odd-form
/// products land in the stratum of parity |P| mod 2.
TensorForm matching_tensor(const FormSpec& f, const Matching& p);

/// (X.t)(v_1 x...x v_N) = -sum_k (-1)^{|X|(p(i_1)+...+p(i_{k-1}))}
///                        t(v_1,...,Xv_k,...,v_N).
TensorForm lie_act_dual(const LieGenerator& x, const TensorForm& t);

/// (g.t)(e_i1,...,e_iN) = t(g e_i1,..., g e_iN) for a parity-preserving
/// rational g (cross blocks must vanish).
TensorForm group_act(const RationalMatrix& g, const TensorForm& t);

/// Koszul action of a slot permutation:
/// (sigma.t)(tau) = kappa(sigma, tau) * t(tau o sigma), with kappa the sign
/// of the corresponding symmetry isomorphism of V^N. Relabeling a matching
/// by sigma matches this action on its tensor.
TensorForm permute_slots(const std::vector<uint32_t>& sigma, const TensorForm& t);

Matching relabel(const std::vector<uint32_t>& sigma, const Matching& p);

/// Sign of the permutation sorting sigma's image pairs back into canonical
/// order. Even-form matching tensors satisfy
///   permute_slots(sigma, t_P) == t_{relabel(sigma, P)}
/// exactly; for an odd form the B factors are odd and anticommute, so the
/// relation holds up to this sign.
int relabel_sign(const std::vector<uint32_t>& sigma, const Matching& p);

struct InvariantBasis {
  uint32_t arity = 0;
  SuperDim dim;
  Parity target_parity = Parity::Even;
  std::vector<TensorForm> basis;  // canonical echelon basis over lex tuples
  size_t dimension() const { return basis.size(); }
};

inline constexpr uint64_t kDefaultMaxCells = 46656;  // 6^6

/// Exact nullspace of {X.t = 0 for X in lie} and {g.t = t for g in comps}
/// over the declared parity stratum, via incremental sparse elimination with
/// lexicographic pivot order. Throws GuardExceeded when total^arity exceeds
/// max_cells.
InvariantBasis invariant_subspace(const std::vector<LieGenerator>& lie,
                                  const std::vector<RationalMatrix>& comps,
                                  uint32_t arity, SuperDim dim, Parity target,
                                  uint64_t max_cells = kDefaultMaxCells);

enum class Group { OSp, Pe };

struct FftReport {
  Group group = Group::OSp;
  uint32_t m = 0;  // even dimension (n for the periplectic case)
  uint32_t n = 0;  // half the odd dimension (resp. n for n|n)
  uint32_t arity = 0;
  size_t n_matchings = 0;
  size_t rank = 0;
  size_t invariant_dim = 0;
  bool all_matchings_invariant = false;
  bool pass = false;
  std::optional<InvariantBasis> basis;
};

/// Rank of the matching tensors vs the invariant dimension in the matching
/// parity stratum (for odd arity, the sum over both strata, expected zero).
/// PASS means rank == dim and every matching tensor is exactly invariant.
FftReport fft_spanning_report(Group group, uint32_t m, uint32_t n, uint32_t arity,
                              uint64_t max_cells = kDefaultMaxCells,
                              bool emit_basis = false);

}  // namespace superfft
