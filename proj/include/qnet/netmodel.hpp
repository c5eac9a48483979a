// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qnet/layout.hpp"
#include "qnet/linalg.hpp"
#include "qnet/random.hpp"
#include "qnet/sparse.hpp"

namespace qnet {

// Hermitian operator whose tensor factors are named by a layout.
struct LabeledOperator {
  SystemLayout layout;
  HermitianOperator op;

  LabeledOperator() = default;
  LabeledOperator(SystemLayout l, HermitianOperator o);

  Eigen::Index dim() const { return op.dim(); }
  const ComplexMatrix& matrix() const { return op.matrix(); }
};

// A*B = Tr_Y[(A (x) I)(I (x) B^{T_Y})], Y = shared labels. The result lists
// A's remaining systems first, then B's.
LabeledOperator link_product(const LabeledOperator& a, const LabeledOperator& b);
LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b);
LabeledOperator reorder(const LabeledOperator& a, const std::vector<std::string>& order);
// Reorders `a` to the label order of `target` and adopts its role/step tags.
// Throws unless both carry the same labels with equal dims.
LabeledOperator align_to(const LabeledOperator& a, const SystemLayout& target);
LabeledOperator trace_out(const LabeledOperator& a, const std::vector<std::string>& labels);
LabeledOperator transpose(const LabeledOperator& a);
LabeledOperator relabel(const LabeledOperator& a, const std::map<std::string, std::string>& names);
// a (x) I on the systems of `full` missing from a, in the order of `full`.
LabeledOperator extend_identity(const LabeledOperator& a, const SystemLayout& full);
LabeledOperator scalar_operator(double value);
double scalar_value(const LabeledOperator& a);
// Tr(a b) after aligning b to a's label order.
double pairing(const LabeledOperator& a, const LabeledOperator& b);

// Choi operator sum_i K|i><j|K^dagger (x) |i><j| of a Kraus map from the
// systems `in` to the systems `out`; the result lists `out` first.
LabeledOperator choi_from_kraus(const std::vector<ComplexMatrix>& kraus, const SystemLayout& in,
                                const SystemLayout& out);
LabeledOperator choi_from_unitary(const ComplexMatrix& u, const SystemLayout& in,
                                  const SystemLayout& out);
// |I>><<I| on (a, b), the unnormalized maximally entangled projector.
LabeledOperator max_entangled(const System& a, const System& b);

// ---------------------------------------------------------------------------
// Constraint sets

enum class SetKind { Comb, DualComb, Tester, NoSig, DualNoSig, Custom };
std::string to_string(SetKind k);

struct Party {
  std::string in_label;
  std::string out_label;
  int d_in = 2;
  int d_out = 2;
};

// Affine set {X : <F_i, X> = b_i} intersected with the PSD cone. Exactly
// one row (normalization_index) is inhomogeneous; every other rhs is zero.
// For testers the equalities act on the sum of the outcome operators.
struct ConstraintSet {
  SetKind kind = SetKind::Custom;
  SystemLayout layout;
  std::vector<SparseHermitian> equalities;
  std::vector<double> rhs;
  std::size_t normalization_index = 0;
  int outcomes = 1;
  bool independent = false;   // rows known to be linearly independent
  HermitianOperator interior;  // strictly positive feasible point
  std::vector<Party> parties;  // no-signalling kinds only
  // Optional spanning set of {X : homogeneous rows vanish on X}; filled by
  // constructors that know it in closed form.
  std::vector<SparseHermitian> cone_span;
  bool cone_span_independent = false;

  std::size_t size() const { return equalities.size(); }
  const SparseHermitian& normalization() const { return equalities[normalization_index]; }
  double normalization_rhs() const { return rhs[normalization_index]; }
};

ConstraintSet comb_constraints(const SystemLayout& layout);
ConstraintSet dual_comb_constraints(const SystemLayout& layout);
ConstraintSet tester_constraints(const SystemLayout& layout, int outcomes);
// Parties are laid out as [in_1, out_1, in_2, out_2, ...], step k = party k.
ConstraintSet nosig_constraints(const std::vector<Party>& parties);
ConstraintSet dual_nosig_constraints(const std::vector<Party>& parties);
SystemLayout party_layout(const std::vector<Party>& parties);
// {I_{t_N} (x) G : G in Comb(steps 1..N-1)}, t_N = systems of the last step.
ConstraintSet conditioning_comb_constraints(const SystemLayout& layout);

// Spanning set of the cone over `cs`, i.e. the rows of its dual set.
struct ConeGenerators {
  std::vector<SparseHermitian> generators;
  bool independent = false;
};
ConeGenerators cone_generators(const ConstraintSet& cs);

// Dense real matrix whose rows are the vectorized equalities.
RealMatrix vectorized_rows(const std::vector<SparseHermitian>& rows, Eigen::Index dim);
// Orthonormal basis of {X : <F_i, X> = 0 for all rows}, dense.
std::vector<HermitianOperator> primal_direction_basis(const ConstraintSet& cs);

struct DualAffineBasis {
  LabeledOperator anchor;                   // minimum-norm element of the dual affine space
  std::vector<HermitianOperator> basis;     // orthonormal directions
  LabeledOperator anchor_primal;            // strictly positive primal point
  std::vector<HermitianOperator> primal_directions;
};
DualAffineBasis dual_affine_basis(const ConstraintSet& cs);
struct DualMembership {
  double pairing_residual;  // |<G, anchor_primal> - 1|
  double orthogonality;     // max |<G, primal direction>|
};
DualMembership dual_membership(const HermitianOperator& g, const DualAffineBasis& basis);
// Dual set built numerically from the nullspace of the rows.
ConstraintSet numerical_dual(const ConstraintSet& cs, SetKind kind);

// ---------------------------------------------------------------------------
// Validation and the Born rule

struct ValidationReport {
  double max_equality_residual = 0;
  double psd_margin = 0;
  bool member = false;
};

// Equalities are checked through the defining partial-trace relations for
// Comb, DualComb and NoSig, and through the rows otherwise.
ValidationReport validate(const LabeledOperator& op, const ConstraintSet& cs, double tol = 1e-8);
ValidationReport validate_tester(const std::vector<LabeledOperator>& elements,
                                 const ConstraintSet& cs, double tol = 1e-8);
// max_i |<F_i, X> - b_i|
double row_residual(const LabeledOperator& op, const ConstraintSet& cs);

// Tr[T C^T]
double born_probability(const LabeledOperator& tester_element, const LabeledOperator& comb);

struct Instrument {
  SystemLayout layout;
  std::vector<LabeledOperator> elements;
};
// Checks each element is PSD and Tr_out(sum) = I_in within tol.
Instrument make_instrument(const SystemLayout& layout, std::vector<LabeledOperator> elements,
                           double tol = 1e-9);
// max |Tr_out C - I_in| for a Choi operator whose layout tags in/out roles.
double channel_residual(const LabeledOperator& c);

// ---------------------------------------------------------------------------
// Random networks (Stinespring dilations with finite memory)

LabeledOperator random_channel(const SystemLayout& in, const SystemLayout& out, Rng& rng,
                               int kraus_rank = 0);
LabeledOperator random_comb(const SystemLayout& layout, int memory_dim, Rng& rng);
LabeledOperator random_dual_comb(const SystemLayout& layout, int memory_dim, Rng& rng);
std::vector<LabeledOperator> random_tester(const SystemLayout& layout, int outcomes,
                                           int memory_dim, Rng& rng);
std::vector<HermitianOperator> random_povm(Eigen::Index d, int outcomes, Rng& rng);
// interior + t * (random direction of the affine set), PSD by construction.
LabeledOperator random_feasible_point(const ConstraintSet& cs, Rng& rng, double spread = 0.5);

}  // namespace qnet
