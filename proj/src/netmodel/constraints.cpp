// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "qnet/netmodel.hpp"

namespace qnet {

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::Comb: return "comb";
    case SetKind::DualComb: return "dual_comb";
    case SetKind::Tester: return "tester";
    case SetKind::NoSig: return "nosig";
    case SetKind::DualNoSig: return "dual_nosig";
    case SetKind::Custom: return "custom";
  }
  return "custom";
}

namespace {

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// G (x) E (x) I over all systems not named, for G in a traceless basis on
// `traceless` and E in a full basis on `free`.
void push_rows(const SystemLayout& layout, const std::vector<std::string>& traceless,
               const std::vector<std::string>& free, std::vector<SparseHermitian>& rows) {
  const auto gs = traceless_hermitian_basis(layout.dim_of(traceless));
  const auto es = hermitian_basis(layout.dim_of(free));
  for (const auto& g : gs)
    for (const auto& e : es) rows.push_back(embed_factors(layout, {traceless, free}, {g, e}));
}

// Tr_{A_n^out, later}[C] = I_{A_n^in} (x) (.)
void comb_level(const SystemLayout& layout, int n, std::vector<SparseHermitian>& rows) {
  push_rows(layout, layout.labels_with(Role::In, n), layout.labels_before(n), rows);
}

// Tr_{later}[G] = I_{A_k^out} (x) (.)
void dual_comb_level(const SystemLayout& layout, int k, std::vector<SparseHermitian>& rows) {
  push_rows(layout, layout.labels_with(Role::Out, k),
            concat(layout.labels_before(k), layout.labels_with(Role::In, k)), rows);
}

void finish(ConstraintSet& cs, double norm_rhs, HermitianOperator interior) {
  cs.normalization_index = cs.equalities.size();
  cs.equalities.push_back(SparseHermitian::identity(cs.layout.total_dim()));
  cs.rhs.assign(cs.equalities.size(), 0.0);
  cs.rhs[cs.normalization_index] = norm_rhs;
  cs.interior = std::move(interior);
  // Every constructor must expose a strictly positive feasible point.
  const ComplexMatrix& x = cs.interior.matrix();
  double worst = 0.0;
  for (std::size_t i = 0; i < cs.equalities.size(); ++i)
    worst = std::max(worst, std::abs(cs.equalities[i].inner(x) - cs.rhs[i]));
  if (worst > 1e-9 * std::max(1.0, norm_rhs) || psd_margin(cs.interior) <= 0)
    throw InputError("constraint set has no strictly positive feasible point (residual " +
                     std::to_string(worst) + ")");
}

HermitianOperator scaled_identity(Eigen::Index d, double s) {
  return HermitianOperator::identity(d) * s;
}

}  // namespace

ConstraintSet comb_constraints(const SystemLayout& layout) {
  layout.require_comb_shape();
  ConstraintSet cs;
  cs.kind = SetKind::Comb;
  cs.layout = layout;
  for (int n = 1; n <= layout.num_steps(); ++n) comb_level(layout, n, cs.equalities);
  cs.independent = true;
  const auto d = layout.total_dim();
  finish(cs, static_cast<double>(layout.dim_with(Role::In)),
         scaled_identity(d, 1.0 / static_cast<double>(layout.dim_with(Role::Out))));
  return cs;
}

ConstraintSet dual_comb_constraints(const SystemLayout& layout) {
  layout.require_comb_shape();
  ConstraintSet cs;
  cs.kind = SetKind::DualComb;
  cs.layout = layout;
  for (int k = 1; k <= layout.num_steps(); ++k) dual_comb_level(layout, k, cs.equalities);
  cs.independent = true;
  const auto d = layout.total_dim();
  finish(cs, static_cast<double>(layout.dim_with(Role::Out)),
         scaled_identity(d, 1.0 / static_cast<double>(layout.dim_with(Role::In))));
  return cs;
}

ConstraintSet tester_constraints(const SystemLayout& layout, int outcomes) {
  if (outcomes < 1) throw InputError("tester: outcomes must be >= 1");
  ConstraintSet cs = dual_comb_constraints(layout);
  cs.kind = SetKind::Tester;
  cs.outcomes = outcomes;
  return cs;
}

SystemLayout party_layout(const std::vector<Party>& parties) {
  std::vector<System> sys;
  int step = 1;
  for (const auto& p : parties) {
    sys.push_back({p.in_label, p.d_in, Role::In, step});
    sys.push_back({p.out_label, p.d_out, Role::Out, step});
    ++step;
  }
  return SystemLayout(std::move(sys));
}

ConstraintSet nosig_constraints(const std::vector<Party>& parties) {
  const std::size_t k = parties.size();
  if (k == 0) throw InputError("nosig: at least one party required");
  if (k > 4) throw InputError("nosig: at most 4 parties supported");
  ConstraintSet cs;
  cs.kind = SetKind::NoSig;
  cs.layout = party_layout(parties);
  cs.parties = parties;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::string> in_j, rest;
    for (std::size_t p = 0; p < k; ++p) {
      if (mask & (1u << p)) {
        in_j.push_back(parties[p].in_label);
      } else {
        rest.push_back(parties[p].in_label);
        rest.push_back(parties[p].out_label);
      }
    }
    push_rows(cs.layout, in_j, rest, cs.equalities);
  }
  cs.independent = false;
  const auto d = cs.layout.total_dim();
  finish(cs, static_cast<double>(cs.layout.dim_with(Role::In)),
         scaled_identity(d, 1.0 / static_cast<double>(cs.layout.dim_with(Role::Out))));
  return cs;
}

ConstraintSet dual_nosig_constraints(const std::vector<Party>& parties) {
  ConstraintSet d = numerical_dual(nosig_constraints(parties), SetKind::DualNoSig);
  d.parties = parties;
  return d;
}

ConstraintSet conditioning_comb_constraints(const SystemLayout& layout) {
  layout.require_comb_shape();
  const int n = layout.num_steps();
  ConstraintSet cs;
  cs.kind = SetKind::Custom;
  cs.layout = layout;
  for (int k = 1; k < n; ++k) comb_level(layout, k, cs.equalities);
  const auto last = concat(layout.labels_with(Role::In, n), layout.labels_with(Role::Out, n));
  push_rows(layout, last, layout.labels_before(n), cs.equalities);
  cs.independent = true;
  for (int k = 1; k < n; ++k) dual_comb_level(layout, k, cs.cone_span);
  cs.cone_span.push_back(SparseHermitian::identity(layout.total_dim()));
  cs.cone_span_independent = true;

  Eigen::Index din = 1, dout = 1;
  for (int k = 1; k < n; ++k) {
    din *= layout.dim_with(Role::In, k);
    dout *= layout.dim_with(Role::Out, k);
  }
  const double norm = static_cast<double>(layout.dim_of(last) * din);
  finish(cs, norm, scaled_identity(layout.total_dim(), 1.0 / static_cast<double>(dout)));
  return cs;
}

ConeGenerators cone_generators(const ConstraintSet& cs) {
  ConeGenerators g;
  switch (cs.kind) {
    case SetKind::Comb:
      g.generators = dual_comb_constraints(cs.layout).equalities;
      g.independent = true;
      return g;
    case SetKind::DualComb:
      g.generators = comb_constraints(cs.layout).equalities;
      g.independent = true;
      return g;
    case SetKind::NoSig:
      g.generators = numerical_dual(cs, SetKind::DualNoSig).equalities;
      g.independent = true;
      return g;
    case SetKind::DualNoSig:
      g.generators = nosig_constraints(cs.parties).equalities;
      g.independent = false;
      return g;
    case SetKind::Tester:
      throw InputError("cone generators are not defined for tester sets");
    case SetKind::Custom:
      break;
  }
  if (!cs.cone_span.empty()) {
    g.generators = cs.cone_span;
    g.independent = cs.cone_span_independent;
    return g;
  }
  g.generators = numerical_dual(cs, SetKind::Custom).equalities;
  g.independent = true;
  return g;
}

}  // namespace qnet
