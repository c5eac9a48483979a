// SPDX-License-Identifier: MIT
#include "qnet/entropy.hpp"

namespace qnet {

ScoreResult max_score(const LabeledOperator& omega_in, const ConstraintSet& cs,
                      const SolverOptions& opts) {
  const LabeledOperator omega = align_to(omega_in, cs.layout);
  const SdpProblem p = SdpProblem::single_block(omega.op, cs.equalities, cs.rhs, cs.independent);
  const SdpSolution s = solve_primal(p, opts);
  if (s.status == SdpStatus::Infeasible || s.status == SdpStatus::Unbounded)
    throw SdpStatusError("max_score", s.status);

  ScoreResult r;
  r.certificate = certify(p, s, opts);
  r.omega_max = s.primal_value;
  r.optimal_network = LabeledOperator(cs.layout, s.primal_point[0]);
  r.lambda = s.dual_value;
  r.gap = s.gap;
  const Eigen::Index n = cs.layout.total_dim();
  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  const double scale = r.lambda > 0 ? 1.0 / r.lambda : 1.0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    cs.equalities[i].add_to(g, s.dual_point(static_cast<Eigen::Index>(i)) * scale);
  r.gamma = LabeledOperator(cs.layout, HermitianOperator::trusted((g + g.adjoint()) * 0.5));
  return r;
}

ScoreResult max_score_causal(const LabeledOperator& omega, const SystemLayout& comb_layout,
                             const SolverOptions& opts) {
  return max_score(omega, comb_constraints(comb_layout), opts);
}

ScoreResult max_score_noncausal(const LabeledOperator& omega, const std::vector<Party>& parties,
                                const SolverOptions& opts) {
  if (parties.size() > 4) throw InputError("max_score_noncausal: at most 4 parties supported");
  return max_score(omega, dual_nosig_constraints(parties), opts);
}

}  // namespace qnet
