// SPDX-License-Identifier: MIT
#include <cmath>
#include <limits>

#include "qnet/entropy.hpp"

namespace qnet {

namespace {

constexpr double kSupportTol = 1e-10;
constexpr double kOutsideMass = 1e-9;

void require_psd(const HermitianOperator& h, const char* what) {
  if (!is_psd(h)) throw InputError(std::string(what) + " is not positive semidefinite");
}

HermitianOperator combine(const std::vector<SparseHermitian>& rows, const RealVector& y,
                          Eigen::Index dim, double scale) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].add_to(m, y(static_cast<Eigen::Index>(i)) * scale);
  return HermitianOperator::trusted((m + m.adjoint()) * 0.5);
}

EntropyValue homogenized(const LabeledOperator& a, const ConstraintSet& cs, const SolverOptions& so) {
  const Eigen::Index n = cs.layout.total_dim();
  const SparseHermitian& f0 = cs.normalization();
  const double b0 = cs.normalization_rhs();
  std::vector<SparseHermitian> rows;
  std::vector<double> rhs;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i == cs.normalization_index) continue;
    rows.push_back(cs.equalities[i]);
    rhs.push_back(-cs.equalities[i].inner(a.matrix()));
  }
  const HermitianOperator objective(f0.to_dense() * (-1.0 / b0));
  const SdpProblem p = SdpProblem::single_block(objective, rows, rhs, cs.independent);
  const SdpSolution s = solve_primal(p, so);

  EntropyValue v;
  v.method = "homogenized";
  v.certificate = certify(p, s, so);
  v.certificate->rows = rows.size();
  if (s.status == SdpStatus::Infeasible || s.status == SdpStatus::Unbounded)
    throw SdpStatusError("d_max_to_set", s.status);
  const double offset = f0.inner(a.matrix()) / b0;
  v.lambda = offset - s.primal_value;
  v.bits = std::log2(v.lambda);
  const HermitianOperator g = s.primal_point[0] + a.op;
  v.witness = LabeledOperator(cs.layout, g * (1.0 / v.lambda));
  HermitianOperator x = combine(rows, s.dual_point, n, 1.0);
  x = x + HermitianOperator::trusted(f0.to_dense() * (1.0 / b0));
  v.maximizer = LabeledOperator(cs.layout, HermitianOperator::trusted((x.matrix() + x.matrix().adjoint()) * 0.5));
  return v;
}

EntropyValue generators(const LabeledOperator& a, const ConstraintSet& cs, const ConeGenerators& g,
                        const SolverOptions& so) {
  const Eigen::Index n = cs.layout.total_dim();
  const ComplexMatrix f0 = cs.normalization().to_dense();
  const double b0 = cs.normalization_rhs();
  std::vector<double> c;
  c.reserve(g.generators.size());
  for (const auto& gk : g.generators) c.push_back(gk.inner(f0) / b0);
  const SdpProblem p = SdpProblem::single_block(a.op, g.generators, c, g.independent);
  const SdpSolution s = solve_dual(p, so);

  EntropyValue v;
  v.method = "generators";
  v.certificate = certify(p, s, so);
  v.certificate->rows = g.generators.size();
  if (s.status == SdpStatus::Infeasible || s.status == SdpStatus::Unbounded)
    throw SdpStatusError("d_max_to_set", s.status);
  v.lambda = s.dual_value;
  v.bits = std::log2(v.lambda);
  v.witness = LabeledOperator(cs.layout, combine(g.generators, s.dual_point, n, 1.0 / v.lambda));
  v.maximizer = LabeledOperator(cs.layout, s.primal_point[0]);
  return v;
}

}  // namespace

Certificate certify(const SdpProblem& p, const SdpSolution& s, const SolverOptions& opts) {
  Certificate c;
  c.status = s.status;
  c.primal_value = s.primal_value;
  c.dual_value = s.dual_value;
  c.residual_primal = s.residual_primal;
  c.residual_dual = s.residual_dual;
  c.gap = s.gap;
  c.iterations = s.iterations;
  c.rows = p.num_constraints();
  if (s.status == SdpStatus::Optimal || s.status == SdpStatus::Inaccurate) {
    const CertificateReport r = verify_certificates(p, s, opts.tol, opts.gap_tol);
    c.verified = r.matches_solution;
    if (s.status == SdpStatus::Optimal && !(r.certifies_optimality && r.matches_solution))
      c.status = SdpStatus::Inaccurate;
  }
  return c;
}

EntropyValue d_max_pair(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw InputError("d_max_pair: operands differ in dimension");
  require_psd(a, "d_max_pair: first operand");
  require_psd(b, "d_max_pair: second operand");
  EntropyValue v;
  v.method = "spectral";
  if (max_abs(a.matrix()) == 0.0) {
    v.lambda = 0.0;
    v.bits = -std::numeric_limits<double>::infinity();
    return v;
  }
  const PinvSqrt s = support_pinv_sqrt(b, kSupportTol);
  const Eigen::Index n = a.dim();
  const ComplexMatrix outside = ComplexMatrix::Identity(n, n) - s.projector.matrix();
  const double mass = max_eigenvalue(HermitianOperator::trusted(
      [&] {
        ComplexMatrix m = outside * a.matrix() * outside;
        return ComplexMatrix((m + m.adjoint()) * 0.5);
      }()));
  if (mass > kOutsideMass * std::max(1.0, max_eigenvalue(a))) {
    v.lambda = std::numeric_limits<double>::infinity();
    v.bits = std::numeric_limits<double>::infinity();
    return v;
  }
  const ComplexMatrix m = s.pinv_sqrt.matrix() * a.matrix() * s.pinv_sqrt.matrix();
  v.lambda = max_eigenvalue(HermitianOperator::trusted((m + m.adjoint()) * 0.5));
  v.bits = std::log2(v.lambda);
  return v;
}

EntropyValue d_max_to_set(const LabeledOperator& a_in, const ConstraintSet& cs,
                          const EntropyOptions& opts) {
  const LabeledOperator a = align_to(a_in, cs.layout);
  require_psd(a.op, "d_max_to_set: operand");
  if (max_abs(a.matrix()) == 0.0) {
    EntropyValue v;
    v.method = "zero";
    v.lambda = 0.0;
    v.bits = -std::numeric_limits<double>::infinity();
    return v;
  }
  DmaxForm form = opts.form;
  ConeGenerators g;
  if (form != DmaxForm::Homogenized) {
    g = cone_generators(cs);
    if (form == DmaxForm::Auto)
      form = g.generators.size() < cs.size() - 1 ? DmaxForm::Generators : DmaxForm::Homogenized;
  }
  return form == DmaxForm::Generators ? generators(a, cs, g, opts.solver)
                                      : homogenized(a, cs, opts.solver);
}

}  // namespace qnet
