// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/entropy.hpp"

namespace qnet {

namespace {

constexpr Eigen::Index kWitnessDimLimit = 16;

}  // namespace

LabeledOperator full_rank_dual_element(const ConstraintSet& cs) {
  const Eigen::Index n = cs.layout.total_dim();
  const ComplexMatrix f0 = cs.normalization().to_dense();
  const cplx c = f0.trace() / static_cast<double>(n);
  bool identity_in_span = max_abs(f0 - c * ComplexMatrix::Identity(n, n)) <= 1e-12 * std::max(1.0, std::abs(c)) &&
                          std::abs(c) > 0;
  if (!identity_in_span && n <= 64) {
    const RealMatrix rows = vectorized_rows(cs.equalities, n);
    const RealVector id = hermitian_to_real(ComplexMatrix::Identity(n, n));
    const RealVector coef = rows.transpose().colPivHouseholderQr().solve(id);
    identity_in_span = (rows.transpose() * coef - id).norm() <= 1e-9 * id.norm();
  }
  if (!identity_in_span)
    throw InputError("no full-rank dual element: the identity is not in the span of the constraints");
  return LabeledOperator(cs.layout, HermitianOperator::identity(n) * (1.0 / cs.interior.trace()));
}

DmaxWitness network_dmax_witness(const LabeledOperator& c0_in, const LabeledOperator& c1_in,
                                 const ConstraintSet& cs) {
  const LabeledOperator c0 = align_to(c0_in, cs.layout);
  const LabeledOperator c1 = align_to(c1_in, cs.layout);
  for (const auto* c : {&c0, &c1}) {
    const ValidationReport r = validate(*c, cs, 1e-7);
    if (!r.member) throw InputError("network_dmax_witness: operand is not in the constraint set");
  }
  const Eigen::Index n = cs.layout.total_dim();
  if (n > kWitnessDimLimit)
    throw InputError("network_dmax_witness: operator dim is limited to " + std::to_string(kWitnessDimLimit));

  DmaxWitness w;
  w.value = d_max_pair(c0.op, c1.op);
  w.gamma = full_rank_dual_element(cs);

  // |Psi> = sum_i sqrt(g_i) |conj(phi_i)>_L |phi_i>_S, so that C * E = sqrt(G) C sqrt(G) on S.
  const Spectrum sp = eigh(w.gamma.op);
  ComplexVector psi = ComplexVector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double g = std::max(0.0, sp.eigenvalues(i));
    const ComplexVector phi = sp.eigenvectors.col(i);
    for (Eigen::Index l = 0; l < n; ++l)
      for (Eigen::Index s = 0; s < n; ++s) psi(l * n + s) += std::sqrt(g) * std::conj(phi(l)) * phi(s);
  }
  std::vector<System> copy;
  for (const auto& s : cs.layout.systems()) copy.push_back({"S:" + s.label, s.dim, s.role, s.step});
  const SystemLayout s_layout(copy);
  w.network = LabeledOperator(cs.layout.concat(s_layout), HermitianOperator::trusted(psi * psi.adjoint()));
  w.state0 = link_product(c0, w.network);
  w.state1 = link_product(c1, w.network);
  w.witness_bits = d_max_pair(w.state0.op, w.state1.op).bits;
  return w;
}

}  // namespace qnet
