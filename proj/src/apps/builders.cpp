// SPDX-License-Identifier: MIT
#include "qnet/apps.hpp"

namespace qnet {

namespace {

// Operator given in the factor order `labels` of `full`, returned in the order of `full`.
LabeledOperator placed(const SystemLayout& full, const std::vector<std::string>& labels,
                       const ComplexMatrix& m) {
  return align_to(LabeledOperator(full.select(labels), HermitianOperator::trusted((m + m.adjoint()) * 0.5)),
                  full);
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix basis_projector(Eigen::Index n, Eigen::Index k) {
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  p(k, k) = 1.0;
  return p;
}

// Pair of projector blocks A_{xy} (x) A_{zw} / m summed over both sectors.
ComplexMatrix two_sector(const ProjectorPair& p, double scale) {
  return scale * (kron(p.p_plus.matrix(), p.p_plus.matrix()) / static_cast<double>(p.d_plus) +
                  kron(p.p_minus.matrix(), p.p_minus.matrix()) / static_cast<double>(p.d_minus));
}

}  // namespace

LabeledOperator omega_inversion(int d) {
  const SystemLayout l = gate_layout(d);
  const double d2 = static_cast<double>(d) * d;
  return placed(l, {"3", "1", "2", "0"}, two_sector(sym_antisym(d), 1.0 / d2));
}

LabeledOperator omega_conjugation(int d) {
  const SystemLayout l = gate_layout(d);
  const double d2 = static_cast<double>(d) * d;
  return placed(l, {"3", "2", "1", "0"}, two_sector(sym_antisym(d), 1.0 / d2));
}

LabeledOperator omega_controlization_block(int d, int k) {
  const SystemLayout l = gate_layout(d);
  const EntangledResources e = entangled_resources(d);
  const double norm = 1.0 / (4.0 * d * d);
  if (k == 0)
    return placed(l, {"3", "0", "2", "1"},
                  norm * kron(e.e_projector.matrix(), identity(static_cast<Eigen::Index>(d) * d)));
  if (k == 1)
    return placed(l, {"3", "2", "1", "0"},
                  norm * (kron(e.e_projector.matrix(), e.e_projector.matrix()) +
                          kron(e.e_perp.matrix(), e.e_perp.matrix()) / static_cast<double>(e.d_perp)));
  throw InputError("omega_controlization_block: block index must be 0 or 1");
}

LabeledOperator omega_controlization(int d) {
  const SystemLayout l = controlization_layout(d);
  const ComplexMatrix m = kron(omega_controlization_block(d, 0).matrix(), basis_projector(4, 0)) +
                          kron(omega_controlization_block(d, 1).matrix(), basis_projector(4, 3));
  return LabeledOperator(l, HermitianOperator::trusted(m));
}

AnalyticCertificate inversion_certificate(int d) {
  const ProjectorPair p = sym_antisym(d);
  const ComplexMatrix q = p.p_plus.matrix() / (2.0 * p.d_plus) + p.p_minus.matrix() / (2.0 * p.d_minus);
  AnalyticCertificate c;
  c.lambda = inversion_optimum(d);
  c.gamma = placed(gate_layout(d), {"3", "1", "2", "0"}, kron(identity(static_cast<Eigen::Index>(d) * d), q));
  return c;
}

AnalyticCertificate conjugation_certificate(int d) {
  const SystemLayout l = gate_layout(d);
  AnalyticCertificate c;
  c.lambda = conjugation_optimum(d);
  c.gamma = LabeledOperator(l, HermitianOperator::identity(l.total_dim()) * (1.0 / (static_cast<double>(d) * d)));
  return c;
}

AnalyticCertificate controlization_certificate(int d) {
  const SystemLayout l = controlization_layout(d);
  AnalyticCertificate c;
  c.lambda = controlization_optimum();
  c.gamma =
      LabeledOperator(l, HermitianOperator::identity(l.total_dim()) * (1.0 / (2.0 * d * static_cast<double>(d))));
  return c;
}

LabeledOperator conjugation_optimal_comb(int d) {
  const ProjectorPair p = sym_antisym(d);
  const ComplexMatrix k = p.p_minus.matrix() * (static_cast<double>(d) / p.d_minus);
  return placed(gate_layout(d), {"3", "2", "1", "0"}, kron(k, k));
}

LabeledOperator transpose_strategy_comb(int d) {
  const ProjectorPair p = sym_antisym(d);
  const ComplexMatrix k = p.p_plus.matrix() * (static_cast<double>(d) / p.d_plus);
  return placed(gate_layout(d), {"3", "2", "1", "0"}, kron(k, k));
}

LabeledOperator classically_controlled_comb(int d) {
  const SystemLayout l = controlization_layout(d);
  const EntangledResources e = entangled_resources(d);
  const ComplexMatrix phi = e.max_ent_vector * e.max_ent_vector.adjoint();
  const Eigen::Index dd = d;
  // Control 0: the target bypasses the black box, which receives |0>.
  const ComplexMatrix bypass = kron(kron(kron(phi, basis_projector(dd, 0)), identity(dd)),
                                    kron(basis_projector(2, 0), basis_projector(2, 0)));
  // Control 1: the target is routed through the black box.
  const ComplexMatrix through = kron(kron(phi, phi), kron(basis_projector(2, 1), basis_projector(2, 1)));
  LabeledOperator c = placed(l, {"3", "0", "1", "2", "Qp", "Q"}, bypass);
  c.op += placed(l, {"3", "2", "1", "0", "Qp", "Q"}, through).op;
  return c;
}

namespace {

LabeledOperator black_box(const ComplexMatrix& u) {
  const int d = static_cast<int>(u.rows());
  return choi_from_unitary(u, SystemLayout({{"1", d, Role::In, 1}}), SystemLayout({{"2", d, Role::Out, 1}}));
}

}  // namespace

double controlization_fidelity(const LabeledOperator& comb, const ComplexMatrix& u) {
  const int d = static_cast<int>(u.rows());
  if (u.cols() != d) throw InputError("controlization_fidelity: unitary must be square");
  const LabeledOperator out = link_product(comb, black_box(u));
  const ComplexMatrix ctrl = kron(identity(d), basis_projector(2, 0)) + kron(u, basis_projector(2, 1));
  const LabeledOperator target =
      choi_from_unitary(ctrl, SystemLayout({{"0", d, Role::In, 1}, {"Q", 2, Role::In, 1}}),
                        SystemLayout({{"3", d, Role::Out, 2}, {"Qp", 2, Role::Out, 2}}));
  return pairing(target, out) / (4.0 * d * d);
}

double channel_fidelity(const LabeledOperator& comb, const ComplexMatrix& u, const ComplexMatrix& target) {
  const int d = static_cast<int>(u.rows());
  if (u.cols() != d || target.rows() != d || target.cols() != d)
    throw InputError("channel_fidelity: unitaries must be square and of equal size");
  const LabeledOperator out = link_product(comb, black_box(u));
  const LabeledOperator t = choi_from_unitary(target, SystemLayout({{"0", d, Role::In, 1}}),
                                              SystemLayout({{"3", d, Role::Out, 2}}));
  return pairing(t, out) / (static_cast<double>(d) * d);
}

}  // namespace qnet
