// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/apps.hpp"

namespace qnet {

namespace {

ComplexMatrix swap_operator(int d) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

void require_dim(int d) {
  if (d < 2) throw InputError("apps: dimension must be >= 2, got " + std::to_string(d));
}

}  // namespace

ProjectorPair sym_antisym(int d) {
  require_dim(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix s = swap_operator(d);
  ProjectorPair p;
  p.p_plus = HermitianOperator::trusted((id + s) * 0.5);
  p.p_minus = HermitianOperator::trusted((id - s) * 0.5);
  p.d_plus = d * (d + 1) / 2;
  p.d_minus = d * (d - 1) / 2;
  return p;
}

EntangledResources entangled_resources(int d) {
  require_dim(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  EntangledResources r;
  r.max_ent_vector = ComplexVector::Zero(n);
  for (int i = 0; i < d; ++i) r.max_ent_vector(i * d + i) = 1.0;
  const ComplexMatrix e = r.max_ent_vector * r.max_ent_vector.adjoint() / static_cast<double>(d);
  r.e_projector = HermitianOperator::trusted(e);
  r.e_perp = HermitianOperator::trusted(ComplexMatrix::Identity(n, n) - e);
  r.d_perp = d * d - 1;
  return r;
}

ComplexVector double_ket(const ComplexMatrix& v) {
  const Eigen::Index o = v.rows(), i = v.cols();
  ComplexVector k(o * i);
  for (Eigen::Index a = 0; a < o; ++a)
    for (Eigen::Index b = 0; b < i; ++b) k(a * i + b) = v(a, b);
  return k;
}

SystemLayout gate_layout(int d) {
  require_dim(d);
  return SystemLayout({{"3", d, Role::Out, 2}, {"2", d, Role::In, 2}, {"1", d, Role::Out, 1},
                       {"0", d, Role::In, 1}});
}

SystemLayout controlization_layout(int d) {
  return gate_layout(d).concat(SystemLayout({{"Qp", 2, Role::Out, 2}, {"Q", 2, Role::In, 1}}));
}

double inversion_optimum(int d) { return 2.0 / (static_cast<double>(d) * d); }
double conjugation_optimum(int d) { return 2.0 / (static_cast<double>(d) * (d - 1)); }
double transpose_strategy_value(int d) { return 2.0 / (static_cast<double>(d) * (d + 1)); }
double controlization_optimum() { return 0.5; }
double estimation_baseline(int d) { return 2.0 / (static_cast<double>(d) * d); }

}  // namespace qnet
