// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/apps.hpp"

namespace qnet {

namespace {

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

// Integrand of the named task for one black box U, on the task's layout.
LabeledOperator integrand(const std::string& builder, const ComplexMatrix& u) {
  const int d = static_cast<int>(u.rows());
  const double d2 = static_cast<double>(d) * d;
  const ComplexMatrix box = projector(double_ket(u.conjugate()));  // transposed Choi of U on (2, 1)
  if (builder == "inversion") {
    const SystemLayout l = gate_layout(d);
    const ComplexMatrix m = kron(projector(double_ket(u.adjoint())), box) / d2;
    return align_to(LabeledOperator(l.select({"3", "0", "2", "1"}), HermitianOperator::trusted(m)), l);
  }
  if (builder == "conjugation") {
    const SystemLayout l = gate_layout(d);
    const ComplexMatrix m = kron(projector(double_ket(u.conjugate())), box) / d2;
    return align_to(LabeledOperator(l.select({"3", "0", "2", "1"}), HermitianOperator::trusted(m)), l);
  }
  if (builder == "controlization") {
    const SystemLayout l = controlization_layout(d);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const ComplexMatrix ctrl = kron(ComplexMatrix::Identity(d, d), p0) + kron(u, p1);
    // |ctrl-U>> on (3, Qp, 0, Q)
    const ComplexMatrix m = kron(projector(double_ket(ctrl)), box) / (4.0 * d2);
    return align_to(
        LabeledOperator(l.select({"3", "Qp", "0", "Q", "2", "1"}), HermitianOperator::trusted(m)), l);
  }
  throw InputError("mc_twirl: unknown builder '" + builder + "'");
}

}  // namespace

ComplexMatrix haar_sample(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

LabeledOperator mc_twirl(const std::string& builder, int d, int samples, std::uint64_t seed) {
  if (samples < 1) throw InputError("mc_twirl: need at least one sample");
  Rng rng(seed);
  LabeledOperator acc = integrand(builder, random_unitary(d, rng));
  for (int s = 1; s < samples; ++s) acc.op += integrand(builder, random_unitary(d, rng)).op;
  acc.op = acc.op * (1.0 / samples);
  return acc;
}

McEstimate estimation_mc(int d, int samples, std::uint64_t seed) {
  if (samples < 2) throw InputError("estimation_mc: need at least two samples");
  Rng rng(seed);
  double sum = 0.0, sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix u = random_unitary(d, rng);
    const ComplexMatrix v = random_unitary(d, rng);
    const double t = std::norm((u.adjoint() * v).trace());
    const double f = t * t / (static_cast<double>(d) * d);
    sum += f;
    sq += f * f;
  }
  McEstimate e;
  e.mean = sum / samples;
  const double var = std::max(0.0, sq / samples - e.mean * e.mean);
  e.stderr_ = std::sqrt(var / (samples - 1));
  return e;
}

}  // namespace qnet
