// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "qnet/linalg.hpp"
#include "qnet/sdp.hpp"

namespace qnet {

namespace {

// Smallest eigenvalue through the real embedding [[X, -Y], [Y, X]].
double margin(const ComplexMatrix& m) {
  const ComplexMatrix h = (m + m.adjoint()) * 0.5;
  const Eigen::Index n = h.rows();
  RealMatrix e(2 * n, 2 * n);
  e << h.real(), -h.imag(), h.imag(), h.real();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(e, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("verify_certificates: eigensolver failed");
  return es.eigenvalues()(0);
}

}  // namespace

CertificateReport verify_certificates(const SdpProblem& p, const SdpSolution& s, double tol,
                                      double gap_tol) {
  p.check();
  CertificateReport r;
  if (s.primal_point.size() != p.num_blocks() ||
      s.dual_point.size() != static_cast<Eigen::Index>(p.num_constraints()))
    return r;

  // Primal: phi(X) = b and X >= 0, with phi evaluated entry by entry.
  double pv = 0.0, sq = 0.0, bn = 0.0, viol = 0.0;
  for (std::size_t k = 0; k < p.num_blocks(); ++k) {
    const ComplexMatrix& x = s.primal_point[k].matrix();
    pv += (p.objective[k].matrix() * x).trace().real();
    viol = std::max(viol, -margin(x));
  }
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    double v = 0.0;
    for (std::size_t k = 0; k < p.num_blocks(); ++k)
      v += (p.constraints[i].parts[k].to_dense() * s.primal_point[k].matrix()).trace().real();
    const double d = v - p.constraints[i].rhs;
    sq += d * d;
    bn += p.constraints[i].rhs * p.constraints[i].rhs;
  }
  r.primal_value = pv;
  r.residual_primal = std::max(std::sqrt(sq) / (1.0 + std::sqrt(bn)), viol);

  // Dual: sum_i y_i F_i - A >= 0.
  double dv = 0.0, an = 0.0, dviol = 0.0;
  for (std::size_t i = 0; i < p.num_constraints(); ++i)
    dv += s.dual_point(static_cast<Eigen::Index>(i)) * p.constraints[i].rhs;
  for (std::size_t k = 0; k < p.num_blocks(); ++k) {
    ComplexMatrix slack = -p.objective[k].matrix();
    for (std::size_t i = 0; i < p.num_constraints(); ++i)
      slack += s.dual_point(static_cast<Eigen::Index>(i)) * p.constraints[i].parts[k].to_dense();
    an += p.objective[k].matrix().squaredNorm();
    dviol = std::max(dviol, -margin(slack));
  }
  r.dual_value = dv;
  r.residual_dual = dviol / (1.0 + std::sqrt(an));
  r.gap = std::abs(dv - pv);

  r.certifies_optimality = r.residual_primal <= tol && r.residual_dual <= tol &&
                           r.gap <= gap_tol * (1.0 + std::abs(pv));
  auto close = [](double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b));
  };
  r.matches_solution = close(r.primal_value, s.primal_value) && close(r.dual_value, s.dual_value) &&
                       close(r.residual_primal, s.residual_primal) &&
                       close(r.residual_dual, s.residual_dual) && close(r.gap, s.gap);
  return r;
}

}  // namespace qnet
