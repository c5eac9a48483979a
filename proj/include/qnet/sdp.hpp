// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "qnet/random.hpp"
#include "qnet/sparse.hpp"
#include "qnet/types.hpp"

namespace qnet {

// Standard form over block-diagonal Hermitian variables X = diag(X_1..X_K):
//
//   primal:  maximize <A, X>  s.t.  <F_i, X> = b_i,  X >= 0
//   dual:    minimize b.y     s.t.  sum_i y_i F_i - A >= 0
//
// with <P, Q> = Re Tr(PQ) summed over blocks.
struct SdpConstraint {
  std::vector<SparseHermitian> parts;  // one per block; a part without entries is zero
  double rhs = 0.0;
};

struct SdpProblem {
  std::vector<Eigen::Index> block_dims;
  std::vector<HermitianOperator> objective;  // one per block
  std::vector<SdpConstraint> constraints;
  bool independent_rows = false;  // skips the rank-revealing preprocessing

  static SdpProblem single_block(const HermitianOperator& objective,
                                 const std::vector<SparseHermitian>& rows,
                                 const std::vector<double>& rhs, bool independent_rows);

  std::size_t num_constraints() const { return constraints.size(); }
  std::size_t num_blocks() const { return block_dims.size(); }
  // Throws InputError on mismatched block dims or non-finite data.
  void check() const;

  RealVector rhs() const;
  RealVector apply(const std::vector<ComplexMatrix>& x) const;           // phi(X)
  std::vector<ComplexMatrix> adjoint(const RealVector& y) const;         // phi^dagger(y)
  double objective_value(const std::vector<ComplexMatrix>& x) const;     // <A, X>
  double objective_norm() const;                                         // |A|_F
};

enum class SdpStatus { Optimal, Infeasible, Unbounded, Inaccurate };
std::string to_string(SdpStatus s);

// Raised by higher-level routines when the underlying SDP is infeasible or unbounded.
class SdpStatusError : public NumericalError {
 public:
  SdpStatusError(const std::string& where, SdpStatus s)
      : NumericalError(where + ": SDP reported " + to_string(s)), status_(s) {}
  SdpStatus status() const { return status_; }

 private:
  SdpStatus status_;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::Inaccurate;
  double primal_value = 0.0;
  double dual_value = 0.0;
  std::vector<HermitianOperator> primal_point;  // one per block
  RealVector dual_point;                        // one multiplier per constraint
  double residual_primal = 0.0;  // max(|phi(X) - b| / (1 + |b|), max(0, -lambda_min(X)))
  double residual_dual = 0.0;    // max(0, -lambda_min(phi^dagger(y) - A)) / (1 + |A|_F)
  double gap = 0.0;              // |b.y - <A, X>|
  int iterations = 0;
  std::string message;

  bool optimal() const { return status == SdpStatus::Optimal; }
};

struct SolverOptions {
  double tol = 1e-8;       // relative feasibility required for status Optimal
  double gap_tol = 1e-7;   // gap <= gap_tol * (1 + |primal_value|)
  double inner_tol = 1e-10;  // interior-point stopping target
  int max_iter = 100;
  bool verbose = false;
};

SdpSolution solve_primal(const SdpProblem& p, const SolverOptions& opts = {});
// Same primal-dual solve, preceded by a randomized check of the adjoint
// relation <X, phi^dagger(y)> = <phi(X), y>.
SdpSolution solve_dual(const SdpProblem& p, const SolverOptions& opts = {});

// Largest |<X, phi^dagger(y)> - <phi(X), y>| / (|X| |y|) over random probes.
double adjoint_mismatch(const SdpProblem& p, Rng& rng, int probes);

struct CertificateReport {
  double primal_value = 0.0;
  double dual_value = 0.0;
  double residual_primal = 0.0;
  double residual_dual = 0.0;
  double gap = 0.0;
  bool certifies_optimality = false;  // residuals <= tol and gap <= gap_tol (1 + |primal_value|)
  bool matches_solution = false;      // every recomputed field within 1e-10 of the solution's
};

// Recomputes residuals and gap from the problem data alone. PSD margins are
// taken through the real symmetric embedding, independently of the complex
// eigensolver used inside the interior-point method.
CertificateReport verify_certificates(const SdpProblem& p, const SdpSolution& s,
                                      double tol = 1e-8, double gap_tol = 1e-7);

}  // namespace qnet
