// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "oracles.hpp"
#include "qnet/linalg.hpp"
#include "qnet/sdp.hpp"

using namespace qnet;

namespace {

SdpProblem trace_one(const HermitianOperator& a) {
  return SdpProblem::single_block(a, {SparseHermitian::identity(a.dim())}, {1.0}, true);
}

SparseHermitian scalar(double v) { return SparseHermitian::from_dense(ComplexMatrix::Constant(1, 1, v)); }

}  // namespace

TEST_SUITE("sdp") {
  TEST_CASE("trace-one maximization returns the largest eigenvalue") {
    Rng rng(31);
    for (int t = 0; t < 5; ++t) {
      const HermitianOperator a = random_hermitian(5, rng);
      const SdpSolution s = solve_primal(trace_one(a));
      REQUIRE(s.optimal());
      CHECK(s.primal_value == doctest::Approx(max_eigenvalue(a)).epsilon(1e-7));
      CHECK(std::abs(s.primal_value - s.dual_value) <= 1e-7 * (1 + std::abs(s.primal_value)));
      const CertificateReport cr = verify_certificates(trace_one(a), s);
      CHECK(cr.certifies_optimality);
      CHECK(cr.matches_solution);
    }
  }

  TEST_CASE("diagonal blocks reproduce a linear program solved by vertex enumeration") {
    Rng rng(32);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    for (int t = 0; t < 5; ++t) {
      const int m = 3, n = 6;
      Eigen::MatrixXd a(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = i == 0 ? 1.0 : u(rng) - 0.5;
      Eigen::VectorXd x0(n), c(n);
      for (int j = 0; j < n; ++j) {
        x0(j) = u(rng);
        c(j) = u(rng) - 0.5;
      }
      const Eigen::VectorXd b = a * x0;
      SdpProblem p;
      p.block_dims.assign(n, 1);
      for (int j = 0; j < n; ++j) p.objective.push_back(HermitianOperator(ComplexMatrix::Constant(1, 1, c(j))));
      for (int i = 0; i < m; ++i) {
        SdpConstraint row;
        for (int j = 0; j < n; ++j) row.parts.push_back(scalar(a(i, j)));
        row.rhs = b(i);
        p.constraints.push_back(row);
      }
      const SdpSolution s = solve_primal(p);
      REQUIRE(s.optimal());
      CHECK(s.primal_value == doctest::Approx(oracle::lp_by_vertices(a, b, c)).epsilon(1e-6));
    }
  }

  TEST_CASE("two blocks sharing a trace budget pick the better block") {
    Rng rng(33);
    const HermitianOperator a1 = random_hermitian(3, rng), a2 = random_hermitian(2, rng);
    SdpProblem p;
    p.block_dims = {3, 2};
    p.objective = {a1, a2};
    p.constraints.push_back({{SparseHermitian::identity(3), SparseHermitian::identity(2)}, 1.0});
    const SdpSolution s = solve_primal(p);
    REQUIRE(s.optimal());
    CHECK(s.primal_value == doctest::Approx(std::max(max_eigenvalue(a1), max_eigenvalue(a2))).epsilon(1e-7));
  }

  TEST_CASE("infeasible and unbounded problems are reported") {
    const HermitianOperator a = HermitianOperator::identity(2);
    const SdpSolution inf = solve_primal(SdpProblem::single_block(a, {SparseHermitian::identity(2)}, {-1.0}, true));
    CHECK(inf.status == SdpStatus::Infeasible);
    ComplexMatrix off = ComplexMatrix::Zero(2, 2);
    off(0, 1) = off(1, 0) = 1.0;
    const SdpSolution unb = solve_primal(SdpProblem::single_block(a, {SparseHermitian::from_dense(off)}, {0.0}, true));
    CHECK(unb.status == SdpStatus::Unbounded);
  }

  TEST_CASE("adjoint relation holds") {
    Rng rng(34);
    std::vector<SparseHermitian> rows;
    std::vector<double> rhs;
    for (int i = 0; i < 4; ++i) {
      rows.push_back(SparseHermitian::from_dense(random_hermitian(4, rng).matrix()));
      rhs.push_back(0.0);
    }
    const SdpProblem p = SdpProblem::single_block(random_hermitian(4, rng), rows, rhs, false);
    CHECK(adjoint_mismatch(p, rng, 10) < 1e-12);
  }

  TEST_CASE("perturbed optimal points are rejected by the certificate check") {
    Rng rng(35);
    const HermitianOperator a = random_hermitian(4, rng);
    const SdpProblem p = trace_one(a);
    SdpSolution s = solve_primal(p);
    REQUIRE(verify_certificates(p, s).certifies_optimality);
    SdpSolution bad = s;
    bad.primal_point[0] = bad.primal_point[0] + HermitianOperator::identity(4) * 1e-3;
    const CertificateReport cr = verify_certificates(p, bad);
    CHECK_FALSE(cr.certifies_optimality);
    CHECK_FALSE(cr.matches_solution);
    SdpSolution bad_dual = s;
    bad_dual.dual_point(0) -= 0.5;
    CHECK_FALSE(verify_certificates(p, bad_dual).certifies_optimality);
  }

  TEST_CASE("malformed problems raise input errors") {
    SdpProblem p;
    p.block_dims = {2};
    p.objective = {HermitianOperator::identity(3)};
    CHECK_THROWS_AS(p.check(), InputError);
  }
}
