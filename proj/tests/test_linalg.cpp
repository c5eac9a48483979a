// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "oracles.hpp"
#include "qnet/linalg.hpp"
#include "qnet/random.hpp"

using namespace qnet;

TEST_SUITE("linalg") {
  TEST_CASE("hermitian construction symmetrizes and rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m << 1.0, cplx(0, 1), cplx(0, -1), 2.0;
    CHECK(HermitianOperator(m).trace() == doctest::Approx(3.0));
    m(0, 1) = 5.0;
    CHECK_THROWS_AS(HermitianOperator{m}, InputError);
    CHECK_THROWS_AS(HermitianOperator{ComplexMatrix::Zero(2, 3)}, InputError);
  }

  TEST_CASE("partial trace matches the entrywise oracle") {
    Rng rng(11);
    const SystemLayout l({{"a", 2, Role::In, 1}, {"b", 3, Role::In, 1}, {"c", 2, Role::In, 1}});
    for (int t = 0; t < 10; ++t) {
      const HermitianOperator h = random_hermitian(12, rng);
      const HermitianOperator pt = partial_trace(h, l, {"b"});
      CHECK(max_abs(pt.matrix() - oracle::partial_trace(h.matrix(), {2, 3, 2}, {1})) < 1e-12);
      const HermitianOperator pt2 = partial_trace(h, l, {"a", "c"});
      CHECK(max_abs(pt2.matrix() - oracle::partial_trace(h.matrix(), {2, 3, 2}, {0, 2})) < 1e-12);
    }
  }

  TEST_CASE("partial transpose and permutation agree with index formulas") {
    Rng rng(12);
    const SystemLayout l({{"a", 2, Role::In, 1}, {"b", 3, Role::In, 1}});
    const HermitianOperator h = random_hermitian(6, rng);
    const HermitianOperator pt = partial_transpose(h, l, {"b"});
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 2; ++c)
          for (int e = 0; e < 3; ++e) CHECK(std::abs(pt.matrix()(a * 3 + b, c * 3 + e) - h.matrix()(a * 3 + e, c * 3 + b)) < 1e-14);
    const HermitianOperator sw = permute_systems(h, l, {"b", "a"});
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 2; ++c)
          for (int e = 0; e < 3; ++e) CHECK(std::abs(sw.matrix()(b * 2 + a, e * 2 + c) - h.matrix()(a * 3 + b, c * 3 + e)) < 1e-14);
  }

  TEST_CASE("kron of identities and spectra") {
    const HermitianOperator i2 = HermitianOperator::identity(2);
    CHECK(kron(i2, HermitianOperator::identity(3)).dim() == 6);
    Rng rng(13);
    const HermitianOperator p = random_psd(4, rng);
    CHECK(is_psd(p));
    const HermitianOperator s = sqrt_psd(p);
    CHECK(max_abs(s.matrix() * s.matrix() - p.matrix()) < 1e-10);
    const Spectrum sp = eigh(p);
    CHECK(sp.eigenvalues(0) >= sp.eigenvalues(3));
    CHECK(max_eigenvalue(p) == doctest::Approx(sp.eigenvalues(0)));
  }

  TEST_CASE("real embedding doubles every eigenvalue") {
    Rng rng(14);
    for (int t = 0; t < 5; ++t) {
      const HermitianOperator h = random_hermitian(4, rng);
      Eigen::SelfAdjointEigenSolver<RealMatrix> es(real_embedding(h));
      const RealVector ev = eigh(h).eigenvalues;
      for (int i = 0; i < 4; ++i) {
        CHECK(es.eigenvalues()(2 * i) == doctest::Approx(ev(3 - i)).epsilon(1e-10));
        CHECK(es.eigenvalues()(2 * i + 1) == doctest::Approx(ev(3 - i)).epsilon(1e-10));
      }
      CHECK(psd_margin_real(h) == doctest::Approx(psd_margin(h)).epsilon(1e-10));
    }
  }

  TEST_CASE("Haar sampling is unitary and deterministic per seed") {
    Rng a(5), b(5);
    const ComplexMatrix u = random_unitary(4, a), v = random_unitary(4, b);
    CHECK(max_abs(u - v) == 0.0);
    CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(4, 4)) < 1e-12);
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  }

  TEST_CASE("pseudo-inverse square root acts on the support") {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = 4.0;
    m(1, 1) = 1.0;
    const PinvSqrt p = support_pinv_sqrt(HermitianOperator(m), 1e-10);
    CHECK(std::abs(p.pinv_sqrt.matrix()(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(p.projector.trace() - 2.0) < 1e-12);
  }
}
