// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qnet/entropy.hpp"

using namespace qnet;

namespace {

LabeledOperator bipartite(const HermitianOperator& rho, int da, int db) {
  return LabeledOperator(SystemLayout({{"A", da, Role::In, 1}, {"B", db, Role::In, 1}}), rho);
}

HermitianOperator phi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return HermitianOperator(v * v.adjoint());
}

SystemLayout two_step() {
  return SystemLayout({{"A1in", 2, Role::In, 1}, {"A1out", 2, Role::Out, 1}, {"A2in", 2, Role::In, 2},
                       {"A2out", 2, Role::Out, 2}});
}

}  // namespace

TEST_SUITE("entropy") {
  TEST_CASE("conditional min-entropy reference states") {
    CHECK(cond_min_entropy_state(bipartite(phi_plus(), 2, 2), {"B"}).bits == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(cond_min_entropy_state(bipartite(HermitianOperator::identity(4) * 0.25, 2, 2), {"B"}).bits ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(-std::log2(oracle::guessing_value(phi_plus().matrix(), 2, 2)) == doctest::Approx(-1.0).epsilon(1e-6));
  }

  TEST_CASE("conditional min-entropy agrees with an independent SDP on random states") {
    Rng rng(41);
    for (const auto& [da, db] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
      for (int t = 0; t < 4; ++t) {
        const HermitianOperator rho = random_density(da * db, rng);
        const double h = cond_min_entropy_state(bipartite(rho, da, db), {"B"}).bits;
        CHECK(h == doctest::Approx(-std::log2(oracle::guessing_value(rho.matrix(), da, db))).epsilon(1e-6));
        CHECK(h >= -std::log2(static_cast<double>(da)) - 1e-6);
        CHECK(h <= std::log2(static_cast<double>(da)) + 1e-6);
      }
    }
  }

  TEST_CASE("pairwise max-relative entropy") {
    CHECK(d_max_pair(phi_plus(), HermitianOperator::identity(4) * 0.25).bits == doctest::Approx(2.0).epsilon(1e-9));
    Rng rng(42);
    const HermitianOperator r = random_density(3, rng);
    CHECK(std::abs(d_max_pair(r, r).bits) < 1e-8);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    CHECK(std::isinf(d_max_pair(HermitianOperator(p0), HermitianOperator(p1)).bits));
  }

  TEST_CASE("both formulations of the set distance agree") {
    Rng rng(43);
    const SystemLayout l = two_step();
    const ConstraintSet cs = dual_comb_constraints(l);
    for (int t = 0; t < 3; ++t) {
      const LabeledOperator a(l, random_psd(16, rng));
      const EntropyValue h = d_max_to_set(a, cs, {{}, DmaxForm::Homogenized});
      const EntropyValue g = d_max_to_set(a, cs, {{}, DmaxForm::Generators});
      CHECK(h.bits == doctest::Approx(g.bits).epsilon(1e-6));
      REQUIRE(h.witness);
      CHECK(validate(*h.witness, cs, 1e-7).member);
      CHECK(psd_margin(h.witness->op * h.lambda - a.op) >= -1e-7);
    }
  }

  TEST_CASE("test min-entropy is the best yes probability over combs") {
    Rng rng(44);
    const SystemLayout l = two_step();
    const auto tester = random_tester(l, 2, 2, rng);
    const TestEntropy te = test_min_entropy(tester[0], l);
    const ScoreResult best = max_score(transpose(tester[0]), comb_constraints(l));
    CHECK(te.p_max == doctest::Approx(best.omega_max).epsilon(1e-6));
    CHECK(te.p_max <= 1.0 + 1e-6);
    LabeledOperator sum = tester[0];
    sum.op += tester[1].op;
    CHECK(test_min_entropy(sum, l).value.bits == doctest::Approx(0.0).epsilon(1e-6));
  }

  TEST_CASE("identity channel has unit network fidelity") {
    const SystemLayout l({{"B", 2, Role::Out, 1}, {"A", 2, Role::In, 1}});
    const LabeledOperator id(l, max_entangled(l[0], l[1]).op);
    const NetworkEntropy ne = network_min_entropy(id, l);
    CHECK(ne.f_max == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(ne.value.bits == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(ne.output_state.op.trace() == doctest::Approx(1.0).epsilon(1e-6));
  }

  TEST_CASE("non-comb operands are rejected") {
    const SystemLayout l({{"B", 2, Role::Out, 1}, {"A", 2, Role::In, 1}});
    CHECK_THROWS_AS(network_min_entropy(LabeledOperator(l, HermitianOperator::identity(4) * 3.0), l), InputError);
    CHECK_THROWS_AS(cond_min_entropy_state(bipartite(HermitianOperator::identity(4), 2, 2), {"B"}), InputError);
  }
}
