// SPDX-License-Identifier: MIT
#include "doctest.h"
#include "oracles.hpp"
#include "qnet/apps.hpp"
#include "qnet/netmodel.hpp"

using namespace qnet;

namespace {

SystemLayout two_step_qubits() {
  return SystemLayout({{"A1in", 2, Role::In, 1}, {"A1out", 2, Role::Out, 1}, {"A2in", 2, Role::In, 2},
                       {"A2out", 2, Role::Out, 2}});
}

LabeledOperator random_on(const std::vector<std::pair<std::string, int>>& sys, Rng& rng) {
  std::vector<System> s;
  for (const auto& [l, d] : sys) s.push_back({l, d, Role::In, 1});
  const SystemLayout l(s);
  return LabeledOperator(l, random_hermitian(l.total_dim(), rng));
}

}  // namespace

TEST_SUITE("netmodel") {
  TEST_CASE("link product matches the entrywise definition") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
      const LabeledOperator a = random_on({{"x", 2}, {"y", 3}, {"w", 2}}, rng);
      const LabeledOperator b = random_on({{"w", 2}, {"z", 2}, {"y", 3}}, rng);
      const LabeledOperator fast = link_product(a, b);
      const LabeledOperator slow = oracle::link(a, b);
      REQUIRE(fast.layout.labels() == slow.layout.labels());
      CHECK(max_abs(fast.matrix() - slow.matrix()) < 1e-12);
    }
  }

  TEST_CASE("link product with disjoint systems is the tensor product") {
    Rng rng(22);
    const LabeledOperator a = random_on({{"x", 2}}, rng), b = random_on({{"z", 3}}, rng);
    CHECK(max_abs(link_product(a, b).matrix() - tensor(a, b).matrix()) < 1e-14);
  }

  TEST_CASE("link products compose channels") {
    Rng rng(23);
    const SystemLayout a({{"a", 2, Role::In, 1}}), b({{"b", 2, Role::Out, 1}}), c({{"c", 2, Role::Out, 1}});
    const ComplexMatrix u = random_unitary(2, rng), v = random_unitary(2, rng);
    const LabeledOperator cu = choi_from_unitary(u, a, b);
    const LabeledOperator cv = choi_from_unitary(v, SystemLayout({{"b", 2, Role::In, 1}}), c);
    const LabeledOperator both = choi_from_unitary(v * u, a, c);
    CHECK(max_abs(align_to(link_product(cu, cv), both.layout).matrix() - both.matrix()) < 1e-12);
  }

  TEST_CASE("identity channel is a comb, inversion operator is not") {
    const SystemLayout l({{"B", 2, Role::Out, 1}, {"A", 2, Role::In, 1}});
    const LabeledOperator id = max_entangled(l[0], l[1]);
    const ValidationReport r = validate(LabeledOperator(l, id.op), comb_constraints(l), 1e-12);
    CHECK(r.member);
    CHECK(r.max_equality_residual <= 1e-12);
    CHECK_FALSE(validate(omega_inversion(2), comb_constraints(gate_layout(2))).member);
  }

  TEST_CASE("combs and dual combs pair to one") {
    Rng rng(24);
    const SystemLayout l = two_step_qubits();
    for (int t = 0; t < 20; ++t) {
      const LabeledOperator c = random_comb(l, 2, rng);
      const LabeledOperator g = random_dual_comb(l, 3, rng);
      CHECK(validate(c, comb_constraints(l)).member);
      CHECK(validate(g, dual_comb_constraints(l)).member);
      CHECK(std::abs(pairing(c, g) - 1.0) < 1e-9);
    }
  }

  TEST_CASE("constraint sets carry strictly positive feasible interiors") {
    const SystemLayout l = gate_layout(2);
    for (const ConstraintSet& cs : {comb_constraints(l), dual_comb_constraints(l)}) {
      CHECK(psd_margin(cs.interior) > 0.0);
      CHECK(row_residual(LabeledOperator(cs.layout, cs.interior), cs) < 1e-12);
    }
    const auto ns = nosig_constraints({{"Ai", "Ao", 2, 2}, {"Bi", "Bo", 2, 2}});
    CHECK(psd_margin(ns.interior) > 0.0);
  }

  TEST_CASE("testers normalize the Born rule") {
    Rng rng(25);
    const SystemLayout l = two_step_qubits();
    for (int t = 0; t < 10; ++t) {
      const auto tester = random_tester(l, 3, 2, rng);
      CHECK(validate_tester(tester, tester_constraints(l, 3)).member);
      const LabeledOperator c = random_comb(l, 2, rng);
      double s = 0.0;
      for (const auto& e : tester) {
        const double p = born_probability(e, c);
        CHECK(p >= -1e-10);
        s += p;
      }
      CHECK(std::abs(s - 1.0) < 1e-9);
    }
  }

  TEST_CASE("degenerate tester reproduces the ordinary Born rule") {
    Rng rng(26);
    const SystemLayout l({{"g", 1, Role::In, 1}, {"A", 3, Role::Out, 1}});
    const HermitianOperator rho = random_density(3, rng);
    const auto povm = random_povm(3, 2, rng);
    const LabeledOperator state(l, rho);
    for (const auto& p : povm)
      CHECK(born_probability(LabeledOperator(l, p), state) ==
            doctest::Approx((p.matrix() * rho.matrix().transpose()).trace().real()).epsilon(1e-12));
  }

  TEST_CASE("two-party no-signalling rows agree with the marginal conditions") {
    // D with Tr_Aout D = I_Ain (x) B~ and Tr_Bout D = I_Bin (x) A~, written as
    // linear maps on the real coordinates of D.
    const std::vector<int> dims{2, 2, 2, 2};  // Ain, Aout, Bin, Bout
    const std::vector<Party> parties{{"Ain", "Aout", 2, 2}, {"Bin", "Bout", 2, 2}};
    const ConstraintSet cs = nosig_constraints(parties);
    const auto basis = hermitian_basis(16);
    auto marginal_map = [&](const ComplexMatrix& d) {
      // Tr_Aout D - I_Ain (x) Tr_{Ain Aout} D / 2 on (Ain, Bin, Bout)
      const ComplexMatrix ta = oracle::partial_trace(d, dims, {1});
      const ComplexMatrix ra = kron(ComplexMatrix::Identity(2, 2), oracle::partial_trace(d, dims, {0, 1})) / 2.0;
      const ComplexMatrix tb = oracle::partial_trace(d, dims, {3});
      const ComplexMatrix rb = oracle::partial_trace(d, dims, {2, 3});
      // I_Bin (x) A~ in the order (Ain, Aout, Bin)
      ComplexMatrix rb_full = ComplexMatrix::Zero(8, 8);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int b = 0; b < 2; ++b) rb_full(i * 2 + b, j * 2 + b) = rb(i, j) / 2.0;
      RealVector v(64 + 64);
      v << hermitian_to_real((ta - ra + (ta - ra).adjoint()) * 0.5), hermitian_to_real((tb - rb_full + (tb - rb_full).adjoint()) * 0.5);
      return v;
    };
    RealMatrix oracle_map(128, 256);
    for (std::size_t k = 0; k < basis.size(); ++k) oracle_map.col(static_cast<Eigen::Index>(k)) = marginal_map(basis[k].to_dense());
    std::vector<SparseHermitian> homog;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (i != cs.normalization_index) homog.push_back(cs.equalities[i]);
    const RealMatrix lib = vectorized_rows(homog, 16);
    Eigen::FullPivLU<RealMatrix> lo(oracle_map), ll(lib);
    lo.setThreshold(1e-10);
    ll.setThreshold(1e-10);
    CHECK(lo.dimensionOfKernel() == ll.dimensionOfKernel());
    const RealMatrix ko = lo.kernel(), kl = ll.kernel();
    CHECK((lib * ko).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((oracle_map * kl).cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("OCB instruments satisfy the channel condition") {
    const GameSpec g = ocb_game();
    for (const auto* side : {&g.alice, &g.bob})
      for (const auto& ins : *side) {
        LabeledOperator s = ins.elements[0];
        for (std::size_t k = 1; k < ins.elements.size(); ++k) s.op += ins.elements[k].op;
        CHECK(channel_residual(s) < 1e-12);
      }
  }

  TEST_CASE("layouts reject duplicate labels and bad dims") {
    CHECK_THROWS_AS(SystemLayout({{"a", 2, Role::In, 1}, {"a", 2, Role::Out, 1}}), InputError);
    CHECK_THROWS_AS(SystemLayout({{"a", 0, Role::In, 1}}), InputError);
    CHECK_THROWS_AS(link_product(LabeledOperator(SystemLayout({{"a", 2, Role::In, 1}}), HermitianOperator::identity(2)),
                                 LabeledOperator(SystemLayout({{"a", 3, Role::In, 1}}), HermitianOperator::identity(3))),
                    InputError);
  }
}
