// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qnet/apps.hpp"

using namespace qnet;

TEST_SUITE("apps") {
  TEST_CASE("Grover tester probabilities match direct state evolution") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}}) {
      const GroverTester t = grover_tester(k, n);
      CHECK(validate_tester(t.elements, tester_constraints(t.layout, static_cast<int>(t.elements.size())), 1e-10)
                .member);
      const std::vector<double> ref = oracle::grover_distribution(k, n);
      const LabeledOperator c = grover_comb(k, n);
      CHECK(validate(c, comb_constraints(t.layout), 1e-10).member);
      const std::vector<double> sim = grover_simulated_distribution(k, n);
      for (std::size_t i = 0; i < t.elements.size(); ++i) {
        const auto x = static_cast<std::size_t>(t.offsets[i] + k - 1);
        CHECK(std::abs(born_probability(t.elements[i], c) - ref[x]) < 1e-10);
        CHECK(std::abs(sim[x] - ref[x]) < 1e-12);
        CHECK(t.scores[i] == doctest::Approx(1.0 - std::abs(t.offsets[i]) / static_cast<double>(k)));
      }
    }
  }

  TEST_CASE("four-item search with one query succeeds with certainty") {
    const std::vector<double> p = oracle::grover_distribution(4, 1);
    CHECK(p[3] == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("OCB blocks and instruments") {
    const double top = (1.0 + 1.0 / std::sqrt(2.0)) / 8.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(std::abs(max_eigenvalue(ocb_block(i, j, k)) - top) < 1e-9);
    const GameSpec g = ocb_game();
    CHECK(g.alice.size() == 2);
    CHECK(g.bob.size() == 4);
    CHECK(g.score_of(1, 0, 0, 1, 0) == doctest::Approx(1.0));  // b' = 0: Bob guesses a
    CHECK(g.score_of(0, 1, 0, 1, 0) == doctest::Approx(0.0));
    CHECK(g.score_of(0, 1, 0, 1, 1) == doctest::Approx(0.0));  // b' = 1: Alice guesses b
    CHECK(g.score_of(1, 0, 0, 1, 1) == doctest::Approx(1.0));
  }

  TEST_CASE("analytic dual certificates bound the performance operator") {
    struct Case {
      LabeledOperator omega;
      AnalyticCertificate cert;
      ConstraintSet dual;
      double value;
    };
    std::vector<Case> cases;
    for (int d : {2, 3}) {
      cases.push_back({omega_inversion(d), inversion_certificate(d), dual_comb_constraints(gate_layout(d)),
                       inversion_optimum(d)});
      cases.push_back({omega_conjugation(d), conjugation_certificate(d), dual_comb_constraints(gate_layout(d)),
                       conjugation_optimum(d)});
    }
    cases.push_back({omega_controlization(2), controlization_certificate(2),
                     dual_comb_constraints(controlization_layout(2)), controlization_optimum()});
    cases.push_back({omega_ocb(), ocb_certificate(), dual_nosig_constraints(ocb_parties()), ocb_optimum()});
    for (const Case& c : cases) {
      CHECK(c.cert.lambda == doctest::Approx(c.value).epsilon(1e-12));
      CHECK(validate(c.cert.gamma, c.dual, 1e-9).member);
      const LabeledOperator om = align_to(c.omega, c.cert.gamma.layout);
      CHECK(psd_margin(c.cert.gamma.op * c.cert.lambda - om.op) >= -1e-8);
    }
  }

  TEST_CASE("explicit combs attain their values") {
    for (int d : {2, 3}) {
      const SystemLayout l = gate_layout(d);
      const LabeledOperator c = align_to(conjugation_optimal_comb(d), l);
      CHECK(validate(c, comb_constraints(l), 1e-10).member);
      CHECK(hs_inner(align_to(omega_conjugation(d), l).op, c.op) == doctest::Approx(conjugation_optimum(d)).epsilon(1e-10));
      const LabeledOperator t = align_to(transpose_strategy_comb(d), l);
      CHECK(validate(t, comb_constraints(l), 1e-10).member);
      CHECK(hs_inner(align_to(omega_conjugation(d), l).op, t.op) ==
            doctest::Approx(transpose_strategy_value(d)).epsilon(1e-10));
      CHECK(estimation_baseline(d) == inversion_optimum(d));
    }
    CHECK(transpose_strategy_value(3) < conjugation_optimum(3));
  }

  TEST_CASE("classical control reaches fidelity one half for any unitary") {
    const LabeledOperator c = classically_controlled_comb(2);
    CHECK(validate(align_to(c, controlization_layout(2)), comb_constraints(controlization_layout(2)), 1e-10).member);
    for (int k = 0; k < 10; ++k)
      CHECK(std::abs(controlization_fidelity(c, haar_sample(2, derive_seed(7, static_cast<std::uint64_t>(k)))) - 0.5) <
            1e-9);
  }

  TEST_CASE("Haar twirl of the inversion integrand approaches the projector form") {
    const LabeledOperator mc = mc_twirl("inversion", 2, 4000, 3);
    const LabeledOperator exact = align_to(omega_inversion(2), mc.layout);
    CHECK((mc.matrix() - exact.matrix()).norm() < 0.05);
  }

  TEST_CASE("unknown application ids are rejected") {
    CHECK_THROWS_AS(run_app("nope", 2), InputError);
    CHECK_THROWS_AS(app_problem("nope", 2), InputError);
  }
}
