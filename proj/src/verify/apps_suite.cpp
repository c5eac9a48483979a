// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "recorder.hpp"

namespace qnet {

namespace {

using detail::Recorder;

void registry_checks(Recorder& rec, const VerifyOptions& o) {
  AppOptions ao;
  ao.solver = o.solver;
  ao.seed = o.seed;
  ao.tolerance_override = o.tolerance_override;
  const std::vector<std::pair<std::string, int>> runs = {{"inversion", 2},   {"inversion", 3}, {"conjugation", 2},
                                                         {"conjugation", 3}, {"controlization", 2}, {"ocb", 2},
                                                         {"grover", 2},      {"grover", 3}};
  for (const auto& [id, d] : runs) {
    rec.guarded(id + " d=" + std::to_string(d), [&] {
      const AppReport r = run_app(id, d, ao);
      for (const auto& c : r.checks)
        rec.add(id + " d=" + std::to_string(d) + ": " + c.name, c.kind, c.value, c.reference, c.tolerance);
    });
  }
}

void estimation_checks(Recorder& rec, const VerifyOptions& o) {
  for (int d : {2, 3}) {
    rec.add("estimation baseline = inversion optimum, d=" + std::to_string(d), CheckKind::Equal,
            estimation_baseline(d), inversion_optimum(d), 0.0);
    const McEstimate mc = estimation_mc(d, 100000, derive_seed(o.seed, 30 + static_cast<std::uint64_t>(d)));
    rec.add("estimation Monte Carlo within 2%, d=" + std::to_string(d), CheckKind::Equal,
            std::abs(mc.mean / estimation_baseline(d) - 1.0), 0.0, 0.02);
  }
}

void twirl_checks(Recorder& rec, const VerifyOptions& o) {
  const LabeledOperator inv = mc_twirl("inversion", 2, 20000, derive_seed(o.seed, 40));
  rec.add("Monte Carlo twirl reproduces the inversion operator (Frobenius)", CheckKind::Equal,
          (inv.matrix() - omega_inversion(2).matrix()).norm(), 0.0, 0.02);
  const LabeledOperator conj = mc_twirl("conjugation", 2, 20000, derive_seed(o.seed, 41));
  rec.add("Monte Carlo twirl reproduces the conjugation operator (Frobenius)", CheckKind::Equal,
          (conj.matrix() - omega_conjugation(2).matrix()).norm(), 0.0, 0.02);
  const LabeledOperator ctrl = mc_twirl("controlization", 2, 20000, derive_seed(o.seed, 42));
  rec.add("Monte Carlo twirl reproduces the controlization operator (Frobenius)", CheckKind::Equal,
          (ctrl.matrix() - omega_controlization(2).matrix()).norm(), 0.0, 0.02);
}

double commutator(const LabeledOperator& a, const ComplexMatrix& u) { return (a.matrix() * u - u * a.matrix()).norm(); }

void symmetry_checks(Recorder& rec, const VerifyOptions& o) {
  Rng rng(derive_seed(o.seed, 50));
  double inv = 0.0, conj = 0.0, c0 = 0.0, c1 = 0.0, psd = 0.0;
  for (int d : {2, 3}) {
    const LabeledOperator wi = omega_inversion(d), wc = omega_conjugation(d);
    const LabeledOperator b0 = omega_controlization_block(d, 0), b1 = omega_controlization_block(d, 1);
    for (const auto* w : {&wi, &wc, &b0, &b1}) psd = std::min(psd, psd_margin(w->op));
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix a = random_unitary(d, rng), b = random_unitary(d, rng), c = random_unitary(d, rng);
      // Systems are ordered (3, 2, 1, 0).
      inv = std::max(inv, commutator(wi, kron(kron(a, b), kron(a, b))));
      conj = std::max(conj, commutator(wc, kron(kron(a, a), kron(b, b))));
      c0 = std::max(c0, commutator(b0, kron(kron(a, b), kron(c, a.conjugate()))));
      c1 = std::max(c1, commutator(b1, kron(kron(a, a.conjugate()), kron(b, b.conjugate()))));
    }
  }
  rec.add("inversion operator commutes with A_3 B_2 A_1 B_0", CheckKind::Equal, inv, 0.0, 1e-10);
  rec.add("conjugation operator commutes with A_3 A_2 B_1 B_0", CheckKind::Equal, conj, 0.0, 1e-10);
  rec.add("controlization block 0 commutes with A_3 B_2 C_1 conj(A)_0", CheckKind::Equal, c0, 0.0, 1e-10);
  rec.add("controlization block 1 commutes with A_3 conj(A)_2 B_1 conj(B)_0", CheckKind::Equal, c1, 0.0, 1e-10);
  rec.add("performance operators are positive semidefinite", CheckKind::AtLeast, psd, 0.0, 1e-12);
}

void grover_checks(Recorder& rec) {
  for (const auto& [k, n] : {std::pair{3, 2}, std::pair{4, 1}, std::pair{4, 2}}) {
    const GroverTester t = grover_tester(k, n);
    const LabeledOperator comb = grover_comb(k, n);
    const std::vector<double> sim = grover_simulated_distribution(k, n);
    double dev = 0.0;
    for (std::size_t x = 0; x < t.elements.size(); ++x)
      dev = std::max(dev, std::abs(born_probability(t.elements[x], comb) - sim[x]));
    const std::string tag = "K=" + std::to_string(k) + " N=" + std::to_string(n);
    rec.add("Grover Born rule vs simulation, " + tag, CheckKind::Equal, dev, 0.0, 1e-10);
    const ConstraintSet tc = tester_constraints(t.layout, static_cast<int>(t.elements.size()));
    rec.add("Grover tester normalization, " + tag, CheckKind::Equal,
            validate_tester(t.elements, tc, 1e-10).max_equality_residual, 0.0, 1e-10);
  }
  // Exact search: K = 4 with one query finds the item with certainty.
  const std::vector<double> p = grover_simulated_distribution(4, 1);
  rec.add("Grover K=4 N=1 succeeds with certainty", CheckKind::Equal, p[3], 1.0, 1e-12);
}

}  // namespace

SuiteResult run_apps_suite(const VerifyOptions& o) {
  Recorder rec("apps", o);
  registry_checks(rec, o);
  rec.guarded("estimation", [&] { estimation_checks(rec, o); });
  rec.guarded("Monte Carlo twirl", [&] { twirl_checks(rec, o); });
  rec.guarded("symmetries", [&] { symmetry_checks(rec, o); });
  rec.guarded("Grover", [&] { grover_checks(rec); });
  return rec.finish();
}

}  // namespace qnet
