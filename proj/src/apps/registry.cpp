// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "qnet/apps.hpp"

namespace qnet {

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Equal: return "equal";
    case CheckKind::AtLeast: return "at_least";
    case CheckKind::Above: return "above";
  }
  return "equal";
}

AppCheck make_check(std::string name, CheckKind kind, double value, double reference, double tolerance) {
  AppCheck c{std::move(name), kind, value, reference, tolerance, false};
  switch (kind) {
    case CheckKind::Equal: c.pass = std::abs(value - reference) <= tolerance; break;
    case CheckKind::AtLeast: c.pass = value >= reference - tolerance; break;
    case CheckKind::Above: c.pass = value > reference + tolerance; break;
  }
  if (!std::isfinite(value)) c.pass = false;
  return c;
}

bool AppReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const AppCheck& c) { return c.pass; });
}

std::vector<std::string> app_ids() { return {"inversion", "conjugation", "controlization", "ocb", "grover"}; }

int default_dimension(const std::string& id) {
  if (id == "inversion" || id == "conjugation" || id == "controlization" || id == "ocb" || id == "grover")
    return 2;
  throw InputError("unknown application '" + id + "'");
}

AppProblem app_problem(const std::string& id, int d) {
  AppProblem p;
  if (id == "inversion" || id == "conjugation") {
    p.omega = id == "inversion" ? omega_inversion(d) : omega_conjugation(d);
    p.feasible = comb_constraints(gate_layout(d));
    p.dual_feasible = dual_comb_constraints(gate_layout(d));
    p.reference = id == "inversion" ? inversion_optimum(d) : conjugation_optimum(d);
  } else if (id == "controlization") {
    p.omega = omega_controlization(d);
    p.feasible = comb_constraints(controlization_layout(d));
    p.dual_feasible = dual_comb_constraints(controlization_layout(d));
    p.reference = controlization_optimum();
  } else if (id == "ocb") {
    if (d != 2) throw InputError("ocb: the game is defined on qubits only (d = 2)");
    p.omega = omega_ocb();
    p.feasible = dual_nosig_constraints(ocb_parties());
    p.dual_feasible = nosig_constraints(ocb_parties());
    p.reference = ocb_optimum();
  } else if (id == "grover") {
    if (d < 2 || d > 4) throw InputError("grover: list size must be 2, 3 or 4");
    const GroverTester t = grover_tester(d, 1);
    p.omega = t.omega;
    p.feasible = comb_constraints(t.layout);
    p.dual_feasible = dual_comb_constraints(t.layout);
    // K = 2: the two oracles differ by a global phase, so answering blindly is optimal.
    // K = 4: one query finds the marked item with certainty.
    p.reference = d == 2 ? 0.75 : d == 4 ? 1.0 : std::nan("");
  } else {
    throw InputError("unknown application '" + id + "'");
  }
  return p;
}

namespace {

class Checker {
 public:
  Checker(AppReport& r, const AppOptions& o) : r_(r), o_(o) {}
  void add(std::string name, CheckKind kind, double value, double reference, double pinned) {
    r_.checks.push_back(make_check(std::move(name), kind, value, reference, o_.tolerance_override.value_or(pinned)));
  }

 private:
  AppReport& r_;
  const AppOptions& o_;
};

constexpr double kValueTol = 1e-6;   // optimum comparisons
constexpr double kMarginTol = 1e-8;  // lambda Gamma - Omega >= 0
constexpr double kExactTol = 1e-9;   // closed-form identities

// Optimum, duality, analytic certificate and entropy bridge shared by all tasks.
ScoreResult common_checks(const AppProblem& p, const AnalyticCertificate* cert, AppReport& r,
                          const AppOptions& o, Checker& ck) {
  const ScoreResult s = max_score(p.omega, p.feasible, o.solver);
  r.certificates.push_back(s.certificate);
  ck.add("solver status optimal", CheckKind::Equal, s.certificate.status == SdpStatus::Optimal ? 1.0 : 0.0, 1.0, 0.0);
  if (std::isfinite(p.reference)) {
    ck.add("primal optimum", CheckKind::Equal, s.omega_max, p.reference, kValueTol);
    ck.add("dual optimum", CheckKind::Equal, s.lambda, p.reference, kValueTol);
  }
  ck.add("primal-dual agreement", CheckKind::Equal, s.omega_max, s.lambda, kValueTol);
  ck.add("optimal network feasible", CheckKind::Equal,
         validate(s.optimal_network, p.feasible, 1e-7).member ? 1.0 : 0.0, 1.0, 0.0);

  if (cert) {
    const LabeledOperator slack(p.omega.layout, cert->gamma.op * cert->lambda - align_to(p.omega, cert->gamma.layout).op);
    ck.add("analytic certificate lambda", CheckKind::Equal, cert->lambda, s.lambda, kValueTol);
    ck.add("analytic certificate in dual set", CheckKind::Equal,
           validate(cert->gamma, p.dual_feasible, kExactTol).member ? 1.0 : 0.0, 1.0, 0.0);
    ck.add("analytic certificate lambda*Gamma - Omega >= 0", CheckKind::AtLeast, psd_margin(slack.op), 0.0,
           kMarginTol);
  }

  EntropyOptions eo;
  eo.solver = o.solver;
  const EntropyValue ev = d_max_to_set(p.omega, p.dual_feasible, eo);
  if (ev.certificate) r.certificates.push_back(*ev.certificate);
  ck.add("entropy bridge 2^Dmax = optimum", CheckKind::Equal, std::exp2(ev.bits), s.omega_max, kValueTol);
  return s;
}

void run_gate_task(const std::string& id, int d, AppReport& r, const AppOptions& o, Checker& ck) {
  const AppProblem p = app_problem(id, d);
  const AnalyticCertificate cert = id == "inversion" ? inversion_certificate(d) : conjugation_certificate(d);
  common_checks(p, &cert, r, o, ck);
  ck.add("performance operator trace", CheckKind::Equal, p.omega.op.trace(), 1.0, kExactTol);
  if (id == "inversion") {
    ck.add("estimation baseline equals optimum", CheckKind::Equal, estimation_baseline(d), inversion_optimum(d), 0.0);
    return;
  }
  const LabeledOperator c = conjugation_optimal_comb(d);
  ck.add("explicit comb validates", CheckKind::Equal, validate(c, p.feasible, kExactTol).member ? 1.0 : 0.0, 1.0, 0.0);
  ck.add("explicit comb achieves optimum", CheckKind::Equal, pairing(p.omega, c), conjugation_optimum(d), kValueTol);
  const LabeledOperator t = transpose_strategy_comb(d);
  ck.add("transpose strategy value", CheckKind::Equal, pairing(p.omega, t), transpose_strategy_value(d), kValueTol);
  ck.add("transpose strategy strictly worse", CheckKind::Above, conjugation_optimum(d) - pairing(p.omega, t), 0.0,
         kValueTol);
}

void run_controlization(int d, AppReport& r, const AppOptions& o, Checker& ck) {
  const AppProblem p = app_problem("controlization", d);
  const AnalyticCertificate cert = controlization_certificate(d);
  common_checks(p, &cert, r, o, ck);
  const LabeledOperator c = classically_controlled_comb(d);
  ck.add("classically-controlled comb validates", CheckKind::Equal,
         validate(c, p.feasible, kExactTol).member ? 1.0 : 0.0, 1.0, 0.0);
  ck.add("classically-controlled comb score", CheckKind::Equal, pairing(p.omega, c), 0.5, kExactTol);
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const ComplexMatrix u = haar_sample(d, derive_seed(o.seed, 1000 + k));
    worst = std::max(worst, std::abs(controlization_fidelity(c, u) - 0.5));
  }
  ck.add("classically-controlled fidelity, 10 Haar unitaries (max deviation)", CheckKind::Equal, worst, 0.0,
         kExactTol);
}

void run_ocb(AppReport& r, const AppOptions& o, Checker& ck) {
  const AppProblem p = app_problem("ocb", 2);
  const AnalyticCertificate cert = ocb_certificate();
  common_checks(p, &cert, r, o, ck);
  // Block structure: Omega = sum |i><i| (x) |j><j| (x) Omega_ijk (x) |k><k|.
  ComplexMatrix rebuilt = ComplexMatrix::Zero(16, 16);
  double worst_eig = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        ComplexMatrix pi = ComplexMatrix::Zero(2, 2), pj = pi, pk = pi;
        pi(i, i) = pj(j, j) = pk(k, k) = 1.0;
        const HermitianOperator b = ocb_block(i, j, k);
        rebuilt += kron(kron(kron(pi, pj), b.matrix()), pk);
        worst_eig = std::max(worst_eig, std::abs(max_eigenvalue(b) - ocb_optimum() / 4.0));
      }
  ck.add("block decomposition reproduces Omega", CheckKind::Equal, max_abs(rebuilt - p.omega.matrix()), 0.0,
         kExactTol);
  ck.add("block max eigenvalue (1+1/sqrt2)/8 (max deviation)", CheckKind::Equal, worst_eig, 0.0, kExactTol);
  for (const auto& [name, layout] : {std::pair{"A before B", ocb_layout_a_first()},
                                      std::pair{"B before A", ocb_layout_b_first()}}) {
    const ScoreResult s = max_score(p.omega, dual_comb_constraints(layout), o.solver);
    r.certificates.push_back(s.certificate);
    ck.add(std::string("causal optimum, ") + name, CheckKind::Equal, s.omega_max, ocb_causal_optimum(), kValueTol);
  }
}

void run_grover(int k, AppReport& r, const AppOptions& o, Checker& ck) {
  const AppProblem p = app_problem("grover", k);
  const GroverTester t = grover_tester(k, 1);
  const ConstraintSet tc = tester_constraints(t.layout, static_cast<int>(t.elements.size()));
  const ValidationReport vr = validate_tester(t.elements, tc, 1e-10);
  ck.add("tester normalization residual", CheckKind::Equal, vr.max_equality_residual, 0.0, 1e-10);
  ck.add("tester elements PSD", CheckKind::AtLeast, vr.psd_margin, 0.0, kExactTol);
  double worst = 0.0;
  for (std::size_t x = 0; x < t.offsets.size(); ++x)
    worst = std::max(worst, std::abs(t.scores[x] - (1.0 - std::abs(t.offsets[x]) / static_cast<double>(k))));
  ck.add("scores 1 - |x|/K", CheckKind::Equal, worst, 0.0, 0.0);
  const std::vector<double> sim = grover_simulated_distribution(k, 1);
  const LabeledOperator comb = grover_comb(k, 1);
  double born = 0.0, total = 0.0;
  for (std::size_t x = 0; x < t.elements.size(); ++x) {
    const double px = born_probability(t.elements[x], comb);
    born = std::max(born, std::abs(px - sim[x]));
    total += px;
  }
  ck.add("Born rule vs simulation (max deviation)", CheckKind::Equal, born, 0.0, 1e-10);
  ck.add("outcome probabilities sum to one", CheckKind::Equal, total, 1.0, kExactTol);
  double expected = 0.0;
  for (int i = 0; i < k; ++i) expected += (1.0 - static_cast<double>(i) / k) / k;
  ck.add("always-answer-0 score", CheckKind::Equal, pairing(t.omega, constant_answer_comb(k, 1, 0)), expected,
         kExactTol);
  common_checks(p, nullptr, r, o, ck);
}

}  // namespace

AppReport run_app(const std::string& id, int d, const AppOptions& opts) {
  AppReport r;
  r.id = id;
  r.d = d;
  Checker ck(r, opts);
  if (id == "inversion" || id == "conjugation") {
    run_gate_task(id, d, r, opts, ck);
  } else if (id == "controlization") {
    run_controlization(d, r, opts, ck);
  } else if (id == "ocb") {
    if (d != 2) throw InputError("ocb: the game is defined on qubits only (d = 2)");
    run_ocb(r, opts, ck);
  } else if (id == "grover") {
    run_grover(d, r, opts, ck);
  } else {
    throw InputError("unknown application '" + id + "'");
  }
  return r;
}

}  // namespace qnet
