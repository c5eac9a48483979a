// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "recorder.hpp"

namespace qnet {

namespace {

using detail::Recorder;

SystemLayout qubit_channel_layout() { return SystemLayout({{"B", 2, Role::Out, 1}, {"A", 2, Role::In, 1}}); }

SystemLayout two_step_qubits() {
  return SystemLayout({{"A1in", 2, Role::In, 1}, {"A1out", 2, Role::Out, 1}, {"A2in", 2, Role::In, 2},
                       {"A2out", 2, Role::Out, 2}});
}

LabeledOperator phi_plus_state(const System& a, const System& b) {
  LabeledOperator m = max_entangled(a, b);
  m.op = m.op * (1.0 / a.dim);
  return m;
}

void state_checks(Recorder& rec, const EntropyOptions& eo, Rng& rng) {
  const System a{"A", 2, Role::Out, 1}, b{"B", 2, Role::In, 1};
  const EntropyValue phi = cond_min_entropy_state(phi_plus_state(a, b), {"B"}, eo);
  rec.add("H_min(A|B) of Phi+ = -1 bit", CheckKind::Equal, phi.bits, -1.0, 1e-6);
  const LabeledOperator mixed(SystemLayout({a, b}), HermitianOperator::identity(4) * 0.25);
  rec.add("H_min(A|B) of I/4 = +1 bit", CheckKind::Equal, cond_min_entropy_state(mixed, {"B"}, eo).bits, 1.0, 1e-6);
  double low = 1e9, high = -1e9;
  for (int c = 0; c < 10; ++c) {
    const LabeledOperator rho(SystemLayout({a, {"B", 3, Role::In, 1}}), random_density(6, rng));
    const double h = cond_min_entropy_state(rho, {"B"}, eo).bits;
    low = std::min(low, h);
    high = std::max(high, h);
  }
  rec.add("H_min(A|B) >= -log2 d_A on random states", CheckKind::AtLeast, low, -1.0, 1e-8);
  rec.add("H_min(A|B) <= log2 d_A on random states", CheckKind::AtLeast, -high, -1.0, 1e-8);
}

void channel_checks(Recorder& rec, const EntropyOptions& eo) {
  const SystemLayout l = qubit_channel_layout();
  const LabeledOperator id = choi_from_unitary(ComplexMatrix::Identity(2, 2), l.select({"A"}), l.select({"B"}));
  const NetworkEntropy ni = network_min_entropy(id, l, eo);
  rec.add("network min-entropy of the identity channel", CheckKind::Equal, ni.value.bits, -1.0, 1e-6);
  rec.add("F_max of the identity channel", CheckKind::Equal, ni.f_max, 1.0, 1e-6);
  const LabeledOperator dep(l, HermitianOperator::identity(4) * 0.5);
  const NetworkEntropy nd = network_min_entropy(dep, l, eo);
  rec.add("network min-entropy of the depolarizing channel", CheckKind::Equal, nd.value.bits, 1.0, 1e-6);
  rec.add("F_max of the depolarizing channel", CheckKind::Equal, nd.f_max, 0.25, 1e-6);

  // Testing the identity channel with the Bell-state test always succeeds.
  const LabeledOperator t_yes(l, max_entangled(l[0], l[1]).op * 0.25);
  const TestEntropy te = test_min_entropy(t_yes, l, eo);
  rec.add("test min-entropy of the Bell test", CheckKind::Equal, te.value.bits, 0.0, 1e-6);
  rec.add("p_max of the Bell test", CheckKind::Equal, te.p_max, 1.0, 1e-6);
  rec.add("p_max equals max_score_causal", CheckKind::Equal, te.p_max, max_score_causal(t_yes, l, eo.solver).omega_max,
          1e-6);
  const TestEntropy half = test_min_entropy(LabeledOperator(l, HermitianOperator::identity(4) * 0.25), l, eo);
  rec.add("half of the dual comb costs one bit", CheckKind::Equal, half.value.bits, 1.0, 1e-6);
}

// Interacting network for a comb on two_step_qubits(): receives A1out, emits
// A1in and A2in, and keeps a copy A2out' of the final output's partner.
SystemLayout interacting_layout() {
  return SystemLayout({{"triv", 1, Role::In, 1}, {"A1in", 2, Role::Out, 1}, {"A1out", 2, Role::In, 2},
                       {"A2in", 2, Role::Out, 2}, {primed("A2out"), 2, Role::Out, 2}});
}

void prop7_checks(Recorder& rec, const EntropyOptions& eo, Rng& rng) {
  const SystemLayout l = two_step_qubits();
  const LabeledOperator d = random_comb(l, 2, rng);
  const NetworkEntropy net = network_min_entropy(d, l, eo);
  double worst = 1e9;
  for (int c = 0; c < 50; ++c) {
    const LabeledOperator e = trace_out(random_comb(interacting_layout(), 2, rng), {"triv"});
    const LabeledOperator rho = link_product(d, e);
    const double h = cond_min_entropy_state(rho, {primed("A2out")}, eo).bits;
    worst = std::min(worst, h - net.value.bits);
  }
  rec.add("random interacting networks never beat the network min-entropy", CheckKind::AtLeast, worst, 0.0, 1e-6);
  const LabeledOperator out = net.output_state;
  rec.add("optimal interacting network yields a normalized state", CheckKind::Equal, out.op.trace(), 1.0, 1e-6);
  rec.add("optimal interacting network attains the network min-entropy", CheckKind::Equal,
          cond_min_entropy_state(out, {primed("A2out")}, eo).bits, net.value.bits, 1e-6);
}

void bridge_checks(Recorder& rec, const EntropyOptions& eo, Rng& rng) {
  const SystemLayout l = two_step_qubits();
  const ConstraintSet dual = dual_comb_constraints(l);
  double bridge = 0.0, forms = 0.0, sound = 0.0, mono = -1e9;
  for (int c = 0; c < 5; ++c) {
    const LabeledOperator omega(l, random_psd(16, rng));
    const double opt = max_score_causal(omega, l, eo.solver).omega_max;
    EntropyOptions h = eo, g = eo;
    h.form = DmaxForm::Homogenized;
    g.form = DmaxForm::Generators;
    const EntropyValue vh = d_max_to_set(omega, dual, h);
    const EntropyValue vg = d_max_to_set(omega, dual, g);
    bridge = std::max(bridge, std::abs(std::exp2(vh.bits) - opt) / std::max(1.0, opt));
    forms = std::max(forms, std::abs(vh.bits - vg.bits));
    sound = std::max({sound, validate(*vh.witness, dual).max_equality_residual,
                      validate(*vg.witness, dual).max_equality_residual});
    for (int k = 0; k < 3; ++k) {
      const LabeledOperator gam = random_dual_comb(l, 2, rng);
      mono = std::max(mono, vh.bits - d_max_pair(omega.op, gam.op).bits);
    }
  }
  rec.add("bridge 2^Dmax(Omega||DualComb) = max score (relative)", CheckKind::Equal, bridge, 0.0, 1e-6);
  rec.add("homogenized and generator formulations agree", CheckKind::Equal, forms, 0.0, 1e-6);
  rec.add("de-homogenized witness lies in the set (residual)", CheckKind::Equal, sound, 0.0, 1e-8);
  rec.add("d_max_to_set <= d_max_pair against set members", CheckKind::AtLeast, -mono, 0.0, 1e-8);
}

void pinching_checks(Recorder& rec, Rng& rng) {
  const SystemLayout l = two_step_qubits();
  const ConstraintSet comb = comb_constraints(l), dual = dual_comb_constraints(l);
  double ineq = -1e9, eq = 0.0;
  for (int c = 0; c < 20; ++c) {
    const LabeledOperator c0 = random_comb(l, 2, rng);
    LabeledOperator c1 = random_comb(l, 2, rng);
    c1.op = (c1.op + comb.interior) * 0.5;  // full rank, so D_max(c0 || c1) is finite
    const double base = d_max_pair(c0.op, c1.op).bits;
    auto squeezed = [&](const HermitianOperator& g) {
      const ComplexMatrix s = sqrt_psd(g).matrix();
      return d_max_pair(HermitianOperator::trusted(s * c0.matrix() * s),
                        HermitianOperator::trusted(s * c1.matrix() * s))
          .bits;
    };
    ineq = std::max(ineq, squeezed(random_dual_comb(l, 1, rng).op) - base);
    eq = std::max(eq, std::abs(squeezed(random_feasible_point(dual, rng).op) - base));
  }
  rec.add("pinching never increases D_max, 20 random Gamma", CheckKind::AtLeast, -ineq, 0.0, 1e-8);
  rec.add("pinching by full-rank Gamma preserves D_max, 20 cases", CheckKind::Equal, eq, 0.0, 1e-8);
}

void witness_checks(Recorder& rec, Rng& rng) {
  const SystemLayout l = qubit_channel_layout();
  const ConstraintSet comb = comb_constraints(l);
  const LabeledOperator c0 = random_channel(l.select({"A"}), l.select({"B"}), rng);
  LabeledOperator c1 = random_channel(l.select({"A"}), l.select({"B"}), rng);
  c1 = align_to(c1, l);
  const DmaxWitness w = network_dmax_witness(c0, c1, comb);
  const double direct = d_max_pair(align_to(c0, l).op, c1.op).bits;
  rec.add("D_max of two random channels matches the spectral value", CheckKind::Equal, w.value.bits, direct, 1e-8);
  rec.add("witness network output states reach D_max", CheckKind::Equal, w.witness_bits, w.value.bits, 1e-8);
  const DmaxWitness same = network_dmax_witness(c0, c0, comb);
  rec.add("D_max(C || C) = 0", CheckKind::Equal, same.value.bits, 0.0, 1e-10);
}

}  // namespace

SuiteResult run_entropy_suite(const VerifyOptions& o) {
  Recorder rec("entropy", o);
  Rng rng(derive_seed(o.seed, 2));
  EntropyOptions eo;
  eo.solver = o.solver;
  rec.guarded("state min-entropy", [&] { state_checks(rec, eo, rng); });
  rec.guarded("channel and test min-entropy", [&] { channel_checks(rec, eo); });
  rec.guarded("network min-entropy optimality", [&] { prop7_checks(rec, eo, rng); });
  rec.guarded("entropy bridge", [&] { bridge_checks(rec, eo, rng); });
  rec.guarded("pinching", [&] { pinching_checks(rec, rng); });
  rec.guarded("D_max witness", [&] { witness_checks(rec, rng); });
  return rec.finish();
}

}  // namespace qnet
