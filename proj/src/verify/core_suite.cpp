// SPDX-License-Identifier: MIT
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "recorder.hpp"

namespace qnet {

namespace {

using detail::Recorder;

// Random operator on the listed labels with the given dims.
LabeledOperator random_labeled(const std::vector<std::string>& labels, const std::map<std::string, int>& dims,
                               Rng& rng) {
  std::vector<System> s;
  for (const auto& l : labels) s.push_back({l, dims.at(l), Role::In, 1});
  const SystemLayout layout(std::move(s));
  return LabeledOperator(layout, random_hermitian(layout.total_dim(), rng));
}

// Three operators where every label is held by one or two of them, never all three.
std::array<LabeledOperator, 3> random_triple(Rng& rng) {
  std::uniform_int_distribution<int> dim(1, 3), owner(0, 5), count(3, 5);
  const int n = count(rng);
  std::map<std::string, int> dims;
  std::array<std::vector<std::string>, 3> held;
  static const int patterns[6][2] = {{0, -1}, {1, -1}, {2, -1}, {0, 1}, {1, 2}, {0, 2}};
  for (int i = 0; i < n; ++i) {
    const std::string l = "s" + std::to_string(i);
    dims[l] = dim(rng);
    const auto& p = patterns[owner(rng)];
    held[static_cast<std::size_t>(p[0])].push_back(l);
    if (p[1] >= 0) held[static_cast<std::size_t>(p[1])].push_back(l);
  }
  for (auto& h : held) std::shuffle(h.begin(), h.end(), rng);
  return {random_labeled(held[0], dims, rng), random_labeled(held[1], dims, rng), random_labeled(held[2], dims, rng)};
}

double aligned_distance(const LabeledOperator& a, const LabeledOperator& b) {
  return max_abs(a.matrix() - align_to(b, a.layout).matrix());
}

void link_product_checks(Recorder& rec, Rng& rng) {
  double assoc = 0.0, comm = 0.0;
  for (int c = 0; c < 200; ++c) {
    const auto [a, b, d] = random_triple(rng);
    assoc = std::max(assoc, aligned_distance(link_product(link_product(a, b), d), link_product(a, link_product(b, d))));
    comm = std::max(comm, aligned_distance(link_product(a, b), link_product(b, a)));
  }
  rec.add("link product associativity, 200 cases (max deviation)", CheckKind::Equal, assoc, 0.0, 1e-10);
  rec.add("link product commutativity up to permutation, 200 cases", CheckKind::Equal, comm, 0.0, 1e-10);
}

SystemLayout two_step_qubits() {
  return SystemLayout({{"A1in", 2, Role::In, 1}, {"A1out", 2, Role::Out, 1}, {"A2in", 2, Role::In, 2},
                       {"A2out", 2, Role::Out, 2}});
}

void validator_checks(Recorder& rec, Rng& rng) {
  const SystemLayout one({{"B", 2, Role::Out, 1}, {"A", 2, Role::In, 1}});
  const LabeledOperator id = choi_from_unitary(ComplexMatrix::Identity(2, 2), one.select({"A"}), one.select({"B"}));
  const ValidationReport vid = validate(id, comb_constraints(one), 1e-12);
  rec.add("identity channel is a one-step comb (residual)", CheckKind::Equal, vid.max_equality_residual, 0.0, 1e-12);
  rec.flag("identity channel accepted", vid.member);
  rec.flag("inversion performance operator rejected as a comb",
           !validate(omega_inversion(2), comb_constraints(gate_layout(2))).member);

  const SystemLayout l = two_step_qubits();
  const ConstraintSet comb = comb_constraints(l), dual = dual_comb_constraints(l);
  double pair = 0.0, comb_res = 0.0, dual_res = 0.0;
  for (int c = 0; c < 200; ++c) {
    const LabeledOperator cc = random_comb(l, 2, rng);
    const LabeledOperator gg = random_dual_comb(l, 2, rng);
    pair = std::max(pair, std::abs(pairing(cc, gg) - 1.0));
    if (c < 20) {
      comb_res = std::max(comb_res, validate(cc, comb).max_equality_residual);
      dual_res = std::max(dual_res, validate(gg, dual).max_equality_residual);
    }
  }
  rec.add("random combs validate (max residual)", CheckKind::Equal, comb_res, 0.0, 1e-9);
  rec.add("random dual combs validate (max residual)", CheckKind::Equal, dual_res, 0.0, 1e-9);
  rec.add("comb / dual comb pairing equals 1, 200 pairs", CheckKind::Equal, pair, 0.0, 1e-9);

  double norm = 0.0, neg = 0.0;
  for (int c = 0; c < 20; ++c) {
    const auto t = random_tester(l, 3, 2, rng);
    const LabeledOperator cc = random_comb(l, 2, rng);
    double s = 0.0;
    for (const auto& e : t) {
      const double p = born_probability(e, cc);
      neg = std::min(neg, p);
      s += p;
    }
    norm = std::max(norm, std::abs(s - 1.0));
  }
  rec.add("tester normalization sum_x p_x = 1, 20 cases", CheckKind::Equal, norm, 0.0, 1e-9);
  rec.add("Born probabilities nonnegative", CheckKind::AtLeast, neg, 0.0, 1e-10);

  const GameSpec g = ocb_game();
  double ch = 0.0;
  for (const auto* side : {&g.alice, &g.bob})
    for (const auto& ins : *side) {
      LabeledOperator s = ins.elements[0];
      for (std::size_t k = 1; k < ins.elements.size(); ++k) s.op += ins.elements[k].op;
      ch = std::max(ch, channel_residual(s));
    }
  rec.add("OCB instruments sum to channels (max residual)", CheckKind::Equal, ch, 0.0, 1e-12);
}

void linalg_checks(Recorder& rec, Rng& rng) {
  double emb = 0.0;
  for (int c = 0; c < 20; ++c) {
    const HermitianOperator h = random_hermitian(5, rng);
    const RealVector ev = eigh(h).eigenvalues;  // descending
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(real_embedding(h), Eigen::EigenvaluesOnly);
    const RealVector re = es.eigenvalues();  // ascending, each value twice
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const double v = ev(ev.size() - 1 - i);
      emb = std::max({emb, std::abs(re(2 * i) - v), std::abs(re(2 * i + 1) - v)});
    }
  }
  rec.add("real embedding doubles every eigenvalue", CheckKind::Equal, emb, 0.0, 1e-10);

  double unit = 0.0;
  for (int c = 0; c < 100; ++c) {
    const ComplexMatrix u = random_unitary(3, rng);
    unit = std::max(unit, max_abs(u.adjoint() * u - ComplexMatrix::Identity(3, 3)));
  }
  rec.add("Haar samples are unitary, 100 samples", CheckKind::Equal, unit, 0.0, 1e-12);

  const int d = 2, n = 10000;
  ComplexMatrix mean = ComplexMatrix::Zero(d, d);
  for (int c = 0; c < n; ++c) mean += random_unitary(d, rng);
  mean /= static_cast<double>(n);
  // Each entry has E|u|^2 = 1/d, so the sample mean has standard deviation 1/sqrt(d n).
  rec.add("Haar first moment vanishes (in standard deviations)", CheckKind::AtLeast,
          -max_abs(mean) * std::sqrt(static_cast<double>(d) * n), -3.0, 0.0);

  double comm = 0.0;
  const ProjectorPair p = sym_antisym(3);
  for (int c = 0; c < 20; ++c) {
    const ComplexMatrix u = random_unitary(3, rng);
    const ComplexMatrix uu = kron(u, u);
    comm = std::max({comm, (p.p_plus.matrix() * uu - uu * p.p_plus.matrix()).norm(),
                     (p.p_minus.matrix() * uu - uu * p.p_minus.matrix()).norm()});
  }
  rec.add("[P+-, U (x) U] = 0 on 20 Haar samples", CheckKind::Equal, comm, 0.0, 1e-10);
}

// Primal point X0 > 0 and dual slack S0 > 0 are planted, so Slater holds on both sides.
SdpProblem slater_problem(Rng& rng, int blocks) {
  std::uniform_int_distribution<int> dim(2, 5);
  SdpProblem p;
  std::vector<ComplexMatrix> x0;
  for (int b = 0; b < blocks; ++b) {
    const int n = dim(rng);
    p.block_dims.push_back(n);
    x0.push_back(random_psd(n, rng).matrix() + ComplexMatrix::Identity(n, n));
  }
  const int m = 6;
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  RealVector y0(m);
  for (int i = 0; i < m; ++i) y0(i) = unif(rng);
  for (int i = 0; i < m; ++i) {
    SdpConstraint c;
    double rhs = 0.0;
    for (int b = 0; b < blocks; ++b) {
      const HermitianOperator f = random_hermitian(p.block_dims[static_cast<std::size_t>(b)], rng);
      c.parts.push_back(SparseHermitian::from_dense(f.matrix()));
      rhs += hs_inner(f, HermitianOperator::trusted(x0[static_cast<std::size_t>(b)]));
    }
    c.rhs = rhs;
    p.constraints.push_back(c);
  }
  const auto aty = p.adjoint(y0);
  for (int b = 0; b < blocks; ++b) {
    const Eigen::Index n = p.block_dims[static_cast<std::size_t>(b)];
    const ComplexMatrix s0 = random_psd(n, rng).matrix() + ComplexMatrix::Identity(n, n);
    p.objective.push_back(HermitianOperator::trusted(aty[static_cast<std::size_t>(b)] - s0));
  }
  return p;
}

void sdp_checks(Recorder& rec, Rng& rng, const SolverOptions& so) {
  ComplexMatrix sz = ComplexMatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  const SdpProblem toy = SdpProblem::single_block(HermitianOperator(sz), {SparseHermitian::identity(2)}, {1.0}, true);
  const SdpSolution s = solve_primal(toy, so);
  rec.add("toy SDP max <sz, X>, Tr X = 1", CheckKind::Equal, s.primal_value, 1.0, 1e-8);
  rec.add("toy SDP dual value", CheckKind::Equal, s.dual_value, 1.0, 1e-8);
  const CertificateReport cr = verify_certificates(toy, s);
  rec.flag("toy SDP certificates reproduce solver fields", cr.matches_solution && cr.certifies_optimality);
  SdpSolution bad = s;
  bad.primal_point[0] = bad.primal_point[0] + HermitianOperator::identity(2) * 1e-3;
  rec.add("perturbed primal point flagged (residual)", CheckKind::Above, verify_certificates(toy, bad).residual_primal,
          0.0, 1e-8);

  double gap = 0.0, weak = 0.0;
  int optimal = 0;
  for (int c = 0; c < 20; ++c) {
    const SdpProblem p = slater_problem(rng, 1 + c % 2);
    const SdpSolution r = solve_dual(p, so);
    if (r.status == SdpStatus::Optimal && verify_certificates(p, r).certifies_optimality) ++optimal;
    gap = std::max(gap, std::abs(r.dual_value - r.primal_value));
    weak = std::max(weak, r.primal_value - r.dual_value);
  }
  rec.add("random Slater SDPs solved to certified optimality", CheckKind::Equal, optimal, 20, 0.0);
  rec.add("strong duality gap on 20 Slater SDPs", CheckKind::Equal, gap, 0.0, 1e-7);
  rec.add("weak duality primal <= dual", CheckKind::AtLeast, -weak, 0.0, 1e-6);
}

}  // namespace

SuiteResult run_core_suite(const VerifyOptions& o) {
  Recorder rec("core", o);
  Rng rng(derive_seed(o.seed, 1));
  rec.guarded("link product algebra", [&] { link_product_checks(rec, rng); });
  rec.guarded("validators", [&] { validator_checks(rec, rng); });
  rec.guarded("linear algebra", [&] { linalg_checks(rec, rng); });
  rec.guarded("sdp", [&] { sdp_checks(rec, rng, o.solver); });
  return rec.finish();
}

}  // namespace qnet
