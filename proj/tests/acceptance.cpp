// SPDX-License-Identifier: MIT
// Acceptance run: one PASS/FAIL line per criterion, then the timed
// full verification run through the command-line tool.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qnet/apps.hpp"
#include "qnet/entropy.hpp"

using namespace qnet;

namespace {

constexpr double kValueTol = 1e-6;
constexpr double kExactTol = 1e-9;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  void close(const std::string& what, double value, double ref, double tol) {
    detail << " " << what << "=" << value;
    require(std::abs(value - ref) <= tol, what);
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  if (!c.pass) ++failures;
  std::printf("%s  criterion %d: %s (%.1f s)%s\n", c.pass ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0),
              c.detail.str().c_str());
  std::fflush(stdout);
}

void score_with_duality(Criterion& c, const std::string& what, const ScoreResult& r, double ref) {
  c.close(what, r.omega_max, ref, kValueTol);
  c.require(std::abs(r.omega_max - r.lambda) <= kValueTol, what + " primal/dual agreement");
  c.require(r.certificate.verified, what + " certificate");
}

LabeledOperator random_on(const std::vector<std::pair<std::string, int>>& sys, Rng& rng) {
  std::vector<System> s;
  for (const auto& [l, d] : sys) s.push_back({l, d, Role::In, 1});
  const SystemLayout l(s);
  return LabeledOperator(l, random_hermitian(l.total_dim(), rng));
}

SystemLayout two_step_qubits() {
  return SystemLayout({{"A1in", 2, Role::In, 1}, {"A1out", 2, Role::Out, 1}, {"A2in", 2, Role::In, 2},
                       {"A2out", 2, Role::Out, 2}});
}

// Random SDP with planted strictly feasible primal and dual points.
SdpProblem slater_problem(Rng& rng) {
  const int n = 4, m = 5;
  SdpProblem p;
  p.block_dims = {n};
  const ComplexMatrix x0 = random_psd(n, rng).matrix() + ComplexMatrix::Identity(n, n);
  RealVector y0(m);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < m; ++i) y0(i) = u(rng);
  for (int i = 0; i < m; ++i) {
    const HermitianOperator f = random_hermitian(n, rng);
    p.constraints.push_back({{SparseHermitian::from_dense(f.matrix())}, hs_inner(f, HermitianOperator::trusted(x0))});
  }
  const ComplexMatrix s0 = random_psd(n, rng).matrix() + ComplexMatrix::Identity(n, n);
  p.objective = {HermitianOperator::trusted(p.adjoint(y0)[0] - s0)};
  return p;
}

}  // namespace

int main() {
  std::printf("acceptance run, value tolerance %.0e\n", kValueTol);

  report(1, "gate inversion optimum 2/d^2", [](Criterion& c) {
    const double refs[] = {0.5, 0.222222};
    for (int d : {2, 3}) {
      const auto t0 = Clock::now();
      const ScoreResult r = max_score_causal(omega_inversion(d), gate_layout(d));
      const double secs = seconds_since(t0);
      score_with_duality(c, "d" + std::to_string(d), r, 2.0 / (d * d));
      c.require(std::abs(r.omega_max - refs[d - 2]) <= kValueTol, "printed reference value");
      if (d == 3) {
        c.detail << " d3_seconds=" << secs;
        c.require(secs <= 120.0, "d=3 runtime <= 2 min");
      }
    }
  });

  report(2, "charge conjugation optimum 2/(d(d-1))", [](Criterion& c) {
    const double refs[] = {1.0, 0.333333};
    for (int d : {2, 3}) {
      const SystemLayout l = gate_layout(d);
      const ScoreResult r = max_score_causal(omega_conjugation(d), l);
      score_with_duality(c, "d" + std::to_string(d), r, 2.0 / (d * (d - 1)));
      c.require(std::abs(r.omega_max - refs[d - 2]) <= kValueTol, "printed reference value");
      const LabeledOperator comb = align_to(conjugation_optimal_comb(d), l);
      const LabeledOperator om = align_to(omega_conjugation(d), l);
      c.require(validate(comb, comb_constraints(l), kExactTol).member, "explicit comb validates");
      c.require(std::abs(hs_inner(om.op, comb.op) - r.omega_max) <= kValueTol, "explicit comb attains optimum");
      const double tv = hs_inner(om.op, align_to(transpose_strategy_comb(d), l).op);
      c.require(std::abs(tv - 2.0 / (d * (d + 1))) <= kValueTol, "transpose strategy value");
      if (d >= 3) {
        c.detail << " transpose_d3=" << tv;
        c.require(tv < r.omega_max - kValueTol, "transpose strategy strictly suboptimal");
      }
    }
  });

  report(3, "controlization optimum 1/2 and classical control", [](Criterion& c) {
    const ScoreResult r = max_score_causal(omega_controlization(2), controlization_layout(2));
    score_with_duality(c, "d2", r, 0.5);
    const LabeledOperator comb = classically_controlled_comb(2);
    c.require(validate(align_to(comb, controlization_layout(2)), comb_constraints(controlization_layout(2)), kExactTol)
                  .member,
              "classically controlled comb validates");
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 10; ++k)
      worst = std::max(worst, std::abs(controlization_fidelity(comb, haar_sample(2, derive_seed(2024, k))) - 0.5));
    c.detail << " max_fidelity_error=" << worst;
    c.require(worst <= 1e-9, "fidelity 1/2 for 10 random unitaries");
  });

  report(4, "OCB game", [](Criterion& c) {
    const double opt = (1.0 + 1.0 / std::sqrt(2.0)) / 2.0;
    const ScoreResult r = max_score_noncausal(omega_ocb(), ocb_parties());
    score_with_duality(c, "noncausal", r, opt);
    c.require(std::abs(r.omega_max - 0.853553) <= kValueTol, "printed reference value");
    const AnalyticCertificate cert = ocb_certificate();
    c.require(std::abs(cert.lambda - opt) <= kExactTol, "certificate lambda");
    c.require(max_abs(cert.gamma.matrix() - ComplexMatrix::Identity(16, 16) * 0.25) <= kExactTol, "Gamma = I/4");
    c.require(validate(cert.gamma, dual_nosig_constraints(ocb_parties()), kExactTol).member, "Gamma in dual set");
    const double margin = psd_margin(cert.gamma.op * cert.lambda - align_to(omega_ocb(), cert.gamma.layout).op);
    c.detail << " certificate_margin=" << margin;
    c.require(margin >= -1e-8, "lambda Gamma - Omega >= -1e-8");
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          c.require(std::abs(max_eigenvalue(ocb_block(i, j, k)) - opt / 4.0) <= kExactTol, "block eigenvalue");
    for (const SystemLayout& l : {ocb_layout_a_first(), ocb_layout_b_first()}) {
      const ScoreResult causal = max_score(omega_ocb(), dual_comb_constraints(l));
      c.close("causal_" + l[0].label, causal.omega_max, 0.75, kValueTol);
    }
  });

  report(5, "entropy bridge 2^{D_max(Omega || dual set)} = optimum", [](Criterion& c) {
    for (const std::string& id : app_ids()) {
      for (int d : id == "inversion" || id == "conjugation" ? std::vector<int>{2, 3} : std::vector<int>{default_dimension(id)}) {
        const AppProblem p = app_problem(id, d);
        const double opt = max_score(p.omega, p.feasible).omega_max;
        const double bridge = std::exp2(d_max_to_set(p.omega, p.dual_feasible).bits);
        c.close(id + std::to_string(d), bridge, opt, kValueTol);
        if (std::isfinite(p.reference)) c.require(std::abs(opt - p.reference) <= kValueTol, id + " reference");
      }
    }
  });

  report(6, "estimation baseline", [](Criterion& c) {
    for (int d : {2, 3}) {
      c.require(estimation_baseline(d) == inversion_optimum(d), "analytic equality");
      const McEstimate mc = estimation_mc(d, 100000, derive_seed(6, static_cast<std::uint64_t>(d)));
      const double rel = std::abs(mc.mean - 2.0 / (d * d)) / (2.0 / (d * d));
      c.detail << " d" << d << "_mc=" << mc.mean << " rel_err=" << rel;
      c.require(rel <= 0.02, "Monte Carlo within 2%");
    }
  });

  report(7, "property suites", [](Criterion& c) {
    Rng rng(7);
    double link_err = 0.0, assoc = 0.0, comm = 0.0;
    for (int t = 0; t < 200; ++t) {
      const LabeledOperator a = random_on({{"x", 2}, {"y", 2}}, rng);
      const LabeledOperator b = random_on({{"y", 2}, {"z", 3}, {"w", 2}}, rng);
      const LabeledOperator e = random_on({{"w", 2}, {"x", 2}, {"v", 2}}, rng);
      const LabeledOperator ab = link_product(a, b);
      link_err = std::max(link_err, max_abs(ab.matrix() - oracle::link(a, b).matrix()));
      comm = std::max(comm, max_abs(reorder(link_product(b, a), ab.layout.labels()).matrix() - ab.matrix()));
      const LabeledOperator left = link_product(ab, e);
      const LabeledOperator right = reorder(link_product(a, link_product(b, e)), left.layout.labels());
      assoc = std::max(assoc, max_abs(left.matrix() - right.matrix()));
    }
    c.detail << " link_vs_oracle=" << link_err << " assoc=" << assoc << " comm=" << comm;
    c.require(link_err <= 1e-10 && assoc <= 1e-10 && comm <= 1e-10, "link product algebra");

    const SystemLayout l = two_step_qubits();
    double norm = 0.0;
    for (int t = 0; t < 20; ++t) {
      const auto tester = random_tester(l, 3, 2, rng);
      const LabeledOperator comb = random_comb(l, 2, rng);
      double s = 0.0;
      for (const auto& el : tester) s += born_probability(el, comb);
      norm = std::max(norm, std::abs(s - 1.0));
    }
    c.detail << " tester_norm=" << norm;
    c.require(norm <= 1e-9, "tester normalization");

    ComplexVector v = ComplexVector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    const HermitianOperator phi(v * v.adjoint());
    const HermitianOperator mixed = HermitianOperator::identity(4) * 0.25;
    const SystemLayout ab({{"A", 2, Role::In, 1}, {"B", 2, Role::In, 1}});
    for (const auto& [rho, ref] : {std::pair{phi, -1.0}, std::pair{mixed, 1.0}}) {
      const double h = cond_min_entropy_state(LabeledOperator(ab, rho), {"B"}).bits;
      const double o = -std::log2(oracle::guessing_value(rho.matrix(), 2, 2));
      c.close("Hmin", h, ref, kValueTol);
      c.require(std::abs(o - ref) <= kValueTol, "independent min-entropy oracle");
    }

    const ConstraintSet comb = comb_constraints(l), dual = dual_comb_constraints(l);
    double ineq = -1e9, eq = 0.0;
    for (int t = 0; t < 20; ++t) {
      const LabeledOperator c0 = random_comb(l, 2, rng);
      LabeledOperator c1 = random_comb(l, 2, rng);
      c1.op = (c1.op + comb.interior) * 0.5;
      const double base = d_max_pair(c0.op, c1.op).bits;
      auto squeezed = [&](const HermitianOperator& g) {
        const ComplexMatrix s = sqrt_psd(g).matrix();
        return d_max_pair(HermitianOperator::trusted(s * c0.matrix() * s), HermitianOperator::trusted(s * c1.matrix() * s))
            .bits;
      };
      ineq = std::max(ineq, squeezed(random_dual_comb(l, 1, rng).op) - base);
      eq = std::max(eq, std::abs(squeezed(random_feasible_point(dual, rng).op) - base));
    }
    c.detail << " pinching_excess=" << ineq << " full_rank_dev=" << eq;
    c.require(ineq <= 1e-8 && eq <= 1e-8, "pinching inequality");

    double gap = 0.0;
    for (int t = 0; t < 20; ++t) {
      const SdpProblem p = slater_problem(rng);
      const SdpSolution s = solve_dual(p);
      c.require(s.optimal(), "Slater SDP solved");
      gap = std::max(gap, std::abs(s.dual_value - s.primal_value));
    }
    c.detail << " max_gap=" << gap;
    c.require(gap <= 1e-7, "strong duality");
  });

  report(8, "Grover tester K=2, N=1", [](Criterion& c) {
    const GroverTester t = grover_tester(2, 1);
    c.require(validate_tester(t.elements, tester_constraints(t.layout, static_cast<int>(t.elements.size())), kExactTol)
                  .member,
              "tester validates");
    const std::vector<double> ref = oracle::grover_distribution(2, 1);
    const LabeledOperator comb = grover_comb(2, 1);
    double err = 0.0;
    for (std::size_t i = 0; i < t.elements.size(); ++i)
      err = std::max(err, std::abs(born_probability(t.elements[i], comb) -
                                   ref[static_cast<std::size_t>(t.offsets[i] + 1)]));
    c.detail << " max_born_error=" << err;
    c.require(err <= 1e-10, "Born rule matches simulation");
  });

  report(9, "verify --suite all under 10 minutes", [](Criterion& c) {
    const std::string cmd = std::string("\"") + QNET_CLI + "\" verify --suite all > /dev/null 2>&1";
    const auto t0 = Clock::now();
    const int rc = std::system(cmd.c_str());
    const double secs = seconds_since(t0);
    c.detail << " seconds=" << secs << " exit=" << rc;
    c.require(rc == 0, "verify exit status");
    c.require(secs < 600.0, "runtime");
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
