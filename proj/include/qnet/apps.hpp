// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnet/entropy.hpp"
#include "qnet/netmodel.hpp"

namespace qnet {

// ---------------------------------------------------------------------------
// Group-theoretic building blocks

struct ProjectorPair {
  HermitianOperator p_plus;   // (I + SWAP) / 2 on d (x) d
  HermitianOperator p_minus;  // (I - SWAP) / 2
  int d_plus = 0;
  int d_minus = 0;
};
ProjectorPair sym_antisym(int d);

struct EntangledResources {
  ComplexVector max_ent_vector;  // |I>> = sum_n |n>|n>, unnormalized
  HermitianOperator e_projector;  // |I>><<I| / d
  HermitianOperator e_perp;       // I - E
  int d_perp = 0;                 // d^2 - 1
};
EntangledResources entangled_resources(int d);

// |V>> = sum_j V|j> (x) |j>, output index first.
ComplexVector double_ket(const ComplexMatrix& v);

// ---------------------------------------------------------------------------
// Channel transformation tasks. Systems are named "0".."3": the network
// receives 0, feeds 1 into the black box, receives 2 from it and emits 3.

SystemLayout gate_layout(int d);  // [3 (out, 2), 2 (in, 2), 1 (out, 1), 0 (in, 1)]
// Adds Q' (out, step 2, qubit) and Q (in, step 1, qubit) after 3,2,1,0.
SystemLayout controlization_layout(int d);

// (1/d^2) (P+_{31} (x) P+_{20} / d+  +  P-_{31} (x) P-_{20} / d-)
LabeledOperator omega_inversion(int d);
// (1/d^2) (P+_{32} (x) P+_{10} / d+  +  P-_{32} (x) P-_{10} / d-)
LabeledOperator omega_conjugation(int d);
// W0 (x) |00><00|_{Q'Q} + W1 (x) |11><11|_{Q'Q} with
// W0 = E_{30} (x) I_{21} / (4 d^2), W1 = (E_{32} (x) E_{10} + Eperp_{32} (x) Eperp_{10} / dperp) / (4 d^2).
LabeledOperator omega_controlization(int d);
// The two blocks W0, W1 on the layout (3, 2, 1, 0).
LabeledOperator omega_controlization_block(int d, int k);

double inversion_optimum(int d);        // 2 / d^2
double conjugation_optimum(int d);      // 2 / (d (d - 1))
double transpose_strategy_value(int d);  // 2 / (d (d + 1))
double controlization_optimum();        // 1 / 2
double estimation_baseline(int d);      // 2 / d^2

struct AnalyticCertificate {
  double lambda = 0.0;
  LabeledOperator gamma;  // element of the dual set with lambda * gamma >= omega
};
// Gamma = I_{31} (x) (P+/(2 d+) + P-/(2 d-))_{20}, lambda = 2/d^2.
AnalyticCertificate inversion_certificate(int d);
// Gamma = I / d^2, lambda = 1/d-.
AnalyticCertificate conjugation_certificate(int d);
// Gamma = I / (2 d^2), lambda = 1/2.
AnalyticCertificate controlization_certificate(int d);

// (d P-/d-)_{32} (x) (d P-/d-)_{10}
LabeledOperator conjugation_optimal_comb(int d);
// (d P+/d+)_{32} (x) (d P+/d+)_{10}: the optimal transpose applied twice.
LabeledOperator transpose_strategy_comb(int d);
// Measures the control qubit; applies the black box only on outcome 1.
LabeledOperator classically_controlled_comb(int d);
// <<ctrl-U| C * U_{21} |ctrl-U>> / (4 d^2) for a controlization comb C.
double controlization_fidelity(const LabeledOperator& comb, const ComplexMatrix& u);
// <<V| C * U_{21} |V>> / d^2 for a network on gate_layout.
double channel_fidelity(const LabeledOperator& comb, const ComplexMatrix& u, const ComplexMatrix& target);

// ---------------------------------------------------------------------------
// Non-causal game

struct GameSpec {
  std::vector<Party> parties;                   // Alice (Ain, Aout), Bob (Bin, Bout)
  std::vector<Instrument> alice;                // indexed by a
  std::vector<Instrument> bob;                  // indexed by 2 b + b'
  std::vector<double> score;                    // omega(x, y | a, b, b'), index ((((a*2+b)*2+b')*2+x)*2+y)
  double score_of(int x, int y, int a, int b, int bp) const;
};
GameSpec ocb_game();
// (1/8) sum omega(x, y | a, b, b') M_x^a (x) N_y^{b,b'} on [Ain, Aout, Bin, Bout]
LabeledOperator omega_ocb();
// Omega_{ijk} = (|pm_{i xor k}><pm| + |j><j|) / 8 on B_in
HermitianOperator ocb_block(int i, int j, int k);
std::vector<Party> ocb_parties();
SystemLayout ocb_layout_a_first();  // A before B as a dual comb layout
SystemLayout ocb_layout_b_first();  // B before A
double ocb_optimum();         // (1 + 1/sqrt 2) / 2
double ocb_causal_optimum();  // 3/4
AnalyticCertificate ocb_certificate();  // Gamma = I/4, lambda = ocb_optimum()

// ---------------------------------------------------------------------------
// Grover search tester

struct GroverTester {
  int k = 2;  // list size
  int n = 1;  // number of queries
  SystemLayout layout;               // comb layout of the tested computer
  std::vector<LabeledOperator> elements;  // T_x, x = -(K-1) .. K-1
  std::vector<int> offsets;               // x for each element
  std::vector<double> scores;             // 1 - |x|/K
  LabeledOperator omega;                  // sum_x score_x T_x
};
GroverTester grover_tester(int k, int n);
// Comb of the textbook algorithm: uniform superposition, oracle, diffusion,
// ..., computational-basis answer.
LabeledOperator grover_comb(int k, int n);
// Comb that ignores the oracle and always answers `answer`.
LabeledOperator constant_answer_comb(int k, int n, int answer);
// Outcome distribution p(x) obtained by simulating the circuit directly.
std::vector<double> grover_simulated_distribution(int k, int n);

// ---------------------------------------------------------------------------
// Haar Monte Carlo oracles

ComplexMatrix haar_sample(int d, std::uint64_t seed);
// Average over `samples` Haar unitaries of the integrand of the named builder
// ("inversion", "conjugation" or "controlization").
LabeledOperator mc_twirl(const std::string& builder, int d, int samples, std::uint64_t seed);
// Monte-Carlo mean of |Tr(U^dagger V)|^4 / d^2 over Haar pairs.
struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};
McEstimate estimation_mc(int d, int samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Registry used by the command line

// How a check compares value against reference.
enum class CheckKind {
  Equal,    // |value - reference| <= tolerance
  AtLeast,  // value >= reference - tolerance
  Above,    // value > reference + tolerance
};
std::string to_string(CheckKind k);

struct AppCheck {
  std::string name;
  CheckKind kind = CheckKind::Equal;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};
AppCheck make_check(std::string name, CheckKind kind, double value, double reference, double tolerance);
struct AppReport {
  std::string id;
  int d = 0;
  std::vector<AppCheck> checks;
  std::vector<Certificate> certificates;
  bool pass() const;
};
struct AppOptions {
  SolverOptions solver;
  // Replaces every check's pinned tolerance when set.
  std::optional<double> tolerance_override;
  std::uint64_t seed = 0;
};
std::vector<std::string> app_ids();
// Builds the performance operator, solves primal and dual, and compares
// with the analytic reference values.
AppReport run_app(const std::string& id, int d, const AppOptions& opts = {});
// Performance operator and feasible set for a builder id.
struct AppProblem {
  LabeledOperator omega;
  ConstraintSet feasible;       // set the network ranges over
  ConstraintSet dual_feasible;  // set Gamma ranges over
  double reference = 0.0;
};
// For "grover", d is the list size K and one query is used.
AppProblem app_problem(const std::string& id, int d);
int default_dimension(const std::string& id);

}  // namespace qnet
