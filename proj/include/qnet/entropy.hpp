// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnet/netmodel.hpp"
#include "qnet/sdp.hpp"

namespace qnet {

// Audit record of one SDP solve, filled from verify_certificates.
struct Certificate {
  SdpStatus status = SdpStatus::Inaccurate;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double residual_primal = 0.0;
  double residual_dual = 0.0;
  double gap = 0.0;
  int iterations = 0;
  std::size_t rows = 0;
  bool verified = false;  // verify_certificates reproduced the solver's fields
};

// Entropic quantity in bits (log base 2), possibly +-infinity.
struct EntropyValue {
  double bits = 0.0;
  double lambda = 0.0;                     // bits = log2(lambda) for D_max, -log2 for min-entropies
  std::optional<LabeledOperator> witness;  // optimal Gamma (or gamma) in the declared set
  std::optional<LabeledOperator> maximizer;  // optimal point of the dual problem, <a, X> = lambda
  std::optional<Certificate> certificate;    // absent for closed-form evaluations
  std::string method;
};

struct ScoreResult {
  double omega_max = 0.0;
  LabeledOperator optimal_network;
  double lambda = 0.0;    // dual value
  LabeledOperator gamma;  // lambda * gamma >= omega
  double gap = 0.0;
  Certificate certificate;
};

// Formulation used by d_max_to_set. Homogenized: the variable is
// lambda * Gamma - a >= 0 with the normalization row turned into lambda.
// Generators: lambda * Gamma is expanded over the generators of the cone
// spanned by the set. Auto picks whichever has fewer equality rows.
enum class DmaxForm { Auto, Homogenized, Generators };

struct EntropyOptions {
  SolverOptions solver;
  DmaxForm form = DmaxForm::Auto;
};

// log2 lambda_max(B^{-1/2} A B^{-1/2}) on supp(B); +inf if supp(A) is not
// contained in supp(B); -inf if A = 0.
EntropyValue d_max_pair(const HermitianOperator& a, const HermitianOperator& b);

// min over Gamma in cs of D_max(a || Gamma), one SDP.
EntropyValue d_max_to_set(const LabeledOperator& a, const ConstraintSet& cs,
                          const EntropyOptions& opts = {});

// max <omega, X> over X in cs; the dual yields lambda and Gamma in the dual set.
ScoreResult max_score(const LabeledOperator& omega, const ConstraintSet& cs,
                      const SolverOptions& opts = {});
ScoreResult max_score_causal(const LabeledOperator& omega, const SystemLayout& comb_layout,
                             const SolverOptions& opts = {});
// Maximum over process matrices (the dual of the no-signalling set).
ScoreResult max_score_noncausal(const LabeledOperator& omega, const std::vector<Party>& parties,
                                const SolverOptions& opts = {});

// H_min(A|B) for a state rho on A (x) B, B named by `conditioning`.
// witness: the optimal state gamma on B.
EntropyValue cond_min_entropy_state(const LabeledOperator& rho,
                                    const std::vector<std::string>& conditioning,
                                    const EntropyOptions& opts = {});

struct NetworkEntropy {
  EntropyValue value;
  double f_max = 0.0;                 // lambda / d(B_N^out)
  LabeledOperator interacting_network;  // optimal network E, last output relabeled with suffix "'"
  LabeledOperator output_state;         // D * E on (B_N^out, B_N^out')
};
NetworkEntropy network_min_entropy(const LabeledOperator& d, const SystemLayout& comb_layout,
                                   const EntropyOptions& opts = {});
// Label given to the copy of the last output held by the interacting network.
std::string primed(const std::string& label);

struct TestEntropy {
  EntropyValue value;
  double p_max = 0.0;  // 2^{-H}
};
TestEntropy test_min_entropy(const LabeledOperator& t_yes, const SystemLayout& layout,
                             const EntropyOptions& opts = {});

struct DmaxWitness {
  EntropyValue value;          // D_max(c0 || c1)
  LabeledOperator gamma;       // full-rank element of the dual set
  LabeledOperator network;     // E = |Psi><Psi| on (layout, S copy)
  LabeledOperator state0, state1;  // c_j * E on the S copy
  double witness_bits = 0.0;   // D_max(state0 || state1)
};
// Systems of the S copy are named "S:" + label.
DmaxWitness network_dmax_witness(const LabeledOperator& c0, const LabeledOperator& c1,
                                 const ConstraintSet& cs);
// Element I / Tr(interior) of the dual set when the identity lies in the
// span of the rows; throws InputError otherwise.
LabeledOperator full_rank_dual_element(const ConstraintSet& cs);

// Runs verify_certificates and folds its verdict into the status.
Certificate certify(const SdpProblem& p, const SdpSolution& s, const SolverOptions& opts);

}  // namespace qnet
