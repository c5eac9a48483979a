// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "qnet/entropy.hpp"

namespace qnet {

namespace {

void negate(EntropyValue& v) { v.bits = -v.bits; }

}  // namespace

std::string primed(const std::string& label) { return label + "'"; }

EntropyValue cond_min_entropy_state(const LabeledOperator& rho,
                                    const std::vector<std::string>& conditioning,
                                    const EntropyOptions& opts) {
  if (!is_psd(rho.op) || std::abs(rho.op.trace() - 1.0) > 1e-8)
    throw InputError("cond_min_entropy_state: operand is not a state");
  if (conditioning.empty()) throw InputError("cond_min_entropy_state: empty conditioning system");
  for (const auto& l : conditioning) rho.layout.index_of(l);
  std::vector<System> sys;
  std::vector<std::string> a_labels;
  for (const auto& s : rho.layout.systems()) {
    const bool is_b = std::find(conditioning.begin(), conditioning.end(), s.label) != conditioning.end();
    sys.push_back({s.label, s.dim, is_b ? Role::In : Role::Out, 1});
    if (!is_b) a_labels.push_back(s.label);
  }
  if (a_labels.empty()) throw InputError("cond_min_entropy_state: no system left to condition");
  const SystemLayout layout(sys);
  const ConstraintSet cs = dual_comb_constraints(layout);
  EntropyValue v = d_max_to_set(LabeledOperator(layout, rho.op), cs, opts);
  negate(v);
  if (v.witness) {
    const double da = static_cast<double>(layout.dim_of(a_labels));
    const LabeledOperator t = trace_out(*v.witness, a_labels);
    v.witness = LabeledOperator(t.layout, t.op * (1.0 / da));
  }
  return v;
}

NetworkEntropy network_min_entropy(const LabeledOperator& d, const SystemLayout& comb_layout,
                                   const EntropyOptions& opts) {
  const ConstraintSet comb = comb_constraints(comb_layout);
  const ValidationReport vr = validate(d, comb, 1e-8);
  if (!vr.member)
    throw InputError("network_min_entropy: operand is not a comb (residual " +
                     std::to_string(vr.max_equality_residual) + ", psd margin " +
                     std::to_string(vr.psd_margin) + ")");
  const int n = comb_layout.num_steps();
  const auto last_out = comb_layout.labels_with(Role::Out, n);
  const ConstraintSet cs = conditioning_comb_constraints(comb_layout);

  NetworkEntropy r;
  r.value = d_max_to_set(d, cs, opts);
  r.f_max = r.value.lambda / static_cast<double>(comb_layout.dim_of(last_out));
  negate(r.value);

  std::map<std::string, std::string> names;
  std::vector<std::string> order = last_out;
  for (const auto& l : last_out) {
    names[l] = primed(l);
    order.push_back(primed(l));
  }
  r.interacting_network = relabel(transpose(*r.value.maximizer), names);
  r.output_state = reorder(link_product(align_to(d, comb_layout), r.interacting_network), order);
  return r;
}

TestEntropy test_min_entropy(const LabeledOperator& t_yes, const SystemLayout& layout,
                             const EntropyOptions& opts) {
  if (!is_psd(t_yes.op)) throw InputError("test_min_entropy: operand is not positive semidefinite");
  TestEntropy r;
  r.value = d_max_to_set(t_yes, dual_comb_constraints(layout), opts);
  r.p_max = r.value.lambda;
  negate(r.value);
  return r;
}

}  // namespace qnet
