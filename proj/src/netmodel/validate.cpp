// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "qnet/netmodel.hpp"

namespace qnet {

namespace {

// max |X - I_L (x) Y| with Y living on X's layout minus L.
double factor_residual(const LabeledOperator& x, const std::vector<std::string>& l,
                       const LabeledOperator& y) {
  const SystemLayout id_layout = x.layout.select(l);
  LabeledOperator id(id_layout, HermitianOperator::identity(id_layout.total_dim()));
  const LabeledOperator rebuilt = align_to(tensor(id, y), x.layout);
  return max_abs(x.matrix() - rebuilt.matrix());
}

double comb_residual(LabeledOperator x) {
  double worst = 0.0;
  for (int n = x.layout.num_steps(); n >= 1; --n) {
    const auto in = x.layout.labels_with(Role::In, n);
    const auto out = x.layout.labels_with(Role::Out, n);
    const LabeledOperator t = trace_out(x, out);
    const LabeledOperator prev =
        LabeledOperator(t.layout.without(in),
                        partial_trace(t.op, t.layout, in) * (1.0 / static_cast<double>(t.layout.dim_of(in))));
    worst = std::max(worst, factor_residual(t, in, prev));
    x = prev;
  }
  return std::max(worst, std::abs(scalar_value(x) - 1.0));
}

double dual_comb_residual(LabeledOperator x) {
  double worst = 0.0;
  for (int k = x.layout.num_steps(); k >= 1; --k) {
    const auto in = x.layout.labels_with(Role::In, k);
    const auto out = x.layout.labels_with(Role::Out, k);
    const LabeledOperator y(x.layout.without(out),
                            partial_trace(x.op, x.layout, out) *
                                (1.0 / static_cast<double>(x.layout.dim_of(out))));
    worst = std::max(worst, factor_residual(x, out, y));
    x = trace_out(y, in);
  }
  return std::max(worst, std::abs(scalar_value(x) - 1.0));
}

double nosig_residual(const LabeledOperator& x, const std::vector<Party>& parties) {
  double worst = 0.0;
  const std::size_t k = parties.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::string> in_j, out_j;
    for (std::size_t p = 0; p < k; ++p)
      if (mask & (1u << p)) {
        in_j.push_back(parties[p].in_label);
        out_j.push_back(parties[p].out_label);
      }
    const LabeledOperator t = trace_out(x, out_j);
    const LabeledOperator r(t.layout.without(in_j),
                            partial_trace(t.op, t.layout, in_j) *
                                (1.0 / static_cast<double>(t.layout.dim_of(in_j))));
    worst = std::max(worst, factor_residual(t, in_j, r));
  }
  const double norm = static_cast<double>(x.layout.dim_with(Role::In));
  return std::max(worst, std::abs(x.op.trace() - norm));
}

ValidationReport finish(const HermitianOperator& op, double residual, double tol) {
  ValidationReport r;
  r.max_equality_residual = residual;
  const Spectrum s = eigh(op);
  const Eigen::Index n = op.dim();
  r.psd_margin = s.eigenvalues(n - 1);
  r.member = residual <= tol && r.psd_margin >= -tol * std::max(1.0, s.eigenvalues(0));
  return r;
}

}  // namespace

double row_residual(const LabeledOperator& op, const ConstraintSet& cs) {
  const LabeledOperator x = align_to(op, cs.layout);
  double worst = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    worst = std::max(worst, std::abs(cs.equalities[i].inner(x.matrix()) - cs.rhs[i]));
  return worst;
}

ValidationReport validate(const LabeledOperator& op, const ConstraintSet& cs, double tol) {
  const LabeledOperator x = align_to(op, cs.layout);
  double residual = 0.0;
  switch (cs.kind) {
    case SetKind::Comb: residual = comb_residual(x); break;
    case SetKind::DualComb:
    case SetKind::Tester: residual = dual_comb_residual(x); break;
    case SetKind::NoSig: residual = nosig_residual(x, cs.parties); break;
    default: residual = row_residual(x, cs); break;
  }
  return finish(x.op, residual, tol);
}

ValidationReport validate_tester(const std::vector<LabeledOperator>& elements,
                                 const ConstraintSet& cs, double tol) {
  if (elements.empty()) throw InputError("validate_tester: no elements");
  if (cs.outcomes != static_cast<int>(elements.size()))
    throw InputError("validate_tester: expected " + std::to_string(cs.outcomes) + " outcomes");
  LabeledOperator sum = align_to(elements[0], cs.layout);
  double margin = psd_margin(sum.op);
  double top = max_eigenvalue(sum.op);
  for (std::size_t i = 1; i < elements.size(); ++i) {
    const LabeledOperator e = align_to(elements[i], cs.layout);
    margin = std::min(margin, psd_margin(e.op));
    top = std::max(top, max_eigenvalue(e.op));
    sum.op += e.op;
  }
  ValidationReport r;
  r.max_equality_residual = dual_comb_residual(sum);
  r.psd_margin = margin;
  r.member = r.max_equality_residual <= tol && margin >= -tol * std::max(1.0, top);
  return r;
}

double born_probability(const LabeledOperator& tester_element, const LabeledOperator& comb) {
  if (tester_element.layout.size() != comb.layout.size())
    throw InputError("born_probability: layouts differ");
  for (const auto& s : tester_element.layout.systems()) {
    if (!comb.layout.contains(s.label))
      throw InputError("born_probability: comb lacks system '" + s.label + "'");
  }
  return scalar_value(link_product(tester_element, comb));
}

double channel_residual(const LabeledOperator& c) {
  const auto out = c.layout.labels_with(Role::Out);
  const LabeledOperator t = trace_out(c, out);
  return max_abs(t.matrix() - ComplexMatrix::Identity(t.dim(), t.dim()));
}

Instrument make_instrument(const SystemLayout& layout, std::vector<LabeledOperator> elements,
                           double tol) {
  if (elements.empty()) throw InputError("instrument: no elements");
  LabeledOperator sum = align_to(elements[0], layout);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    elements[i] = align_to(elements[i], layout);
    if (!is_psd(elements[i].op, tol)) throw InputError("instrument: element is not PSD");
    if (i) sum.op += elements[i].op;
  }
  if (channel_residual(sum) > tol) throw InputError("instrument: elements do not sum to a channel");
  return Instrument{layout, std::move(elements)};
}

}  // namespace qnet
