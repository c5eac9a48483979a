// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/netmodel.hpp"

namespace qnet {

namespace {

std::string mem_label(int k) { return "#mem" + std::to_string(k); }

std::vector<System> systems_of(const SystemLayout& layout, const std::vector<std::string>& labels) {
  return layout.select(labels).systems();
}

LabeledOperator random_state(const SystemLayout& layout, Rng& rng) {
  return LabeledOperator(layout, random_density(layout.total_dim(), rng));
}

}  // namespace

LabeledOperator random_channel(const SystemLayout& in, const SystemLayout& out, Rng& rng,
                               int kraus_rank) {
  const Eigen::Index di = in.total_dim(), d_o = out.total_dim();
  const Eigen::Index r = kraus_rank > 0 ? kraus_rank : di * d_o;
  const ComplexMatrix v = random_isometry(d_o * r, di, rng);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index j = 0; j < r; ++j) {
    ComplexMatrix k(d_o, di);
    for (Eigen::Index o = 0; o < d_o; ++o) k.row(o) = v.row(o * r + j);
    kraus.push_back(k);
  }
  return choi_from_kraus(kraus, in, out);
}

LabeledOperator random_comb(const SystemLayout& layout, int memory_dim, Rng& rng) {
  layout.require_comb_shape();
  const int n = layout.num_steps();
  LabeledOperator acc;
  for (int k = 1; k <= n; ++k) {
    auto in = systems_of(layout, layout.labels_with(Role::In, k));
    auto out = systems_of(layout, layout.labels_with(Role::Out, k));
    if (k > 1) in.push_back({mem_label(k - 1), memory_dim, Role::In, k});
    if (k < n) out.push_back({mem_label(k), memory_dim, Role::Out, k});
    const LabeledOperator ch = random_channel(SystemLayout(in), SystemLayout(out), rng);
    acc = k == 1 ? ch : link_product(acc, ch);
  }
  return align_to(acc, layout);
}

namespace {

// State on (A_1^in, mem) followed by channels up to A_N^in; when
// `keep_memory` the last channel also outputs a memory system.
LabeledOperator dual_network(const SystemLayout& layout, int memory_dim, bool keep_memory,
                             Rng& rng) {
  layout.require_comb_shape();
  const int n = layout.num_steps();
  auto first = systems_of(layout, layout.labels_with(Role::In, 1));
  if (n > 1 || keep_memory) first.push_back({mem_label(1), memory_dim, Role::Out, 1});
  LabeledOperator acc = random_state(SystemLayout(first), rng);
  for (int k = 1; k < n; ++k) {
    auto in = systems_of(layout, layout.labels_with(Role::Out, k));
    in.push_back({mem_label(k), memory_dim, Role::In, k});
    auto out = systems_of(layout, layout.labels_with(Role::In, k + 1));
    if (k + 1 < n || keep_memory) out.push_back({mem_label(k + 1), memory_dim, Role::Out, k + 1});
    acc = link_product(acc, random_channel(SystemLayout(in), SystemLayout(out), rng));
  }
  return acc;
}

}  // namespace

LabeledOperator random_dual_comb(const SystemLayout& layout, int memory_dim, Rng& rng) {
  const LabeledOperator part = dual_network(layout, memory_dim, false, rng);
  return extend_identity(part, layout);
}

std::vector<HermitianOperator> random_povm(Eigen::Index d, int outcomes, Rng& rng) {
  std::vector<HermitianOperator> g;
  HermitianOperator sum = HermitianOperator::zero(d);
  for (int x = 0; x < outcomes; ++x) {
    g.push_back(random_psd(d, rng));
    sum += g.back();
  }
  const PinvSqrt s = support_pinv_sqrt(sum, 1e-14);
  std::vector<HermitianOperator> out;
  for (const auto& gx : g)
    out.push_back(HermitianOperator::trusted(s.pinv_sqrt.matrix() * gx.matrix() *
                                             s.pinv_sqrt.matrix()));
  for (auto& p : out) p = HermitianOperator((p.matrix() + p.matrix().adjoint()) * 0.5);
  return out;
}

std::vector<LabeledOperator> random_tester(const SystemLayout& layout, int outcomes,
                                           int memory_dim, Rng& rng) {
  const int n = layout.num_steps();
  const LabeledOperator part = dual_network(layout, memory_dim, true, rng);
  auto meas = systems_of(layout, layout.labels_with(Role::Out, n));
  meas.push_back({mem_label(n), memory_dim, Role::In, n});
  const SystemLayout ml(meas);
  std::vector<LabeledOperator> out;
  for (const auto& p : random_povm(ml.total_dim(), outcomes, rng)) {
    const LabeledOperator effect(ml, HermitianOperator::trusted(p.matrix().transpose()));
    out.push_back(align_to(link_product(part, effect), layout));
  }
  return out;
}

LabeledOperator random_feasible_point(const ConstraintSet& cs, Rng& rng, double spread) {
  const auto dirs = primal_direction_basis(cs);
  const Eigen::Index d = cs.layout.total_dim();
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (const auto& b : dirs) h += nd(rng) * b.matrix();
  const HermitianOperator dir(h);
  const Spectrum s = eigh(dir);
  const double opnorm = dirs.empty() ? 1.0 : std::max(std::abs(s.eigenvalues(0)),
                                                      std::abs(s.eigenvalues(d - 1)));
  const double t = spread * psd_margin(cs.interior) / std::max(opnorm, 1e-300);
  return LabeledOperator(cs.layout, cs.interior + dir * t);
}

}  // namespace qnet
