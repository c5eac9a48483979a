// SPDX-License-Identifier: MIT
#include <algorithm>

#include "qnet/netmodel.hpp"

namespace qnet {

LabeledOperator::LabeledOperator(SystemLayout l, HermitianOperator o)
    : layout(std::move(l)), op(std::move(o)) {
  if (op.dim() != layout.total_dim())
    throw InputError("labeled operator: dim " + std::to_string(op.dim()) +
                     " does not match layout dim " + std::to_string(layout.total_dim()));
}

LabeledOperator reorder(const LabeledOperator& a, const std::vector<std::string>& order) {
  return LabeledOperator(a.layout.select(order), permute_systems(a.op, a.layout, order));
}

LabeledOperator align_to(const LabeledOperator& a, const SystemLayout& target) {
  if (a.layout.size() != target.size())
    throw InputError("align: operator has " + std::to_string(a.layout.size()) +
                     " systems, target layout has " + std::to_string(target.size()));
  for (const auto& s : target.systems()) {
    if (!a.layout.contains(s.label)) throw InputError("align: missing system '" + s.label + "'");
    if (a.layout.at(s.label).dim != s.dim)
      throw InputError("align: dim mismatch on system '" + s.label + "'");
  }
  LabeledOperator r = reorder(a, target.labels());
  r.layout = target;
  return r;
}

LabeledOperator link_product(const LabeledOperator& a, const LabeledOperator& b) {
  std::vector<std::string> xs, ys, zs;
  for (const auto& s : a.layout.systems()) {
    if (b.layout.contains(s.label)) {
      if (b.layout.at(s.label).dim != s.dim)
        throw InputError("link product: dim mismatch on shared system '" + s.label + "'");
      ys.push_back(s.label);
    } else {
      xs.push_back(s.label);
    }
  }
  for (const auto& s : b.layout.systems())
    if (!a.layout.contains(s.label)) zs.push_back(s.label);

  std::vector<std::string> order_a = xs, order_b = ys;
  order_a.insert(order_a.end(), ys.begin(), ys.end());
  order_b.insert(order_b.end(), zs.begin(), zs.end());
  const ComplexMatrix am = permute_systems(a.op, a.layout, order_a).matrix();
  const ComplexMatrix bm = permute_systems(b.op, b.layout, order_b).matrix();
  const Eigen::Index dx = a.layout.dim_of(xs), dy = a.layout.dim_of(ys), dz = b.layout.dim_of(zs);

  // R[(x,z),(x',z')] = sum_{y,y'} A[(x,y),(x',y')] B[(y,z),(y',z')]
  ComplexMatrix ah(dx * dx, dy * dy), bh(dy * dy, dz * dz);
  for (Eigen::Index x = 0; x < dx; ++x)
    for (Eigen::Index xp = 0; xp < dx; ++xp)
      for (Eigen::Index y = 0; y < dy; ++y)
        for (Eigen::Index yp = 0; yp < dy; ++yp)
          ah(x * dx + xp, y * dy + yp) = am(x * dy + y, xp * dy + yp);
  for (Eigen::Index y = 0; y < dy; ++y)
    for (Eigen::Index yp = 0; yp < dy; ++yp)
      for (Eigen::Index z = 0; z < dz; ++z)
        for (Eigen::Index zp = 0; zp < dz; ++zp)
          bh(y * dy + yp, z * dz + zp) = bm(y * dz + z, yp * dz + zp);
  const ComplexMatrix rh = ah * bh;
  ComplexMatrix r(dx * dz, dx * dz);
  for (Eigen::Index x = 0; x < dx; ++x)
    for (Eigen::Index xp = 0; xp < dx; ++xp)
      for (Eigen::Index z = 0; z < dz; ++z)
        for (Eigen::Index zp = 0; zp < dz; ++zp)
          r(x * dz + z, xp * dz + zp) = rh(x * dx + xp, z * dz + zp);

  SystemLayout out = a.layout.select(xs).concat(b.layout.select(zs));
  return LabeledOperator(std::move(out), HermitianOperator::trusted((r + r.adjoint()) * 0.5));
}

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b) {
  for (const auto& s : b.layout.systems())
    if (a.layout.contains(s.label))
      throw InputError("tensor: system '" + s.label + "' appears in both factors");
  return LabeledOperator(a.layout.concat(b.layout), kron(a.op, b.op));
}

LabeledOperator trace_out(const LabeledOperator& a, const std::vector<std::string>& labels) {
  return LabeledOperator(a.layout.without(labels), partial_trace(a.op, a.layout, labels));
}

LabeledOperator transpose(const LabeledOperator& a) {
  return LabeledOperator(a.layout, HermitianOperator::trusted(a.op.matrix().transpose()));
}

LabeledOperator relabel(const LabeledOperator& a, const std::map<std::string, std::string>& names) {
  std::vector<System> sys = a.layout.systems();
  for (const auto& [from, to] : names) {
    a.layout.index_of(from);
    for (auto& s : sys)
      if (s.label == from) s.label = to;
  }
  return LabeledOperator(SystemLayout(std::move(sys)), a.op);
}

LabeledOperator extend_identity(const LabeledOperator& a, const SystemLayout& full) {
  std::vector<std::string> missing;
  for (const auto& s : full.systems())
    if (!a.layout.contains(s.label)) missing.push_back(s.label);
  const SystemLayout rest = full.select(missing);
  LabeledOperator id(rest, HermitianOperator::identity(rest.total_dim()));
  return align_to(tensor(a, id), full);
}

LabeledOperator scalar_operator(double value) {
  ComplexMatrix m(1, 1);
  m(0, 0) = value;
  return LabeledOperator(SystemLayout(), HermitianOperator::trusted(m));
}

double scalar_value(const LabeledOperator& a) {
  if (a.dim() != 1) throw InputError("scalar_value: operator is not 1x1");
  return a.op.matrix()(0, 0).real();
}

double pairing(const LabeledOperator& a, const LabeledOperator& b) {
  return hs_inner(a.op, align_to(b, a.layout).op);
}

LabeledOperator choi_from_kraus(const std::vector<ComplexMatrix>& kraus, const SystemLayout& in,
                                const SystemLayout& out) {
  const Eigen::Index di = in.total_dim(), d_o = out.total_dim();
  ComplexMatrix c = ComplexMatrix::Zero(d_o * di, d_o * di);
  for (const auto& k : kraus) {
    if (k.rows() != d_o || k.cols() != di) throw InputError("choi_from_kraus: Kraus shape mismatch");
    ComplexVector v(d_o * di);
    for (Eigen::Index o = 0; o < d_o; ++o)
      for (Eigen::Index j = 0; j < di; ++j) v(o * di + j) = k(o, j);
    c += v * v.adjoint();
  }
  return LabeledOperator(out.concat(in), HermitianOperator::trusted((c + c.adjoint()) * 0.5));
}

LabeledOperator choi_from_unitary(const ComplexMatrix& u, const SystemLayout& in,
                                  const SystemLayout& out) {
  return choi_from_kraus({u}, in, out);
}

LabeledOperator max_entangled(const System& a, const System& b) {
  if (a.dim != b.dim) throw InputError("max_entangled: systems have different dims");
  const Eigen::Index d = a.dim;
  ComplexVector v = ComplexVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return LabeledOperator(SystemLayout({a, b}), HermitianOperator::trusted(v * v.adjoint()));
}

}  // namespace qnet
