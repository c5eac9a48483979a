// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/netmodel.hpp"

namespace qnet {

namespace {

constexpr Eigen::Index kDenseLimit = 64;
constexpr double kRankTol = 1e-10;

void require_small(const ConstraintSet& cs) {
  if (cs.layout.total_dim() > kDenseLimit)
    throw InputError("dense nullspace computations are limited to operator dim <= " +
                     std::to_string(kDenseLimit));
}

struct RangeSplit {
  RealMatrix range;  // orthonormal columns spanning the row space
  RealMatrix null;   // orthonormal columns spanning its complement
};

RangeSplit split(const RealMatrix& rows) {
  const Eigen::Index n = rows.cols();
  RangeSplit out;
  if (rows.rows() == 0) {
    out.range = RealMatrix(n, 0);
    out.null = RealMatrix::Identity(n, n);
    return out;
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(rows.transpose());
  qr.setThreshold(kRankTol);
  const Eigen::Index r = qr.rank();
  const RealMatrix q = qr.householderQ();
  out.range = q.leftCols(r);
  out.null = q.rightCols(n - r);
  return out;
}

}  // namespace

RealMatrix vectorized_rows(const std::vector<SparseHermitian>& rows, Eigen::Index dim) {
  RealMatrix m(static_cast<Eigen::Index>(rows.size()), dim * dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = hermitian_to_real(rows[i].to_dense()).transpose();
  return m;
}

std::vector<HermitianOperator> primal_direction_basis(const ConstraintSet& cs) {
  require_small(cs);
  const Eigen::Index d = cs.layout.total_dim();
  const RangeSplit s = split(vectorized_rows(cs.equalities, d));
  std::vector<HermitianOperator> out;
  for (Eigen::Index j = 0; j < s.null.cols(); ++j)
    out.push_back(HermitianOperator(real_to_hermitian(s.null.col(j), d)));
  return out;
}

ConstraintSet numerical_dual(const ConstraintSet& cs, SetKind kind) {
  require_small(cs);
  const Eigen::Index d = cs.layout.total_dim();
  const RangeSplit s = split(vectorized_rows(cs.equalities, d));
  ConstraintSet out;
  out.kind = kind;
  out.layout = cs.layout;
  out.parties = cs.parties;
  for (Eigen::Index j = 0; j < s.null.cols(); ++j)
    out.equalities.push_back(SparseHermitian::from_dense(real_to_hermitian(s.null.col(j), d), 1e-15));
  out.normalization_index = out.equalities.size();
  out.equalities.push_back(SparseHermitian::from_dense(cs.interior.matrix(), 0.0));
  out.rhs.assign(out.equalities.size(), 0.0);
  out.rhs[out.normalization_index] = 1.0;
  out.independent = true;
  out.cone_span = cs.equalities;
  out.cone_span_independent = cs.independent;

  // A multiple of the identity lies in the dual set iff I is orthogonal to
  // every primal direction.
  const RealVector id = hermitian_to_real(ComplexMatrix::Identity(d, d));
  const double leak = s.null.cols() ? (s.null.transpose() * id).cwiseAbs().maxCoeff() : 0.0;
  if (leak > 1e-9) throw InputError("dual set: no multiple of the identity is feasible");
  out.interior = HermitianOperator::identity(d) * (1.0 / cs.interior.trace());
  return out;
}

DualAffineBasis dual_affine_basis(const ConstraintSet& cs) {
  require_small(cs);
  const Eigen::Index d = cs.layout.total_dim();
  std::vector<SparseHermitian> homogeneous;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (i != cs.normalization_index) homogeneous.push_back(cs.equalities[i]);
  const RangeSplit hs = split(vectorized_rows(homogeneous, d));
  const RangeSplit all = split(vectorized_rows(cs.equalities, d));

  const RealVector f0 = hermitian_to_real(cs.normalization().to_dense()) / cs.normalization_rhs();
  const RealVector anchor = f0 - hs.range * (hs.range.transpose() * f0);

  DualAffineBasis out;
  out.anchor = LabeledOperator(cs.layout, HermitianOperator(real_to_hermitian(anchor, d)));
  for (Eigen::Index j = 0; j < hs.range.cols(); ++j)
    out.basis.push_back(HermitianOperator(real_to_hermitian(hs.range.col(j), d)));
  out.anchor_primal = LabeledOperator(cs.layout, cs.interior);
  for (Eigen::Index j = 0; j < all.null.cols(); ++j)
    out.primal_directions.push_back(HermitianOperator(real_to_hermitian(all.null.col(j), d)));
  return out;
}

DualMembership dual_membership(const HermitianOperator& g, const DualAffineBasis& basis) {
  DualMembership m;
  m.pairing_residual = std::abs(hs_inner(g, basis.anchor_primal.op) - 1.0);
  m.orthogonality = 0.0;
  for (const auto& b : basis.primal_directions)
    m.orthogonality = std::max(m.orthogonality, std::abs(hs_inner(g, b)));
  return m;
}

}  // namespace qnet
