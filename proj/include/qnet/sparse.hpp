// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "qnet/layout.hpp"
#include "qnet/types.hpp"

namespace qnet {

// Hermitian matrix stored as a coordinate list holding both triangles.
// Constraint rows are built from a handful of sparse factors, so this is
// the natural format for equality maps and the SDP Schur complement.
struct SparseHermitian {
  Eigen::Index dim = 0;
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  std::vector<cplx> vals;

  static SparseHermitian identity(Eigen::Index dim);
  static SparseHermitian from_dense(const ComplexMatrix& m, double drop = 0.0);
  ComplexMatrix to_dense() const;
  HermitianOperator to_operator() const;

  std::size_t nnz() const { return vals.size(); }
  // Re Tr(F X)
  double inner(const ComplexMatrix& x) const;
  double inner(const SparseHermitian& other) const;
  // acc += alpha * F
  void add_to(ComplexMatrix& acc, double alpha) const;
  double norm() const;  // Frobenius
  void scale(double s);

  SparseHermitian kron(const SparseHermitian& b) const;
};

// Orthonormal Hermitian bases with at most two nonzeros per element
// (traceless variant uses generalized Gell-Mann diagonals).
std::vector<SparseHermitian> hermitian_basis(Eigen::Index d);
std::vector<SparseHermitian> traceless_hermitian_basis(Eigen::Index d);

// Builds the operator whose factor over group k is factors[k] (a sparse
// operator on the composite of groups[k], in the listed label order) and
// the identity on every layout system not mentioned, expressed in layout
// order.
SparseHermitian embed_factors(const SystemLayout& layout,
                              const std::vector<std::vector<std::string>>& groups,
                              const std::vector<SparseHermitian>& factors);

// Real coordinates in an orthonormal basis of Herm(d): Tr(AB) = vec(A).vec(B).
RealVector hermitian_to_real(const ComplexMatrix& h);
ComplexMatrix real_to_hermitian(const RealVector& v, Eigen::Index d);

}  // namespace qnet
