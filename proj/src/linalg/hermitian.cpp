// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/types.hpp"

namespace qnet {

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InputError("HermitianOperator: matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", not square");
  }
  if (!m.allFinite()) throw InputError("HermitianOperator: non-finite entry");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (asym > kHermitianTol * scale) {
    throw InputError("HermitianOperator: asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return trusted(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return trusted(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::trusted(ComplexMatrix m) {
  HermitianOperator h;
  h.m_ = std::move(m);
  return h;
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (dim() != o.dim()) throw InputError("HermitianOperator +: dimension mismatch");
  return trusted(m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (dim() != o.dim()) throw InputError("HermitianOperator -: dimension mismatch");
  return trusted(m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const { return trusted(m_ * s); }

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  if (dim() != o.dim()) throw InputError("HermitianOperator +=: dimension mismatch");
  m_ += o.m_;
  return *this;
}

}  // namespace qnet
