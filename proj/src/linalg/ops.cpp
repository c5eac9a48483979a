// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qnet/linalg.hpp"

namespace qnet {

namespace {

std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
  return s;
}

// Flat offsets of every joint value of the factors at `pos` (first listed
// position most significant).
std::vector<Eigen::Index> offsets(const std::vector<int>& dims, const std::vector<int>& pos) {
  const auto st = strides_of(dims);
  std::vector<Eigen::Index> out{0};
  for (int p : pos) {
    std::vector<Eigen::Index> next;
    next.reserve(out.size() * dims[p]);
    for (auto o : out)
      for (int v = 0; v < dims[p]; ++v) next.push_back(o + v * st[p]);
    out.swap(next);
  }
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& pos) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (std::find(pos.begin(), pos.end(), k) == pos.end()) out.push_back(k);
  return out;
}

void check_dims(const ComplexMatrix& m, const std::vector<int>& dims) {
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw InputError("operator dimension " + std::to_string(m.rows()) +
                     " does not match layout dimension " + std::to_string(total));
}

}  // namespace

namespace detail {

std::vector<int> positions_of(const SystemLayout& layout, const std::vector<std::string>& labels) {
  std::vector<int> pos;
  for (const auto& l : labels) {
    const int p = static_cast<int>(layout.index_of(l));
    if (std::find(pos.begin(), pos.end(), p) != pos.end())
      throw InputError("label '" + l + "' listed twice");
    pos.push_back(p);
  }
  return pos;
}

ComplexMatrix ptrace(const ComplexMatrix& m, const std::vector<int>& dims,
                     const std::vector<int>& traced) {
  check_dims(m, dims);
  const auto kept = complement(static_cast<int>(dims.size()), traced);
  const auto ok = offsets(dims, kept);
  const auto ot = offsets(dims, traced);
  const auto n = static_cast<Eigen::Index>(ok.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) {
      cplx acc = 0;
      for (auto t : ot) acc += m(ok[r] + t, ok[c] + t);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix ptranspose(const ComplexMatrix& m, const std::vector<int>& dims,
                         const std::vector<int>& transposed) {
  check_dims(m, dims);
  const auto st = strides_of(dims);
  const Eigen::Index n = m.rows();
  // part[i] = contribution of the transposed factors to flat index i
  std::vector<Eigen::Index> part(n, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int p : transposed) part[i] += ((i / st[p]) % dims[p]) * st[p];
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      out(i, j) = m(i - part[i] + part[j], j - part[j] + part[i]);
  return out;
}

std::vector<Eigen::Index> permutation_map(const std::vector<int>& dims,
                                          const std::vector<int>& order) {
  if (order.size() != dims.size()) throw InputError("permutation has wrong length");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw InputError("not a permutation of the systems");
  // Enumerating joint values of the old factors listed in `order` yields old
  // flat indices in new-layout order.
  return offsets(dims, order);
}

ComplexMatrix permute(const ComplexMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& order) {
  check_dims(m, dims);
  const auto map = permutation_map(dims, order);
  const Eigen::Index n = m.rows();
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = m(map[i], map[j]);
  return out;
}

}  // namespace detail

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator::trusted(kron(a.matrix(), b.matrix()));
}

HermitianOperator partial_trace(const HermitianOperator& h, const SystemLayout& layout,
                                const std::vector<std::string>& traced) {
  const auto pos = detail::positions_of(layout, traced);
  return HermitianOperator::trusted(detail::ptrace(h.matrix(), layout.dims(), pos));
}

HermitianOperator partial_transpose(const HermitianOperator& h, const SystemLayout& layout,
                                    const std::vector<std::string>& transposed) {
  const auto pos = detail::positions_of(layout, transposed);
  return HermitianOperator::trusted(detail::ptranspose(h.matrix(), layout.dims(), pos));
}

HermitianOperator permute_systems(const HermitianOperator& h, const SystemLayout& layout,
                                  const std::vector<std::string>& new_order) {
  if (new_order.size() != layout.size()) throw InputError("permute_systems: not a permutation");
  const auto pos = detail::positions_of(layout, new_order);
  return HermitianOperator::trusted(detail::permute(h.matrix(), layout.dims(), pos));
}

Spectrum eigh(const HermitianOperator& h) {
  Spectrum s;
  if (h.dim() == 0) return s;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
  if (es.info() != Eigen::Success) throw NumericalError("eigh: eigensolver did not converge");
  const Eigen::Index n = h.dim();
  s.eigenvalues = es.eigenvalues().reverse();
  s.eigenvectors = es.eigenvectors().rowwise().reverse();
  (void)n;
  return s;
}

double psd_margin(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("psd_margin: eigensolver did not converge");
  return es.eigenvalues()(0);
}

double max_eigenvalue(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  return es.eigenvalues()(h.dim() - 1);
}

bool is_psd(const HermitianOperator& h, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("is_psd: eigensolver did not converge");
  const double lmin = es.eigenvalues()(0);
  const double lmax = es.eigenvalues()(h.dim() - 1);
  return lmin >= -rel_tol * std::max(1.0, lmax);
}

PinvSqrt support_pinv_sqrt(const HermitianOperator& h, double tol) {
  const Spectrum s = eigh(h);
  const Eigen::Index n = h.dim();
  const double lmax = n ? s.eigenvalues(0) : 0.0;
  const double lmin = n ? s.eigenvalues(n - 1) : 0.0;
  if (lmin < -kPsdTol * std::max(1.0, lmax))
    throw InputError("support_pinv_sqrt: operator has negative eigenvalue " + std::to_string(lmin));
  RealVector inv = RealVector::Zero(n);
  RealVector proj = RealVector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (lmax > 0 && s.eigenvalues(k) > tol * lmax) {
      inv(k) = 1.0 / std::sqrt(s.eigenvalues(k));
      proj(k) = 1.0;
    }
  }
  const auto& v = s.eigenvectors;
  PinvSqrt out;
  out.pinv_sqrt = HermitianOperator(v * inv.cast<cplx>().asDiagonal() * v.adjoint());
  out.projector = HermitianOperator(v * proj.cast<cplx>().asDiagonal() * v.adjoint());
  return out;
}

HermitianOperator sqrt_psd(const HermitianOperator& h) {
  const Spectrum s = eigh(h);
  RealVector r = s.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return HermitianOperator(s.eigenvectors * r.cast<cplx>().asDiagonal() *
                           s.eigenvectors.adjoint());
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw InputError("hs_inner: dimension mismatch");
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

RealMatrix real_embedding(const HermitianOperator& h) {
  const Eigen::Index n = h.dim();
  RealMatrix out(2 * n, 2 * n);
  const RealMatrix x = h.matrix().real();
  const RealMatrix y = h.matrix().imag();
  out.topLeftCorner(n, n) = x;
  out.topRightCorner(n, n) = -y;
  out.bottomLeftCorner(n, n) = y;
  out.bottomRightCorner(n, n) = x;
  return out;
}

double psd_margin_real(const HermitianOperator& h) {
  const RealMatrix e = real_embedding(h);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(e, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("psd_margin_real: no convergence");
  return es.eigenvalues()(0);
}

}  // namespace qnet
