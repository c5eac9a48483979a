// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/random.hpp"

namespace qnet {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = n(rng);
      const double im = n(rng);
      g(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  return g;
}

ComplexMatrix random_unitary(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double a = std::abs(r(k, k));
    const cplx phase = a > 0 ? r(k, k) / a : cplx(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

ComplexMatrix random_isometry(Eigen::Index out, Eigen::Index in, Rng& rng) {
  return random_unitary(out, rng).leftCols(in);
}

HermitianOperator random_hermitian(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return HermitianOperator((g + g.adjoint()) * 0.5);
}

HermitianOperator random_psd(Eigen::Index d, Rng& rng, Eigen::Index rank) {
  if (rank <= 0) rank = d;
  const ComplexMatrix g = ginibre(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  return HermitianOperator((m + m.adjoint()) * 0.5);
}

HermitianOperator random_density(Eigen::Index d, Rng& rng, Eigen::Index rank) {
  const HermitianOperator p = random_psd(d, rng, rank);
  return p * (1.0 / p.trace());
}

}  // namespace qnet
