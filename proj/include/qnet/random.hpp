// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <random>

#include "qnet/types.hpp"

namespace qnet {

using Rng = std::mt19937_64;

// Per-task seeds derived from a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);
// Haar unitary: QR of a Ginibre matrix with the phases of diag(R) removed.
ComplexMatrix random_unitary(Eigen::Index d, Rng& rng);
// Haar isometry C^in -> C^out (out >= in): first `in` columns of a Haar unitary.
ComplexMatrix random_isometry(Eigen::Index out, Eigen::Index in, Rng& rng);
HermitianOperator random_hermitian(Eigen::Index d, Rng& rng);
// Density matrix G G^dagger / Tr with G of shape d x rank.
HermitianOperator random_density(Eigen::Index d, Rng& rng, Eigen::Index rank = 0);
HermitianOperator random_psd(Eigen::Index d, Rng& rng, Eigen::Index rank = 0);

}  // namespace qnet
