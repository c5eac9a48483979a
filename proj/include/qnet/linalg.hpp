// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "qnet/layout.hpp"
#include "qnet/types.hpp"

namespace qnet {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

// Labeled subsystem operations. The result is bound to the layout with the
// traced systems removed (layout.without(traced)).
HermitianOperator partial_trace(const HermitianOperator& h, const SystemLayout& layout,
                                const std::vector<std::string>& traced);
HermitianOperator partial_transpose(const HermitianOperator& h, const SystemLayout& layout,
                                    const std::vector<std::string>& transposed);
// Result is bound to layout.select(new_order).
HermitianOperator permute_systems(const HermitianOperator& h, const SystemLayout& layout,
                                  const std::vector<std::string>& new_order);

Spectrum eigh(const HermitianOperator& h);
double psd_margin(const HermitianOperator& h);
// lambda_min >= -rel_tol * max(1, lambda_max)
bool is_psd(const HermitianOperator& h, double rel_tol = kPsdTol);
double max_eigenvalue(const HermitianOperator& h);

struct PinvSqrt {
  HermitianOperator pinv_sqrt;  // B^{-1/2} on supp(B), zero elsewhere
  HermitianOperator projector;  // onto supp(B)
};
// Eigenvalues <= tol * lambda_max are treated as zero. Throws InputError if
// h has an eigenvalue below -kPsdTol * max(1, lambda_max).
PinvSqrt support_pinv_sqrt(const HermitianOperator& h, double tol);
HermitianOperator sqrt_psd(const HermitianOperator& h);

// Hilbert-Schmidt pairing Re Tr(a b).
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);
double max_abs(const ComplexMatrix& m);

// [[X, -Y], [Y, X]] for H = X + iY. Each eigenvalue of H appears twice.
RealMatrix real_embedding(const HermitianOperator& h);
// Smallest eigenvalue computed through the real embedding.
double psd_margin_real(const HermitianOperator& h);

namespace detail {
// Index-level kernels on raw matrices with explicit factor dims.
ComplexMatrix ptrace(const ComplexMatrix& m, const std::vector<int>& dims,
                     const std::vector<int>& traced);
ComplexMatrix ptranspose(const ComplexMatrix& m, const std::vector<int>& dims,
                         const std::vector<int>& transposed);
// order[k] = old position of the factor that ends up at position k.
ComplexMatrix permute(const ComplexMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& order);
// Flat index map for a factor permutation: result[new_flat] = old_flat.
std::vector<Eigen::Index> permutation_map(const std::vector<int>& dims,
                                          const std::vector<int>& order);
std::vector<int> positions_of(const SystemLayout& layout, const std::vector<std::string>& labels);
}  // namespace detail

}  // namespace qnet
