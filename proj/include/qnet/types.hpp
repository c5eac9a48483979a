// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qnet {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Malformed arguments: unknown labels, mismatched dims, bad files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical breakdown (eigensolver failure, singular factorization).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Asymmetry below this (relative to max(1, |H|_max)) is symmetrized away.
inline constexpr double kHermitianTol = 1e-12;
// Eigenvalues >= -kPsdTol * max(1, lambda_max) count as nonnegative.
inline constexpr double kPsdTol = 1e-9;

class HermitianOperator {
 public:
  HermitianOperator() = default;
  // Symmetrizes (M + M^dagger)/2; throws InputError if M is not square,
  // has non-finite entries or is further than kHermitianTol from Hermitian.
  explicit HermitianOperator(const ComplexMatrix& m);

  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator zero(Eigen::Index dim);
  // Skips the Hermiticity check; caller guarantees m == m^dagger exactly.
  static HermitianOperator trusted(ComplexMatrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;
  HermitianOperator& operator+=(const HermitianOperator& o);

 private:
  ComplexMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

struct Spectrum {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // columns, orthonormal
};

}  // namespace qnet
