// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/sdp.hpp"

namespace qnet {

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "optimal";
    case SdpStatus::Infeasible: return "infeasible";
    case SdpStatus::Unbounded: return "unbounded";
    case SdpStatus::Inaccurate: return "inaccurate";
  }
  return "inaccurate";
}

SdpProblem SdpProblem::single_block(const HermitianOperator& objective,
                                    const std::vector<SparseHermitian>& rows,
                                    const std::vector<double>& rhs, bool independent_rows) {
  if (rows.size() != rhs.size()) throw InputError("sdp: rows and rhs differ in length");
  SdpProblem p;
  p.block_dims = {objective.dim()};
  p.objective = {objective};
  p.constraints.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) p.constraints.push_back({{rows[i]}, rhs[i]});
  p.independent_rows = independent_rows;
  return p;
}

void SdpProblem::check() const {
  if (block_dims.empty()) throw InputError("sdp: no variable blocks");
  if (objective.size() != block_dims.size())
    throw InputError("sdp: objective has " + std::to_string(objective.size()) + " blocks, expected " +
                     std::to_string(block_dims.size()));
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    if (block_dims[b] < 1) throw InputError("sdp: block " + std::to_string(b) + " has dim < 1");
    if (objective[b].dim() != block_dims[b])
      throw InputError("sdp: objective block " + std::to_string(b) + " has wrong dim");
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    if (c.parts.size() != block_dims.size())
      throw InputError("sdp: constraint " + std::to_string(i) + " has wrong block count");
    if (!std::isfinite(c.rhs)) throw InputError("sdp: constraint " + std::to_string(i) + " rhs not finite");
    for (std::size_t b = 0; b < c.parts.size(); ++b) {
      const auto& f = c.parts[b];
      if (f.nnz() && f.dim != block_dims[b])
        throw InputError("sdp: constraint " + std::to_string(i) + " block " + std::to_string(b) +
                         " has dim " + std::to_string(f.dim));
      for (std::size_t k = 0; k < f.nnz(); ++k)
        if (!std::isfinite(f.vals[k].real()) || !std::isfinite(f.vals[k].imag()))
          throw InputError("sdp: constraint " + std::to_string(i) + " has non-finite entries");
    }
  }
}

RealVector SdpProblem::rhs() const {
  RealVector b(static_cast<Eigen::Index>(constraints.size()));
  for (std::size_t i = 0; i < constraints.size(); ++i) b(static_cast<Eigen::Index>(i)) = constraints[i].rhs;
  return b;
}

RealVector SdpProblem::apply(const std::vector<ComplexMatrix>& x) const {
  RealVector out(static_cast<Eigen::Index>(constraints.size()));
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    double acc = 0.0;
    for (std::size_t b = 0; b < block_dims.size(); ++b) acc += constraints[i].parts[b].inner(x[b]);
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return out;
}

std::vector<ComplexMatrix> SdpProblem::adjoint(const RealVector& y) const {
  std::vector<ComplexMatrix> out;
  for (auto d : block_dims) out.push_back(ComplexMatrix::Zero(d, d));
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t b = 0; b < block_dims.size(); ++b)
      constraints[i].parts[b].add_to(out[b], y(static_cast<Eigen::Index>(i)));
  return out;
}

double SdpProblem::objective_value(const std::vector<ComplexMatrix>& x) const {
  double acc = 0.0;
  for (std::size_t b = 0; b < block_dims.size(); ++b)
    acc += (objective[b].matrix().cwiseProduct(x[b].transpose())).sum().real();
  return acc;
}

double SdpProblem::objective_norm() const {
  double s = 0.0;
  for (const auto& a : objective) s += a.matrix().squaredNorm();
  return std::sqrt(s);
}

}  // namespace qnet
