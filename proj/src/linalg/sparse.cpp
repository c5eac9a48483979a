// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/linalg.hpp"
#include "qnet/sparse.hpp"

namespace qnet {

SparseHermitian SparseHermitian::identity(Eigen::Index dim) {
  SparseHermitian s;
  s.dim = dim;
  for (Eigen::Index i = 0; i < dim; ++i) {
    s.rows.push_back(i);
    s.cols.push_back(i);
    s.vals.emplace_back(1.0, 0.0);
  }
  return s;
}

SparseHermitian SparseHermitian::from_dense(const ComplexMatrix& m, double drop) {
  SparseHermitian s;
  s.dim = m.rows();
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > drop) {
        s.rows.push_back(r);
        s.cols.push_back(c);
        s.vals.push_back(m(r, c));
      }
  return s;
}

ComplexMatrix SparseHermitian::to_dense() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < vals.size(); ++k) m(rows[k], cols[k]) += vals[k];
  return m;
}

HermitianOperator SparseHermitian::to_operator() const { return HermitianOperator(to_dense()); }

double SparseHermitian::inner(const ComplexMatrix& x) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < vals.size(); ++k) acc += (vals[k] * x(cols[k], rows[k])).real();
  return acc;
}

double SparseHermitian::inner(const SparseHermitian& other) const {
  // Tr(F G) = sum F_rc G_cr; densify the smaller operand's pattern lookup.
  ComplexMatrix g = other.to_dense();
  return inner(g);
}

void SparseHermitian::add_to(ComplexMatrix& acc, double alpha) const {
  for (std::size_t k = 0; k < vals.size(); ++k) acc(rows[k], cols[k]) += alpha * vals[k];
}

double SparseHermitian::norm() const {
  double s = 0.0;
  for (const auto& v : vals) s += std::norm(v);
  return std::sqrt(s);
}

void SparseHermitian::scale(double s) {
  for (auto& v : vals) v *= s;
}

SparseHermitian SparseHermitian::kron(const SparseHermitian& b) const {
  SparseHermitian out;
  out.dim = dim * b.dim;
  out.rows.reserve(nnz() * b.nnz());
  out.cols.reserve(nnz() * b.nnz());
  out.vals.reserve(nnz() * b.nnz());
  for (std::size_t i = 0; i < nnz(); ++i)
    for (std::size_t j = 0; j < b.nnz(); ++j) {
      out.rows.push_back(rows[i] * b.dim + b.rows[j]);
      out.cols.push_back(cols[i] * b.dim + b.cols[j]);
      out.vals.push_back(vals[i] * b.vals[j]);
    }
  return out;
}

std::vector<SparseHermitian> hermitian_basis(Eigen::Index d) {
  std::vector<SparseHermitian> out;
  const double r2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i) {
    SparseHermitian s;
    s.dim = d;
    s.rows = {i};
    s.cols = {i};
    s.vals = {cplx(1.0, 0.0)};
    out.push_back(s);
  }
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      SparseHermitian re;
      re.dim = d;
      re.rows = {i, j};
      re.cols = {j, i};
      re.vals = {cplx(r2, 0.0), cplx(r2, 0.0)};
      out.push_back(re);
      SparseHermitian im;
      im.dim = d;
      im.rows = {i, j};
      im.cols = {j, i};
      im.vals = {cplx(0.0, -r2), cplx(0.0, r2)};
      out.push_back(im);
    }
  return out;
}

std::vector<SparseHermitian> traceless_hermitian_basis(Eigen::Index d) {
  std::vector<SparseHermitian> out;
  for (auto& b : hermitian_basis(d))
    if (b.rows.size() == 2) out.push_back(b);
  for (Eigen::Index l = 1; l < d; ++l) {
    SparseHermitian s;
    s.dim = d;
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) {
      s.rows.push_back(j);
      s.cols.push_back(j);
      s.vals.emplace_back(norm, 0.0);
    }
    s.rows.push_back(l);
    s.cols.push_back(l);
    s.vals.emplace_back(-static_cast<double>(l) * norm, 0.0);
    out.push_back(s);
  }
  return out;
}

SparseHermitian embed_factors(const SystemLayout& layout,
                              const std::vector<std::vector<std::string>>& groups,
                              const std::vector<SparseHermitian>& factors) {
  if (groups.size() != factors.size()) throw InputError("embed_factors: size mismatch");
  std::vector<std::string> built;
  SparseHermitian acc = SparseHermitian::identity(1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (factors[g].dim != layout.dim_of(groups[g]))
      throw InputError("embed_factors: factor dim does not match its systems");
    built.insert(built.end(), groups[g].begin(), groups[g].end());
    acc = acc.kron(factors[g]);
  }
  const SystemLayout rest = layout.without(built);
  for (const auto& s : rest.systems()) built.push_back(s.label);
  acc = acc.kron(SparseHermitian::identity(rest.total_dim()));

  // built order -> layout order
  const SystemLayout built_layout = layout.select(built);
  std::vector<int> order;
  for (const auto& s : layout.systems())
    order.push_back(static_cast<int>(built_layout.index_of(s.label)));
  const auto map = detail::permutation_map(built_layout.dims(), order);  // new -> old
  std::vector<Eigen::Index> inv(map.size());
  for (std::size_t k = 0; k < map.size(); ++k) inv[map[k]] = static_cast<Eigen::Index>(k);
  for (std::size_t k = 0; k < acc.nnz(); ++k) {
    acc.rows[k] = inv[acc.rows[k]];
    acc.cols[k] = inv[acc.cols[k]];
  }
  return acc;
}

RealVector hermitian_to_real(const ComplexMatrix& h) {
  const Eigen::Index d = h.rows();
  RealVector v(d * d);
  Eigen::Index k = 0;
  const double s2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i) v(k++) = h(i, i).real();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      v(k++) = s2 * h(i, j).real();
      v(k++) = s2 * h(i, j).imag();
    }
  return v;
}

ComplexMatrix real_to_hermitian(const RealVector& v, Eigen::Index d) {
  if (v.size() != d * d) throw InputError("real_to_hermitian: wrong vector length");
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  Eigen::Index k = 0;
  const double r2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i) h(i, i) = v(k++);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const cplx z(r2 * v(k), r2 * v(k + 1));
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return h;
}

}  // namespace qnet
