// SPDX-License-Identifier: MIT
// Reference implementations used to check the library. They share no code
// paths with the routines they check beyond Eigen and the SDP kernel.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qnet/netmodel.hpp"
#include "qnet/sdp.hpp"

namespace oracle {

using qnet::ComplexMatrix;
using qnet::cplx;

// Mixed-radix digits of a flat index, most significant first.
inline std::vector<int> digits(Eigen::Index flat, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return d;
}

inline Eigen::Index flat_index(const std::vector<int>& d, const std::vector<int>& dims) {
  Eigen::Index f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + d[k];
  return f;
}

// (A*B)[(x,z),(x',z')] = sum_{y,y'} A[(x,y),(x',y')] B[(y,z),(y',z')], evaluated
// entry by entry. Result systems: A's private ones, then B's private ones.
inline qnet::LabeledOperator link(const qnet::LabeledOperator& a, const qnet::LabeledOperator& b) {
  const auto la = a.layout.labels(), lb = b.layout.labels();
  const auto da = a.layout.dims(), db = b.layout.dims();
  std::vector<qnet::System> out_sys;
  std::vector<std::string> shared;
  for (std::size_t i = 0; i < la.size(); ++i)
    if (std::find(lb.begin(), lb.end(), la[i]) == lb.end()) out_sys.push_back(a.layout[i]);
    else shared.push_back(la[i]);
  for (std::size_t i = 0; i < lb.size(); ++i)
    if (std::find(la.begin(), la.end(), lb[i]) == la.end()) out_sys.push_back(b.layout[i]);
  const qnet::SystemLayout out_layout(out_sys);
  const auto dout = out_layout.dims();
  const auto lout = out_layout.labels();
  std::vector<int> dsh;
  for (const auto& s : shared) dsh.push_back(a.layout.at(s).dim);
  Eigen::Index nsh = 1;
  for (int d : dsh) nsh *= d;
  const Eigen::Index n = out_layout.total_dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  auto value_of = [](const std::map<std::string, int>& v, const std::vector<std::string>& labels) {
    std::vector<int> d;
    for (const auto& l : labels) d.push_back(v.at(l));
    return d;
  };
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      std::map<std::string, int> row, col;
      const auto dr = digits(r, dout), dc = digits(c, dout);
      for (std::size_t k = 0; k < lout.size(); ++k) {
        row[lout[k]] = dr[k];
        col[lout[k]] = dc[k];
      }
      cplx acc = 0.0;
      for (Eigen::Index y = 0; y < nsh; ++y)
        for (Eigen::Index yp = 0; yp < nsh; ++yp) {
          const auto dy = digits(y, dsh), dyp = digits(yp, dsh);
          auto rr = row, cc = col;
          for (std::size_t k = 0; k < shared.size(); ++k) {
            rr[shared[k]] = dy[k];
            cc[shared[k]] = dyp[k];
          }
          acc += a.matrix()(flat_index(value_of(rr, la), da), flat_index(value_of(cc, la), da)) *
                 b.matrix()(flat_index(value_of(rr, lb), db), flat_index(value_of(cc, lb), db));
        }
      m(r, c) = acc;
    }
  return qnet::LabeledOperator(out_layout, qnet::HermitianOperator::trusted((m + m.adjoint()) * 0.5));
}

// Tr over the listed factor positions, entry by entry.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims, const std::vector<int>& traced) {
  std::vector<int> keep_dims, keep_pos;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k)
    if (std::find(traced.begin(), traced.end(), k) == traced.end()) {
      keep_dims.push_back(dims[static_cast<std::size_t>(k)]);
      keep_pos.push_back(k);
    }
  Eigen::Index nk = 1;
  for (int d : keep_dims) nk *= d;
  ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto dr = digits(r, dims), dc = digits(c, dims);
      bool diag = true;
      for (int t : traced) diag = diag && dr[static_cast<std::size_t>(t)] == dc[static_cast<std::size_t>(t)];
      if (!diag) continue;
      std::vector<int> kr, kc;
      for (int p : keep_pos) {
        kr.push_back(dr[static_cast<std::size_t>(p)]);
        kc.push_back(dc[static_cast<std::size_t>(p)]);
      }
      out(flat_index(kr, keep_dims), flat_index(kc, keep_dims)) += m(r, c);
    }
  return out;
}

// 2^{-H_min(A|B)} = max { Tr[rho^T J] : J >= 0 on (A, B), Tr_A J = I_B }, the
// optimal recovery-fidelity form; rows are written out entry by entry.
inline double guessing_value(const ComplexMatrix& rho, int da, int db) {
  const Eigen::Index n = static_cast<Eigen::Index>(da) * db;
  std::vector<qnet::SparseHermitian> rows;
  std::vector<double> rhs;
  for (int b = 0; b < db; ++b)
    for (int e = b; e < db; ++e)
      for (int part = 0; part < (b == e ? 1 : 2); ++part) {
        ComplexMatrix f = ComplexMatrix::Zero(n, n);
        const cplx w = part == 0 ? cplx(0.5, 0.0) : cplx(0.0, 0.5);
        for (int a = 0; a < da; ++a) {
          f(a * db + b, a * db + e) += w;
          f(a * db + e, a * db + b) += std::conj(w);
        }
        rows.push_back(qnet::SparseHermitian::from_dense(f));
        rhs.push_back(b == e ? 1.0 : 0.0);
      }
  const ComplexMatrix obj = rho.transpose();
  const auto p = qnet::SdpProblem::single_block(qnet::HermitianOperator::trusted((obj + obj.adjoint()) * 0.5),
                                                rows, rhs, true);
  return qnet::solve_primal(p).primal_value;
}

// max c.x s.t. A x = b, x >= 0 by enumerating every basic solution.
inline double lp_by_vertices(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  double best = -INFINITY;
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (pick[static_cast<std::size_t>(j)]) cols.push_back(j);
    Eigen::MatrixXd basis(m, m);
    for (int k = 0; k < m; ++k) basis.col(k) = a.col(cols[static_cast<std::size_t>(k)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd xb = lu.solve(b);
    if (xb.minCoeff() < -1e-12) continue;
    double v = 0.0;
    for (int k = 0; k < m; ++k) v += c(cols[static_cast<std::size_t>(k)]) * xb(k);
    best = std::max(best, v);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// Distribution of x = answer - marked for Grover search with oracle
// U_i = 2|i><i| - I and diffusion 2|s><s| - I, by direct state evolution.
inline std::vector<double> grover_distribution(int k, int n) {
  std::vector<double> p(static_cast<std::size_t>(2 * k - 1), 0.0);
  for (int i = 0; i < k; ++i) {
    std::vector<cplx> psi(static_cast<std::size_t>(k), 1.0 / std::sqrt(static_cast<double>(k)));
    for (int q = 0; q < n; ++q) {
      for (int j = 0; j < k; ++j) psi[static_cast<std::size_t>(j)] *= (j == i ? 1.0 : -1.0);
      cplx mean = 0.0;
      for (const auto& v : psi) mean += v;
      mean /= static_cast<double>(k);
      for (auto& v : psi) v = 2.0 * mean - v;
    }
    for (int ans = 0; ans < k; ++ans)
      p[static_cast<std::size_t>(ans - i + k - 1)] += std::norm(psi[static_cast<std::size_t>(ans)]) / k;
  }
  return p;
}

}  // namespace oracle
