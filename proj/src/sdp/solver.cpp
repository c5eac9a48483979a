// SPDX-License-Identifier: MIT
//
// Primal-dual path-following interior-point method (HKM search direction,
// Mehrotra predictor-corrector, infeasible start) working directly on
// complex Hermitian blocks.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qnet/linalg.hpp"
#include "qnet/sdp.hpp"

namespace qnet {

namespace {

using Blocks = std::vector<ComplexMatrix>;

constexpr double kRankThreshold = 1e-10;

struct Work {
  std::vector<Eigen::Index> dims;
  Blocks a;
  std::vector<std::vector<SparseHermitian>> rows;
  RealVector b;
  double n_total = 0.0;
};

double inner(const Blocks& p, const Blocks& q) {
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) acc += p[k].cwiseProduct(q[k].transpose()).sum().real();
  return acc;
}

double fro(const Blocks& p) {
  double s = 0.0;
  for (const auto& m : p) s += m.squaredNorm();
  return std::sqrt(s);
}

Blocks herm(Blocks p) {
  for (auto& m : p) m = (m + m.adjoint()).eval() * 0.5;
  return p;
}

RealVector apply_rows(const Work& w, const Blocks& x) {
  RealVector out(static_cast<Eigen::Index>(w.rows.size()));
  for (std::size_t i = 0; i < w.rows.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < w.dims.size(); ++k) acc += w.rows[i][k].inner(x[k]);
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return out;
}

Blocks adjoint_rows(const Work& w, const RealVector& y) {
  Blocks out;
  for (auto d : w.dims) out.push_back(ComplexMatrix::Zero(d, d));
  for (std::size_t i = 0; i < w.rows.size(); ++i)
    for (std::size_t k = 0; k < w.dims.size(); ++k)
      w.rows[i][k].add_to(out[k], y(static_cast<Eigen::Index>(i)));
  return out;
}

Blocks product(const Blocks& p, const Blocks& q) {
  Blocks out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k].noalias() = p[k] * q[k];
  return out;
}

bool inverse_pd(const Blocks& z, Blocks& inv) {
  inv.resize(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    Eigen::LLT<ComplexMatrix> llt(z[k]);
    if (llt.info() != Eigen::Success) return false;
    inv[k] = llt.solve(ComplexMatrix::Identity(z[k].rows(), z[k].cols()));
    inv[k] = (inv[k] + inv[k].adjoint()).eval() * 0.5;
  }
  return true;
}

// Largest alpha with x + alpha dx >= 0 (infinity when dx >= 0); x must be PD.
double max_step(const Blocks& x, const Blocks& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<ComplexMatrix> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    const auto l = llt.matrixL();
    const ComplexMatrix a1 = l.solve(dx[k]);
    const ComplexMatrix a2 = l.solve(a1.adjoint());
    const ComplexMatrix t = (a2 + a2.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(t, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    if (lmin < 0) alpha = std::min(alpha, -1.0 / lmin);
  }
  return alpha;
}

// M_ij = Re Tr(F_i X F_j Z^{-1})
RealMatrix schur(const Work& w, const Blocks& x, const Blocks& zinv) {
  const Eigen::Index m = static_cast<Eigen::Index>(w.rows.size());
  RealMatrix mat = RealMatrix::Zero(m, m);
  for (std::size_t k = 0; k < w.dims.size(); ++k) {
    const Eigen::Index n = w.dims[k];
    ComplexMatrix wj(n, n);
    for (Eigen::Index j = 0; j < m; ++j) {
      const SparseHermitian& f = w.rows[static_cast<std::size_t>(j)][k];
      if (f.nnz() == 0) continue;
      if (static_cast<Eigen::Index>(f.nnz()) > n) {
        wj.noalias() = x[k] * f.to_dense() * zinv[k];
      } else {
        wj.setZero();
        for (std::size_t e = 0; e < f.nnz(); ++e)
          wj.noalias() += f.vals[e] * x[k].col(f.rows[e]) * zinv[k].row(f.cols[e]);
      }
      for (Eigen::Index i = j; i < m; ++i) {
        const SparseHermitian& fi = w.rows[static_cast<std::size_t>(i)][k];
        if (fi.nnz()) mat(i, j) += fi.inner(wj);
      }
    }
  }
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = j + 1; i < m; ++i) mat(j, i) = mat(i, j);
  return mat;
}

struct SchurSolver {
  Eigen::LLT<RealMatrix> llt;
  Eigen::LDLT<RealMatrix> ldlt;
  bool use_llt = true;

  bool factor(RealMatrix m) {
    llt.compute(m);
    if (llt.info() == Eigen::Success) {
      use_llt = true;
      return true;
    }
    const double shift = 1e-14 * std::max(1.0, m.diagonal().cwiseAbs().maxCoeff());
    m.diagonal().array() += shift;
    ldlt.compute(m);
    use_llt = false;
    return ldlt.info() == Eigen::Success;
  }
  RealVector solve(const RealVector& r) const {
    if (use_llt) return llt.solve(r);
    return ldlt.solve(r);
  }
};

// Indices of a maximal linearly independent subset of the constraint rows,
// plus the largest inconsistency of the dropped right-hand sides.
std::vector<std::size_t> independent_rows(const SdpProblem& p, double& inconsistency) {
  const std::size_t m = p.num_constraints();
  Eigen::Index cols = 0;
  for (auto d : p.block_dims) cols += d * d;
  RealMatrix r(static_cast<Eigen::Index>(m), cols);
  for (std::size_t i = 0; i < m; ++i) {
    Eigen::Index off = 0;
    for (std::size_t k = 0; k < p.num_blocks(); ++k) {
      const Eigen::Index n = p.block_dims[k];
      const auto& f = p.constraints[i].parts[k];
      if (f.nnz())
        r.row(static_cast<Eigen::Index>(i)).segment(off, n * n) = hermitian_to_real(f.to_dense()).transpose();
      else
        r.row(static_cast<Eigen::Index>(i)).segment(off, n * n).setZero();
      off += n * n;
    }
  }
  inconsistency = 0.0;
  Eigen::ColPivHouseholderQR<RealMatrix> qr(r.transpose());
  qr.setThreshold(kRankThreshold);
  const Eigen::Index rank = qr.rank();
  std::vector<std::size_t> keep;
  for (Eigen::Index j = 0; j < rank; ++j)
    keep.push_back(static_cast<std::size_t>(qr.colsPermutation().indices()(j)));
  std::sort(keep.begin(), keep.end());
  if (static_cast<std::size_t>(rank) == m) return keep;

  RealMatrix kt(cols, rank);
  RealVector bk(rank);
  for (Eigen::Index j = 0; j < rank; ++j) {
    kt.col(j) = r.row(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(j)])).transpose();
    bk(j) = p.constraints[keep[static_cast<std::size_t>(j)]].rhs;
  }
  Eigen::HouseholderQR<RealMatrix> kqr(kt);
  std::vector<bool> kept(m, false);
  for (auto i : keep) kept[i] = true;
  const double scale = 1.0 + p.rhs().norm();
  for (std::size_t i = 0; i < m; ++i) {
    if (kept[i]) continue;
    const RealVector coef = kqr.solve(RealVector(r.row(static_cast<Eigen::Index>(i)).transpose()));
    inconsistency = std::max(inconsistency, std::abs(coef.dot(bk) - p.constraints[i].rhs) / scale);
  }
  return keep;
}

struct Audit {
  double pv, dv, rp, rd, gap;
};

Audit audit(const SdpProblem& p, const std::vector<ComplexMatrix>& x, const RealVector& y) {
  Audit a{};
  a.pv = p.objective_value(x);
  const RealVector b = p.rhs();
  a.dv = b.dot(y);
  double viol = 0.0;
  for (const auto& xb : x)
    viol = std::max(viol, -psd_margin(HermitianOperator::trusted((xb + xb.adjoint()) * 0.5)));
  a.rp = std::max((p.apply(x) - b).norm() / (1.0 + b.norm()), viol);
  const auto s = p.adjoint(y);
  double dviol = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const ComplexMatrix z = s[k] - p.objective[k].matrix();
    dviol = std::max(dviol, -psd_margin(HermitianOperator::trusted((z + z.adjoint()) * 0.5)));
  }
  a.rd = dviol / (1.0 + p.objective_norm());
  a.gap = std::abs(a.dv - a.pv);
  return a;
}

SdpSolution finalize(const SdpProblem& p, const Blocks& x, const RealVector& y,
                     const SolverOptions& opts) {
  SdpSolution s;
  for (const auto& xb : x) s.primal_point.push_back(HermitianOperator::trusted((xb + xb.adjoint()) * 0.5));
  std::vector<ComplexMatrix> xs;
  for (const auto& h : s.primal_point) xs.push_back(h.matrix());
  s.dual_point = y;
  const Audit a = audit(p, xs, y);
  s.primal_value = a.pv;
  s.dual_value = a.dv;
  s.residual_primal = a.rp;
  s.residual_dual = a.rd;
  s.gap = a.gap;
  const bool ok = a.rp <= opts.tol && a.rd <= opts.tol && a.gap <= opts.gap_tol * (1.0 + std::abs(a.pv));
  s.status = ok ? SdpStatus::Optimal : SdpStatus::Inaccurate;
  return s;
}

}  // namespace

SdpSolution solve_primal(const SdpProblem& p, const SolverOptions& opts) {
  p.check();
  const std::size_t m_all = p.num_constraints();
  const std::size_t nb = p.num_blocks();

  // Preprocessing: independent rows, unit-norm rows, unit-scale data.
  std::vector<std::size_t> keep;
  double inconsistency = 0.0;
  if (p.independent_rows) {
    for (std::size_t i = 0; i < m_all; ++i) keep.push_back(i);
  } else {
    keep = independent_rows(p, inconsistency);
  }
  if (inconsistency > 1e-8) {
    SdpSolution s;
    s.status = SdpStatus::Infeasible;
    s.primal_value = -std::numeric_limits<double>::infinity();
    s.dual_value = -std::numeric_limits<double>::infinity();
    s.dual_point = RealVector::Zero(static_cast<Eigen::Index>(m_all));
    s.message = "inconsistent equality constraints";
    return s;
  }

  Work w;
  w.dims = p.block_dims;
  const Eigen::Index m = static_cast<Eigen::Index>(keep.size());
  w.b.resize(m);
  std::vector<double> row_norm(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const auto& c = p.constraints[keep[r]];
    double nrm = 0.0;
    for (const auto& f : c.parts) nrm += f.norm() * f.norm();
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) {
      if (std::abs(c.rhs) > 0) {
        SdpSolution s;
        s.status = SdpStatus::Infeasible;
        s.primal_value = -std::numeric_limits<double>::infinity();
        s.dual_value = -std::numeric_limits<double>::infinity();
        s.dual_point = RealVector::Zero(static_cast<Eigen::Index>(m_all));
        s.message = "zero constraint row with nonzero right-hand side";
        return s;
      }
      nrm = 1.0;
    }
    row_norm[r] = nrm;
    std::vector<SparseHermitian> parts = c.parts;
    for (std::size_t k = 0; k < nb; ++k) {
      parts[k].dim = p.block_dims[k];
      parts[k].scale(1.0 / nrm);
    }
    w.rows.push_back(std::move(parts));
    w.b(static_cast<Eigen::Index>(r)) = c.rhs / nrm;
  }
  const double sb = std::max(1.0, w.b.norm());
  const double sa = std::max(1.0, p.objective_norm());
  w.b /= sb;
  for (const auto& a : p.objective) w.a.push_back(a.matrix() / sa);
  for (auto d : w.dims) w.n_total += static_cast<double>(d);

  // Starting point.
  Eigen::Index nmax = 1;
  for (auto d : w.dims) nmax = std::max(nmax, d);
  const double sq = std::sqrt(static_cast<double>(nmax));
  const double bmax = m ? w.b.cwiseAbs().maxCoeff() : 0.0;
  const double xi = std::max(10.0, sq * (1.0 + bmax));
  const double eta = std::max(10.0, sq);
  Blocks x, z;
  for (auto d : w.dims) {
    x.push_back(ComplexMatrix::Identity(d, d) * xi);
    z.push_back(ComplexMatrix::Identity(d, d) * eta);
  }
  RealVector y = RealVector::Zero(m);

  const double bnorm = w.b.norm();
  double anorm = 0.0;
  for (const auto& a : w.a) anorm += a.squaredNorm();
  anorm = std::sqrt(anorm);

  Blocks best_x = x;
  RealVector best_y = y;
  double best_err = std::numeric_limits<double>::infinity();
  double ref_err = std::numeric_limits<double>::infinity();
  int stall = 0;
  int iter = 0;
  SdpStatus detected = SdpStatus::Inaccurate;
  std::string message = "iteration limit reached";

  for (; iter < opts.max_iter; ++iter) {
    Blocks zinv;
    if (!inverse_pd(z, zinv)) {
      message = "dual slack lost definiteness";
      break;
    }
    const RealVector rp = w.b - apply_rows(w, x);
    const Blocks aty = adjoint_rows(w, y);
    Blocks rd(nb);
    for (std::size_t k = 0; k < nb; ++k) rd[k] = w.a[k] + z[k] - aty[k];
    rd = herm(rd);
    const double mu = inner(x, z) / w.n_total;
    const double pobj = inner(w.a, x);
    const double dobj = w.b.dot(y);
    const double pinf = rp.norm() / (1.0 + bnorm);
    const double dinf = fro(rd) / (1.0 + anorm);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double err = std::max({pinf, dinf, relgap});
    if (opts.verbose)
      std::fprintf(stderr, "it %3d  pobj %+.10e  dobj %+.10e  pinf %.2e  dinf %.2e  gap %.2e  mu %.2e\n",
                   iter, pobj, dobj, pinf, dinf, relgap, mu);
    if (err < best_err) {
      best_err = err;
      best_x = x;
      best_y = y;
    }
    if (err < 0.7 * ref_err) {
      ref_err = err;
      stall = 0;
    } else if (++stall >= 8) {
      message = "progress stalled";
      break;
    }
    if (err < opts.inner_tol) {
      message = "converged";
      break;
    }
    // Certificates of infeasibility, built from the current iterate.
    if (dobj < 0) {
      Blocks ray(nb);
      for (std::size_t k = 0; k < nb; ++k) ray[k] = w.a[k] - rd[k];
      if (fro(ray) / -dobj < 1e-8 && pinf > 1e-6) {
        detected = SdpStatus::Infeasible;
        message = "primal infeasibility certificate found";
        break;
      }
    }
    if (pobj > 0) {
      const double ax = (w.b - rp).norm();
      if (ax / pobj < 1e-8 && dinf > 1e-6) {
        detected = SdpStatus::Unbounded;
        message = "primal unboundedness certificate found";
        break;
      }
    }

    SchurSolver ss;
    if (!ss.factor(schur(w, x, zinv))) {
      message = "Schur complement factorization failed";
      break;
    }
    const Blocks xrdz = product(product(x, rd), zinv);
    const RealVector a_zinv = apply_rows(w, zinv);
    const RealVector base = -w.b + apply_rows(w, xrdz);

    auto direction = [&](double sigma_mu, const Blocks* corr, RealVector& dy, Blocks& dx, Blocks& dz) {
      RealVector r = sigma_mu * a_zinv + base;
      if (corr) r -= apply_rows(w, *corr);
      dy = ss.solve(r);
      const Blocks atdy = adjoint_rows(w, dy);
      dz.resize(nb);
      dx.resize(nb);
      for (std::size_t k = 0; k < nb; ++k) dz[k] = atdy[k] - rd[k];
      dz = herm(dz);
      for (std::size_t k = 0; k < nb; ++k) {
        dx[k] = sigma_mu * zinv[k] - x[k] - x[k] * dz[k] * zinv[k];
        if (corr) dx[k] -= (*corr)[k];
      }
      dx = herm(dx);
    };

    RealVector dy_a;
    Blocks dx_a, dz_a;
    direction(0.0, nullptr, dy_a, dx_a, dz_a);
    const double ap_a = std::min(1.0, max_step(x, dx_a));
    const double ad_a = std::min(1.0, max_step(z, dz_a));
    Blocks xa(nb), za(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      xa[k] = x[k] + ap_a * dx_a[k];
      za[k] = z[k] + ad_a * dz_a[k];
    }
    const double mu_a = std::max(0.0, inner(xa, za)) / w.n_total;
    const double sigma = std::clamp(std::pow(mu_a / mu, 3.0), 0.0, 1.0);

    const Blocks corr = product(product(dx_a, dz_a), zinv);
    RealVector dy;
    Blocks dx, dz;
    direction(sigma * mu, &corr, dy, dx, dz);
    const double gamma = 0.98;
    const double ap = std::min(1.0, gamma * max_step(x, dx));
    const double ad = std::min(1.0, gamma * max_step(z, dz));
    if (ap < 1e-10 && ad < 1e-10) {
      message = "step length vanished";
      break;
    }
    for (std::size_t k = 0; k < nb; ++k) {
      x[k] += ap * dx[k];
      z[k] += ad * dz[k];
    }
    x = herm(x);
    z = herm(z);
    y += ad * dy;
  }

  // Undo the scaling on the best iterate seen.
  const Blocks& xs = detected == SdpStatus::Inaccurate ? best_x : x;
  const RealVector& ys = detected == SdpStatus::Inaccurate ? best_y : y;
  Blocks x_out(nb);
  for (std::size_t k = 0; k < nb; ++k) x_out[k] = xs[k] * sb;
  RealVector y_full = RealVector::Zero(static_cast<Eigen::Index>(m_all));
  for (std::size_t r = 0; r < keep.size(); ++r)
    y_full(static_cast<Eigen::Index>(keep[r])) = ys(static_cast<Eigen::Index>(r)) * sa / row_norm[r];

  SdpSolution s = finalize(p, x_out, y_full, opts);
  s.iterations = iter;
  s.message = message;
  if (detected != SdpStatus::Inaccurate) {
    s.status = detected;
    if (detected == SdpStatus::Infeasible) {
      s.primal_value = -std::numeric_limits<double>::infinity();
      s.dual_value = -std::numeric_limits<double>::infinity();
    } else {
      s.primal_value = std::numeric_limits<double>::infinity();
      s.dual_value = std::numeric_limits<double>::infinity();
    }
  }
  return s;
}

double adjoint_mismatch(const SdpProblem& p, Rng& rng, int probes) {
  std::normal_distribution<double> nd(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < probes; ++t) {
    std::vector<ComplexMatrix> x;
    for (auto d : p.block_dims) x.push_back(random_hermitian(d, rng).matrix());
    RealVector y(static_cast<Eigen::Index>(p.num_constraints()));
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = nd(rng);
    const auto aty = p.adjoint(y);
    double lhs = 0.0, xn = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      lhs += x[k].cwiseProduct(aty[k].transpose()).sum().real();
      xn += x[k].squaredNorm();
    }
    const double rhs = p.apply(x).dot(y);
    const double scale = std::max(1e-300, std::sqrt(xn) * y.norm());
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

SdpSolution solve_dual(const SdpProblem& p, const SolverOptions& opts) {
  p.check();
  Rng rng(0x5eed);
  const double mismatch = adjoint_mismatch(p, rng, 3);
  if (mismatch > 1e-10)
    throw NumericalError("sdp: adjoint relation violated (" + std::to_string(mismatch) + ")");
  return solve_primal(p, opts);
}

}  // namespace qnet
