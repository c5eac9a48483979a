// SPDX-License-Identifier: MIT
#include <cmath>
#include <cstdlib>

#include "qnet/apps.hpp"

namespace qnet {

namespace {

void require_grover(int k, int n) {
  if (k < 2) throw InputError("grover: list size must be >= 2");
  if (n < 1) throw InputError("grover: at least one query is needed");
}

std::string query(int j) { return "q" + std::to_string(j); }
std::string reply(int j) { return "r" + std::to_string(j); }

SystemLayout grover_layout(int k, int n) {
  std::vector<System> s{{"g0", 1, Role::In, 1}, {query(1), k, Role::Out, 1}};
  for (int j = 1; j <= n; ++j) {
    s.push_back({reply(j), k, Role::In, j + 1});
    s.push_back({j < n ? query(j + 1) : std::string("ans"), k, Role::Out, j + 1});
  }
  return SystemLayout(std::move(s));
}

// U_i = 2|i><i| - I
ComplexMatrix phase_oracle(int k, int marked) {
  ComplexMatrix u = -ComplexMatrix::Identity(k, k);
  u(marked, marked) = 1.0;
  return u;
}

ComplexMatrix diffusion(int k) {
  return ComplexMatrix::Constant(k, k, 2.0 / k) - ComplexMatrix::Identity(k, k);
}

ComplexMatrix basis_projector(int k, int i) {
  ComplexMatrix p = ComplexMatrix::Zero(k, k);
  p(i, i) = 1.0;
  return p;
}

SystemLayout single(const SystemLayout& l, const std::string& label) { return l.select({label}); }

// Comb of a memoryless computer: state on q1, then channels r_j -> next output.
LabeledOperator chain(const SystemLayout& l, int n, const ComplexMatrix& first_state,
                      const std::vector<LabeledOperator>& steps) {
  LabeledOperator c(l.select({"g0", query(1)}),
                    HermitianOperator::trusted(first_state));
  for (int j = 1; j <= n; ++j) c = tensor(c, steps[static_cast<std::size_t>(j - 1)]);
  return align_to(c, l);
}

}  // namespace

GroverTester grover_tester(int k, int n) {
  require_grover(k, n);
  GroverTester t;
  t.k = k;
  t.n = n;
  t.layout = grover_layout(k, n);
  const LabeledOperator g0(t.layout.select({"g0"}), HermitianOperator::identity(1));
  // Per marked item: the oracle answers every query, the answer register is kept.
  std::vector<LabeledOperator> oracle_runs;
  for (int i = 0; i < k; ++i) {
    LabeledOperator run = g0;
    for (int j = 1; j <= n; ++j)
      run = tensor(run, choi_from_unitary(phase_oracle(k, i), single(t.layout, query(j)),
                                          single(t.layout, reply(j))));
    oracle_runs.push_back(run);
  }
  const SystemLayout ans = single(t.layout, "ans");
  LabeledOperator omega(t.layout, HermitianOperator::zero(t.layout.total_dim()));
  for (int x = -(k - 1); x <= k - 1; ++x) {
    ComplexMatrix m = ComplexMatrix::Zero(t.layout.total_dim(), t.layout.total_dim());
    for (int i = 0; i < k; ++i) {
      const int a = i + x;
      if (a < 0 || a >= k) continue;
      const LabeledOperator term =
          tensor(oracle_runs[static_cast<std::size_t>(i)],
                 LabeledOperator(ans, HermitianOperator::trusted(basis_projector(k, a))));
      m += align_to(term, t.layout).matrix() / static_cast<double>(k);
    }
    LabeledOperator el(t.layout, HermitianOperator::trusted(m));
    const double w = 1.0 - static_cast<double>(std::abs(x)) / k;
    omega.op += el.op * w;
    t.elements.push_back(std::move(el));
    t.offsets.push_back(x);
    t.scores.push_back(w);
  }
  t.omega = omega;
  return t;
}

LabeledOperator grover_comb(int k, int n) {
  require_grover(k, n);
  const SystemLayout l = grover_layout(k, n);
  const ComplexVector s = ComplexVector::Constant(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<LabeledOperator> steps;
  for (int j = 1; j <= n; ++j)
    steps.push_back(choi_from_unitary(diffusion(k), single(l, reply(j)),
                                      single(l, j < n ? query(j + 1) : std::string("ans"))));
  return chain(l, n, s * s.adjoint(), steps);
}

LabeledOperator constant_answer_comb(int k, int n, int answer) {
  require_grover(k, n);
  if (answer < 0 || answer >= k) throw InputError("constant_answer_comb: answer out of range");
  const SystemLayout l = grover_layout(k, n);
  std::vector<LabeledOperator> steps;
  for (int j = 1; j <= n; ++j) {
    const std::string out = j < n ? query(j + 1) : std::string("ans");
    const ComplexMatrix m =
        kron(basis_projector(k, j < n ? 0 : answer), ComplexMatrix::Identity(k, k));
    steps.push_back(LabeledOperator(l.select({out, reply(j)}), HermitianOperator::trusted(m)));
  }
  return chain(l, n, basis_projector(k, 0), steps);
}

std::vector<double> grover_simulated_distribution(int k, int n) {
  require_grover(k, n);
  std::vector<double> p(static_cast<std::size_t>(2 * k - 1), 0.0);
  const ComplexMatrix dif = diffusion(k);
  for (int i = 0; i < k; ++i) {
    ComplexVector psi = ComplexVector::Constant(k, 1.0 / std::sqrt(static_cast<double>(k)));
    const ComplexMatrix u = phase_oracle(k, i);
    for (int j = 0; j < n; ++j) psi = dif * (u * psi);
    for (int a = 0; a < k; ++a) p[static_cast<std::size_t>(a - i + k - 1)] += std::norm(psi(a)) / k;
  }
  return p;
}

}  // namespace qnet
