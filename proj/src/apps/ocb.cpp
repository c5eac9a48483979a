// SPDX-License-Identifier: MIT
#include <cmath>

#include "qnet/apps.hpp"

namespace qnet {

namespace {

ComplexMatrix ket_projector(double c0, double c1) {
  ComplexVector v(2);
  v << c0, c1;
  return v * v.adjoint();
}

ComplexMatrix z_projector(int bit) { return bit ? ket_projector(0, 1) : ket_projector(1, 0); }

ComplexMatrix x_projector(int bit) {
  const double s = 1.0 / std::sqrt(2.0);
  return bit ? ket_projector(s, -s) : ket_projector(s, s);
}

LabeledOperator on(const SystemLayout& l, const ComplexMatrix& m) {
  return LabeledOperator(l, HermitianOperator::trusted((m + m.adjoint()) * 0.5));
}

}  // namespace

std::vector<Party> ocb_parties() { return {{"Ain", "Aout", 2, 2}, {"Bin", "Bout", 2, 2}}; }

SystemLayout ocb_layout_a_first() {
  return SystemLayout({{"Ain", 2, Role::In, 1}, {"Aout", 2, Role::Out, 1}, {"Bin", 2, Role::In, 2},
                       {"Bout", 2, Role::Out, 2}});
}

SystemLayout ocb_layout_b_first() {
  return SystemLayout({{"Bin", 2, Role::In, 1}, {"Bout", 2, Role::Out, 1}, {"Ain", 2, Role::In, 2},
                       {"Aout", 2, Role::Out, 2}});
}

double GameSpec::score_of(int x, int y, int a, int b, int bp) const {
  return score[static_cast<std::size_t>((((a * 2 + b) * 2 + bp) * 2 + x) * 2 + y)];
}

GameSpec ocb_game() {
  GameSpec g;
  g.parties = ocb_parties();
  const SystemLayout la({{"Ain", 2, Role::In, 1}, {"Aout", 2, Role::Out, 1}});
  const SystemLayout lb({{"Bin", 2, Role::In, 1}, {"Bout", 2, Role::Out, 1}});
  const ComplexMatrix half_id = ComplexMatrix::Identity(2, 2) * 0.5;
  // Alice reads her input in the z basis and writes a in the z basis.
  for (int a = 0; a < 2; ++a) {
    std::vector<LabeledOperator> el;
    for (int x = 0; x < 2; ++x) el.push_back(on(la, kron(z_projector(x), z_projector(a))));
    g.alice.push_back(make_instrument(la, std::move(el)));
  }
  // Bob either reads z (b' = 1) or reads x and writes b xor y in z (b' = 0).
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp) {
      std::vector<LabeledOperator> el;
      for (int y = 0; y < 2; ++y)
        el.push_back(on(lb, bp ? kron(z_projector(y), half_id) : kron(x_projector(y), z_projector(b ^ y))));
      g.bob.push_back(make_instrument(lb, std::move(el)));
    }
  g.score.assign(32, 0.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            g.score[static_cast<std::size_t>((((a * 2 + b) * 2 + bp) * 2 + x) * 2 + y)] =
                bp ? (y == a ? 1.0 : 0.0) : (x == b ? 1.0 : 0.0);
  return g;
}

LabeledOperator omega_ocb() {
  const GameSpec g = ocb_game();
  const SystemLayout l = party_layout(g.parties);
  ComplexMatrix m = ComplexMatrix::Zero(16, 16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y) {
            const double w = g.score_of(x, y, a, b, bp);
            if (w == 0.0) continue;
            const LabeledOperator t = tensor(g.alice[static_cast<std::size_t>(a)].elements[static_cast<std::size_t>(x)],
                                             g.bob[static_cast<std::size_t>(2 * b + bp)].elements[static_cast<std::size_t>(y)]);
            m += (w / 8.0) * align_to(t, l).matrix();
          }
  return on(l, m);
}

HermitianOperator ocb_block(int i, int j, int k) {
  if ((i | j | k) & ~1) throw InputError("ocb_block: indices must be bits");
  return HermitianOperator::trusted((x_projector(i ^ k) + z_projector(j)) / 8.0);
}

double ocb_optimum() { return (1.0 + 1.0 / std::sqrt(2.0)) / 2.0; }
double ocb_causal_optimum() { return 0.75; }

AnalyticCertificate ocb_certificate() {
  const SystemLayout l = party_layout(ocb_parties());
  AnalyticCertificate c;
  c.lambda = ocb_optimum();
  c.gamma = LabeledOperator(l, HermitianOperator::identity(16) * 0.25);
  return c;
}

}  // namespace qnet
