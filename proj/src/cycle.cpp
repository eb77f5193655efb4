#include "lmhs/cycle.hpp"

namespace lmhs {

CycleData make_cycle_data(int n, const ComplexLattice& curve, double s1,
                          double s2) {
  if (n < 1) throw InvalidInput("cycle needs at least one component");
  return CycleData{n, curve, torus_point(curve, s1, s2)};
}

E1Page e1_differentials(int n) {
  if (n < 2)
    throw InvalidInput("e1_differentials: need n >= 2 (double a single component)");
  IntMatrix d0 = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    d0(j, j) = 1;
    d0(j, (j + 1) % n) = -1;
  }
  IntMatrix d1 = IntMatrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < 2; ++k) {
      d1(2 * j + k, 2 * j + k) = 1;
      d1(2 * j + k, 2 * ((j + 1) % n) + k) = -1;
    }
  }
  return E1Page{std::move(d0), std::move(d1)};
}

E2Ranks e2_page(const E1Page& e1) {
  const int n = static_cast<int>(e1.delta0.rows());
  const SmithDecomposition dec = smith_decompose(e1.delta0);
  for (int i = 0; i < dec.rank; ++i)
    if (dec.s(i, i) != 1)
      throw UnexpectedTopology("cokernel of delta0 has torsion");
  E2Ranks ranks;
  ranks.w0_rank = n - dec.rank;
  ranks.gr1_rank = 2 * n - rank_of(e1.delta1);
  if (ranks.w0_rank != 1 || ranks.gr1_rank != 2)
    throw UnexpectedTopology("second-page ranks differ from (1, 2)");
  return ranks;
}

MixedHS build_cycle_mhs(const CycleData& data, double tol) {
  if (data.n < 1) throw InvalidInput("cycle needs at least one component");
  if (!lattices_equivalent(data.shift.lattice, data.curve, tol))
    throw InvalidInput("shift does not live on the cycle's base curve");
  const int effective = data.n == 1 ? 2 : data.n;  // doubling trick
  e2_page(e1_differentials(effective));

  const Complex tau = data.curve.ratio();
  const double s1 = data.shift.x1, s2 = data.shift.x2;
  MixedHS mhs;
  mhs.rank = 3;
  mhs.w0 = IntMatrix::Zero(3, 1);
  mhs.w0(0, 0) = 1;
  mhs.w1 = IntMatrix::Identity(3, 3);
  mhs.f1 = CxMatrix(3, 1);
  mhs.f1 << tau * s1 + s2, tau, Complex(1, 0);
  return mhs;
}

Complex loop_functional(const CxVector& coeffs) {
  if (coeffs.size() != 3)
    throw InvalidInput("loop_functional: expected rank-3 coordinates");
  return coeffs(0);
}

IntMatrix cycle_pairing(int n_components) {
  if (n_components < 1) throw InvalidInput("cycle needs at least one component");
  IntMatrix q = IntMatrix::Zero(2, 2);
  q(0, 1) = n_components;
  q(1, 0) = -n_components;
  return q;
}

}  // namespace lmhs
