#include "lmhs/hodge.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace lmhs {

void validate_period_point(const PeriodPoint& p, double tol) {
  if (p.g <= 0 || p.tau.rows() != p.g || p.tau.cols() != p.g ||
      static_cast<int>(p.d.size()) != p.g)
    throw InvalidPeriodPoint("period point has inconsistent dimensions");
  if (!p.tau.allFinite())
    throw InvalidPeriodPoint("period matrix has non-finite entries");
  if ((p.tau - p.tau.transpose()).norm() > tol)
    throw InvalidPeriodPoint("period matrix is not symmetric");
  for (int i = 0; i < p.g; ++i) {
    if (p.d[i] <= 0)
      throw InvalidPeriodPoint("polarization type entries must be positive");
    if (i + 1 < p.g && !divides(p.d[i], p.d[i + 1]))
      throw InvalidPeriodPoint("polarization type must satisfy d_i | d_{i+1}");
  }
  // positive-definite imaginary part via leading principal minors
  Eigen::MatrixXd im = p.tau.imag();
  for (int k = 1; k <= p.g; ++k) {
    if (im.topLeftCorner(k, k).determinant() <= tol)
      throw InvalidPeriodPoint("imaginary part is not positive definite");
  }
}

PolarizedHS build_hs(const PeriodPoint& p, double tol) {
  validate_period_point(p, tol);
  const int g = p.g;
  PolarizedHS hs;
  hs.g = g;
  hs.f1 = CxMatrix::Zero(g, 2 * g);
  hs.f1.leftCols(g) = p.tau;
  for (int i = 0; i < g; ++i) hs.f1(i, g + i) = to_double(p.d[i]);

  Int total = 1;
  for (const Int& di : p.d) total *= di;
  Int fac = 1;
  for (int k = 2; k <= g - 1; ++k) fac *= k;
  hs.q = IntMatrix::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    const Int dhat = total / p.d[i];  // complementary type entry
    hs.q(i, g + i) = -fac * dhat;
    hs.q(g + i, i) = fac * dhat;
  }
  return hs;
}

RiemannReport check_riemann(const PolarizedHS& hs, double tol) {
  RiemannReport rep;
  const CxMatrix qc = to_complex(hs.q);
  rep.isotropy = (hs.f1 * qc * hs.f1.transpose()).norm();

  CxMatrix h = Complex(0, 1) * (hs.f1 * qc * hs.f1.adjoint());
  h = 0.5 * (h + h.adjoint());  // symmetrize away rounding
  Eigen::SelfAdjointEigenSolver<CxMatrix> es(h);
  const auto& ev = es.eigenvalues();
  bool all_pos = true, all_neg = true;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= tol) all_pos = false;
    if (ev(i) >= -tol) all_neg = false;
  }
  rep.definite = all_pos || all_neg;
  rep.sign = all_pos ? 1 : (all_neg ? -1 : 0);
  rep.ok = rep.isotropy <= tol && rep.definite;
  return rep;
}

IntMatrix quotient_complement(const IntMatrix& w1, const IntMatrix& w0) {
  const IntMatrix x = integral_solve(w1, w0);  // w0 in w1-coordinates
  const IntMatrix y = complement_basis(x, static_cast<int>(w1.cols()));
  return w1 * y;
}

IntMatrix induced_pairing(const IntMatrix& q, const IntMatrix& w1,
                          const IntMatrix& w0) {
  const IntMatrix cross = w1.transpose() * q * w0;
  if (!is_zero_matrix(cross))
    throw NotIsotropicAgainstW0("induced_pairing: q(w1, w0) != 0");
  const IntMatrix basis = quotient_complement(w1, w0);
  return basis.transpose() * q * basis;
}

}  // namespace lmhs
