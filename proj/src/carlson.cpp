#include "lmhs/carlson.hpp"

#include <cmath>

namespace lmhs {

namespace {

// F^1 generator inside W1, as an ambient vector
CxVector hodge_generator(const MixedHS& mhs, double tol) {
  if (mhs.f1.cols() == 1) return mhs.f1.col(0);
  return restrict_to_w1(CxMatrix(mhs.f1.transpose()), mhs.w1, tol);
}

}  // namespace

ExtensionProblem make_extension_problem(const MixedHS& mhs, double tol) {
  if (mhs.w0.cols() != 1 || mhs.w1.cols() != 3)
    throw InvalidInput("extension problem needs rank(W0) = 1, rank(W1) = 3");
  validate_mixed_hs(mhs, tol);
  const CxVector v = hodge_generator(mhs, tol);
  // F1 meets W0 only in 0: the W0 direction must not be parallel to v
  const CxMatrix w0c = to_complex(mhs.w0);
  CxMatrix span(mhs.rank, 2);
  span.col(0) = v / v.norm();
  span.col(1) = w0c.col(0) / w0c.col(0).norm();
  Eigen::JacobiSVD<CxMatrix> svd(span);
  if (svd.singularValues()(1) < tol)
    throw DegenerateF1("F1 meets W0");
  return ExtensionProblem{mhs, identify_curve(mhs, tol),
                          quotient_complement(mhs.w1, mhs.w0)};
}

IntRowVector build_retraction(const IntMatrix& w0, const IntMatrix& w1) {
  if (w0.cols() != 1)
    throw InvalidInput("build_retraction: W0 must have rank 1");
  const IntMatrix x = integral_solve(w1, w0);  // W0 in W1-coordinates
  if (!is_primitive_basis(x))
    throw NotPrimitive("build_retraction: W0 is not primitive inside W1");
  const int k = static_cast<int>(w1.cols());
  IntMatrix basis(k, k);
  basis.leftCols(1) = x;
  basis.rightCols(k - 1) = complement_basis(x, k);
  return unimodular_inverse(basis).row(0);
}

ExtensionClass extension_class(const ExtensionProblem& prob,
                               const IntRowVector& r, double tol) {
  const MixedHS& mhs = prob.ambient;
  if (r.cols() != mhs.w1.cols())
    throw InvalidInput("retraction size does not match rank(W1)");
  const CxVector v = hodge_generator(mhs, tol);

  // W1-coordinates of the generator, then the retraction value
  const SolveResult coords = solve_complex(to_complex(mhs.w1), v, tol);
  const Complex z = (to_complex(IntMatrix(r)) * coords.x)(0, 0);

  // quotient coordinates of pi(omega) on (W0 | quotient_basis)
  IntMatrix big(mhs.rank, 3);
  big.leftCols(1) = mhs.w0;
  big.rightCols(2) = prob.quotient_basis;
  const SolveResult split = solve_complex(to_complex(big), v, tol);
  const Complex a = split.x(1, 0), b = split.x(2, 0);
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale < tol) throw DegenerateF1("pi(omega) vanishes");

  // z lives on C modulo Z a + Z b; carry it to the stored curve through the
  // homothety between the two lattices (identically 1 on the standard path)
  const ComplexLattice line_lattice(a, b, tol);
  const auto alpha = lattices_equivalent(line_lattice, prob.curve, tol);
  if (!alpha)
    throw InvalidInput("extension problem curve does not match Gr_1^W");
  return ExtensionClass{reduce_point(*alpha * z, prob.curve, tol)};
}

ExtensionClass extension_class(const ExtensionProblem& prob, double tol) {
  return extension_class(prob, build_retraction(prob.ambient.w0, prob.ambient.w1),
                         tol);
}

J0Check j0_dimension_check(Complex g1, Complex g2, double tol) {
  J0Check out;
  out.covolume = std::abs(std::imag(g1 * std::conj(g2)));
  out.ok = out.covolume > tol * std::max(1.0, std::abs(g1) * std::abs(g2));
  return out;
}

J0Check j0_dimension_check(const ComplexLattice& curve, double tol) {
  return j0_dimension_check(curve.g1(), curve.g2(), tol);
}

}  // namespace lmhs
