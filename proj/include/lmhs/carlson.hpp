#pragma once

#include "lmhs/mhs.hpp"

namespace lmhs {

/// Extension 0 -> W0 -> W1 -> Gr_1^W -> 0 of a one-dimensional type-(0,0)
/// piece by an elliptic-curve Hodge structure, ready for the extension-class
/// computation. quotient_basis holds ambient columns complementing W0
/// inside W1; curve is the Gr_1^W lattice from identify_curve.
struct ExtensionProblem {
  MixedHS ambient;
  ComplexLattice curve;
  IntMatrix quotient_basis;
};

/// Assemble and validate an extension problem from a mixed Hodge structure
/// with rank W0 = 1 and rank W1 = 3; checks F1 does not meet W0.
ExtensionProblem make_extension_problem(const MixedHS& mhs,
                                        double tol = kDefaultTol);

/// Extension class as a point of the Albanese torus of the base curve.
struct ExtensionClass {
  TorusPoint point;
};

/// Integral retraction of W1 onto the rank-1 sublattice W0: a row vector r
/// acting on W1-coordinates with r . (W0 in W1-coordinates) = 1, built from
/// the canonical complement. Throws NotPrimitive if W0 is not primitive
/// inside W1.
IntRowVector build_retraction(const IntMatrix& w0, const IntMatrix& w1);

/// Carlson extension class: transfers F^1 to W0 + Gr_1^W through (r, pi),
/// solves the shear condition r(omega) = psi(pi(omega)) on the Hodge
/// generator, and reduces the resulting complex number modulo the curve
/// lattice. Any integral retraction yields the same torus point.
ExtensionClass extension_class(const ExtensionProblem& prob,
                               const IntRowVector& r,
                               double tol = kDefaultTol);

/// Convenience overload using the canonical retraction.
ExtensionClass extension_class(const ExtensionProblem& prob,
                               double tol = kDefaultTol);

/// Nonsingularity record for the real 2x2 solves behind the Albanese
/// reduction: the target is a genuine 2-torus iff the covolume is nonzero.
struct J0Check {
  double covolume = 0.0;
  bool ok = false;
};

J0Check j0_dimension_check(Complex g1, Complex g2, double tol = kDefaultTol);
J0Check j0_dimension_check(const ComplexLattice& curve,
                           double tol = kDefaultTol);

}  // namespace lmhs
