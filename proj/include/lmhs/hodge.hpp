#pragma once

#include <vector>

#include "lmhs/exact.hpp"

namespace lmhs {

/// Period point of a g-dimensional polarized abelian variety: a symmetric
/// g x g matrix tau with positive-definite imaginary part, plus the
/// polarization type D = (d_1, ..., d_g) with d_i | d_{i+1}.
struct PeriodPoint {
  int g = 0;
  CxMatrix tau;
  std::vector<Int> d;
};

/// Throws InvalidPeriodPoint unless all PeriodPoint invariants hold at tol.
void validate_period_point(const PeriodPoint& p, double tol = kDefaultTol);

/// Weight-1 polarized Hodge structure on a rank-2g lattice. The rows of f1
/// span the Hodge filtration in the coordinates of the dual symplectic
/// basis; q is the integer alternating polarization form.
struct PolarizedHS {
  int g = 0;
  CxMatrix f1;  // g x 2g, rows (tau | D)
  IntMatrix q;  // 2g x 2g
};

/// Hodge structure of the abelian variety attached to a period point:
/// f1 = (tau | D) row by row, and q the block form built from the
/// complementary type matrix scaled by (g-1)!.
PolarizedHS build_hs(const PeriodPoint& p, double tol = kDefaultTol);

struct RiemannReport {
  double isotropy = 0.0;  // |f1 * q * f1^T|
  bool definite = false;  // the Hermitian form i * f1 * q * conj(f1)^T
  int sign = 0;           // its definiteness sign, 0 when indefinite
  bool ok = false;        // both relations hold (either sign accepted)
};

/// Check the two Riemann bilinear relations at tolerance tol. The
/// definiteness sign is reported, not prescribed.
RiemannReport check_riemann(const PolarizedHS& hs, double tol = kDefaultTol);

/// Matrix of q restricted to the sublattice spanned by w1, expressed on the
/// canonical complement basis of w0 inside w1 (both given by columns in
/// ambient coordinates). Requires q(w1, w0) = 0 exactly.
IntMatrix induced_pairing(const IntMatrix& q, const IntMatrix& w1,
                          const IntMatrix& w0);

/// Canonical complement of span(w0) inside span(w1), as ambient columns:
/// the quotient basis used by induced_pairing and the curve identification.
IntMatrix quotient_complement(const IntMatrix& w1, const IntMatrix& w0);

}  // namespace lmhs
