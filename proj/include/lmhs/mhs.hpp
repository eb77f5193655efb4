#pragma once

#include <functional>
#include <vector>

#include "lmhs/hodge.hpp"
#include "lmhs/lattice.hpp"

namespace lmhs {

/// Integer matrix N with N^2 = 0, the logarithm of a unipotent monodromy.
struct NilpotentOp {
  IntMatrix n;
};

/// N = log T = T - 1 for T unipotent of index <= 2.
/// Throws NotUnipotent when (T - 1)^2 != 0.
NilpotentOp log_monodromy(const IntMatrix& t);

struct WeightFiltration {
  IntMatrix w0;  // saturation of Im N
  IntMatrix w1;  // Ker N
};

/// Monodromy weight filtration of an index-2 unipotent degeneration:
/// W0 the primitive closure of the image, W1 the kernel; W0 is contained
/// in W1 because N^2 = 0.
WeightFiltration weight_filtration(const NilpotentOp& n);

/// Period map tau -> g x 2g matrix whose rows span the Hodge filtration.
using PeriodMap = std::function<CxMatrix(Complex)>;

/// Limit Hodge filtration: evaluates the untwisted period map
/// psi(tau) = phi(tau) * (1 - tau N)^T at each probe, checks that all
/// values agree as subspaces within tol, and returns the common value.
/// Throws NotConstant on disagreement (a wrong monodromy/period pairing).
CxMatrix limit_filtration(const PeriodMap& phi, const NilpotentOp& n,
                          const std::vector<Complex>& probes,
                          double tol = kDefaultTol,
                          double* max_pairwise_distance = nullptr);

/// Largest principal-angle sine between the row spaces of two matrices.
double subspace_distance(const CxMatrix& a_rows, const CxMatrix& b_rows);

/// One-dimensional intersection of the row space of f_rows with the complex
/// span of the integer sublattice w1, as an ambient coordinate vector
/// (determined up to scale). Throws WrongDimension unless the intersection
/// is exactly one-dimensional at tol.
CxVector restrict_to_w1(const CxMatrix& f_rows, const IntMatrix& w1,
                        double tol = kDefaultTol);

/// Mixed Hodge structure of weight <= 2 type: saturated weight sublattices
/// W0 subset W1 (columns, ambient coordinates) and a complex Hodge
/// filtration spanned by the columns of f1.
struct MixedHS {
  int rank = 0;
  IntMatrix w0;
  IntMatrix w1;
  CxMatrix f1;
};

/// Throws when the stored filtrations fail their integrality invariants.
void validate_mixed_hs(const MixedHS& mhs, double tol = kDefaultTol);

/// Coordinates of the weight-1 Hodge line: the W0-component and the two
/// quotient coordinates (a, b) of the F^1 generator on the canonical
/// complement basis of W0 inside W1.
struct HodgeLineCoords {
  CxVector w0_part;       // coordinates along the W0 basis
  Complex a, b;           // quotient coordinates
  IntMatrix quotient_basis;  // ambient columns of the complement
};

HodgeLineCoords hodge_line_coordinates(const MixedHS& mhs,
                                       double tol = kDefaultTol);

/// The elliptic curve carried by Gr_1^W: the quotient coordinates (a, b) of
/// the Hodge line span the period lattice Z a + Z b. Requires
/// rank W1 - rank W0 = 2; throws DegenerateLine when (a, b) are
/// real-proportional.
ComplexLattice identify_curve(const MixedHS& mhs, double tol = kDefaultTol);

}  // namespace lmhs
