#pragma once

#include "lmhs/mhs.hpp"

namespace lmhs {

/// Combinatorial data of a cycle of elliptic ruled surfaces: component
/// count, base curve, and the gluing shift on the curve.
struct CycleData {
  int n = 1;
  ComplexLattice curve;
  TorusPoint shift;
};

CycleData make_cycle_data(int n, const ComplexLattice& curve, double s1,
                          double s2);

/// First-page differentials of the component double complex. Both matrices
/// are block-circulant: identity blocks on the diagonal, minus-identity on
/// the cyclic superdiagonal (H^0 blocks are 1x1, H^1 blocks 2x2).
struct E1Page {
  IntMatrix delta0;  // N x N
  IntMatrix delta1;  // 2N x 2N
};

/// Requires n >= 2; the one-component cycle is handled by doubling in
/// build_cycle_mhs.
E1Page e1_differentials(int n);

struct E2Ranks {
  int w0_rank = 0;   // free rank of Coker(delta0); must be 1 and torsion-free
  int gr1_rank = 0;  // rank of Ker(delta1); must be 2
};

/// Second-page ranks from exact Smith reduction. Throws UnexpectedTopology
/// unless the ranks are (1, 2) with torsion-free cokernel.
E2Ranks e2_page(const E1Page& e1);

/// Rank-3 mixed Hodge structure of the cycle on the basis
/// {w0, sigma(dx1), sigma(dx2)}: W0 = [w0], W1 everything, and the Hodge
/// line spanned by (tau s1 + s2, tau, 1) for the normalized curve ratio tau.
/// The shift enters only through the splitting correction on the last
/// component.
MixedHS build_cycle_mhs(const CycleData& data, double tol = kDefaultTol);

/// The loop functional on rank-3 coordinates: 1 on w0, 0 on the image of
/// the integral splitting.
Complex loop_functional(const CxVector& coeffs);

/// Pairing induced on Gr_1^W by an n-component cycle: n times the unit
/// symplectic form on {sigma(dx1), sigma(dx2)}.
IntMatrix cycle_pairing(int n_components);

}  // namespace lmhs
