#pragma once

#include "lmhs/carlson.hpp"
#include "lmhs/cycle.hpp"
#include "lmhs/hodge.hpp"
#include "lmhs/mhs.hpp"

namespace lmhs {

/// Corank-1 boundary point of the moduli space of (1,p)-polarized abelian
/// surfaces with level structure: central points carry (tau2, tau3),
/// peripheral points (tau1, tau2), with p an odd prime >= 3 (validated by
/// trial division; p < 10^6).
class BoundaryPoint {
 public:
  static BoundaryPoint central(Complex tau2, Complex tau3, long long p);
  static BoundaryPoint peripheral(Complex tau1, Complex tau2, long long p);

  bool is_central() const { return central_; }
  long long p() const { return p_; }
  /// H_1 parameter: tau3 for central points, tau1 for peripheral ones.
  Complex modulus() const { return modulus_; }
  Complex tau2() const { return tau2_; }

 private:
  BoundaryPoint(bool central, Complex modulus, Complex tau2, long long p)
      : central_(central), modulus_(modulus), tau2_(tau2), p_(p) {}
  bool central_;
  Complex modulus_;
  Complex tau2_;
  long long p_;
};

/// One-parameter family of polarized Hodge structures near a boundary point:
/// period map on the upper half-plane above the convergence bound, the
/// integral monodromy of tau -> tau + 1, and the polarization form.
struct Family {
  PeriodMap period_map;
  IntMatrix t;
  IntMatrix q;
  double convergence_bound = 2.0;
};

/// Family attached to a boundary point. Central: period rows
/// (tau, tau2, 1, 0), (tau2, tau3, 0, p); peripheral: (tau1, tau2, 1, 0),
/// (tau2, p^2 tau, 0, p). The monodromy is unipotent with a single entry
/// above the diagonal block.
Family family_from_boundary(const BoundaryPoint& b);

/// Punctured-disk parameter t = exp(2 pi i tau); requires Im(tau) above the
/// family's convergence bound.
Complex disk_parameter(const BoundaryPoint& b, Complex tau);

/// Default probe set above the convergence bound: i(M+1) + k(0.7 + 0.3i).
std::vector<Complex> default_probes(double convergence_bound, int count = 5);

/// Component count from an alternating pairing against the intersection
/// form of the base curve: |q_01| / |gamma_01|, an exact integer division.
/// Throws NonIntegerRatio when the quotient is not integral.
Int components_from_pairing(const IntMatrix& q, const IntMatrix& gamma);

/// Number of components of the degenerate fiber, through the weight
/// filtration and the induced pairing on Gr_1^W.
Int count_components(const Family& fam);

/// Degree-zero line-bundle class on the base curve, either pinned exactly
/// or known up to the torsion_order-torsion subgroup (central fibers give
/// an exact class, peripheral ones a p-torsion ambiguity).
struct LineBundleClass {
  enum class Kind { exact, up_to_torsion };
  Kind kind = Kind::exact;
  TorusPoint point;  // the class, or the distinguished candidate
  int torsion_order = 1;
};

/// Reconstructed degenerate fiber: component count, base curve, gluing
/// shift, and the line-bundle constraint.
struct DegenerateFiber {
  Int n_components;
  ComplexLattice curve;
  TorusPoint shift;
  LineBundleClass bundle;
};

/// Numerical residuals gathered along the reconstruction pipeline.
struct ReconstructionDiagnostics {
  double limit_constancy = 0.0;
  double riemann_isotropy = 0.0;
  double class_residual = 0.0;
};

/// Full reconstruction of the degenerate fiber from a boundary point:
/// monodromy log, weight filtration, limit filtration, curve, extension
/// class, and component count.
DegenerateFiber reconstruct(const BoundaryPoint& b, double tol = kDefaultTol,
                            ReconstructionDiagnostics* diag = nullptr);

}  // namespace lmhs
