#include "lmhs/degeneration.hpp"

#include <cmath>

namespace lmhs {

namespace {

const double kTwoPi = 8.0 * std::atan(1.0);

void validate_prime(long long p) {
  if (p < 3 || p % 2 == 0) throw InvalidBoundaryPoint("p must be an odd prime >= 3");
  if (p >= 1000000)
    throw InvalidBoundaryPoint("p too large for trial-division validation");
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw InvalidBoundaryPoint("p is not prime");
}

// Smallest convergence bound keeping the period point inside Siegel space:
// central families need Im(tau) Im(tau3) > Im(tau2)^2, peripheral ones the
// analogue with p^2 Im(tau1).
double convergence_bound(const BoundaryPoint& b) {
  const double im2 = b.tau2().imag() * b.tau2().imag();
  const double im_mod = b.modulus().imag();
  const double needed = b.is_central()
                            ? im2 / im_mod
                            : im2 / (im_mod * static_cast<double>(b.p() * b.p()));
  return std::max(2.0, needed);
}

}  // namespace

BoundaryPoint BoundaryPoint::central(Complex tau2, Complex tau3, long long p) {
  validate_prime(p);
  if (tau3.imag() <= 0)
    throw InvalidBoundaryPoint("central point needs Im(tau3) > 0");
  return BoundaryPoint(true, tau3, tau2, p);
}

BoundaryPoint BoundaryPoint::peripheral(Complex tau1, Complex tau2,
                                        long long p) {
  validate_prime(p);
  if (tau1.imag() <= 0)
    throw InvalidBoundaryPoint("peripheral point needs Im(tau1) > 0");
  return BoundaryPoint(false, tau1, tau2, p);
}

Family family_from_boundary(const BoundaryPoint& b) {
  Family fam;
  fam.convergence_bound = convergence_bound(b);
  const double p = static_cast<double>(b.p());
  const Complex tau2 = b.tau2();
  const Complex modulus = b.modulus();
  if (b.is_central()) {
    fam.period_map = [tau2, modulus, p](Complex tau) {
      CxMatrix m(2, 4);
      m << tau, tau2, 1.0, 0.0, tau2, modulus, 0.0, p;
      return m;
    };
  } else {
    fam.period_map = [tau2, modulus, p](Complex tau) {
      CxMatrix m(2, 4);
      m << modulus, tau2, 1.0, 0.0, tau2, p * p * tau, 0.0, p;
      return m;
    };
  }
  fam.t = IntMatrix::Identity(4, 4);
  if (b.is_central())
    fam.t(0, 2) = 1;  // eta = diag(1, 0)
  else
    fam.t(1, 3) = Int(b.p());  // eta = diag(0, p)

  PeriodPoint pp;
  pp.g = 2;
  pp.tau = CxMatrix(2, 2);
  const Complex anchor(0.0, fam.convergence_bound + 1.0);
  if (b.is_central())
    pp.tau << anchor, tau2, tau2, modulus;
  else
    pp.tau << modulus, tau2, tau2, p * p * anchor;
  pp.d = {Int(1), Int(b.p())};
  fam.q = build_hs(pp).q;
  return fam;
}

Complex disk_parameter(const BoundaryPoint& b, Complex tau) {
  const double bound = convergence_bound(b);
  if (tau.imag() <= bound)
    throw OutsideConvergence("tau below the family's convergence bound");
  return std::exp(Complex(0.0, kTwoPi) * tau);
}

std::vector<Complex> default_probes(double convergence_bound, int count) {
  std::vector<Complex> probes;
  probes.reserve(count);
  for (int k = 0; k < count; ++k)
    probes.emplace_back(0.7 * k, convergence_bound + 1.0 + 0.3 * k);
  return probes;
}

Int components_from_pairing(const IntMatrix& q, const IntMatrix& gamma) {
  if (q.rows() != 2 || q.cols() != 2 || gamma.rows() != 2 || gamma.cols() != 2)
    throw InvalidInput("component count expects 2x2 pairings");
  const Int qv = abs(q(0, 1));
  const Int gv = abs(gamma(0, 1));
  if (gv == 0) throw InvalidInput("degenerate intersection form");
  if (!divides(gv, qv))
    throw NonIntegerRatio("pairing is not an integer multiple of the "
                          "intersection form");
  const Int n = qv / gv;
  if (n == 0) throw NonIntegerRatio("vanishing induced pairing");
  return n;
}

Int count_components(const Family& fam) {
  const WeightFiltration w = weight_filtration(log_monodromy(fam.t));
  const IntMatrix induced = induced_pairing(fam.q, w.w1, w.w0);
  IntMatrix gamma(2, 2);
  gamma << 0, 1, -1, 0;  // intersection form on the identified dx1, dx2 basis
  return components_from_pairing(induced, gamma);
}

DegenerateFiber reconstruct(const BoundaryPoint& b, double tol,
                            ReconstructionDiagnostics* diag) {
  const Family fam = family_from_boundary(b);
  const NilpotentOp n = log_monodromy(fam.t);
  const WeightFiltration w = weight_filtration(n);

  double constancy = 0.0;
  const CxMatrix f_inf =
      limit_filtration(fam.period_map, n, default_probes(fam.convergence_bound),
                       tol, &constancy);

  MixedHS mhs;
  mhs.rank = 4;
  mhs.w0 = w.w0;
  mhs.w1 = w.w1;
  mhs.f1 = restrict_to_w1(f_inf, w.w1, tol);

  const ExtensionProblem prob = make_extension_problem(mhs, tol);
  const ExtensionClass cls = extension_class(prob, tol);
  const Int n_components = count_components(fam);

  if (diag) {
    diag->limit_constancy = constancy;
    PolarizedHS hs;
    hs.g = 2;
    hs.f1 = fam.period_map(default_probes(fam.convergence_bound)[0]);
    hs.q = fam.q;
    diag->riemann_isotropy = check_riemann(hs, tol).isotropy;
    // forward-model round trip: rebuilding the cycle from the reconstructed
    // data must reproduce the extension class
    const CycleData cd{static_cast<int>(to_int64(n_components)), prob.curve,
                       cls.point};
    const ExtensionClass back =
        extension_class(make_extension_problem(build_cycle_mhs(cd, tol), tol), tol);
    diag->class_residual = wraparound_distance(back.point, cls.point);
  }

  const LineBundleClass bundle =
      b.is_central()
          ? LineBundleClass{LineBundleClass::Kind::exact, cls.point, 1}
          : LineBundleClass{LineBundleClass::Kind::up_to_torsion,
                            divide_point(cls.point, static_cast<int>(b.p())).base,
                            static_cast<int>(b.p())};
  return DegenerateFiber{n_components, prob.curve, cls.point, bundle};
}

}  // namespace lmhs
