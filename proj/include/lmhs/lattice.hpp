#pragma once

#include <optional>

#include "lmhs/exact.hpp"

namespace lmhs {

/// Rank-2 lattice Z*g1 + Z*g2 in the complex plane, stored with
/// Im(g1/g2) > 0 (generators are swapped on construction if needed).
/// Computational stand-in for an elliptic curve and its Albanese.
class ComplexLattice {
 public:
  ComplexLattice(Complex g1, Complex g2, double tol = kDefaultTol);

  Complex g1() const { return g1_; }
  Complex g2() const { return g2_; }
  /// Period ratio g1/g2, in the upper half-plane.
  Complex ratio() const { return g1_ / g2_; }
  /// Area of the fundamental parallelogram, |Im(g1 * conj(g2))|.
  double covolume() const;

 private:
  Complex g1_, g2_;
};

/// Point of the torus C/L, stored by its canonical lattice coordinates
/// (x1, x2) in [0,1) together with the matching representative.
struct TorusPoint {
  ComplexLattice lattice;
  double x1 = 0.0;
  double x2 = 0.0;
  Complex rep;
};

/// Möbius action (a*tau + b) / (c*tau + d) of an integer 2x2 matrix.
Complex mobius(const IntMatrix& m, Complex tau);

struct ReducedTau {
  Complex tau;          // representative in the standard fundamental domain
  IntMatrix transform;  // SL(2,Z) with tau == mobius(transform, input)
};

/// Reduce a period ratio into the fundamental domain |Re| <= 1/2, |tau| >= 1.
/// Boundary ties resolve toward Re >= 0. Throws NotUpperHalfPlane when
/// Im(tau) <= 0.
ReducedTau reduce_fundamental(Complex tau, double tol = kDefaultTol);

/// Homothety test: returns alpha with alpha * l1 = l2 (as subsets of C) when
/// the reduced period ratios agree within tol, empty otherwise.
std::optional<Complex> lattices_equivalent(const ComplexLattice& l1,
                                           const ComplexLattice& l2,
                                           double tol = kDefaultTol);

/// Canonical representative of z modulo the lattice.
TorusPoint reduce_point(Complex z, const ComplexLattice& l,
                        double tol = kDefaultTol);

/// Build a point directly from lattice coordinates (reduced mod 1).
TorusPoint torus_point(const ComplexLattice& l, double x1, double x2);

/// Result of dividing a torus point by n: the distinguished solution with
/// coordinates in [0, 1/n)^2, plus the size of the full solution coset
/// base + (1/n)L / L.
struct DividedPoint {
  TorusPoint base;
  int order = 1;
  long long solution_count = 1;
  /// The (k1, k2) member of the solution coset, k1, k2 in [0, n).
  TorusPoint solution(int k1, int k2) const;
};

DividedPoint divide_point(const TorusPoint& s, int n);

/// Distance on R/Z: min(|a-b| mod 1, 1 - |a-b| mod 1).
double wraparound_distance(double a, double b);

/// Chebyshev wraparound distance between canonical coordinates.
double wraparound_distance(const TorusPoint& p, const TorusPoint& q);

}  // namespace lmhs
