#include "lmhs/lattice.hpp"

#include <cmath>

namespace lmhs {

ComplexLattice::ComplexLattice(Complex g1, Complex g2, double tol)
    : g1_(g1), g2_(g2) {
  const double area = std::imag(g1 * std::conj(g2));
  if (std::abs(area) <= tol * std::abs(g1) * std::abs(g2))
    throw InvalidInput("lattice generators are real-collinear");
  // Im(g1/g2) has the sign of Im(g1 * conj(g2))
  if (area < 0) std::swap(g1_, g2_);
}

double ComplexLattice::covolume() const {
  return std::abs(std::imag(g1_ * std::conj(g2_)));
}

Complex mobius(const IntMatrix& m, Complex tau) {
  const double a = to_double(m(0, 0)), b = to_double(m(0, 1));
  const double c = to_double(m(1, 0)), d = to_double(m(1, 1));
  return (a * tau + b) / (c * tau + d);
}

ReducedTau reduce_fundamental(Complex tau, double tol) {
  if (std::imag(tau) <= 0.0)
    throw NotUpperHalfPlane("period ratio has non-positive imaginary part");
  Int a = 1, b = 0, c = 0, d = 1;  // accumulated transform, applied left
  const auto apply_t = [&](const Int& n) {  // tau -> tau + n
    a += n * c;
    b += n * d;
  };
  const auto apply_s = [&]() {  // tau -> -1/tau
    Int na = -c, nb = -d;
    c = a;
    d = b;
    a = na;
    b = nb;
  };
  for (int iter = 0;; ++iter) {
    if (iter > 10000)
      throw NumericalFailure("fundamental-domain reduction did not converge");
    const double shift = std::round(std::real(tau));
    if (shift != 0.0) {
      Int n(static_cast<long long>(shift));
      tau -= shift;
      apply_t(-n);
    }
    if (std::norm(tau) < 1.0 - tol) {
      tau = -1.0 / tau;
      apply_s();
    } else {
      break;
    }
  }
  // boundary ties resolve toward Re >= 0
  if (std::real(tau) < -0.5 + tol && std::abs(std::real(tau) + 0.5) <= tol) {
    tau += 1.0;
    apply_t(1);
  }
  if (std::abs(std::abs(tau) - 1.0) <= tol && std::real(tau) < -tol) {
    tau = -1.0 / tau;
    apply_s();
  }
  ReducedTau out;
  out.tau = tau;
  out.transform = IntMatrix(2, 2);
  out.transform << a, b, c, d;
  return out;
}

std::optional<Complex> lattices_equivalent(const ComplexLattice& l1,
                                           const ComplexLattice& l2,
                                           double tol) {
  const ReducedTau r1 = reduce_fundamental(l1.ratio(), tol);
  const ReducedTau r2 = reduce_fundamental(l2.ratio(), tol);
  if (std::abs(r1.tau - r2.tau) > tol) return std::nullopt;
  // L = g2 * (c * ratio + d) * (Z*tau_red + Z), so the homothety factor is
  // the quotient of those prefactors.
  const auto prefactor = [](const ComplexLattice& l, const ReducedTau& r) {
    const double c = to_double(r.transform(1, 0));
    const double d = to_double(r.transform(1, 1));
    return l.g2() * (c * l.ratio() + d);
  };
  return prefactor(l2, r2) / prefactor(l1, r1);
}

namespace {

double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;  // guard against floor rounding at integers
  return f;
}

}  // namespace

TorusPoint torus_point(const ComplexLattice& l, double x1, double x2) {
  TorusPoint p{l, frac(x1), frac(x2), Complex(0, 0)};
  p.rep = p.x1 * l.g1() + p.x2 * l.g2();
  return p;
}

TorusPoint reduce_point(Complex z, const ComplexLattice& l, double tol) {
  CxMatrix a(2, 2);
  a << l.g1().real(), l.g2().real(), l.g1().imag(), l.g2().imag();
  CxMatrix b(2, 1);
  b << z.real(), z.imag();
  const SolveResult sol = solve_complex(a, b, tol);
  return torus_point(l, sol.x(0, 0).real(), sol.x(1, 0).real());
}

TorusPoint DividedPoint::solution(int k1, int k2) const {
  const double n = static_cast<double>(order);
  return torus_point(base.lattice, base.x1 + k1 / n, base.x2 + k2 / n);
}

DividedPoint divide_point(const TorusPoint& s, int n) {
  if (n < 1) throw InvalidInput("divide_point: order must be >= 1");
  return DividedPoint{torus_point(s.lattice, s.x1 / n, s.x2 / n), n,
                      static_cast<long long>(n) * n};
}

double wraparound_distance(double a, double b) {
  const double d = std::fabs(std::fmod(std::fabs(a - b), 1.0));
  return std::min(d, 1.0 - d);
}

double wraparound_distance(const TorusPoint& p, const TorusPoint& q) {
  return std::max(wraparound_distance(p.x1, q.x1),
                  wraparound_distance(p.x2, q.x2));
}

}  // namespace lmhs
