#include "lmhs/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "lmhs/degeneration.hpp"
#include "lmhs/rng.hpp"

namespace lmhs {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool ok = true;
  double residual = 0.0;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what;
    ok = ok && cond;
  }
  void track(double r) { residual = std::max(residual, r); }
  void bound(double r, double tol, const std::string& what) {
    track(r);
    require(r < tol, what + " (" + std::to_string(r) + ")");
  }
};

CheckResult finish(const std::string& name, Checker& c, Clock::time_point start) {
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  return CheckResult{name, c.ok, c.residual, c.detail.str(), secs};
}

bool same(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMatrix unit_symplectic(long long v) {
  IntMatrix q(2, 2);
  q << 0, Int(v), Int(-v), 0;
  return q;
}

// Independent wedge-form expansion of the polarization on first cohomology;
// the volume normalization carries the orientation sign of the real
// parametrization by lattice coordinates.
namespace wedge_oracle {

using Form = std::map<unsigned, Int>;

Form wedge(const Form& a, const Form& b, int n) {
  Form out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma & mb) continue;
      int swaps = 0;
      for (int i = 0; i < n; ++i) {
        if (!(mb & (1u << i))) continue;
        for (int j = i + 1; j < n; ++j)
          if (ma & (1u << j)) ++swaps;
      }
      Int term = ca * cb;
      if (swaps % 2 != 0) term = -term;
      out[ma | mb] += term;
    }
  }
  return out;
}

IntMatrix polarization(int g, const std::vector<long long>& d,
                       const CxMatrix& tau) {
  const int n = 2 * g;
  Eigen::MatrixXd jac(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < g; ++i) {
      const Complex e = j < g ? tau(i, j) : Complex(i == j - g ? d[i] : 0, 0);
      jac(2 * i, j) = e.real();
      jac(2 * i + 1, j) = e.imag();
    }
  }
  const int orient = jac.determinant() > 0 ? 1 : -1;
  Form omega;
  for (int i = 0; i < g; ++i)
    omega[(1u << i) | (1u << (i + g))] = Int(-d[i]);
  Form power;
  power[0u] = 1;
  for (int k = 0; k < g - 1; ++k) power = wedge(power, omega, n);
  const unsigned full = (1u << n) - 1;
  IntMatrix q(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Form fa, fb;
      fa[1u << a] = 1;
      fb[1u << b] = 1;
      Form top = wedge(wedge(fa, fb, n), power, n);
      auto it = top.find(full);
      Int coeff = it == top.end() ? Int(0) : it->second;
      q(a, b) = orient < 0 ? -coeff : coeff;
    }
  }
  return q;
}

}  // namespace wedge_oracle

BoundaryPoint random_central(Rng& rng, long long p) {
  return BoundaryPoint::central(rng.box(-1, 1, -1, 1),
                                rng.box(-0.5, 0.5, 0.5, 3.0), p);
}

BoundaryPoint random_peripheral(Rng& rng, long long p) {
  return BoundaryPoint::peripheral(rng.box(-0.5, 0.5, 0.5, 3.0),
                                   rng.box(-1, 1, -1, 1), p);
}

CheckResult check_reconstruction(bool central, Rng& rng, double tol) {
  const auto start = Clock::now();
  Checker c;
  const long long primes[] = {3, 5, 7};
  for (int trial = 0; trial < 50; ++trial) {
    const long long p = primes[trial % 3];
    const BoundaryPoint b = central ? random_central(rng, p)
                                    : random_peripheral(rng, p);
    const DegenerateFiber fiber = reconstruct(b, tol);
    c.require(fiber.n_components == Int(central ? 1 : p),
              "component count mismatch");
    const ComplexLattice reference =
        central ? ComplexLattice(b.modulus(), static_cast<double>(p))
                : ComplexLattice(b.modulus(), 1.0);
    c.require(lattices_equivalent(fiber.curve, reference, tol).has_value(),
              "curve is not homothetic to the reference lattice");
    const TorusPoint expected = reduce_point(b.tau2(), reference);
    c.bound(wraparound_distance(fiber.shift, expected), tol,
            "shift differs from tau2");
    if (!central) {
      const TorusPoint scaled =
          torus_point(fiber.curve, p * fiber.bundle.point.x1,
                      p * fiber.bundle.point.x2);
      c.bound(wraparound_distance(scaled, fiber.shift), tol,
              "bundle candidate does not divide the shift");
      c.require(fiber.bundle.kind == LineBundleClass::Kind::up_to_torsion &&
                    fiber.bundle.torsion_order == static_cast<int>(p),
                "bundle ambiguity not reported");
    }
  }
  CheckResult res = finish(central ? "central fiber reconstruction"
                                   : "peripheral fiber reconstruction",
                           c, start);
  if (central && res.seconds >= 1.0) {
    res.passed = false;
    res.detail += " runtime exceeded 1 s";
  }
  res.detail = res.detail.empty()
                   ? "50 random boundary points, p in {3,5,7}"
                   : res.detail;
  return res;
}

CheckResult check_limit_constancy(Rng& rng, double tol) {
  const auto start = Clock::now();
  Checker c;
  for (bool central : {true, false}) {
    for (int trial = 0; trial < 3; ++trial) {
      const BoundaryPoint b =
          central ? random_central(rng, 5) : random_peripheral(rng, 5);
      const Family fam = family_from_boundary(b);
      double worst = 0.0;
      limit_filtration(fam.period_map, log_monodromy(fam.t),
                       default_probes(fam.convergence_bound, 10), tol, &worst);
      c.bound(worst, tol, "untwisted period map varies across probes");
    }
  }
  CheckResult res = finish("limit filtration constancy", c, start);
  if (res.detail.empty()) res.detail = "10 probes per family";
  return res;
}

CheckResult check_monodromy_polarization(double tol) {
  const auto start = Clock::now();
  Checker c;
  (void)tol;
  for (long long p : {3LL, 5LL, 7LL, 11LL}) {
    for (bool central : {true, false}) {
      const BoundaryPoint b =
          central
              ? BoundaryPoint::central(Complex(0.3, -0.4), Complex(0.1, 1.2), p)
              : BoundaryPoint::peripheral(Complex(0.1, 1.2), Complex(0.3, -0.4), p);
      const Family fam = family_from_boundary(b);
      c.require(same(IntMatrix(fam.t.transpose() * fam.q * fam.t), fam.q),
                "T^T Q T != Q");
      c.require(is_zero_matrix(IntMatrix(
                    (fam.t - IntMatrix::Identity(4, 4)) *
                    (fam.t - IntMatrix::Identity(4, 4)))),
                "(T - 1)^2 != 0");
    }
  }
  CheckResult res = finish("monodromy preserves the polarization", c, start);
  if (res.detail.empty()) res.detail = "exact integer identity, p in {3,5,7,11}";
  return res;
}

CheckResult check_polarization_oracle(double tol) {
  const auto start = Clock::now();
  Checker c;
  CxMatrix tau1(1, 1);
  tau1 << Complex(0.3, 1.4);
  PeriodPoint p1{1, tau1, {Int(1)}};
  c.require(same(build_hs(p1).q, wedge_oracle::polarization(1, {1}, tau1)),
            "g=1 polarization differs from the oracle");
  for (long long p : {3LL, 5LL, 7LL}) {
    CxMatrix tau(2, 2);
    tau << Complex(0.2, 1.1), Complex(0.4, 0.3), Complex(0.4, 0.3),
        Complex(-0.1, 1.9);
    PeriodPoint pp{2, tau, {Int(1), Int(p)}};
    const PolarizedHS hs = build_hs(pp, tol);
    c.require(same(hs.q, wedge_oracle::polarization(2, {1, p}, tau)),
              "g=2 polarization differs from the oracle");
    // induced pairings on the two weight filtrations
    IntMatrix t_central = IntMatrix::Identity(4, 4);
    t_central(0, 2) = 1;
    const WeightFiltration wc = weight_filtration(log_monodromy(t_central));
    c.require(same(induced_pairing(hs.q, wc.w1, wc.w0), unit_symplectic(-1)),
              "central induced pairing");
    IntMatrix t_peripheral = IntMatrix::Identity(4, 4);
    t_peripheral(1, 3) = Int(p);
    const WeightFiltration wp = weight_filtration(log_monodromy(t_peripheral));
    c.require(same(induced_pairing(hs.q, wp.w1, wp.w0), unit_symplectic(-p)),
              "peripheral induced pairing");
  }
  CheckResult res = finish("polarization matrix oracle", c, start);
  if (res.detail.empty()) res.detail = "exact equality, g in {1,2}";
  return res;
}

CheckResult check_round_trip(Rng& rng, int cases, double tol) {
  const auto start = Clock::now();
  Checker c;
  for (int trial = 0; trial < cases; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 7));
    const Complex tau(rng.uniform(-0.45, 0.45), rng.uniform(1.05, 2.4));
    const CycleData data = make_cycle_data(n, ComplexLattice(tau, 1.0),
                                           rng.uniform(0, 1), rng.uniform(0, 1));
    const ExtensionClass cls =
        extension_class(make_extension_problem(build_cycle_mhs(data, tol), tol));
    c.bound(wraparound_distance(cls.point, data.shift), tol,
            "extension class differs from the shift");
  }
  CheckResult res = finish("cycle round trip recovers the shift", c, start);
  if (res.detail.empty())
    res.detail = std::to_string(cases) + " random cycles, n in 1..7";
  return res;
}

CheckResult check_retraction_independence(Rng& rng, double tol) {
  const auto start = Clock::now();
  Checker c;
  for (int trial = 0; trial < 20; ++trial) {
    const Complex tau(rng.uniform(-0.45, 0.45), rng.uniform(1.05, 2.0));
    const CycleData data =
        make_cycle_data(static_cast<int>(rng.uniform_int(1, 7)),
                        ComplexLattice(tau, 1.0), rng.uniform(0, 1),
                        rng.uniform(0, 1));
    const ExtensionProblem prob =
        make_extension_problem(build_cycle_mhs(data, tol), tol);
    const IntMatrix x = integral_solve(prob.ambient.w1, prob.ambient.w0);
    const IntRowVector r = build_retraction(prob.ambient.w0, prob.ambient.w1);
    IntRowVector q(3);
    for (int i = 0; i < 3; ++i) q(i) = Int(rng.uniform_int(-4, 4));
    const IntRowVector r2 =
        r + IntRowVector(q * (IntMatrix::Identity(3, 3) - x * IntMatrix(r)));
    c.bound(wraparound_distance(extension_class(prob, r, tol).point,
                                extension_class(prob, r2, tol).point),
            tol, "retraction changed the class");
  }
  CheckResult res = finish("retraction independence", c, start);
  if (res.detail.empty()) res.detail = "20 random extension problems";
  return res;
}

CheckResult check_spectral_sequence(double) {
  const auto start = Clock::now();
  Checker c;
  for (int n = 2; n <= 7; ++n) {
    const E1Page e1 = e1_differentials(n);
    const E2Ranks ranks = e2_page(e1);
    c.require(ranks.w0_rank == 1 && ranks.gr1_rank == 2,
              "second page ranks differ from (1,2)");
    const SmithForm f = smith_normal_form(e1.delta0);
    for (int i = 0; i < n; ++i)
      c.require(f.s(i, i) == 0 || f.s(i, i) == 1,
                "delta0 cokernel has torsion");
  }
  CheckResult res = finish("spectral sequence second page", c, start);
  if (res.detail.empty()) res.detail = "n in 2..7, exact";
  return res;
}

CheckResult check_component_count(double) {
  const auto start = Clock::now();
  Checker c;
  for (long long p : {3LL, 5LL, 7LL, 11LL}) {
    const BoundaryPoint central =
        BoundaryPoint::central(Complex(0.2, 0.7), Complex(0.3, 1.1), p);
    c.require(count_components(family_from_boundary(central)) == 1,
              "central component count");
    const BoundaryPoint peripheral =
        BoundaryPoint::peripheral(Complex(0.3, 1.1), Complex(0.2, 0.7), p);
    c.require(count_components(family_from_boundary(peripheral)) == Int(p),
              "peripheral component count");
  }
  CheckResult res = finish("component count", c, start);
  if (res.detail.empty()) res.detail = "N = 1 central, N = p peripheral";
  return res;
}

CheckResult check_lattice_reduction(Rng& rng, double tol) {
  const auto start = Clock::now();
  Checker c;
  std::vector<IntMatrix> mats;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int cc = -5; cc <= 5; ++cc)
        for (int d = -5; d <= 5; ++d)
          if (a * d - b * cc == 1) {
            IntMatrix m(2, 2);
            m << Int(a), Int(b), Int(cc), Int(d);
            mats.push_back(std::move(m));
          }
  for (int trial = 0; trial < 200; ++trial) {
    const Complex tau(rng.uniform(-0.45, 0.45), rng.uniform(1.05, 2.5));
    const IntMatrix& m = mats[static_cast<size_t>(
        rng.uniform_int(0, static_cast<long long>(mats.size()) - 1))];
    const ReducedTau red = reduce_fundamental(mobius(m, tau), tol);
    c.bound(std::abs(red.tau - tau), tol, "translate did not reduce back");
    const ReducedTau again = reduce_fundamental(red.tau, tol);
    c.bound(std::abs(again.tau - red.tau), tol, "reduction is not idempotent");
    c.require(again.transform(0, 0) == 1 && again.transform(1, 1) == 1 &&
                  again.transform(0, 1) == 0 && again.transform(1, 0) == 0,
              "idempotent reduction moved the point");
  }
  CheckResult res = finish("fundamental domain reduction", c, start);
  if (res.detail.empty()) res.detail = "200 bounded SL(2,Z) translates";
  return res;
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          int round_trip_cases, double tol) {
  if (round_trip_cases < 1) throw InvalidInput("need at least one case");
  Rng rng(seed);
  std::vector<CheckResult> results;
  results.push_back(check_reconstruction(true, rng, tol));
  results.push_back(check_reconstruction(false, rng, tol));
  results.push_back(check_limit_constancy(rng, tol));
  results.push_back(check_monodromy_polarization(tol));
  results.push_back(check_polarization_oracle(tol));
  results.push_back(check_round_trip(rng, round_trip_cases, tol));
  results.push_back(check_retraction_independence(rng, tol));
  results.push_back(check_spectral_sequence(tol));
  results.push_back(check_component_count(tol));
  results.push_back(check_lattice_reduction(rng, tol));
  return results;
}

}  // namespace lmhs
