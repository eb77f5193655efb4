#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lmhs/lattice.hpp"
#include "lmhs/rng.hpp"

using namespace lmhs;

namespace {

IntMatrix sl2(long long a, long long b, long long c, long long d) {
  IntMatrix m(2, 2);
  m << Int(a), Int(b), Int(c), Int(d);
  return m;
}

bool in_fundamental_domain(Complex tau, double tol) {
  return std::abs(tau.real()) <= 0.5 + tol && std::abs(tau) >= 1.0 - tol;
}

// brute force: all Möbius words in S, T of bounded length applied to tau
std::vector<Complex> sl2_orbit_words(Complex tau, int max_len) {
  std::vector<Complex> frontier{tau}, all{tau};
  for (int len = 0; len < max_len; ++len) {
    std::vector<Complex> next;
    for (Complex t : frontier) {
      next.push_back(t + 1.0);
      next.push_back(t - 1.0);
      next.push_back(-1.0 / t);
    }
    frontier = next;
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

// Matrices in SL(2,Z) with all entries in [-5,5], for random sampling.
std::vector<IntMatrix> bounded_sl2() {
  std::vector<IntMatrix> out;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c)
        for (int d = -5; d <= 5; ++d)
          if (a * d - b * c == 1) out.push_back(sl2(a, b, c, d));
  return out;
}

}  // namespace

TEST_CASE("reduce_fundamental basics") {
  SUBCASE("already reduced") {
    ReducedTau r = reduce_fundamental(Complex(0, 1));
    CHECK(std::abs(r.tau - Complex(0, 1)) < 1e-15);
    CHECK(r.transform(0, 0) == 1);
    CHECK(r.transform(0, 1) == 0);
    CHECK(r.transform(1, 0) == 0);
    CHECK(r.transform(1, 1) == 1);
  }
  SUBCASE("pure translation") {
    ReducedTau r = reduce_fundamental(Complex(5, 1));
    CHECK(std::abs(r.tau - Complex(0, 1)) < 1e-15);
    CHECK(r.transform(0, 1) == -5);
  }
  SUBCASE("small ratio reduced by inversion, checked by brute force") {
    const Complex tau(0.1, 0.1);
    ReducedTau r = reduce_fundamental(tau);
    CHECK(in_fundamental_domain(r.tau, 1e-12));
    CHECK(std::abs(mobius(r.transform, tau) - r.tau) < 1e-9);
    bool found = false;
    for (Complex t : sl2_orbit_words(tau, 12))
      if (std::abs(t - r.tau) < 1e-9) found = true;
    CHECK(found);
  }
  SUBCASE("rejects the lower half-plane") {
    CHECK_THROWS_AS(reduce_fundamental(Complex(0, -1)), NotUpperHalfPlane);
    CHECK_THROWS_AS(reduce_fundamental(Complex(2, 0)), NotUpperHalfPlane);
  }
  SUBCASE("boundary ties prefer Re >= 0") {
    ReducedTau edge = reduce_fundamental(Complex(-0.5, 0.9));
    CHECK(edge.tau.real() == doctest::Approx(0.5));
    CHECK(std::abs(mobius(edge.transform, Complex(-0.5, 0.9)) - edge.tau) <
          1e-12);
    const Complex arc = std::polar(1.0, 2.0);  // |tau| = 1, Re < 0
    ReducedTau circ = reduce_fundamental(arc);
    CHECK(circ.tau.real() > 0);
    CHECK(std::abs(circ.tau) == doctest::Approx(1.0));
    CHECK(std::abs(mobius(circ.transform, arc) - circ.tau) < 1e-12);
  }
}

TEST_CASE("reduce_fundamental round trip over bounded SL(2,Z)") {
  const std::vector<IntMatrix> mats = bounded_sl2();
  Rng rng(2024);
  int idempotent_checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // random interior point of the fundamental domain
    const Complex tau(rng.uniform(-0.45, 0.45), rng.uniform(1.05, 2.5));
    if (std::abs(tau) < 1.05) continue;
    const IntMatrix& m = mats[static_cast<size_t>(
        rng.uniform_int(0, static_cast<long long>(mats.size()) - 1))];
    ReducedTau r = reduce_fundamental(mobius(m, tau));
    CHECK(std::abs(r.tau - tau) < 1e-9);
    // idempotence with identity transform on interior points
    ReducedTau again = reduce_fundamental(r.tau);
    CHECK(std::abs(again.tau - r.tau) < 1e-12);
    CHECK(again.transform(0, 0) == 1);
    CHECK(again.transform(0, 1) == 0);
    CHECK(again.transform(1, 0) == 0);
    CHECK(again.transform(1, 1) == 1);
    ++idempotent_checked;
  }
  CHECK(idempotent_checked > 150);
}

TEST_CASE("lattice orientation and validity") {
  ComplexLattice l(Complex(1, 0), Complex(0, 1));
  CHECK(l.ratio().imag() > 0);
  CHECK(l.covolume() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ComplexLattice(Complex(1, 0), Complex(2, 0)), InvalidInput);
}

TEST_CASE("lattices_equivalent") {
  SUBCASE("scaling by 1/p") {
    const Complex tau3(0.2, 1.3);
    const double p = 5;
    ComplexLattice l1(tau3, p);
    ComplexLattice l2(tau3 / p, 1.0);
    auto alpha = lattices_equivalent(l1, l2);
    REQUIRE(alpha.has_value());
    CHECK(std::abs(*alpha - Complex(1.0 / p, 0)) < 1e-12);
  }
  SUBCASE("uniform scaling") {
    ComplexLattice l1(Complex(0, 1), 1.0);
    ComplexLattice l2(Complex(0, 2), 2.0);
    auto alpha = lattices_equivalent(l1, l2);
    REQUIRE(alpha.has_value());
    CHECK(std::abs(*alpha - 2.0) < 1e-12);
  }
  SUBCASE("inequivalent lattices") {
    ComplexLattice l1(Complex(0, 1), 1.0);
    ComplexLattice l2(Complex(0, 2), 1.0);
    CHECK(!lattices_equivalent(l1, l2).has_value());
  }
  SUBCASE("rebased and scaled lattices are found equivalent") {
    Rng rng(88);
    const std::vector<IntMatrix> mats = bounded_sl2();
    for (int trial = 0; trial < 25; ++trial) {
      ComplexLattice l1(rng.box(-0.45, 0.45, 1.05, 2.2), 1.0);
      const IntMatrix& m = mats[static_cast<size_t>(
          rng.uniform_int(0, static_cast<long long>(mats.size()) - 1))];
      const Complex alpha = rng.box(0.3, 2.0, -1.5, 1.5);
      const Complex h1 =
          alpha * (to_double(m(0, 0)) * l1.g1() + to_double(m(0, 1)) * l1.g2());
      const Complex h2 =
          alpha * (to_double(m(1, 0)) * l1.g1() + to_double(m(1, 1)) * l1.g2());
      ComplexLattice l2(h1, h2);
      auto found = lattices_equivalent(l1, l2);
      REQUIRE(found.has_value());
      // the reported factor carries the generators into the target lattice
      for (Complex g : {l1.g1(), l1.g2()}) {
        TorusPoint img = reduce_point(*found * g, l2);
        CHECK(wraparound_distance(img, torus_point(l2, 0, 0)) < 1e-9);
      }
    }
  }
  SUBCASE("reflexive with alpha exactly 1, symmetric up to inversion") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      ComplexLattice l(rng.box(-1, 1, 0.5, 2), 1.0);
      auto self = lattices_equivalent(l, l);
      REQUIRE(self.has_value());
      CHECK(*self == Complex(1.0, 0.0));
      ComplexLattice other(l.g1() * Complex(0.3, 0.4), l.g2() * Complex(0.3, 0.4));
      auto fwd = lattices_equivalent(l, other);
      auto bwd = lattices_equivalent(other, l);
      REQUIRE(fwd.has_value());
      REQUIRE(bwd.has_value());
      CHECK(std::abs(*fwd * *bwd - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("reduce_point") {
  const Complex tau3(0.4, 1.7);
  const double p = 5;
  ComplexLattice l(tau3, p);
  SUBCASE("lattice vectors reduce to zero") {
    TorusPoint z = reduce_point(l.g1() + l.g2(), l);
    CHECK(wraparound_distance(z.x1, 0.0) < 1e-12);
    CHECK(wraparound_distance(z.x2, 0.0) < 1e-12);
  }
  SUBCASE("half generator") {
    TorusPoint h = reduce_point(0.5 * l.g1(), l);
    CHECK(h.x1 == doctest::Approx(0.5));
    CHECK(h.x2 == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("coordinates recovered through the real solve") {
    const Complex z = 0.3 * tau3 + 1.7 * p;
    TorusPoint t = reduce_point(z, ComplexLattice(tau3, p));
    CHECK(wraparound_distance(t.x1, 0.3) < 1e-12);
    CHECK(wraparound_distance(t.x2, 0.7) < 1e-12);
  }
  SUBCASE("retraction: reducing a representative is the identity") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      TorusPoint p0 = torus_point(l, rng.uniform(0, 1), rng.uniform(0, 1));
      TorusPoint p1 = reduce_point(p0.rep, l);
      CHECK(wraparound_distance(p0, p1) < 1e-10);
    }
  }
  SUBCASE("periodicity under lattice translations") {
    Rng rng(18);
    for (int trial = 0; trial < 30; ++trial) {
      const Complex z = rng.box(-3, 3, -3, 3);
      const long long m1 = rng.uniform_int(-4, 4), m2 = rng.uniform_int(-4, 4);
      TorusPoint a = reduce_point(z, l);
      TorusPoint b = reduce_point(z + double(m1) * l.g1() + double(m2) * l.g2(), l);
      CHECK(wraparound_distance(a, b) < 1e-10);
    }
  }
}

TEST_CASE("divide_point") {
  ComplexLattice l(Complex(0.1, 1.2), 1.0);
  SUBCASE("dividing zero by 3 gives zero with nine-point ambiguity") {
    DividedPoint d = divide_point(torus_point(l, 0, 0), 3);
    CHECK(d.base.x1 == 0.0);
    CHECK(d.base.x2 == 0.0);
    CHECK(d.order == 3);
    CHECK(d.solution_count == 9);
  }
  SUBCASE("coordinate division") {
    DividedPoint d = divide_point(torus_point(l, 0.6, 0.9), 3);
    CHECK(d.base.x1 == doctest::Approx(0.2));
    CHECK(d.base.x2 == doctest::Approx(0.3));
  }
  SUBCASE("order 1 is the identity") {
    TorusPoint s = torus_point(l, 0.25, 0.75);
    DividedPoint d = divide_point(s, 1);
    CHECK(wraparound_distance(d.base, s) == 0.0);
    CHECK(d.solution_count == 1);
  }
  SUBCASE("n times any coset solution returns the input") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      TorusPoint s = torus_point(l, rng.uniform(0, 1), rng.uniform(0, 1));
      const int n = static_cast<int>(rng.uniform_int(1, 6));
      DividedPoint d = divide_point(s, n);
      const int k1 = static_cast<int>(rng.uniform_int(0, n - 1));
      const int k2 = static_cast<int>(rng.uniform_int(0, n - 1));
      TorusPoint sol = d.solution(k1, k2);
      TorusPoint back = torus_point(l, n * sol.x1, n * sol.x2);
      CHECK(wraparound_distance(back, s) < 1e-9);
    }
  }
  CHECK_THROWS_AS(divide_point(torus_point(l, 0, 0), 0), InvalidInput);
}
