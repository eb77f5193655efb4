#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmhs/mhs.hpp"
#include "lmhs/rng.hpp"

using namespace lmhs;

namespace {

IntMatrix make(int rows, int cols, std::initializer_list<long long> vals) {
  IntMatrix m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Int(*it++);
  return m;
}

bool same(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMatrix unipotent_with(int i, int j, long long v) {
  IntMatrix t = IntMatrix::Identity(4, 4);
  t(i, j) = Int(v);
  return t;
}

// central family period rows (tau, tau2, 1, 0), (tau2, tau3, 0, p)
PeriodMap central_map(Complex tau2, Complex tau3, double p) {
  return [=](Complex tau) {
    CxMatrix m(2, 4);
    m << tau, tau2, 1.0, 0.0, tau2, tau3, 0.0, p;
    return m;
  };
}

// peripheral family period rows (tau1, tau2, 1, 0), (tau2, p^2 tau, 0, p)
PeriodMap peripheral_map(Complex tau1, Complex tau2, double p) {
  return [=](Complex tau) {
    CxMatrix m(2, 4);
    m << tau1, tau2, 1.0, 0.0, tau2, p * p * tau, 0.0, p;
    return m;
  };
}

std::vector<Complex> probes(int count = 5) {
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) out.emplace_back(0.7 * k, 3.0 + 0.3 * k);
  return out;
}

bool proportional(const CxVector& u, const CxVector& v, double tol = 1e-9) {
  // u, v nonzero: check rank of [u v] is one
  CxMatrix m(u.size(), 2);
  m.col(0) = u;
  m.col(1) = v;
  Eigen::JacobiSVD<CxMatrix> svd(m);
  return svd.singularValues()(1) < tol * svd.singularValues()(0);
}

}  // namespace

TEST_CASE("log_monodromy") {
  SUBCASE("identity gives zero") {
    NilpotentOp n = log_monodromy(IntMatrix::Identity(4, 4));
    CHECK(is_zero_matrix(n.n));
  }
  SUBCASE("central monodromy") {
    NilpotentOp n = log_monodromy(unipotent_with(0, 2, 1));
    IntMatrix expected = IntMatrix::Zero(4, 4);
    expected(0, 2) = 1;
    CHECK(same(n.n, expected));
  }
  SUBCASE("peripheral monodromy") {
    NilpotentOp n = log_monodromy(unipotent_with(1, 3, 5));
    IntMatrix expected = IntMatrix::Zero(4, 4);
    expected(1, 3) = 5;
    CHECK(same(n.n, expected));
  }
  SUBCASE("rejects non-unipotent input") {
    IntMatrix t = IntMatrix::Identity(2, 2);
    t(0, 0) = 2;
    CHECK_THROWS_AS(log_monodromy(t), NotUnipotent);
    IntMatrix rot = make(2, 2, {0, -1, 1, 0});
    CHECK_THROWS_AS(log_monodromy(rot), NotUnipotent);
  }
}

TEST_CASE("weight_filtration") {
  SUBCASE("central: W0 = [e1], W1 = [e1, e2, e4]") {
    WeightFiltration w = weight_filtration(log_monodromy(unipotent_with(0, 2, 1)));
    CHECK(same(w.w0, make(4, 1, {1, 0, 0, 0})));
    CHECK(same(w.w1, make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1})));
  }
  SUBCASE("peripheral: W0 = [e2] after saturation, W1 = [e1, e2, e3]") {
    WeightFiltration w = weight_filtration(log_monodromy(unipotent_with(1, 3, 5)));
    CHECK(same(w.w0, make(4, 1, {0, 1, 0, 0})));
    CHECK(same(w.w1, make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0})));
  }
  SUBCASE("zero log gives empty W0 and full W1") {
    WeightFiltration w = weight_filtration(NilpotentOp{IntMatrix::Zero(4, 4)});
    CHECK(w.w0.cols() == 0);
    CHECK(same(w.w1, IntMatrix::Identity(4, 4)));
  }
  SUBCASE("rank bookkeeping and monodromy invariance") {
    for (long long p : {1LL, 3LL, 7LL}) {
      IntMatrix t = unipotent_with(1, 3, p);
      NilpotentOp n = log_monodromy(t);
      WeightFiltration w = weight_filtration(n);
      CHECK(is_zero_matrix(n.n * w.w1));
      CHECK(w.w0.cols() + w.w1.cols() == 4);
      // T maps both sublattices into themselves integrally
      integral_solve(w.w0, IntMatrix(t * w.w0));
      integral_solve(w.w1, IntMatrix(t * w.w1));
    }
  }
}

TEST_CASE("limit_filtration") {
  const Complex tau2(0.3, 0.2), tau3(0.0, 2.0);
  const double p = 5;
  SUBCASE("central family is exactly constant") {
    NilpotentOp n = log_monodromy(unipotent_with(0, 2, 1));
    double worst = -1;
    CxMatrix f = limit_filtration(central_map(tau2, tau3, p), n, probes(10),
                                  kDefaultTol, &worst);
    CHECK(worst < 1e-12);
    CxMatrix expected(2, 4);
    expected << 0.0, tau2, 1.0, 0.0, tau2, tau3, 0.0, p;
    CHECK(subspace_distance(f, expected) < 1e-12);
  }
  SUBCASE("peripheral family is exactly constant") {
    const Complex tau1(0.1, 1.5);
    NilpotentOp n = log_monodromy(unipotent_with(1, 3, 5));
    CxMatrix f = limit_filtration(peripheral_map(tau1, tau2, p), n, probes(10));
    CxMatrix expected(2, 4);
    expected << tau1, tau2, 1.0, 0.0, tau2, 0.0, 0.0, p;
    CHECK(subspace_distance(f, expected) < 1e-12);
  }
  SUBCASE("constant family with zero log returns the map itself") {
    PeriodMap constant = [](Complex) {
      CxMatrix m(2, 4);
      m << Complex(0, 1), 0.0, 1.0, 0.0, 0.0, Complex(0, 2), 0.0, 1.0;
      return m;
    };
    NilpotentOp n{IntMatrix::Zero(4, 4)};
    CxMatrix f = limit_filtration(constant, n, probes());
    CHECK(subspace_distance(f, constant(Complex(0, 3))) < 1e-13);
  }
  SUBCASE("wrong monodromy pairing is detected") {
    NilpotentOp wrong = log_monodromy(unipotent_with(1, 3, 5));
    CHECK_THROWS_AS(
        limit_filtration(central_map(tau2, tau3, p), wrong, probes()),
        NotConstant);
  }
  SUBCASE("empty probe list is rejected") {
    NilpotentOp n{IntMatrix::Zero(4, 4)};
    CHECK_THROWS_AS(limit_filtration(central_map(tau2, tau3, p), n, {}),
                    InvalidInput);
  }
}

TEST_CASE("restrict_to_w1") {
  const Complex tau2(0.3, 0.2), tau3(0.0, 2.0);
  const double p = 5;
  SUBCASE("central hodge line") {
    CxMatrix f(2, 4);
    f << 0.0, tau2, 1.0, 0.0, tau2, tau3, 0.0, p;
    IntMatrix w1 = make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});
    CxVector v = restrict_to_w1(f, w1);
    CxVector expected(4);
    expected << tau2, tau3, 0.0, p;
    CHECK(proportional(v, expected));
  }
  SUBCASE("peripheral hodge line") {
    const Complex tau1(0.1, 1.5);
    CxMatrix f(2, 4);
    f << tau1, tau2, 1.0, 0.0, tau2, 0.0, 0.0, p;
    IntMatrix w1 = make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0});
    CxVector v = restrict_to_w1(f, w1);
    CxVector expected(4);
    expected << tau1, tau2, 1.0, 0.0;
    CHECK(proportional(v, expected));
  }
  SUBCASE("a filtration row already inside W1 is returned") {
    CxMatrix f(2, 4);
    f << 0.0, Complex(0, 1), 0.0, 2.0, 1.0, 0.0, 0.0, 0.0;
    IntMatrix w1 = make(4, 3, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1});
    CxVector v = restrict_to_w1(f, w1);
    CxVector expected(4);
    expected << 0.0, Complex(0, 1), 0.0, 2.0;
    CHECK(proportional(v, expected));
  }
  SUBCASE("two-dimensional intersection is flagged") {
    CxMatrix f(2, 4);
    f << 1.0, Complex(0, 1), 0.0, 0.0, 0.0, 0.0, 1.0, Complex(0, 1);
    CHECK_THROWS_AS(restrict_to_w1(f, IntMatrix::Identity(4, 4)),
                    WrongDimension);
  }
  SUBCASE("empty intersection is flagged") {
    CxMatrix f(2, 4);
    f << 1.0, 0.0, Complex(0, 1), 0.0, 0.0, 1.0, 0.0, Complex(0, 1);
    IntMatrix w1 = make(4, 2, {1, 0, 0, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(restrict_to_w1(f, w1), WrongDimension);
  }
}

TEST_CASE("identify_curve") {
  const Complex tau2(0.3, 0.2);
  const double p = 5;
  SUBCASE("central case gives the lattice (tau3, p)") {
    const Complex tau3(0.0, 2.0);
    MixedHS mhs;
    mhs.rank = 4;
    mhs.w0 = make(4, 1, {1, 0, 0, 0});
    mhs.w1 = make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});
    mhs.f1 = CxMatrix(4, 1);
    mhs.f1 << tau2, tau3, 0.0, p;
    ComplexLattice curve = identify_curve(mhs);
    auto alpha = lattices_equivalent(curve, ComplexLattice(tau3, p));
    REQUIRE(alpha.has_value());
    CHECK(std::abs(*alpha - 1.0) < 1e-12);
  }
  SUBCASE("peripheral case gives the lattice (tau1, 1)") {
    const Complex tau1(0.1, 1.5);
    MixedHS mhs;
    mhs.rank = 4;
    mhs.w0 = make(4, 1, {0, 1, 0, 0});
    mhs.w1 = make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0});
    mhs.f1 = CxMatrix(4, 1);
    mhs.f1 << tau1, tau2, 1.0, 0.0;
    ComplexLattice curve = identify_curve(mhs);
    auto alpha = lattices_equivalent(curve, ComplexLattice(tau1, 1.0));
    REQUIRE(alpha.has_value());
    CHECK(std::abs(*alpha - 1.0) < 1e-12);
  }
  SUBCASE("square lattice from coordinates (i, 1)") {
    MixedHS mhs;
    mhs.rank = 3;
    mhs.w0 = make(3, 1, {1, 0, 0});
    mhs.w1 = IntMatrix::Identity(3, 3);
    mhs.f1 = CxMatrix(3, 1);
    mhs.f1 << 0.25, Complex(0, 1), 1.0;
    ComplexLattice curve = identify_curve(mhs);
    auto alpha = lattices_equivalent(curve, ComplexLattice(Complex(0, 1), 1.0));
    REQUIRE(alpha.has_value());
  }
  SUBCASE("real-proportional quotient coordinates are rejected") {
    MixedHS mhs;
    mhs.rank = 3;
    mhs.w0 = make(3, 1, {1, 0, 0});
    mhs.w1 = IntMatrix::Identity(3, 3);
    mhs.f1 = CxMatrix(3, 1);
    mhs.f1 << Complex(0, 1), 2.0, 1.0;
    CHECK_THROWS_AS(identify_curve(mhs), DegenerateLine);
  }
  SUBCASE("invariance under a unimodular change of quotient complement") {
    // same structure expressed on a sheared W1 basis: the curve only moves
    // by a homothety
    const Complex tau3(0.4, 1.7);
    MixedHS base;
    base.rank = 4;
    base.w0 = make(4, 1, {1, 0, 0, 0});
    base.w1 = make(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});
    base.f1 = CxMatrix(4, 1);
    base.f1 << tau2, tau3, 0.0, p;
    MixedHS sheared = base;
    // columns e1, e1+e2, e2+e4 span the same sublattice as e1, e2, e4
    sheared.w1 = make(4, 3, {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1});
    ComplexLattice c1 = identify_curve(base);
    ComplexLattice c2 = identify_curve(sheared);
    CHECK(lattices_equivalent(c1, c2).has_value());
  }
}

TEST_CASE("validate_mixed_hs") {
  MixedHS mhs;
  mhs.rank = 3;
  mhs.w0 = make(3, 1, {2, 0, 0});  // not primitive
  mhs.w1 = IntMatrix::Identity(3, 3);
  mhs.f1 = CxMatrix::Zero(3, 1);
  CHECK_THROWS_AS(validate_mixed_hs(mhs), NotPrimitive);
  mhs.w0 = make(3, 1, {1, 0, 0});
  CHECK_NOTHROW(validate_mixed_hs(mhs));
}
