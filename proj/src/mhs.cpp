#include "lmhs/mhs.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace lmhs {

NilpotentOp log_monodromy(const IntMatrix& t) {
  if (t.rows() != t.cols()) throw InvalidInput("monodromy must be square");
  IntMatrix n = t - IntMatrix::Identity(t.rows(), t.cols());
  if (!is_zero_matrix(n * n))
    throw NotUnipotent("monodromy is not unipotent of index <= 2");
  return NilpotentOp{std::move(n)};
}

WeightFiltration weight_filtration(const NilpotentOp& n) {
  WeightFiltration w{image_saturation(n.n), kernel_basis(n.n)};
  // N^2 = 0 makes the inclusion automatic; keep it as a cheap consistency
  // check against corrupted inputs.
  if (w.w0.cols() > 0) integral_solve(w.w1, w.w0);
  return w;
}

double subspace_distance(const CxMatrix& a_rows, const CxMatrix& b_rows) {
  const auto projector = [](const CxMatrix& rows) {
    Eigen::JacobiSVD<CxMatrix> svd(rows.transpose(), Eigen::ComputeThinU);
    int rank = 0;
    const double cut = 1e-13 * std::max(1.0, svd.singularValues()(0));
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > cut) ++rank;
    const CxMatrix q = svd.matrixU().leftCols(rank);
    return CxMatrix(q * q.adjoint());
  };
  const CxMatrix diff = projector(a_rows) - projector(b_rows);
  Eigen::JacobiSVD<CxMatrix> svd(diff);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

CxMatrix limit_filtration(const PeriodMap& phi, const NilpotentOp& n,
                          const std::vector<Complex>& probes, double tol,
                          double* max_pairwise_distance) {
  if (probes.empty()) throw InvalidInput("limit_filtration: no probes");
  const CxMatrix nc = to_complex(n.n);
  std::vector<CxMatrix> values;
  values.reserve(probes.size());
  for (const Complex tau : probes) {
    if (tau.imag() <= 0.0)
      throw InvalidInput("limit_filtration: probe outside the upper half-plane");
    const CxMatrix p = phi(tau);
    const CxMatrix untwist =
        CxMatrix::Identity(nc.rows(), nc.cols()) - tau * nc;
    values.push_back(p * untwist.transpose());
  }
  double worst = 0.0;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      worst = std::max(worst, subspace_distance(values[i], values[j]));
  if (max_pairwise_distance) *max_pairwise_distance = worst;
  if (worst > tol)
    throw NotConstant("untwisted period map varies across probes: " +
                      std::to_string(worst));
  return values.front();
}

CxVector restrict_to_w1(const CxMatrix& f_rows, const IntMatrix& w1,
                        double tol) {
  const Eigen::Index ambient = f_rows.cols();
  if (w1.rows() != ambient)
    throw InvalidInput("restrict_to_w1: dimension mismatch");
  // integer left annihilator of w1: pair against it to detect membership
  const IntMatrix ann = kernel_basis(IntMatrix(w1.transpose()));
  const CxMatrix pairing = f_rows * to_complex(ann);  // rows x (n - k)
  const double scale = std::max(1.0, f_rows.norm());

  if (f_rows.rows() != 2)
    throw InvalidInput("restrict_to_w1: expected a two-dimensional filtration");
  if (ann.cols() == 0)
    throw WrongDimension("restrict_to_w1: intersection is 2-dimensional");
  // scaling the combination so its largest coefficient is 1 keeps the
  // output close to a primitive integral form of the generator
  const auto combine = [&](CxVector x) {
    x /= std::abs(x(0)) >= std::abs(x(1)) ? x(0) : x(1);
    CxVector v = f_rows.transpose() * x;
    if (v.norm() <= tol * scale)
      throw WrongDimension("restrict_to_w1: filtration rows are dependent");
    return v;
  };
  if (ann.cols() == 1) {
    const Complex w0c = pairing(0, 0), w1c = pairing(1, 0);
    if (std::abs(w0c) <= tol * scale && std::abs(w1c) <= tol * scale)
      throw WrongDimension("restrict_to_w1: intersection is 2-dimensional");
    CxVector x(2);
    x << -w1c, w0c;
    return combine(std::move(x));
  }
  // general corank: null vector of the pairing via SVD
  Eigen::JacobiSVD<CxMatrix> svd(CxMatrix(pairing.transpose()),
                                 Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= tol * scale)
    throw WrongDimension("restrict_to_w1: intersection is 2-dimensional");
  if (sv.size() > 1 && sv(1) > tol * scale)
    throw WrongDimension("restrict_to_w1: intersection is 0-dimensional");
  return combine(svd.matrixV().col(1));
}

void validate_mixed_hs(const MixedHS& mhs, double tol) {
  if (mhs.w0.rows() != mhs.rank || mhs.w1.rows() != mhs.rank ||
      mhs.f1.rows() != mhs.rank)
    throw InvalidInput("mixed Hodge structure has inconsistent rank");
  if (mhs.w0.cols() > 0 && !is_primitive_basis(mhs.w0))
    throw NotPrimitive("W0 basis is not primitive");
  if (mhs.w1.cols() > 0 && !is_primitive_basis(mhs.w1))
    throw NotPrimitive("W1 basis is not primitive");
  if (mhs.w0.cols() > 0) integral_solve(mhs.w1, mhs.w0);  // W0 inside W1
  (void)tol;
}

HodgeLineCoords hodge_line_coordinates(const MixedHS& mhs, double tol) {
  const int k = static_cast<int>(mhs.w1.cols());
  const int j = static_cast<int>(mhs.w0.cols());
  if (k - j != 2)
    throw InvalidInput("hodge_line_coordinates: quotient rank must be 2");

  CxVector v;
  if (mhs.f1.cols() == 1) {
    v = mhs.f1.col(0);
    const IntMatrix ann = kernel_basis(IntMatrix(mhs.w1.transpose()));
    if (ann.cols() > 0 &&
        (v.transpose() * to_complex(ann)).norm() > tol * std::max(1.0, v.norm()))
      throw InvalidInput("hodge line does not lie in W1");
  } else {
    v = restrict_to_w1(CxMatrix(mhs.f1.transpose()), mhs.w1, tol);
  }

  HodgeLineCoords out;
  out.quotient_basis = quotient_complement(mhs.w1, mhs.w0);
  // coordinates of v on the basis (W0 | complement) of W1
  IntMatrix big(mhs.rank, k);
  if (j > 0) big.leftCols(j) = mhs.w0;
  big.rightCols(k - j) = out.quotient_basis;
  const SolveResult sol = solve_complex(to_complex(big), v, tol);
  out.w0_part = sol.x.topRows(j).col(0);
  out.a = sol.x(j, 0);
  out.b = sol.x(j + 1, 0);
  return out;
}

ComplexLattice identify_curve(const MixedHS& mhs, double tol) {
  const HodgeLineCoords c = hodge_line_coordinates(mhs, tol);
  const double scale = std::max(std::abs(c.a), std::abs(c.b));
  if (scale == 0.0 ||
      std::abs(std::imag(c.a * std::conj(c.b))) <= tol * scale * scale)
    throw DegenerateLine("quotient coordinates are real-proportional");
  return ComplexLattice(c.a, c.b, tol);
}

}  // namespace lmhs
