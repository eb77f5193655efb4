#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lmhs/int.hpp"

namespace lmhs {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntRowVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

using Complex = std::complex<double>;
using CxMatrix = Eigen::MatrixXcd;
using CxVector = Eigen::VectorXcd;

/// Absolute tolerance used throughout; inputs are O(1) period entries in
/// double precision.
inline constexpr double kDefaultTol = 1e-9;

/// Smith normal form A = U * S * V with U, V unimodular and S diagonal,
/// invariant factors nonnegative with d_i | d_{i+1}, zeros last.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

/// SmithForm together with the inverses of U and V and the rank of A.
/// kernel/image extraction reads off u and v_inv columns directly.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  int rank = 0;
};

SmithDecomposition smith_decompose(const IntMatrix& a);
SmithForm smith_normal_form(const IntMatrix& a);

/// Rank over Q (equivalently, the number of nonzero Smith invariant factors).
int rank_of(const IntMatrix& a);

/// Basis of the integer kernel {x : A x = 0}, one column per kernel
/// generator, in column Hermite normal form. The kernel of an integer matrix
/// is automatically a saturated (primitive) sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the saturation (primitive closure) of the column span of A
/// inside the ambient lattice, in column Hermite normal form.
IntMatrix image_saturation(const IntMatrix& a);

/// Column Hermite normal form of a full-column-rank basis matrix: columns
/// ordered by pivot row, pivots positive, entries left of each pivot reduced
/// into [0, pivot). Canonicalizes a sublattice basis.
IntMatrix hermite_column_form(const IntMatrix& basis);

/// Exact determinant (Bareiss fraction-free elimination).
Int det_exact(const IntMatrix& a);

/// Inverse of a unimodular matrix (|det| = 1), exact over Z.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// True iff the columns form a primitive basis (full column rank and all
/// Smith invariant factors equal to 1).
bool is_primitive_basis(const IntMatrix& b);

/// Exact integer solution X of A X = B; throws NotIntegral when none exists.
/// When the columns of A are linearly independent the solution is unique.
IntMatrix integral_solve(const IntMatrix& a, const IntMatrix& b);

/// Direct-sum complement of a primitive sublattice: columns of x span a
/// primitive rank-j sublattice of Z^ambient; returns ambient x (ambient-j)
/// columns completing it to a basis of Z^ambient, in Hermite form.
IntMatrix complement_basis(const IntMatrix& x, int ambient);

struct SolveResult {
  CxMatrix x;
  double residual = 0.0;
};

/// Solve A x = b in least squares for square or overdetermined A with full
/// column rank at tolerance tol. Throws RankDeficient when the numerical
/// rank drops below the column count, and ResidualTooLarge when
/// require_consistent is set and the residual exceeds tol.
SolveResult solve_complex(const CxMatrix& a, const CxMatrix& b,
                          double tol = kDefaultTol,
                          bool require_consistent = true);

CxMatrix to_complex(const IntMatrix& a);

inline bool is_zero_matrix(const IntMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

}  // namespace lmhs
