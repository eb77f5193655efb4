#include "lmhs/exact.hpp"

#include <Eigen/SVD>
#include <sstream>

namespace lmhs {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Elimination state. Row/column operations keep a = u * s * v while
/// updating the inverse factors alongside, so kernels and saturations can be
/// read off without a separate matrix inversion.
struct SmithWork {
  IntMatrix s, u, u_inv, v, v_inv;

  explicit SmithWork(const IntMatrix& a)
      : s(a),
        u(IntMatrix::Identity(a.rows(), a.rows())),
        u_inv(IntMatrix::Identity(a.rows(), a.rows())),
        v(IntMatrix::Identity(a.cols(), a.cols())),
        v_inv(IntMatrix::Identity(a.cols(), a.cols())) {}

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    s.row(i).swap(s.row(j));
    u.col(i).swap(u.col(j));
    u_inv.row(i).swap(u_inv.row(j));
  }
  // row i += f * row j
  void add_row(Eigen::Index i, Eigen::Index j, const Int& f) {
    s.row(i) += s.row(j) * f;
    u.col(j) -= u.col(i) * f;
    u_inv.row(i) += u_inv.row(j) * f;
  }
  void negate_row(Eigen::Index i) {
    s.row(i) = -s.row(i);
    u.col(i) = -u.col(i);
    u_inv.row(i) = -u_inv.row(i);
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    s.col(i).swap(s.col(j));
    v.row(i).swap(v.row(j));
    v_inv.col(i).swap(v_inv.col(j));
  }
  // col i += f * col j
  void add_col(Eigen::Index i, Eigen::Index j, const Int& f) {
    s.col(i) += s.col(j) * f;
    v.row(j) -= v.row(i) * f;
    v_inv.col(i) += v_inv.col(j) * f;
  }
};

bool find_pivot(const IntMatrix& s, Eigen::Index t, Eigen::Index& pi,
                Eigen::Index& pj) {
  bool found = false;
  Int best;
  for (Eigen::Index i = t; i < s.rows(); ++i) {
    for (Eigen::Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int mag = abs(s(i, j));
      if (!found || mag < best) {
        best = mag;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

// Clear row t and column t outside the pivot. A nonzero remainder becomes
// the new (strictly smaller) pivot, so the Euclidean descent terminates.
void clear_pivot_cross(SmithWork& w, Eigen::Index t) {
  for (;;) {
    bool clean = true;
    for (Eigen::Index i = t + 1; i < w.s.rows(); ++i) {
      if (w.s(i, t) == 0) continue;
      w.add_row(i, t, -(w.s(i, t) / w.s(t, t)));
      if (w.s(i, t) != 0) {
        w.swap_rows(i, t);
        clean = false;
      }
    }
    if (!clean) continue;
    for (Eigen::Index j = t + 1; j < w.s.cols(); ++j) {
      if (w.s(t, j) == 0) continue;
      w.add_col(j, t, -(w.s(t, j) / w.s(t, t)));
      if (w.s(t, j) != 0) {
        w.swap_cols(j, t);
        clean = false;
      }
    }
    if (clean) return;
  }
}

bool find_nondivisible(const IntMatrix& s, Eigen::Index t, Eigen::Index& bi) {
  for (Eigen::Index i = t + 1; i < s.rows(); ++i)
    for (Eigen::Index j = t + 1; j < s.cols(); ++j)
      if (!divides(s(t, t), s(i, j))) {
        bi = i;
        return true;
      }
  return false;
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& a) {
  SmithWork w(a);
  const Eigen::Index steps = std::min(a.rows(), a.cols());
  Eigen::Index t = 0;
  for (; t < steps; ++t) {
    Eigen::Index pi, pj;
    if (!find_pivot(w.s, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      clear_pivot_cross(w, t);
      Eigen::Index bi;
      if (!find_nondivisible(w.s, t, bi)) break;
      // pull the offending row up; re-clearing shrinks the pivot to a gcd
      w.add_row(t, bi, 1);
    }
    if (w.s(t, t) < 0) w.negate_row(t);
  }
  SmithDecomposition dec;
  dec.u = std::move(w.u);
  dec.s = std::move(w.s);
  dec.v = std::move(w.v);
  dec.u_inv = std::move(w.u_inv);
  dec.v_inv = std::move(w.v_inv);
  dec.rank = static_cast<int>(t);
  return dec;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithDecomposition dec = smith_decompose(a);
  return SmithForm{std::move(dec.u), std::move(dec.s), std::move(dec.v)};
}

int rank_of(const IntMatrix& a) { return smith_decompose(a).rank; }

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition dec = smith_decompose(a);
  const Eigen::Index n = a.cols();
  IntMatrix basis = dec.v_inv.rightCols(n - dec.rank);
  return hermite_column_form(basis);
}

IntMatrix image_saturation(const IntMatrix& a) {
  SmithDecomposition dec = smith_decompose(a);
  IntMatrix basis = dec.u.leftCols(dec.rank);
  return hermite_column_form(basis);
}

IntMatrix hermite_column_form(const IntMatrix& basis) {
  IntMatrix h = basis;
  const Eigen::Index m = h.rows(), k = h.cols();
  Eigen::Index r = 0;
  for (Eigen::Index row = 0; row < m && r < k; ++row) {
    Eigen::Index j0 = r;
    while (j0 < k && h(row, j0) == 0) ++j0;
    if (j0 == k) continue;
    if (j0 != r) h.col(r).swap(h.col(j0));
    for (Eigen::Index j = r + 1; j < k; ++j) {
      while (h(row, j) != 0) {
        Int q = h(row, r) / h(row, j);
        h.col(r) -= h.col(j) * q;
        h.col(r).swap(h.col(j));
      }
    }
    if (h(row, r) < 0) h.col(r) = -h.col(r);
    for (Eigen::Index j = 0; j < r; ++j) {
      Int q = floor_div(h(row, j), h(row, r));
      h.col(j) -= h.col(r) * q;
    }
    ++r;
  }
  if (r < k) throw InvalidInput("hermite_column_form: columns not independent");
  return h;
}

Int det_exact(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("det_exact: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sgn = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.row(k).swap(m.row(i));
      sgn = -sgn;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sgn < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw InvalidInput("unimodular_inverse: matrix not square");
  const Eigen::Index n = a.rows();
  Int d = det_exact(a);
  if (abs(d) != 1)
    throw InvalidInput("unimodular_inverse: determinant is not +-1");
  IntMatrix inv(n, n);
  if (n == 0) return inv;
  IntMatrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc) = a(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det_exact(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv(i, j) = cof * d;  // 1/d == d for |d| = 1
    }
  }
  return inv;
}

bool is_primitive_basis(const IntMatrix& b) {
  SmithDecomposition dec = smith_decompose(b);
  if (dec.rank != b.cols()) return false;
  for (int i = 0; i < dec.rank; ++i)
    if (dec.s(i, i) != 1) return false;
  return true;
}

IntMatrix integral_solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw InvalidInput("integral_solve: dimension mismatch");
  SmithDecomposition dec = smith_decompose(a);
  IntMatrix c = dec.u_inv * b;
  IntMatrix y = IntMatrix::Zero(a.cols(), b.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (i < dec.rank) {
        if (!divides(dec.s(i, i), c(i, j)))
          throw NotIntegral("integral_solve: no integer solution");
        y(i, j) = c(i, j) / dec.s(i, i);
      } else if (c(i, j) != 0) {
        throw NotIntegral("integral_solve: inconsistent system");
      }
    }
  }
  return dec.v_inv * y;
}

IntMatrix complement_basis(const IntMatrix& x, int ambient) {
  if (x.rows() != ambient)
    throw InvalidInput("complement_basis: ambient rank mismatch");
  if (x.cols() == 0) return IntMatrix::Identity(ambient, ambient);
  SmithDecomposition dec = smith_decompose(x);
  if (dec.rank != x.cols())
    throw NotPrimitive("complement_basis: columns not independent");
  for (int i = 0; i < dec.rank; ++i)
    if (dec.s(i, i) != 1)
      throw NotPrimitive("complement_basis: sublattice not primitive");
  IntMatrix comp = dec.u.rightCols(ambient - x.cols());
  return hermite_column_form(comp);
}

SolveResult solve_complex(const CxMatrix& a, const CxMatrix& b, double tol,
                          bool require_consistent) {
  if (a.rows() != b.rows())
    throw InvalidInput("solve_complex: dimension mismatch");
  if (!a.allFinite() || !b.allFinite())
    throw InvalidInput("solve_complex: non-finite entries");
  if (a.rows() < a.cols())
    throw RankDeficient("solve_complex: underdetermined system");
  SolveResult res;
  if (a.cols() == 0) {
    res.x = CxMatrix::Zero(0, b.cols());
    res.residual = b.norm();
  } else {
    Eigen::JacobiSVD<CxMatrix> svd(a,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > tol) ++rank;
    if (rank < a.cols()) {
      std::ostringstream msg;
      msg << "solve_complex: numerical rank " << rank << " < " << a.cols();
      throw RankDeficient(msg.str());
    }
    res.x = svd.solve(b);
    res.residual = (a * res.x - b).norm();
  }
  if (require_consistent && res.residual > tol)
    throw ResidualTooLarge("solve_complex: residual " +
                           std::to_string(res.residual) + " exceeds tolerance");
  return res;
}

CxMatrix to_complex(const IntMatrix& a) {
  CxMatrix m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m(i, j) = Complex(to_double(a(i, j)), 0.0);
  return m;
}

}  // namespace lmhs
