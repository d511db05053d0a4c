#include "knotsig/matrices.hpp"

#include <utility>

namespace knotsig {

bool RatMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Inertia signature_symmetric(RatMatrix m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::ShapeMismatch, "inertia of a non-square matrix");
  if (!m.is_symmetric())
    throw Error(ErrorKind::NonSymmetric, "inertia of an asymmetric matrix");
  const int n = m.rows();
  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int j = -1;
      for (int c = k + 1; c < n; ++c)
        if (m.at(k, c) != 0) {
          j = c;
          break;
        }
      if (j < 0) {
        ++out.nullity;
        continue;
      }
      // Hyperbolic block: row/col k has a zero diagonal but m(k,j) != 0.
      // Add (or subtract) row+col j so the diagonal entry becomes
      // m(j,j) +- 2 m(k,j); the two choices differ by 4 m(k,j), so at
      // least one is a usable pivot.
      long u = (m.at(j, j) + Rat(2) * m.at(k, j) != 0) ? 1 : -1;
      for (int c = 0; c < n; ++c) m.at(k, c) += Rat(u) * m.at(j, c);
      for (int r = 0; r < n; ++r) m.at(r, k) += Rat(u) * m.at(r, j);
    }
    const Rat piv = m.at(k, k);
    out.signature += sign_of(piv);
    ++out.rank;
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      const Rat f = m.at(i, k) / piv;
      for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
    // Row k is done; later steps only read the trailing Schur block, which
    // stays symmetric because the skipped column updates mirror the row ones.
    for (int i = k + 1; i < n; ++i) {
      m.at(i, k) = 0;
      m.at(k, i) = 0;
    }
  }
  return out;
}

int signature_hermitian_realified(const RatMatrix& x, const RatMatrix& y) {
  const int n = x.rows();
  if (x.cols() != n || y.rows() != n || y.cols() != n)
    throw Error(ErrorKind::ShapeMismatch, "realified signature: shape mismatch");
  if (!x.is_symmetric())
    throw Error(ErrorKind::NonSymmetric, "realified signature: X not symmetric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (y.at(i, j) != -y.at(j, i))
        throw Error(ErrorKind::NonSymmetric,
                    "realified signature: Y not antisymmetric");
  RatMatrix r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.at(i, j) = x.at(i, j);
      r.at(n + i, n + j) = x.at(i, j);
      r.at(i, n + j) = -y.at(i, j);
      r.at(n + i, j) = y.at(i, j);
    }
  Inertia in = signature_symmetric(r);
  if (in.signature % 2 != 0)
    throw Error(ErrorKind::Internal, "realified signature not even");
  return in.signature / 2;
}

template <class P>
PolyMatrix<P> PolyMatrix<P>::without_rows_cols(
    const std::vector<int>& drop_rows, const std::vector<int>& drop_cols) const {
  std::vector<char> rdrop(r_, 0), cdrop(c_, 0);
  for (int i : drop_rows) {
    if (i < 0 || i >= r_)
      throw Error(ErrorKind::ShapeMismatch, "row index out of range");
    rdrop[i] = 1;
  }
  for (int j : drop_cols) {
    if (j < 0 || j >= c_)
      throw Error(ErrorKind::ShapeMismatch, "column index out of range");
    cdrop[j] = 1;
  }
  int nr = 0, nc = 0;
  for (int i = 0; i < r_; ++i) nr += !rdrop[i];
  for (int j = 0; j < c_; ++j) nc += !cdrop[j];
  PolyMatrix<P> out(nr, nc);
  int oi = 0;
  for (int i = 0; i < r_; ++i) {
    if (rdrop[i]) continue;
    int oj = 0;
    for (int j = 0; j < c_; ++j) {
      if (cdrop[j]) continue;
      out.at(oi, oj) = at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

template class PolyMatrix<LaurentPoly>;
template class PolyMatrix<IntPoly>;

namespace {

template <class P>
P bareiss_det(PolyMatrix<P> m, const P& one) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return one;
  int sign = 1;
  P prev = one;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          r = i;
          break;
        }
      if (r < 0) return P();  // zero column
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    const bool divide = !(prev == one);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        P num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = divide ? num.exact_div(prev) : std::move(num);
      }
      m.at(i, k) = P();
    }
    prev = m.at(k, k);
  }
  P det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace

LaurentPoly det_poly_matrix(const LaurentMatrix& m) {
  return bareiss_det(m, LaurentPoly::one());
}

IntPoly det_upoly_matrix(const UPolyMatrix& m) {
  return bareiss_det(m, IntPoly::constant(1));
}

RatMatrix eval_matrix(const UPolyMatrix& m, const Rat& x0) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = eval_poly(m.at(i, j), x0);
  return out;
}

LaurentMatrix substitute_matrix(const UPolyMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = substitute_u_to_s(m.at(i, j));
  return out;
}

}  // namespace knotsig
