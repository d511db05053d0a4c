#pragma once

#include <vector>

#include "knotsig/error.hpp"
#include "knotsig/laurent.hpp"
#include "knotsig/numbers.hpp"
#include "knotsig/upoly.hpp"

namespace knotsig {

struct Inertia {
  int signature = 0;
  int rank = 0;
  int nullity = 0;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  bool is_symmetric() const;
  bool operator==(const RatMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

// Sylvester inertia of a symmetric rational matrix by congruence reduction.
// Diagonal pivots where available; an all-zero diagonal with a nonzero
// off-diagonal entry a_ij is handled by the congruence "add row/col j to
// row/col i", which turns the hyperbolic pair into pivots 2a and -a/2
// (contributing 0 to the signature and 2 to the rank). No perturbation,
// no floating point. Throws NonSymmetric on asymmetric input.
Inertia signature_symmetric(RatMatrix m);

// Signature of the Hermitian matrix X + iY (X symmetric, Y antisymmetric)
// through the real symmetric doubling [[X, -Y], [Y, X]], whose signature is
// exactly twice the Hermitian one. Throws ShapeMismatch / NonSymmetric.
int signature_hermitian_realified(const RatMatrix& x, const RatMatrix& y);

template <class P>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  P& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const P& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  bool operator==(const PolyMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

  PolyMatrix without_rows_cols(const std::vector<int>& drop_rows,
                               const std::vector<int>& drop_cols) const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<P> a_;
};

using LaurentMatrix = PolyMatrix<LaurentPoly>;
using UPolyMatrix = PolyMatrix<IntPoly>;

// Fraction-free Bareiss determinant over the entry ring (division-exact by
// construction; entries of intermediate steps are minors of the input).
LaurentPoly det_poly_matrix(const LaurentMatrix& m);
IntPoly det_upoly_matrix(const UPolyMatrix& m);

// Entrywise evaluation of a u-polynomial matrix at u = 2*x0.
RatMatrix eval_matrix(const UPolyMatrix& m, const Rat& x0);

LaurentMatrix substitute_matrix(const UPolyMatrix& m);

}  // namespace knotsig
