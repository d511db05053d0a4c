#pragma once

#include <vector>

#include "knotsig/diagram.hpp"
#include "knotsig/laurent.hpp"
#include "knotsig/matrices.hpp"
#include "knotsig/numbers.hpp"
#include "knotsig/upoly.hpp"

namespace knotsig {

// Seifert form of the braid-closure surface (one disk per strand, one band
// per letter); basis elements are the circles through consecutive band
// pairs in a column.
struct SeifertMatrix {
  std::vector<std::vector<Int>> entries;  // square, size 2*genus
  int genus = 0;
  Diagram::BraidWord source;

  int size() const { return static_cast<int>(entries.size()); }
  const Int& at(int i, int j) const { return entries[i][j]; }
};

// Errors: NotKnot when the closure has several components, ThinColumn when
// some generator column is used fewer than twice (no basis circle fits).
SeifertMatrix seifert_from_braid(const Diagram::BraidWord& word);

// det(s A - s^{-1} A^T), Conway-normalized (value 1 at s = 1).
LaurentPoly alexander_from_seifert(const SeifertMatrix& a);

// A rational point of the unit circle from the tangent half-angle u:
// the half-angle cosine doubles as the profile coordinate x, and
// omega = exp(i*theta) satisfies omega^{1/2} + omega^{-1/2} = 2x exactly.
struct CirclePoint {
  Rat u;
  Rat cos_half;  // (1 - u^2) / (1 + u^2)
  Rat sin_half;  // 2u / (1 + u^2)

  Rat x() const { return cos_half; }
  Rat omega_re() const { return cos_half * cos_half - sin_half * sin_half; }
  Rat omega_im() const { return 2 * cos_half * sin_half; }
};

CirclePoint circle_point_from_u(const Rat& u);

// n points with u on the grid k/(n+1-k), k = n..1 (so x ascends through
// (-1, 1)). Points where any of the given u-polynomials vanish at 2x are
// nudged deterministically until clear.
std::vector<CirclePoint> pythagorean_points(int n,
                                            const std::vector<IntPoly>& avoid = {});

// Signature of (1-omega)A + (1-conj(omega))A^T. Errors at omega = 1.
int lt_signature(const SeifertMatrix& a, const CirclePoint& p);

namespace detail {
// Construction with the two adjacent-column linking conventions exposed
// (entry slot and sign per interleave pattern); the public constants were
// pinned against independently computed Alexander polynomials and
// signatures — see the calibration test.
SeifertMatrix seifert_from_braid_impl(const Diagram::BraidWord& word, int opt_lead,
                                      int opt_trail);
}  // namespace detail

}  // namespace knotsig
