#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotsig/diagram.hpp"
#include "knotsig/region_matrices.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

// Alexander polynomial via the deleted corner-label matrix, normalized to
// the balanced representative: exponents centered at zero, value at s = 1
// nonnegative for knots, positive leading coefficient for links.
LaurentPoly alexander_kauffman(const Diagram& d);

// det of the deleted region matrix, mapped into s. Equals the Alexander
// polynomial squared up to a global sign, which is reported as observed
// (deletion choices can flip it) rather than normalized away.
LaurentPoly alexander_squared_kashaev(const Diagram& d);

// The link's Alexander polynomial in the variable u = s + s^{-1}. For an
// anti-palindromic representative (even component count) the palindromic
// multiple (s - s^{-1}) * Delta is used; this changes no roots with
// omega != 1, which is all the root analysis consumes.
IntPoly alexander_y_form(const Diagram& d);

// Gordon-Litherland signature, computed from both checkerboard colours;
// the two must agree (Internal otherwise).
int classical_signature_gl(const Diagram& d);

// sign(tau[x0]) - w(D).
int kashaev_invariant(const Diagram& d, const Rat& x0);
int kashaev_invariant(const UPolyMatrix& tau, int writhe, const Rat& x0);
Inertia kashaev_inertia(const UPolyMatrix& tau, const Rat& x0);

struct JumpBracket {
  Rat lo, hi;                      // x-coordinates around the change
  int value_lo = 0, value_hi = 0;  // profile values at the ends
  int mult_sum = 0;  // multiplicity-weighted Alexander roots inside
};

struct SignatureProfile {
  std::vector<Rat> xs;      // ascending, inside (-1, 1)
  std::vector<int> values;  // kashaev_invariant at each x
  int at_one = 0;           // value at x = 1
  std::vector<JumpBracket> jumps;
  bool alexander_vanishes = false;  // step-function hypothesis fails
};

// Exact profile over the grid. Grid points where the evaluated matrix has
// nullity above 2 sit on the discontinuity locus and are nudged toward
// zero. Consecutive values that differ open a bracket, refined by rational
// bisection until it isolates at most one distinct Alexander root (or the
// depth cap is reached).
SignatureProfile signature_profile(const Diagram& d, const std::vector<Rat>& grid,
                                   int max_depth = 20);

// Every bracketed change obeys |change| <= 4 * (weighted roots inside):
// each one-sided step is at most twice the local Alexander multiplicity.
// Vacuously true when the Alexander polynomial vanishes identically
// (outside the step-function hypothesis).
bool jump_bound_check(const SignatureProfile& profile);

// Whether |signature at omega = -1| equals the multiplicity-weighted count
// of Alexander roots on the circle, which is the reach of the definite
// case of the scan identity.
bool applicability_predicate(const SeifertMatrix& a);

struct ScanRow {
  CirclePoint point;
  int kashaev = 0;  // sign(tau[x]) - w
  int oracle = 0;   // 2 * lt_signature at omega(x)
  bool equal = false;
};

struct ConjectureReport {
  std::string diagram_name;
  bool factorization = false;
  bool alexander_sq = false;
  int alexander_sq_sign = 0;  // observed sign of det against Delta^2
  bool classical = false;
  std::optional<bool> at_one;  // knots only
  bool has_oracle = false;
  bool applicability = false;
  std::vector<ScanRow> scan;
  bool scan_all_equal = true;
  std::string verdict;  // "theorem-backed" or "exploratory"

  bool all_identities_ok() const;
};

// Runs every identity the toolkit knows against one diagram: the
// factorization, the squared-Alexander determinant, the classical
// signature (both colours, plus the oracle when present), the x = 1 value
// for knots, and — with an oracle — the full scan over the grid.
ConjectureReport conjecture_report(const Diagram& d,
                                   const std::optional<SeifertMatrix>& oracle,
                                   const std::vector<CirclePoint>& grid);

}  // namespace knotsig
