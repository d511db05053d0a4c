#include "knotsig/invariants.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotsig {

namespace {

// Balanced representative: center the exponent window at zero (the odd
// residue, if any, goes to the top end), then fix the overall sign.
LaurentPoly normalize_alexander(LaurentPoly q, int components) {
  if (q.is_zero()) return q;
  const long c = q.lo_exp() + q.hi_exp();
  const long half = c >= 0 ? c / 2 : -((-c + 1) / 2);
  q = q.shifted(-half);
  if (components == 1) {
    if (eval_laurent(q, Rat(1)) < 0) q = -q;
  } else if (sign_of(q.coeff(q.hi_exp())) < 0) {
    q = -q;
  }
  return q;
}

}  // namespace

LaurentPoly alexander_kauffman(const Diagram& d) {
  const LaurentMatrix kt = delete_adjacent_pair(kauffman_matrix(d), d);
  return normalize_alexander(det_poly_matrix(kt), d.component_count());
}

LaurentPoly alexander_squared_kashaev(const Diagram& d) {
  const UPolyMatrix tt = delete_adjacent_pair(kashaev_matrix(d), d);
  return substitute_u_to_s(det_upoly_matrix(tt));
}

IntPoly alexander_y_form(const Diagram& d) {
  LaurentPoly q = alexander_kauffman(d);
  if (q.is_zero()) return IntPoly::zero();
  if (q.is_palindromic()) return laurent_to_upoly(q);
  if (q.mirrored() == -q) {
    const LaurentPoly tilt =
        LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1);
    return laurent_to_upoly(tilt * q);
  }
  throw Error(ErrorKind::Internal, "Alexander representative is not (anti)symmetric");
}

int classical_signature_gl(const Diagram& d) {
  int sig[2];
  for (int colour = 0; colour < 2; ++colour) {
    const GoeritzData g = goeritz(d, colour);
    sig[colour] = signature_symmetric(g.matrix).signature - g.mu;
  }
  if (sig[0] != sig[1])
    throw Error(ErrorKind::Internal, "checkerboard signature formulas disagree");
  return sig[0];
}

Inertia kashaev_inertia(const UPolyMatrix& tau, const Rat& x0) {
  return signature_symmetric(eval_matrix(tau, x0));
}

int kashaev_invariant(const UPolyMatrix& tau, int writhe, const Rat& x0) {
  return kashaev_inertia(tau, x0).signature - writhe;
}

int kashaev_invariant(const Diagram& d, const Rat& x0) {
  return kashaev_invariant(kashaev_matrix(d), d.writhe(), x0);
}

namespace {

struct ProfileContext {
  const UPolyMatrix& tau;
  int writhe;
  const IntPoly& dy;  // Alexander in u = 2x; zero when Delta vanishes
  const std::vector<std::pair<IntPoly, int>>& mults;
  int max_depth;
  std::vector<JumpBracket>& out;

  int value(const Rat& x) const { return kashaev_invariant(tau, writhe, x); }

  int weighted_roots(const Rat& lo, const Rat& hi) const {
    int sum = 0;
    for (const auto& [f, m] : mults) sum += m * sturm_count(f, 2 * lo, 2 * hi);
    return sum;
  }

  // A midpoint must stay off the root locus so its profile value is a
  // plateau value; walk deterministic 1/1000 offsets until clear.
  Rat clear_midpoint(const Rat& lo, const Rat& hi) const {
    static const int offsets[] = {500, 501, 499, 503, 497, 507, 493, 509,
                                  491, 511, 489, 521, 479, 523, 477, 527};
    for (int off : offsets) {
      Rat mid = (lo * (1000 - off) + hi * off) / 1000;
      if (dy.is_zero() || eval_poly(dy, mid) != 0) return mid;
    }
    throw Error(ErrorKind::Internal, "root locus blocks every midpoint");
  }

  void refine(const Rat& lo, int vlo, const Rat& hi, int vhi, int depth) {
    if (depth >= max_depth || dy.is_zero() ||
        sturm_count(dy, 2 * lo, 2 * hi) <= 1) {
      out.push_back({lo, hi, vlo, vhi, weighted_roots(lo, hi)});
      return;
    }
    const Rat mid = clear_midpoint(lo, hi);
    const int vmid = value(mid);
    if (vmid != vlo) refine(lo, vlo, mid, vmid, depth + 1);
    if (vmid != vhi) refine(mid, vmid, hi, vhi, depth + 1);
  }
};

}  // namespace

SignatureProfile signature_profile(const Diagram& d, const std::vector<Rat>& grid,
                                   int max_depth) {
  const UPolyMatrix tau = kashaev_matrix(d);
  const int w = d.writhe();
  const IntPoly dy = alexander_y_form(d);
  const auto mults = dy.is_zero() ? std::vector<std::pair<IntPoly, int>>{}
                                  : squarefree_mults(dy);

  SignatureProfile out;
  out.alexander_vanishes = dy.is_zero();
  const int n = static_cast<int>(grid.size());
  for (int i = 0; i < n; ++i) {
    const Rat& x = grid[i];
    Rat gap = rat(1, 64);
    if (i > 0) gap = std::min(gap, Rat(x - grid[i - 1]));
    if (i + 1 < n) gap = std::min(gap, Rat(grid[i + 1] - x));
    const Rat step = gap / 1024;
    const int dir = sign_of(x) == 0 ? -1 : sign_of(x);
    Rat xx = x;
    Inertia in;
    for (int attempt = 0;; ++attempt) {
      in = kashaev_inertia(tau, xx);
      if (in.nullity <= 2) break;
      if (attempt >= 8)
        throw Error(ErrorKind::Internal, "sample point stuck on the root locus");
      xx = xx - dir * (attempt + 1) * step;
    }
    out.xs.push_back(xx);
    out.values.push_back(in.signature - w);
  }
  out.at_one = kashaev_invariant(tau, w, Rat(1));

  ProfileContext ctx{tau, w, dy, mults, max_depth, out.jumps};
  for (int i = 0; i + 1 < n; ++i)
    if (out.values[i] != out.values[i + 1])
      ctx.refine(out.xs[i], out.values[i], out.xs[i + 1], out.values[i + 1], 0);
  return out;
}

bool jump_bound_check(const SignatureProfile& profile) {
  if (profile.alexander_vanishes) return true;
  for (const auto& j : profile.jumps)
    if (std::abs(j.value_hi - j.value_lo) > 4 * j.mult_sum) return false;
  return true;
}

bool applicability_predicate(const SeifertMatrix& a) {
  const int sig = lt_signature(a, circle_point_from_u(Rat(1)));
  const IntPoly dy = laurent_to_upoly(alexander_from_seifert(a));
  int weighted = 0;
  for (const auto& [f, m] : squarefree_mults(dy))
    weighted += m * sturm_count(f, Rat(-2), Rat(2));
  return std::abs(sig) == weighted;
}

bool ConjectureReport::all_identities_ok() const {
  if (!factorization || !alexander_sq || !classical) return false;
  if (at_one && !*at_one) return false;
  if (applicability && !scan_all_equal) return false;
  return true;
}

ConjectureReport conjecture_report(const Diagram& d,
                                   const std::optional<SeifertMatrix>& oracle,
                                   const std::vector<CirclePoint>& grid) {
  ConjectureReport r;
  r.diagram_name = d.name();
  r.factorization = factorization_check(d);

  const LaurentPoly ka = alexander_kauffman(d);
  const LaurentPoly sq = alexander_squared_kashaev(d);
  const LaurentPoly ka2 = ka * ka;
  if (sq == ka2) {
    r.alexander_sq = true;
    r.alexander_sq_sign = 1;
  } else if (sq == -ka2) {
    r.alexander_sq = true;
    r.alexander_sq_sign = -1;
  }

  const UPolyMatrix tau = kashaev_matrix(d);
  const int w = d.writhe();
  const int at_zero = kashaev_invariant(tau, w, Rat(0));
  r.classical = at_zero == 2 * classical_signature_gl(d);
  r.has_oracle = oracle.has_value();
  if (oracle) {
    r.classical =
        r.classical && at_zero == 2 * lt_signature(*oracle, circle_point_from_u(Rat(1)));
    r.applicability = applicability_predicate(*oracle);
    for (const CirclePoint& p : grid) {
      ScanRow row;
      row.point = p;
      row.kashaev = kashaev_invariant(tau, w, p.x());
      row.oracle = 2 * lt_signature(*oracle, p);
      row.equal = row.kashaev == row.oracle;
      if (!row.equal) r.scan_all_equal = false;
      r.scan.push_back(row);
    }
  }
  if (d.component_count() == 1)
    r.at_one = kashaev_invariant(tau, w, Rat(1)) == 0;
  r.verdict = r.applicability ? "theorem-backed" : "exploratory";
  return r;
}

}  // namespace knotsig
