#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "knotsig/corpus.hpp"
#include "knotsig/seifert.hpp"

using namespace knotsig;

// ---------------------------------------------------------------------------
// Independent oracle: the Alexander polynomial via the reduced Burau
// representation. It shares nothing with the Seifert-surface construction
// (no bands, no linking numbers), so agreement pins the adjacent-column
// linking conventions of seifert_from_braid.
//
// The unreduced Burau matrix of sigma_i fixes the functional
// phi(x) = sum t^{j-1} x_j; on the invariant subspace with basis
// w_j = t e_j - e_{j+1} the action is
//   sigma_i:      w_{i-1} += w_i after scaling ... explicitly
//     w_{i-1} -> w_{i-1} + w_i,   w_i -> -t w_i,        w_{i+1} -> t w_i + w_{i+1}
//   sigma_i^-1:
//     w_{i-1} -> w_{i-1} + t^-1 w_i,  w_i -> -t^-1 w_i, w_{i+1} -> w_i + w_{i+1}
// and det(burau(beta) - I) = (unit) * (1 + t + ... + t^{n-1}) * Delta(t).
// Exponents are in s with t = s^2 so the balanced form is directly
// comparable to the library's output.
// ---------------------------------------------------------------------------

namespace {

LaurentMatrix burau_letter(int n, int letter) {
  const int i = letter > 0 ? letter : -letter;  // column, 1-based
  const LaurentPoly t = LaurentPoly::monomial(1, 2);
  const LaurentPoly ti = LaurentPoly::monomial(1, -2);
  LaurentMatrix m(n - 1, n - 1);
  for (int k = 0; k < n - 1; ++k) m.at(k, k) = LaurentPoly::one();
  const int r = i - 1;
  if (letter > 0) {
    m.at(r, r) = -t;
    if (r - 1 >= 0) m.at(r, r - 1) = LaurentPoly::one();
    if (r + 1 <= n - 2) m.at(r, r + 1) = t;
  } else {
    m.at(r, r) = -ti;
    if (r - 1 >= 0) m.at(r, r - 1) = ti;
    if (r + 1 <= n - 2) m.at(r, r + 1) = LaurentPoly::one();
  }
  return m;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

LaurentPoly burau_alexander(const Diagram::BraidWord& w) {
  const int n = w.strands;
  LaurentMatrix rho(n - 1, n - 1);
  for (int k = 0; k < n - 1; ++k) rho.at(k, k) = LaurentPoly::one();
  for (int letter : w.letters) rho = mat_mul(burau_letter(n, letter), rho);
  for (int k = 0; k < n - 1; ++k)
    rho.at(k, k) = rho.at(k, k) - LaurentPoly::one();

  LaurentPoly q = det_poly_matrix(rho);
  LaurentPoly cyclotomic;  // 1 + t + ... + t^{n-1}
  for (int k = 0; k < n; ++k) cyclotomic += LaurentPoly::monomial(1, 2 * k);
  q = q.exact_div(cyclotomic);

  REQUIRE(!q.is_zero());
  REQUIRE((q.lo_exp() + q.hi_exp()) % 2 == 0);
  const long shift = (q.lo_exp() + q.hi_exp()) / 2;
  q = q.shifted(-shift);
  REQUIRE(q.is_palindromic());
  const Rat at_one = q.eval(Rat(1));
  REQUIRE((at_one == 1 || at_one == -1));
  return at_one == 1 ? q : -q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction goldens and the calibration pin
// ---------------------------------------------------------------------------

TEST_CASE("trefoil Seifert matrix is the textbook one") {
  const SeifertMatrix a = seifert_from_braid({2, {1, 1, 1}});
  CHECK(a.genus == 1);
  REQUIRE(a.size() == 2);
  CHECK(a.at(0, 0) == -1);
  CHECK(a.at(0, 1) == 1);
  CHECK(a.at(1, 0) == 0);
  CHECK(a.at(1, 1) == -1);
  CHECK(alexander_from_seifert(a).pretty_t() == "t - 1 + t^-1");
}

TEST_CASE("genus bookkeeping") {
  CHECK(seifert_from_braid({3, {1, -2, 1, -2}}).genus == 1);
  CHECK(seifert_from_braid({3, {1, 1, 1, 2, -1, 2}}).genus == 2);
  CHECK(seifert_from_braid({3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}).genus == 4);
  CHECK(seifert_from_braid({3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}).size() == 8);
}

TEST_CASE("Seifert route matches the Burau oracle on every braid entry") {
  // This is the test that freezes the linking-sign conventions: a wrong
  // adjacent-column option changes the Alexander polynomial of 5_2, 6_1
  // and the (3,q) torus knots.
  int checked = 0;
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_oracle) continue;
    const Diagram d = corpus_diagram(e);
    REQUIRE(d.braid().has_value());
    const SeifertMatrix a = seifert_from_braid(*d.braid());
    const LaurentPoly delta = alexander_from_seifert(a);
    CHECK(delta == burau_alexander(*d.braid()));
    CHECK(delta.pretty_t() == e.alexander_t);
    ++checked;
  }
  CHECK(checked == 8);
}

TEST_CASE("the antisymmetrized Seifert matrix is unimodular") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_oracle) continue;
    const SeifertMatrix a = seifert_from_braid(*corpus_diagram(e).braid());
    UPolyMatrix m(a.size(), a.size());
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < a.size(); ++j)
        m.at(i, j) = IntPoly::constant(a.at(i, j) - a.at(j, i));
    CHECK(det_upoly_matrix(m) == IntPoly::constant(1));
  }
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(seifert_from_braid({2, {1, 1}}), Error);        // two components
  CHECK_THROWS_AS(seifert_from_braid({2, {1, -1}}), Error);       // identity perm
  CHECK_THROWS_AS(seifert_from_braid({3, {1, 1, 1, 2}}), Error);  // thin column
  CHECK_THROWS_AS(seifert_from_braid({2, {0}}), Error);
  CHECK_THROWS_AS(seifert_from_braid({2, {2}}), Error);
  // the one-strand empty word closes to the round unknot: empty surface basis
  const SeifertMatrix trivial = seifert_from_braid({1, {}});
  CHECK(trivial.size() == 0);
  CHECK(alexander_from_seifert(trivial) == LaurentPoly::one());
  try {
    seifert_from_braid({3, {1, 1, 1, 2}});
    FAIL("expected ThinColumn");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ThinColumn);
  }
  try {
    seifert_from_braid({2, {1, 1}});
    FAIL("expected NotKnot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotKnot);
  }
}

// ---------------------------------------------------------------------------
// Rational circle points
// ---------------------------------------------------------------------------

TEST_CASE("circle point identities and goldens") {
  const CirclePoint minus_one = circle_point_from_u(Rat(1));
  CHECK(minus_one.x() == 0);
  CHECK(minus_one.omega_re() == -1);
  CHECK(minus_one.omega_im() == 0);

  const CirclePoint p = circle_point_from_u(rat(1, 2));
  CHECK(p.x() == rat(3, 5));
  CHECK(p.omega_re() == rat(-7, 25));
  CHECK(p.omega_im() == rat(24, 25));

  for (long num = -5; num <= 5; ++num) {
    const CirclePoint q = circle_point_from_u(rat(num, 3));
    CHECK(q.cos_half * q.cos_half + q.sin_half * q.sin_half == 1);
    CHECK(q.omega_re() * q.omega_re() + q.omega_im() * q.omega_im() == 1);
    CHECK(q.x() > -1);
    CHECK(!(q.x() > 1));
  }
}

TEST_CASE("sample grid ascends and dodges the x axis for even n") {
  const auto five = pythagorean_points(5);
  REQUIRE(five.size() == 5);
  CHECK(five[0].x() == rat(-12, 13));
  CHECK(five[1].x() == rat(-3, 5));
  CHECK(five[2].x() == 0);
  CHECK(five[3].x() == rat(3, 5));
  CHECK(five[4].x() == rat(12, 13));

  const auto four = pythagorean_points(4);
  REQUIRE(four.size() == 4);
  for (size_t i = 0; i < four.size(); ++i) {
    CHECK(four[i].x() != 0);
    if (i > 0) CHECK(four[i - 1].x() < four[i].x());
  }
}

TEST_CASE("sample grid nudges off polynomial roots") {
  // 5u - 6 vanishes exactly at the second n = 2 grid point (parameter 1/2,
  // x = 3/5, u-coordinate 2x = 6/5); that point must be displaced by one
  // step of 1/(4096 * (n+1)) while the first point stays put.
  const IntPoly hit({-6, 5});
  const auto pts = pythagorean_points(2, {hit});
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].u == Rat(2));
  CHECK(pts[1].u == rat(1, 2) + rat(1, 12288));
  CHECK(eval_poly(hit, pts[1].x()) != 0);
  // without the avoid list the grid point is untouched
  CHECK(pythagorean_points(2)[1].u == rat(1, 2));
}

// ---------------------------------------------------------------------------
// Levine-Tristram signatures
// ---------------------------------------------------------------------------

TEST_CASE("signature at omega = -1 reproduces the table values") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.has_oracle) continue;
    const SeifertMatrix a = seifert_from_braid(*corpus_diagram(e).braid());
    CHECK(lt_signature(a, circle_point_from_u(Rat(1))) == e.signature);
  }
}

TEST_CASE("trefoil signature steps down only past the spectral gap") {
  const SeifertMatrix a = seifert_from_braid({2, {1, 1, 1}});
  // x = cos(theta/2) = 24/25 > sqrt(3)/2: omega before the Alexander root
  CHECK(lt_signature(a, circle_point_from_u(rat(1, 7))) == 0);
  // x = 3/5 < sqrt(3)/2: inside the root arc
  CHECK(lt_signature(a, circle_point_from_u(rat(1, 2))) == -2);
  CHECK(lt_signature(a, circle_point_from_u(Rat(1))) == -2);
  // mirror side of the circle
  CHECK(lt_signature(a, circle_point_from_u(Rat(-1))) == -2);
  CHECK(lt_signature(a, circle_point_from_u(rat(-1, 7))) == 0);
}

TEST_CASE("omega = 1 is rejected") {
  const SeifertMatrix a = seifert_from_braid({2, {1, 1, 1}});
  CHECK_THROWS_AS(lt_signature(a, circle_point_from_u(Rat(0))), Error);
}
