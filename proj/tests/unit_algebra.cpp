#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "knotsig/laurent.hpp"
#include "knotsig/matrices.hpp"
#include "knotsig/numbers.hpp"
#include "knotsig/upoly.hpp"

using namespace knotsig;

// ---------------------------------------------------------------------------
// Independent oracles. Everything below is computed by routes that share no
// code with the library functions under test: polynomials are built from
// known roots, determinants by cofactor expansion, inertias from diagonal
// matrices pushed through explicit congruences.
// ---------------------------------------------------------------------------

namespace {

// (q*u - p) factors: the polynomial vanishes exactly at the chosen p/q.
IntPoly poly_from_roots(const std::vector<std::pair<long, long>>& roots) {
  IntPoly p = IntPoly::constant(1);
  for (const auto& [num, den] : roots)
    p = p * IntPoly({Int(-num), Int(den)});
  return p;
}

int distinct_roots_in(const std::vector<std::pair<long, long>>& roots,
                      const Rat& a, const Rat& b) {
  std::vector<Rat> seen;
  int count = 0;
  for (const auto& [num, den] : roots) {
    const Rat r = rat(num, den);
    if (!(a < r && r <= b)) continue;
    bool dup = false;
    for (const Rat& s : seen) dup = dup || s == r;
    if (!dup) {
      seen.push_back(r);
      ++count;
    }
  }
  return count;
}

template <class P>
P det_cofactor(const PolyMatrix<P>& m) {
  const int n = m.rows();
  REQUIRE(n >= 1);
  if (n == 1) return m.at(0, 0);
  P acc;
  for (int j = 0; j < n; ++j) {
    PolyMatrix<P> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, c++) = m.at(i, k);
      }
    const P term = m.at(0, j) * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

// Random unimodular matrix: integer shears and sign flips applied to I.
RatMatrix random_unimodular(int n, std::mt19937_64& rng) {
  RatMatrix p(n, n);
  for (int i = 0; i < n; ++i) p.at(i, i) = 1;
  for (int step = 0; step < 3 * n; ++step) {
    const int i = int(rng() % n), j = int(rng() % n);
    if (i == j) {
      for (int k = 0; k < n; ++k) p.at(i, k) = -p.at(i, k);
      continue;
    }
    const long c = long(rng() % 5) - 2;
    for (int k = 0; k < n; ++k) p.at(i, k) += Rat(c) * p.at(j, k);
  }
  return p;
}

IntPoly random_upoly(std::mt19937_64& rng, int max_deg) {
  std::vector<Int> c(size_t(rng() % (max_deg + 1)) + 1);
  for (auto& v : c) v = long(rng() % 7) - 3;
  return IntPoly(c);
}

LaurentPoly random_laurent(std::mt19937_64& rng) {
  LaurentPoly p;
  for (int k = -2; k <= 2; ++k)
    p += LaurentPoly::monomial(long(rng() % 5) - 2, k);
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rationals and Laurent basics
// ---------------------------------------------------------------------------

TEST_CASE("rat_from_string parses and rejects") {
  CHECK(rat_from_string("3/5") == rat(3, 5));
  CHECK(rat_from_string("-7/9") == rat(-7, 9));
  CHECK(rat_from_string("0") == Rat(0));
  CHECK(rat_from_string("-12") == Rat(-12));
  CHECK(rat_to_string(rat(6, -4)) == "-3/2");
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("x"), Error);
  CHECK_THROWS_AS(rat_from_string(""), Error);
}

TEST_CASE("laurent arithmetic and evaluation") {
  const LaurentPoly s = LaurentPoly::monomial(1, 1);
  const LaurentPoly u = s + LaurentPoly::monomial(1, -1);
  CHECK(u.eval(Rat(2)) == rat(5, 2));
  CHECK(eval_laurent(u * u, rat(1, 2)) == rat(25, 4));
  CHECK(u.is_palindromic());
  CHECK(!(s - LaurentPoly::monomial(1, -1)).is_palindromic());
  CHECK((u * u).coeff(0) == 2);
  CHECK(u.mirrored() == u);
  CHECK(u.shifted(2).lo_exp() == 1);
}

TEST_CASE("pretty_t prints balanced Alexander forms") {
  LaurentPoly trefoil = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 0) +
                        LaurentPoly::monomial(1, -2);
  CHECK(trefoil.pretty_t() == "t - 1 + t^-1");
  LaurentPoly fig8 = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(3, 0) +
                     LaurentPoly::monomial(-1, -2);
  CHECK(fig8.pretty_t() == "-t + 3 - t^-1");
  LaurentPoly five2 = LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(-3, 0) +
                      LaurentPoly::monomial(2, -2);
  CHECK(five2.pretty_t() == "2t - 3 + 2t^-1");
  CHECK(LaurentPoly::one().pretty_t() == "1");
  CHECK(LaurentPoly::zero().pretty_t() == "0");
  // odd exponents cannot be written in t; the s form is used instead
  const std::string odd = (LaurentPoly::monomial(1, 1)).pretty_t();
  CHECK(odd.find('s') != std::string::npos);
}

TEST_CASE("exact division over the Laurent ring") {
  const LaurentPoly u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  const LaurentPoly p = u * u * LaurentPoly::monomial(3, -2);
  CHECK(p.exact_div(u) == u * LaurentPoly::monomial(3, -2));
  CHECK_THROWS_AS(p.exact_div(u + LaurentPoly::one()), Error);
}

// ---------------------------------------------------------------------------
// IntPoly: evaluation, division, substitution round trips
// ---------------------------------------------------------------------------

TEST_CASE("eval_poly evaluates at u = 2x") {
  const IntPoly u = IntPoly::monomial(1, 1);
  CHECK(eval_poly(u, Rat(1)) == Rat(2));
  CHECK(eval_poly(u * u - IntPoly::constant(3), rat(1, 2)) == Rat(-2));
  CHECK(eval_poly(IntPoly::constant(7), rat(9, 4)) == Rat(7));
  CHECK(IntPoly({2, 0, 1}).eval_at_u(Rat(3)) == Rat(11));
}

TEST_CASE("exact_div over Z[u]") {
  const IntPoly u = IntPoly::monomial(1, 1);
  const IntPoly p = (u - IntPoly::constant(1)) * (u + IntPoly::constant(1));
  CHECK(p.exact_div(u - IntPoly::constant(1)) == u + IntPoly::constant(1));
  CHECK_THROWS_AS(p.exact_div(u - IntPoly::constant(2)), Error);
}

TEST_CASE("substitution u -> s + 1/s and its inverse") {
  const IntPoly u = IntPoly::monomial(1, 1);
  const LaurentPoly s = LaurentPoly::monomial(1, 1);
  const LaurentPoly si = LaurentPoly::monomial(1, -1);
  CHECK(substitute_u_to_s(u) == s + si);
  // (s + 1/s)^3 = s^3 + 3s + 3/s + 1/s^3
  CHECK(substitute_u_to_s(u * u * u) ==
        LaurentPoly::monomial(1, 3) + LaurentPoly::monomial(3, 1) +
            LaurentPoly::monomial(3, -1) + LaurentPoly::monomial(1, -3));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPoly p = random_upoly(rng, 6);
    const LaurentPoly q = substitute_u_to_s(p);
    CHECK(q.is_palindromic());
    CHECK(laurent_to_upoly(q) == p);
    // evaluation commutes with substitution: p(s0 + 1/s0) = q(s0)
    const Rat s0 = rat(3, 2);
    CHECK(p.eval_at_u(s0 + 1 / s0) == q.eval(s0));
  }
  CHECK_THROWS_AS(laurent_to_upoly(s - si), Error);
  CHECK_THROWS_AS(laurent_to_upoly(s + LaurentPoly::one()), Error);
}

TEST_CASE("primitive gcd") {
  const IntPoly u = IntPoly::monomial(1, 1);
  const IntPoly a = (u - IntPoly::constant(1)) * (u + IntPoly::constant(2));
  const IntPoly b = (u - IntPoly::constant(1)) * (u - IntPoly::constant(3));
  CHECK(gcd_poly(a, b) == u - IntPoly::constant(1));
  const IntPoly c = IntPoly::constant(2) * a;
  const IntPoly d = IntPoly::constant(4) * a;
  CHECK(gcd_poly(c, d) == a);  // content stripped, positive lead
}

// ---------------------------------------------------------------------------
// Sturm counting against the from-known-roots oracle
// ---------------------------------------------------------------------------

TEST_CASE("sturm_count: hand cases with irrational roots") {
  const IntPoly p = IntPoly({-2, 0, 1});  // u^2 - 2, roots at +-sqrt(2)
  CHECK(sturm_count(p, Rat(-2), Rat(2)) == 2);
  CHECK(sturm_count(p, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(p, Rat(-2), Rat(0)) == 1);
  CHECK(sturm_count(p, rat(3, 2), Rat(2)) == 0);
  CHECK(sturm_count(IntPoly({1, 0, 1}), Rat(-10), Rat(10)) == 0);  // u^2 + 1
}

TEST_CASE("sturm_count: half-open boundary convention") {
  const IntPoly p = poly_from_roots({{1, 1}, {-2, 1}});
  CHECK(sturm_count(p, Rat(0), Rat(1)) == 1);   // root at right end counts
  CHECK(sturm_count(p, Rat(1), Rat(5)) == 0);   // root at left end does not
  CHECK(sturm_count(p, Rat(-2), Rat(1)) == 1);  // -2 excluded, 1 included
}

TEST_CASE("sturm_count matches the known-roots oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<long, long>> roots;
    const int k = 1 + int(rng() % 4);
    for (int i = 0; i < k; ++i) {
      const long num = long(rng() % 11) - 5;
      const long den = 1 + long(rng() % 3);
      roots.emplace_back(num, den);
      if (rng() % 3 == 0) roots.emplace_back(num, den);  // repeated root
    }
    IntPoly p = poly_from_roots(roots);
    if (rng() % 2 == 0) p = p * IntPoly({1, 0, 1});  // rootless factor
    const Rat a = rat(long(rng() % 13) - 8, 1 + long(rng() % 2));
    const Rat b = a + rat(1 + long(rng() % 12), 1 + long(rng() % 2));
    CHECK(sturm_count(p, a, b) == distinct_roots_in(roots, a, b));
    // additivity over adjacent half-open intervals
    const Rat m = (a + b) / 2;
    CHECK(sturm_count(p, a, b) == sturm_count(p, a, m) + sturm_count(p, m, b));
  }
}

// ---------------------------------------------------------------------------
// Squarefree decomposition against reconstruction
// ---------------------------------------------------------------------------

TEST_CASE("squarefree_mults recovers constructed multiplicities") {
  const IntPoly u = IntPoly::monomial(1, 1);
  const IntPoly f1 = u - IntPoly::constant(1);
  const IntPoly f2 = u + IntPoly::constant(2);
  const IntPoly f3 = IntPoly({-3, 2});  // 2u - 3
  const IntPoly p = f1 * f2 * f2 * f3 * f3 * f3;

  const auto parts = squarefree_mults(p);
  REQUIRE(parts.size() == 3);
  IntPoly rebuilt = IntPoly::constant(1);
  for (const auto& [f, m] : parts) {
    CHECK(sign_of(f.lead()) > 0);
    CHECK(gcd_poly(f, f.derivative()).degree() == 0);  // each part squarefree
    for (int i = 0; i < m; ++i) rebuilt = rebuilt * f;
  }
  CHECK(rebuilt == p);

  bool saw1 = false, saw2 = false, saw3 = false;
  for (const auto& [f, m] : parts) {
    saw1 = saw1 || (f == f1 && m == 1);
    saw2 = saw2 || (f == f2 && m == 2);
    saw3 = saw3 || (f == f3 && m == 3);
  }
  CHECK(saw1);
  CHECK(saw2);
  CHECK(saw3);

  CHECK(squarefree_mults(IntPoly::constant(5)).empty());
  const auto sq = squarefree_mults(IntPoly({-2, 0, 1}) * IntPoly({-2, 0, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 2);
}

// ---------------------------------------------------------------------------
// Determinants against cofactor expansion
// ---------------------------------------------------------------------------

TEST_CASE("bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(37);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      UPolyMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_upoly(rng, 2);
      CHECK(det_upoly_matrix(m) == det_cofactor(m));
    }
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      LaurentMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_laurent(rng);
      CHECK(det_poly_matrix(m) == det_cofactor(m));
    }
}

TEST_CASE("the empty matrix has determinant one") {
  CHECK(det_upoly_matrix(UPolyMatrix(0, 0)) == IntPoly::constant(1));
  CHECK(det_poly_matrix(LaurentMatrix(0, 0)) == LaurentPoly::one());
}

// ---------------------------------------------------------------------------
// Inertia: diagonal ground truth pushed through random congruences
// ---------------------------------------------------------------------------

TEST_CASE("signature_symmetric: diagonal and hyperbolic cases") {
  RatMatrix d(3, 3);
  d.at(0, 0) = 2;
  d.at(1, 1) = -5;
  const Inertia i = signature_symmetric(d);
  CHECK(i.signature == 0);
  CHECK(i.rank == 2);
  CHECK(i.nullity == 1);

  RatMatrix h(2, 2);
  h.at(0, 1) = rat(7, 3);
  h.at(1, 0) = rat(7, 3);
  const Inertia hi = signature_symmetric(h);
  CHECK(hi.signature == 0);
  CHECK(hi.rank == 2);

  CHECK(signature_symmetric(RatMatrix(4, 4)).nullity == 4);
  CHECK(signature_symmetric(RatMatrix(0, 0)).rank == 0);

  RatMatrix bad(2, 2);
  bad.at(0, 1) = 1;
  CHECK_THROWS_AS(signature_symmetric(bad), Error);
}

TEST_CASE("signature_symmetric is a congruence invariant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + int(rng() % 6);
    RatMatrix d(n, n);
    Inertia expected;
    for (int i = 0; i < n; ++i) {
      const long v = long(rng() % 5) - 2;
      d.at(i, i) = v;
      expected.signature += (v > 0) - (v < 0);
      expected.rank += v != 0;
      expected.nullity += v == 0;
    }
    const RatMatrix p = random_unimodular(n, rng);
    const RatMatrix s = mat_mul(transpose(p), mat_mul(d, p));
    const Inertia got = signature_symmetric(s);
    CHECK(got.signature == expected.signature);
    CHECK(got.rank == expected.rank);
    CHECK(got.nullity == expected.nullity);
  }
}

TEST_CASE("realified Hermitian signature") {
  RatMatrix x0(2, 2), y0(2, 2);
  y0.at(0, 1) = -1;
  y0.at(1, 0) = 1;
  CHECK(signature_hermitian_realified(x0, y0) == 0);  // [[0,-i],[i,0]]

  RatMatrix x1(2, 2), y1 = y0;
  x1.at(0, 0) = 2;
  x1.at(1, 1) = 2;
  CHECK(signature_hermitian_realified(x1, y1) == 2);  // [[2,-i],[i,2]]

  // with Y = 0 it reduces to the real symmetric signature
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + int(rng() % 4);
    RatMatrix d(n, n);
    for (int i = 0; i < n; ++i) d.at(i, i) = long(rng() % 7) - 3;
    const RatMatrix p = random_unimodular(n, rng);
    const RatMatrix s = mat_mul(transpose(p), mat_mul(d, p));
    CHECK(signature_hermitian_realified(s, RatMatrix(n, n)) ==
          signature_symmetric(s).signature);
  }

  RatMatrix badY(2, 2);
  badY.at(0, 1) = 1;
  badY.at(1, 0) = 1;
  CHECK_THROWS_AS(signature_hermitian_realified(x0, badY), Error);
  CHECK_THROWS_AS(signature_hermitian_realified(RatMatrix(2, 2), RatMatrix(3, 3)),
                  Error);
}

TEST_CASE("without_rows_cols drops the requested lines") {
  UPolyMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = IntPoly::constant(3 * i + j);
  const UPolyMatrix r = m.without_rows_cols({1}, {0, 2});
  REQUIRE(r.rows() == 2);
  REQUIRE(r.cols() == 1);
  CHECK(r.at(0, 0) == IntPoly::constant(1));
  CHECK(r.at(1, 0) == IntPoly::constant(7));
}
