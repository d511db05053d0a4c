#include "knotsig/region_matrices.hpp"

#include <algorithm>

namespace knotsig {

namespace {

// Per-crossing corner-pair entry in the variable x (before the sign
// weight): diagonal of the quadratic pair 2x^2 - 1, other diagonal 1,
// opposite pairs 1, adjacent pairs x.
IntPoly block_entry_x(const CornerFrame& f, int a, int b) {
  if (a == b)
    return f.diag_ik[a] ? IntPoly({Int(-1), Int(0), Int(2)})
                        : IntPoly::constant(1);
  if ((a + 2) % 4 == b) return IntPoly::constant(1);
  return IntPoly::monomial(1, 1);
}

// Reinterpret a polynomial in x as one in u = 2x: a_k x^k = (a_k / 2^k) u^k.
IntPoly x_to_u(const IntPoly& p) {
  std::vector<Int> out(p.coeffs().size());
  Int pow = 1;
  for (size_t k = 0; k < out.size(); ++k) {
    const Int& a = p.coeffs()[k];
    if (!mpz_divisible_p(a.get_mpz_t(), pow.get_mpz_t()))
      throw Error(ErrorKind::Internal,
                  "region matrix entry escapes Z[2x]: " + p.to_string("x"));
    out[k] = a / pow;
    pow *= 2;
  }
  return IntPoly(std::move(out));
}

}  // namespace

UPolyMatrix kashaev_matrix(const Diagram& d) {
  const int r = d.region_count();
  UPolyMatrix acc(r, r);  // accumulated in x, converted below
  for (int c = 0; c < d.crossing_count(); ++c) {
    const CornerFrame f = d.corner_frame(c);
    const IntPoly sgn = IntPoly::constant(d.crossings()[c].sign);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        acc.at(d.region_of(c, a), d.region_of(c, b)) += sgn * block_entry_x(f, a, b);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) acc.at(i, j) = x_to_u(acc.at(i, j));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (acc.at(i, j) != acc.at(j, i))
        throw Error(ErrorKind::Internal, "region matrix not symmetric");
  return acc;
}

LaurentMatrix kauffman_matrix(const Diagram& d) {
  LaurentMatrix k(d.crossing_count(), d.region_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const CornerFrame f = d.corner_frame(c);
    for (int a = 0; a < 4; ++a)
      k.at(c, d.region_of(c, a)) += LaurentPoly::monomial(1, f.kauffman_exp[a]);
  }
  return k;
}

std::vector<int> sign_diagonal(const Diagram& d) {
  std::vector<int> s;
  s.reserve(d.crossing_count());
  for (const auto& c : d.crossings()) s.push_back(c.sign);
  return s;
}

bool factorization_check(const Diagram& d) {
  const LaurentMatrix tau_s = substitute_matrix(kashaev_matrix(d));
  const LaurentMatrix k = kauffman_matrix(d);
  const std::vector<int> s = sign_diagonal(d);
  const int r = d.region_count();
  LaurentMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      LaurentPoly e;
      for (int c = 0; c < d.crossing_count(); ++c) {
        LaurentPoly term = k.at(c, i) * k.at(c, j);
        if (s[c] > 0)
          e += term;
        else
          e += -term;
      }
      m.at(i, j) = e;
      m.at(j, i) = e;
    }
  return m == tau_s;
}

bool regions_adjacent(const Diagram& d, int ra, int rb) {
  if (ra == rb) return false;
  if (d.crossing_count() == 0)
    return (ra == 0 && rb == 1) || (ra == 1 && rb == 0);
  for (int e = 1; e <= d.edge_count(); ++e) {
    auto p = d.regions_of_edge(e);
    if ((p[0] == ra && p[1] == rb) || (p[0] == rb && p[1] == ra)) return true;
  }
  return false;
}

std::array<int, 2> default_adjacent_pair(const Diagram& d) {
  if (d.crossing_count() == 0) return {0, 1};
  for (int e = 1; e <= d.edge_count(); ++e) {
    auto p = d.regions_of_edge(e);
    if (p[0] != p[1]) return p;
  }
  throw Error(ErrorKind::Internal, "no edge separates two distinct regions");
}

namespace {

std::vector<int> checked_pair(const Diagram& d,
                              const std::optional<std::array<int, 2>>& pair) {
  std::array<int, 2> p = pair ? *pair : default_adjacent_pair(d);
  for (int r : p)
    if (r < 0 || r >= d.region_count())
      throw Error(ErrorKind::NotAdjacent, "no region " + std::to_string(r));
  if (!regions_adjacent(d, p[0], p[1]))
    throw Error(ErrorKind::NotAdjacent,
                "regions " + std::to_string(p[0]) + " and " +
                    std::to_string(p[1]) + " do not share an edge");
  std::vector<int> v{p[0], p[1]};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

UPolyMatrix delete_adjacent_pair(const UPolyMatrix& m, const Diagram& d,
                                 std::optional<std::array<int, 2>> pair) {
  auto drop = checked_pair(d, pair);
  return m.without_rows_cols(drop, drop);
}

LaurentMatrix delete_adjacent_pair(const LaurentMatrix& m, const Diagram& d,
                                   std::optional<std::array<int, 2>> pair) {
  auto drop = checked_pair(d, pair);
  return m.without_rows_cols({}, drop);
}

GoeritzData goeritz(const Diagram& d, int colour) {
  GoeritzData g;
  for (int r = 0; r < d.region_count(); ++r)
    if (d.regions()[r].colour == colour) g.region_ids.push_back(r);
  std::vector<int> index(d.region_count(), -1);
  for (size_t i = 0; i < g.region_ids.size(); ++i) index[g.region_ids[i]] = int(i);

  const int m = static_cast<int>(g.region_ids.size());
  g.matrix = RatMatrix(m, m);
  for (int c = 0; c < d.crossing_count(); ++c) {
    g.eta.push_back(d.eta_sign(c, colour));
    g.t.push_back(d.t_sign(c, colour));
    // The two corners of this colour sit on one diagonal of the crossing.
    int base = d.regions()[d.region_of(c, 0)].colour == colour ? 0 : 1;
    int ra = index[d.region_of(c, base)];
    int rb = index[d.region_of(c, base + 2)];
    if (ra != rb) {
      g.matrix.at(ra, rb) += g.eta.back();
      g.matrix.at(rb, ra) += g.eta.back();
    }
    if (g.t.back() == -1) g.mu -= g.eta.back();
  }
  for (int i = 0; i < m; ++i) {
    Rat diag = 0;
    for (int j = 0; j < m; ++j)
      if (j != i) diag -= g.matrix.at(i, j);
    g.matrix.at(i, i) = diag;
  }
  return g;
}

std::pair<RatMatrix, RatMatrix> split_at_zero(const UPolyMatrix& tau,
                                              const Diagram& d) {
  if (tau.rows() != d.region_count() || tau.cols() != d.region_count())
    throw Error(ErrorKind::ShapeMismatch, "matrix is not region-indexed");
  const RatMatrix full = eval_matrix(tau, Rat(0));
  std::array<std::vector<int>, 2> ids;
  for (int r = 0; r < d.region_count(); ++r)
    ids[d.regions()[r].colour].push_back(r);
  for (int i : ids[0])
    for (int j : ids[1])
      if (full.at(i, j) != 0)
        throw Error(ErrorKind::Internal,
                    "colour blocks are coupled at x = 0 (convention bug)");
  std::array<RatMatrix, 2> block;
  for (int v = 0; v < 2; ++v) {
    const auto& id = ids[v];
    block[v] = RatMatrix(int(id.size()), int(id.size()));
    for (size_t i = 0; i < id.size(); ++i)
      for (size_t j = 0; j < id.size(); ++j)
        block[v].at(int(i), int(j)) = full.at(id[i], id[j]);
  }
  return {block[0], block[1]};
}

}  // namespace knotsig
