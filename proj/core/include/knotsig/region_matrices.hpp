#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "knotsig/diagram.hpp"
#include "knotsig/matrices.hpp"

namespace knotsig {

// The region-indexed symmetric matrix over Z[u], u = 2x: per crossing the
// quadratic corner pair carries 2x^2 - 1, the opposite pairs carry 1,
// cyclically adjacent corner pairs carry x, all weighted by the crossing
// sign. Individual contributions live in Z[x]; only the accumulated
// entries are integral in u, so the conversion asserts divisibility and a
// failure means a convention bug, not bad input.
UPolyMatrix kashaev_matrix(const Diagram& d);

// Crossings-by-regions matrix of corner labels s^{+-1} and 1; a region
// meeting a crossing in several corners sums its labels.
LaurentMatrix kauffman_matrix(const Diagram& d);

// diag(sgn(c_1), ..., sgn(c_n)).
std::vector<int> sign_diagonal(const Diagram& d);

// Exact check of the factorization tau[u -> s + s^{-1}] = K^T S K.
bool factorization_check(const Diagram& d);

// Two distinct regions sharing an edge; the deterministic default used by
// the determinant routes (the flanks of the lowest-numbered edge that has
// two distinct sides; the round unknot's two faces for a 0-crossing input).
std::array<int, 2> default_adjacent_pair(const Diagram& d);
bool regions_adjacent(const Diagram& d, int ra, int rb);

// Deletion of an adjacent region pair: rows and columns for the square
// region-indexed matrix, columns only for the crossings-by-regions one.
// Throws NotAdjacent if the pair does not share an edge.
UPolyMatrix delete_adjacent_pair(const UPolyMatrix& m, const Diagram& d,
                                 std::optional<std::array<int, 2>> pair = {});
LaurentMatrix delete_adjacent_pair(const LaurentMatrix& m, const Diagram& d,
                                   std::optional<std::array<int, 2>> pair = {});

// Goeritz form of one checkerboard colour with the writhe-like correction
// term of the Gordon-Litherland signature formula.
struct GoeritzData {
  RatMatrix matrix;             // indexed by the colour's regions
  std::vector<int> region_ids;  // diagram region id per row
  std::vector<int> eta;         // incidence sign per crossing
  std::vector<int> t;           // orientation sign per crossing
  int mu = 0;                   // correction: -sum of eta over t = -1
};
GoeritzData goeritz(const Diagram& d, int colour);

// tau at x = 0 splits as a direct sum over the two colours; the cross
// block vanishing is asserted (a violation is a convention bug). Returns
// (white block, black block).
std::pair<RatMatrix, RatMatrix> split_at_zero(const UPolyMatrix& tau,
                                              const Diagram& d);

}  // namespace knotsig
