#pragma once

#include <random>
#include <vector>

#include "knotsig/diagram.hpp"

namespace knotsig {

// One random planar rewrite (a curl insertion or a push of one arc over
// another bounding a common region). Raw engine output is used modulo a
// power of two, so sequences are reproducible across platforms for a fixed
// seed, which distribution adapters would not guarantee.
inline Diagram random_rewrite(const Diagram& d, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    const bool curl = d.edge_count() < 2 || (rng() % 2 == 0);
    if (curl) {
      const int e = d.edge_count() == 0 ? 1 : 1 + int(rng() % d.edge_count());
      return d.r1_move(e, rng() % 2 == 0 ? 1 : -1);
    }
    const int a = 1 + int(rng() % d.edge_count());
    const auto fa = d.regions_of_edge(a);
    std::vector<int> partners;
    for (int b = 1; b <= d.edge_count(); ++b) {
      if (b == a) continue;
      const auto fb = d.regions_of_edge(b);
      if (fa[0] == fb[0] || fa[0] == fb[1] || fa[1] == fb[0] || fa[1] == fb[1])
        partners.push_back(b);
    }
    if (!partners.empty()) return d.r2_move(a, partners[rng() % partners.size()]);
  }
  throw Error(ErrorKind::Internal, "no applicable rewrite found");
}

}  // namespace knotsig
