#include "knotsig/corpus.hpp"

namespace knotsig {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"unknot", "", "1", 0, true, false, false,
       "round unknot; all invariants trivial by definition"},
      {"kink-pos", "X 2 1 1 2", "1", 0, true, false, false,
       "unknot with one positive curl; writhe 1, exercises merged corners"},
      {"kink-neg", "X 1 1 2 2", "1", 0, true, false, false,
       "unknot with one negative curl; writhe -1"},
      {"trefoil-pd", "X 1 5 2 4; X 3 1 4 6; X 5 3 6 2", "t - 1 + t^-1", 2, true,
       false, false,
       "left-handed trefoil as raw crossing data; signature +2 from tables"},
      {"trefoil", "B 2: 1 1 1", "t - 1 + t^-1", -2, true, true, true,
       "right-handed trefoil; Alexander and signature from standard tables"},
      {"figure8", "B 3: 1 -2 1 -2", "-t + 3 - t^-1", 0, true, true, true,
       "amphichiral; Alexander from tables, word checked by Burau reduction"},
      {"t25", "B 2: 1 1 1 1 1", "t^2 - t + 1 - t^-1 + t^-2", -4, true, true, true,
       "(2,5) torus knot; cyclotomic-quotient Alexander, signature -4"},
      {"t27", "B 2: 1 1 1 1 1 1 1", "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3", -6,
       true, true, true, "(2,7) torus knot; signature -6"},
      {"k5_2", "B 3: 1 1 1 2 -1 2", "2t - 3 + 2t^-1", -2, true, true, true,
       "5_2; braid word validated against a Burau-reduction oracle"},
      {"k6_1", "B 4: 1 1 2 -1 -3 2 -3", "-2t + 5 - 2t^-1", 0, true, true, true,
       "6_1; signature 0 but nontrivial Alexander; word Burau-validated"},
      {"t34", "B 3: 1 2 1 2 1 2 1 2", "t^3 - t^2 + 1 - t^-2 + t^-3", -6, true,
       true, true, "(3,4) torus knot; tests interleaved surface circles"},
      {"t35", "B 3: 1 2 1 2 1 2 1 2 1 2",
       "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4", -8, true, true, true,
       "(3,5) torus knot; largest bundled example"},
  };
  return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

Diagram corpus_diagram(const CorpusEntry& e) {
  Diagram d = Diagram::parse(e.source);
  d.set_name(e.name);
  return d;
}

}  // namespace knotsig
