#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/error.hpp"

namespace knotsig {

// A crossing stores its four edge-ends counterclockwise starting at the
// incoming under-strand. With the under-strand normalized to point North,
// the slots are 0=S (under in), 1=E, 2=N (under out), 3=W. The sign is +1
// exactly when the over-strand enters at slot 1 (flowing East to West,
// i.e. a counterclockwise quarter turn takes the under direction onto the
// over direction).
struct Crossing {
  std::array<int, 4> edge{};  // edge labels at slots 0..3
  int sign = 0;               // +1 or -1
  int over_in_slot = 0;       // 1 or 3; slot where the over-strand enters

  int over_out_slot() const { return over_in_slot == 1 ? 3 : 1; }
};

// Corner k of a crossing lies between slot-ends k and k+1 (mod 4):
// 0=SE, 1=NE, 2=NW, 3=SW in the normalized frame above.
struct Corner {
  int crossing = 0;
  int k = 0;
  bool operator==(const Corner& o) const {
    return crossing == o.crossing && k == o.k;
  }
};

struct RegionInfo {
  std::vector<Corner> corners;  // face-trace orbit, in trace order
  int colour = 0;               // 0 = white, 1 = black
};

// Per-crossing corner classification shared by every matrix builder.
// The t^{1/2} corner together with the t^{-1/2} corner forms the
// "diagonal pair" of the quadratic entries; the two corners labelled 1
// form the other diagonal. Side data locates each corner relative to the
// oriented strands.
struct CornerFrame {
  std::array<int, 4> kauffman_exp{};   // corner -> exponent of s (+1, -1, 0)
  std::array<bool, 4> diag_ik{};       // corner in the t^{+-1/2} diagonal?
  std::array<bool, 4> left_of_over{};  // corner left of the over-strand
  std::array<bool, 4> left_of_under{};
};

class Diagram {
 public:
  // Dispatches on content: empty text (after comments) is the 0-crossing
  // unknot, a leading `B <n>:` is a braid word, anything else is PD text.
  static Diagram parse(const std::string& text);
  static Diagram parse_pd(const std::string& text);
  static Diagram parse_braid(const std::string& text);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return n_edges_; }
  int component_count() const { return components_; }
  int region_count() const { return static_cast<int>(regions_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<RegionInfo>& regions() const { return regions_; }
  const std::string& name() const { return name_; }
  void set_name(const std::string& n) { name_ = n; }

  // Region containing corner k of crossing c.
  int region_of(int c, int k) const { return region_of_[c][k]; }
  // The two regions flanking an edge (by label), as an ordered pair.
  std::array<int, 2> regions_of_edge(int edge) const;

  int writhe() const;
  CornerFrame corner_frame(int c) const;
  bool is_connected() const { return true; }  // enforced at construction
  bool is_special() const;

  // Colour-v orientation sign of a crossing: +1 iff the corner toward
  // which both strand directions point is v-coloured.
  int t_sign(int c, int colour) const;
  // Colour-v incidence sign: +1 iff the v-coloured corners at c are the
  // SE/NW diagonal.
  int eta_sign(int c, int colour) const;

  // Reidemeister rewrites; both return a fresh fully validated diagram of
  // the same link, with edge labels renumbered along each component.
  Diagram r1_move(int edge, int chirality) const;
  Diagram r2_move(int edge_a, int edge_b) const;

  // Braid provenance when constructed from a word (drives the Seifert
  // oracle); absent for PD input.
  struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
  };
  const std::optional<BraidWord>& braid() const { return braid_; }

 private:
  Diagram() = default;
  // Validates, optionally resolves strand orientations from the labels
  // (braid construction already knows them), traces faces, colours.
  static Diagram from_crossings(std::vector<Crossing> crossings, bool resolve,
                                std::optional<Corner> outer_hint);
  void validate_labels();
  void resolve_orientations();
  void trace_regions();
  void colour_regions(std::optional<Corner> outer_hint);
  void count_components();
  void check_connected() const;

  std::vector<Crossing> crossings_;
  std::vector<std::array<int, 4>> region_of_;
  std::vector<RegionInfo> regions_;
  int n_edges_ = 0;
  int components_ = 1;
  std::string name_;
  std::optional<BraidWord> braid_;
};

}  // namespace knotsig
