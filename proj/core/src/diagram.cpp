#include "knotsig/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace knotsig {

namespace {

struct End {
  int c = -1;
  int s = -1;
  bool valid() const { return c >= 0; }
};

// Both appearances of each edge label, in crossing-scan order.
std::vector<std::array<End, 2>> appearance_map(const std::vector<Crossing>& xs,
                                               int n_edges) {
  std::vector<std::array<End, 2>> apps(n_edges + 1);
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int s = 0; s < 4; ++s) {
      int e = xs[c].edge[s];
      if (!apps[e][0].valid())
        apps[e][0] = {c, s};
      else
        apps[e][1] = {c, s};
    }
  return apps;
}

End other_end(const std::vector<std::array<End, 2>>& apps, End at, int edge) {
  const auto& pair = apps[edge];
  if (pair[0].c == at.c && pair[0].s == at.s) return pair[1];
  return pair[0];
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void merge(int a, int b) { p[find(a)] = find(b); }
};

std::string strip_comments(const std::string& text) {
  std::string out;
  bool skip = false;
  for (char ch : text) {
    if (ch == '#') skip = true;
    if (ch == '\n') skip = false;
    if (!skip) out += ch;
  }
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Pulls out an optional leading `name: ...` line; returns remaining text.
std::string take_name_line(const std::string& text, std::string* name) {
  std::istringstream in(text);
  std::string line, rest;
  bool seen_content = false;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (!seen_content && t.rfind("name:", 0) == 0) {
      *name = trimmed(t.substr(5));
      seen_content = true;
      continue;
    }
    if (!t.empty()) seen_content = true;
    rest += line;
    rest += '\n';
  }
  return rest;
}

int parse_int_token(const std::string& tok, const char* what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    throw Error(ErrorKind::MalformedInput, std::string(what) + ": '" + tok + "'");
  }
  if (pos != tok.size())
    throw Error(ErrorKind::MalformedInput, std::string(what) + ": '" + tok + "'");
  return v;
}

}  // namespace

Diagram Diagram::parse(const std::string& text) {
  std::string name;
  std::string body = trimmed(take_name_line(strip_comments(text), &name));
  Diagram d;
  if (body.empty()) {
    d = parse_pd("");
  } else if (body[0] == 'B' &&
             body.find(':') != std::string::npos &&
             body.find('X') == std::string::npos) {
    d = parse_braid(body);
  } else {
    d = parse_pd(body);
  }
  if (!name.empty()) d.name_ = name;
  return d;
}

Diagram Diagram::parse_pd(const std::string& text) {
  std::string name;
  std::string body = trimmed(take_name_line(strip_comments(text), &name));
  if (body.empty()) {
    // Round 0-crossing unknot: no crossings, one closed arc, two faces.
    Diagram d;
    d.n_edges_ = 0;
    d.components_ = 1;
    d.regions_.resize(2);
    d.regions_[0].colour = 0;
    d.regions_[1].colour = 1;
    d.name_ = name;
    return d;
  }
  // Records are `X a b c d`, split on ';' or newlines.
  for (char& ch : body)
    if (ch == '\n') ch = ';';
  std::vector<Crossing> xs;
  std::istringstream records(body);
  std::string record;
  while (std::getline(records, record, ';')) {
    record = trimmed(record);
    if (record.empty()) continue;
    std::istringstream toks(record);
    std::string head;
    toks >> head;
    if (head != "X")
      throw Error(ErrorKind::MalformedInput,
                  "crossing record must start with 'X': '" + record + "'");
    Crossing c;
    for (int s = 0; s < 4; ++s) {
      std::string tok;
      if (!(toks >> tok))
        throw Error(ErrorKind::MalformedInput,
                    "crossing record needs 4 edge labels: '" + record + "'");
      int v = parse_int_token(tok, "bad edge label");
      if (v <= 0)
        throw Error(ErrorKind::MalformedInput,
                    "edge labels must be positive: '" + record + "'");
      c.edge[s] = v;
    }
    std::string extra;
    if (toks >> extra)
      throw Error(ErrorKind::MalformedInput,
                  "trailing tokens in crossing record: '" + record + "'");
    xs.push_back(c);
  }
  Diagram d = from_crossings(std::move(xs), /*resolve=*/true, std::nullopt);
  d.name_ = name;
  return d;
}

Diagram Diagram::parse_braid(const std::string& text) {
  std::string name;
  std::string body = trimmed(take_name_line(strip_comments(text), &name));
  size_t colon = body.find(':');
  if (body.empty() || body[0] != 'B' || colon == std::string::npos)
    throw Error(ErrorKind::MalformedInput, "braid input must be 'B <n>: w1 w2 ...'");
  int strands = parse_int_token(trimmed(body.substr(1, colon - 1)), "bad strand count");
  if (strands < 1)
    throw Error(ErrorKind::MalformedInput, "strand count must be positive");
  std::vector<int> letters;
  {
    std::istringstream toks(body.substr(colon + 1));
    std::string tok;
    while (toks >> tok) letters.push_back(parse_int_token(tok, "bad braid letter"));
  }
  for (int w : letters)
    if (w == 0 || std::abs(w) >= strands)
      throw Error(ErrorKind::BadGenerator,
                  "letter " + std::to_string(w) + " needs 0 < |letter| < " +
                      std::to_string(strands));
  if (letters.empty())
    throw Error(ErrorKind::Disconnected, "empty braid word closes to a split unlink");

  // Every strand must be tied to the others by some used column, otherwise
  // the closure has a split unknotted circle.
  {
    UnionFind uf(strands);
    for (int w : letters) uf.merge(std::abs(w) - 1, std::abs(w));
    for (int j = 1; j < strands; ++j)
      if (uf.find(j) != uf.find(0))
        throw Error(ErrorKind::Disconnected,
                    "braid closure is split: strand " + std::to_string(j + 1) +
                        " is not tied to strand 1");
  }

  // Strands run downward; crossings are laid down in word order. Arcs get
  // temporary ids; the closure then identifies each bottom end with the
  // top of the same position, and final labels are assigned by walking
  // each component.
  int next_id = strands;
  std::vector<int> pos(strands);
  std::iota(pos.begin(), pos.end(), 0);
  struct RawCrossing {
    std::array<int, 4> arc;
    int sign;
  };
  std::vector<RawCrossing> raw;
  raw.reserve(letters.size());
  for (int w : letters) {
    int g = std::abs(w) - 1;  // left column index
    int tl = pos[g], tr = pos[g + 1];
    int bl = next_id++, br = next_id++;
    // Ends counterclockwise are (NE, NW, SW, SE) = (tr, tl, bl, br); the
    // incoming under-strand leads for the PD slot order.
    if (w > 0)
      raw.push_back({{tr, tl, bl, br}, +1});  // left strand passes over
    else
      raw.push_back({{tl, bl, br, tr}, -1});  // right strand passes over
    pos[g] = bl;
    pos[g + 1] = br;
  }
  UnionFind uf(next_id);
  for (int j = 0; j < strands; ++j) uf.merge(pos[j], j);

  // Arc successor along the flow: each arc is consumed at exactly one
  // crossing (under: slot 0 -> 2; over: b -> d for positive, d -> b for
  // negative, since the over-strand enters where the sign says).
  std::map<int, int> succ;
  for (const auto& rc : raw) {
    succ[uf.find(rc.arc[0])] = uf.find(rc.arc[2]);
    if (rc.sign > 0)
      succ[uf.find(rc.arc[1])] = uf.find(rc.arc[3]);
    else
      succ[uf.find(rc.arc[3])] = uf.find(rc.arc[1]);
  }
  std::map<int, int> label;
  int next_label = 1;
  int comps = 0;
  for (const auto& [start, unused] : succ) {
    (void)unused;
    if (label.count(start)) continue;
    ++comps;
    int a = start;
    while (!label.count(a)) {
      label[a] = next_label++;
      a = succ.at(a);
    }
  }

  std::vector<Crossing> xs;
  xs.reserve(raw.size());
  for (const auto& rc : raw) {
    Crossing c;
    for (int s = 0; s < 4; ++s) c.edge[s] = label.at(uf.find(rc.arc[s]));
    c.sign = rc.sign;
    c.over_in_slot = rc.sign > 0 ? 1 : 3;
    xs.push_back(c);
  }

  // The region west of position 1 is unbounded (closure arcs nest on the
  // east side), and the first column-1 crossing touches it at its west
  // corner: corner 1 for a positive letter, corner 0 for a negative one.
  std::optional<Corner> outer;
  for (size_t i = 0; i < letters.size(); ++i)
    if (std::abs(letters[i]) == 1) {
      outer = Corner{static_cast<int>(i), letters[i] > 0 ? 1 : 0};
      break;
    }

  Diagram d = from_crossings(std::move(xs), /*resolve=*/false, outer);
  if (d.components_ != comps)
    throw Error(ErrorKind::Internal, "component count mismatch in braid closure");
  d.braid_ = BraidWord{strands, letters};
  d.name_ = name;
  return d;
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, bool resolve,
                                std::optional<Corner> outer_hint) {
  Diagram d;
  d.crossings_ = std::move(crossings);
  d.validate_labels();
  if (resolve) d.resolve_orientations();
  d.check_connected();
  d.trace_regions();
  d.colour_regions(outer_hint);
  d.count_components();
  return d;
}

void Diagram::validate_labels() {
  int n = crossing_count();
  std::map<int, int> count;
  for (const auto& c : crossings_)
    for (int e : c.edge) ++count[e];
  for (const auto& [e, k] : count)
    if (k != 2)
      throw Error(ErrorKind::EdgeLabelCount,
                  "edge " + std::to_string(e) + " appears " + std::to_string(k) +
                      " times (expected 2)");
  for (int e = 1; e <= 2 * n; ++e)
    if (!count.count(e))
      throw Error(ErrorKind::NonConsecutiveLabels,
                  "edge labels must be exactly 1..2n; missing " + std::to_string(e));
  n_edges_ = 2 * n;
}

void Diagram::resolve_orientations() {
  const int n = crossing_count();
  auto apps = appearance_map(crossings_, n_edges_);
  // -1 unknown, 0 outgoing (arc leaves the crossing), 1 incoming.
  std::vector<std::array<int, 4>> role(n, {-1, -1, -1, -1});
  std::queue<End> work;
  auto set_role = [&](End e, int r) {
    int& slot = role[e.c][e.s];
    if (slot == r) return;
    if (slot != -1)
      throw Error(ErrorKind::InconsistentOrientation,
                  "edge " + std::to_string(crossings_[e.c].edge[e.s]) +
                      " cannot be oriented consistently");
    slot = r;
    work.push(e);
  };
  auto drain = [&]() {
    while (!work.empty()) {
      End e = work.front();
      work.pop();
      int r = role[e.c][e.s];
      set_role(other_end(apps, e, crossings_[e.c].edge[e.s]), 1 - r);
      if (e.s == 1 || e.s == 3) set_role({e.c, 4 - e.s}, 1 - r);
    }
  };
  for (int c = 0; c < n; ++c) {
    set_role({c, 0}, 1);  // the under-strand enters at slot 0...
    set_role({c, 2}, 0);  // ...and leaves at slot 2
  }
  drain();

  // Components that never pass under are untouched by the anchors above.
  // Orient each of them so edge labels ascend along the flow; a two-edge
  // loop is symmetric under relabelling, so break ties deterministically.
  for (int seed = 0; seed < n; ++seed) {
    if (role[seed][1] != -1) continue;
    auto trial = [&](int over_in) {
      auto saved_role = role;
      set_role({seed, over_in}, 1);
      drain();
      int score = 0;
      for (int c = 0; c < n; ++c) {
        if (saved_role[c][1] != -1 || role[c][1] == -1) continue;
        int in_slot = role[c][1] == 1 ? 1 : 3;
        if (crossings_[c].edge[4 - in_slot] == crossings_[c].edge[in_slot] + 1)
          ++score;
      }
      auto result = role;
      role = saved_role;
      return std::make_pair(score, result);
    };
    auto [score1, role1] = trial(1);
    auto [score3, role3] = trial(3);
    role = score1 > score3 ? role1 : role3;
  }

  for (int c = 0; c < n; ++c) {
    if (role[c][1] == -1 || role[c][3] == -1)
      throw Error(ErrorKind::Internal, "orientation resolution left a gap");
    crossings_[c].over_in_slot = role[c][1] == 1 ? 1 : 3;
    crossings_[c].sign = crossings_[c].over_in_slot == 1 ? +1 : -1;
  }
}

void Diagram::check_connected() const {
  int n = crossing_count();
  if (n == 0) return;
  auto apps = appearance_map(crossings_, n_edges_);
  UnionFind uf(n);
  for (int e = 1; e <= n_edges_; ++e) uf.merge(apps[e][0].c, apps[e][1].c);
  for (int c = 1; c < n; ++c)
    if (uf.find(c) != uf.find(0))
      throw Error(ErrorKind::Disconnected, "split diagrams are not supported");
}

void Diagram::trace_regions() {
  int n = crossing_count();
  regions_.clear();
  region_of_.assign(n, {-1, -1, -1, -1});
  if (n == 0) return;
  auto apps = appearance_map(crossings_, n_edges_);
  // Walking with the face on the right: leave along end k+1, re-enter at
  // the other appearance of that edge, continue from the corner there.
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      if (region_of_[c][k] != -1) continue;
      int id = static_cast<int>(regions_.size());
      regions_.emplace_back();
      Corner at{c, k};
      while (region_of_[at.crossing][at.k] == -1) {
        region_of_[at.crossing][at.k] = id;
        regions_[id].corners.push_back(at);
        End exit{at.crossing, (at.k + 1) % 4};
        End entry = other_end(apps, exit, crossings_[exit.c].edge[exit.s]);
        at = Corner{entry.c, entry.s};
      }
    }
  if (n - n_edges_ + region_count() != 2)
    throw Error(ErrorKind::MalformedInput,
                "crossing data does not describe a planar diagram");
}

void Diagram::colour_regions(std::optional<Corner> outer_hint) {
  if (crossing_count() == 0) return;
  int outer;
  if (outer_hint) {
    outer = region_of(outer_hint->crossing, outer_hint->k);
  } else {
    // Without geometric data, take the region with the most corners as
    // unbounded (lowest id on ties); only the white/black naming depends
    // on this choice.
    outer = 0;
    for (int r = 1; r < region_count(); ++r)
      if (regions_[r].corners.size() > regions_[outer].corners.size()) outer = r;
  }
  std::vector<int> colour(region_count(), -1);
  std::queue<int> bfs;
  colour[outer] = 0;
  bfs.push(outer);
  while (!bfs.empty()) {
    int r = bfs.front();
    bfs.pop();
    for (int c = 0; c < crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) {
        if (region_of(c, s) != r && region_of(c, (s + 3) % 4) != r) continue;
        int other = region_of(c, s) == r ? region_of(c, (s + 3) % 4) : region_of(c, s);
        if (colour[other] == -1) {
          colour[other] = 1 - colour[r];
          bfs.push(other);
        } else if (colour[other] == colour[r]) {
          throw Error(ErrorKind::Internal, "checkerboard colouring conflict");
        }
      }
  }
  for (int r = 0; r < region_count(); ++r) {
    if (colour[r] == -1)
      throw Error(ErrorKind::Internal, "region unreachable in colouring");
    regions_[r].colour = colour[r];
  }
}

void Diagram::count_components() {
  int n = crossing_count();
  if (n == 0) {
    components_ = 1;
    return;
  }
  std::vector<int> succ(n_edges_ + 1, 0);
  for (const auto& c : crossings_) {
    succ[c.edge[0]] = c.edge[2];
    succ[c.edge[c.over_in_slot]] = c.edge[c.over_out_slot()];
  }
  std::vector<bool> seen(n_edges_ + 1, false);
  components_ = 0;
  for (int e = 1; e <= n_edges_; ++e) {
    if (seen[e]) continue;
    ++components_;
    for (int a = e; !seen[a]; a = succ[a]) seen[a] = true;
  }
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

std::array<int, 2> Diagram::regions_of_edge(int edge) const {
  if (edge < 1 || edge > n_edges_)
    throw Error(ErrorKind::InvalidEdge, "no edge " + std::to_string(edge));
  auto apps = appearance_map(crossings_, n_edges_);
  End at = apps[edge][0];
  return {region_of(at.c, (at.s + 3) % 4), region_of(at.c, at.s)};
}

CornerFrame Diagram::corner_frame(int c) const {
  const Crossing& x = crossings_[c];
  CornerFrame f;
  // With the under-strand pointing North, the s-labelled corner sits
  // between the two strand heads and the s^{-1} corner opposite it; these
  // two corners form the quadratic diagonal of the crossing block.
  if (x.sign > 0) {
    f.kauffman_exp = {+1, 0, -1, 0};
    f.diag_ik = {true, false, true, false};
    f.left_of_over = {true, false, false, true};  // over-strand runs E -> W
  } else {
    f.kauffman_exp = {0, +1, 0, -1};
    f.diag_ik = {false, true, false, true};
    f.left_of_over = {false, true, true, false};  // over-strand runs W -> E
  }
  f.left_of_under = {false, false, true, true};  // under-strand runs S -> N
  return f;
}

int Diagram::t_sign(int c, int colour) const {
  // Both strand directions converge on the NW corner when the over-strand
  // runs westward (positive crossing) and on the NE corner otherwise.
  int conv = crossings_[c].sign > 0 ? 2 : 1;
  return regions_[region_of(c, conv)].colour == colour ? +1 : -1;
}

int Diagram::eta_sign(int c, int colour) const {
  return regions_[region_of(c, 0)].colour == colour ? +1 : -1;
}

bool Diagram::is_special() const {
  for (int colour = 0; colour < 2; ++colour)
    for (int c = 1; c < crossing_count(); ++c)
      if (t_sign(c, colour) != t_sign(0, colour)) return false;
  return true;
}

Diagram Diagram::r1_move(int edge, int chirality) const {
  if (crossing_count() == 0) {
    if (edge != 1)
      throw Error(ErrorKind::InvalidEdge, "the round unknot has only edge 1");
    return parse_pd(chirality > 0 ? "X 2 1 1 2" : "X 1 1 2 2");
  }
  if (edge < 1 || edge > n_edges_)
    throw Error(ErrorKind::InvalidEdge, "no edge " + std::to_string(edge));
  auto apps = appearance_map(crossings_, n_edges_);
  // Find where the arc terminates; the kink is inserted just before that.
  End head;
  for (const End& e : apps[edge]) {
    int s = e.s;
    bool incoming = s == 0 || s == crossings_[e.c].over_in_slot;
    if (incoming) head = e;
  }
  int f = edge + 1, g = edge + 2;
  std::vector<Crossing> xs = crossings_;
  for (auto& x : xs)
    for (int& lab : x.edge)
      if (lab > edge) lab += 2;
  xs[head.c].edge[head.s] = g;
  Crossing kink;
  if (chirality > 0)
    kink.edge = {f, edge, g, f};  // over first, then under: positive loop
  else
    kink.edge = {edge, g, f, f};  // under first, then over: negative loop
  xs.push_back(kink);
  Diagram out = from_crossings(std::move(xs), /*resolve=*/true, std::nullopt);
  out.name_ = name_;
  return out;
}

Diagram Diagram::r2_move(int edge_a, int edge_b) const {
  if (edge_a == edge_b)
    throw Error(ErrorKind::SameEdge, "the two arcs must be distinct");
  auto fa = regions_of_edge(edge_a), fb = regions_of_edge(edge_b);
  bool share = fa[0] == fb[0] || fa[0] == fb[1] || fa[1] == fb[0] || fa[1] == fb[1];
  if (!share)
    throw Error(ErrorKind::NotAdjacent,
                "arcs " + std::to_string(edge_a) + " and " + std::to_string(edge_b) +
                    " do not bound a common region");

  auto apps = appearance_map(crossings_, n_edges_);
  auto head_of = [&](int edge) {
    for (const End& e : apps[edge])
      if (e.s == 0 || e.s == crossings_[e.c].over_in_slot) return e;
    throw Error(ErrorKind::Internal, "arc without an incoming end");
  };
  End ha = head_of(edge_a), hb = head_of(edge_b);
  auto base = [&](int lab) {
    return lab + (lab > edge_a ? 2 : 0) + (lab > edge_b ? 2 : 0);
  };
  int ea = base(edge_a), eb = base(edge_b);
  int a2 = ea + 1, a3 = ea + 2, b2 = eb + 1, b3 = eb + 2;

  // The pushed arc crosses over twice with opposite signs. Which side of
  // the target arc the finger enters, and whether the arcs run parallel or
  // antiparallel, give four corner patterns; face tracing accepts exactly
  // the planar ones, so candidates are tried in a fixed order.
  const std::array<std::array<std::array<int, 4>, 2>, 4> variants = {{
      {{{eb, a2, b2, ea}, {b2, a2, b3, a3}}},
      {{{eb, a2, b2, a3}, {b2, a2, b3, ea}}},
      {{{eb, ea, b2, a2}, {b2, a3, b3, a2}}},
      {{{eb, a3, b2, a2}, {b2, ea, b3, a2}}},
  }};

  for (const auto& variant : variants) {
    std::vector<Crossing> xs = crossings_;
    for (auto& x : xs)
      for (int& lab : x.edge) lab = base(lab);
    xs[ha.c].edge[ha.s] = a3;
    xs[hb.c].edge[hb.s] = b3;
    for (const auto& tuple : variant) {
      Crossing c;
      c.edge = tuple;
      xs.push_back(c);
    }
    try {
      Diagram out = from_crossings(std::move(xs), /*resolve=*/true, std::nullopt);
      out.name_ = name_;
      return out;
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::Internal) throw;
    }
  }
  throw Error(ErrorKind::Internal, "no planar second-move variant fits");
}

}  // namespace knotsig
