#pragma once

#include <string>
#include <vector>

#include "knotsig/diagram.hpp"

namespace knotsig {

// A bundled diagram with externally known invariant values. The goldens
// are classical table data; each entry records where its numbers come
// from so a failure can be triaged as "our code" vs "our fixture".
struct CorpusEntry {
  std::string name;
  std::string source;       // PD or braid text
  std::string alexander_t;  // balanced Alexander representative, t form
  int signature = 0;        // classical signature (omega = -1)
  bool knot = true;
  bool has_oracle = false;  // braid-closure entries get the Seifert oracle
  bool applicable = false;  // |sigma| matches the circle root count
  std::string note;
};

const std::vector<CorpusEntry>& corpus();

// nullptr when the name is not a corpus entry.
const CorpusEntry* corpus_find(const std::string& name);

Diagram corpus_diagram(const CorpusEntry& e);

}  // namespace knotsig
