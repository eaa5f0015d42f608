#pragma once

#include <cstdint>
#include <vector>

#include "tangleh/resolve.hpp"

namespace tangleh {

enum class Ttype {
  merge_circles,
  split_circle,
  saddle_arcs,
  split_arc_circle,
  merge_arc_circle,
};

const char* ttype_name(Ttype t);   // identifier tag
const char* ttype_print(Ttype t);  // report form: saddle_arcs prints as "saddle"

// One cube edge from -> to (single bit 0->1). Circle positions index the
// circles of a state in component order, labeled circles first, then any
// declared free circles; arcs never index the basis.
struct Edge {
  uint32_t from = 0, to = 0;
  int bit = -1;
  Ttype type = Ttype::saddle_arcs;
  int sign = 1;  // (-1)^(number of 1s in `from` before `bit`)

  std::vector<int> circ_map;  // source circle pos -> target circle pos; -1 = affected
  int src_c1 = -1, src_c2 = -1;
  int dst_c1 = -1, dst_c2 = -1;
  std::vector<int> src_aff_comps, dst_aff_comps;  // labeled component indices
};

// rs/rt must be resolve(cd, s, pairing) / resolve(cd, t, pairing).
// Throws NotAdjacent unless t == s with one bit flipped 0->1, and
// UnrecognizedTransition if the component delta fits none of the five types
// (a partition unchanged as a set classifies as a zero saddle).
Edge classify_transition(const Cdiag& cd, const Resolved& rs, const Resolved& rt,
                         uint32_t s, uint32_t t, int free_circles);

// A chain-group basis element: circles of `state` carry v_- where the mask
// bit for their circle position is set, v_+ otherwise; arcs always carry w.
struct Generator {
  uint32_t state = 0;
  uint32_t minus_mask = 0;
};

// Unsigned local map on a basis element; every returned target mask carries
// coefficient +1 (zero images return an empty list). The edge sign is applied
// at matrix assembly, not here. Throws StateMismatch if g.state != e.from.
std::vector<uint32_t> local_map(const Edge& e, const Generator& g);

int koszul_sign(uint32_t from, int bit);

}  // namespace tangleh
