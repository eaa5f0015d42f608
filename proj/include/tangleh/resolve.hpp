#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangleh/pd.hpp"

namespace tangleh {

// Which strand pairs the 0-smoothing joins in a tuple (a,b,c,d):
//   ad: 0 joins {a,d},{b,c}; 1 joins {a,b},{c,d}   (default)
//   ab: 0 joins {a,b},{c,d}; 1 joins {a,d},{b,c}
enum class Pairing { ad, ab };

Pairing pairing_from_string(const std::string& s);  // "ad" | "ab"

constexpr int kMaxCrossingsDefault = 20;

// Smoothing states are bit masks with bit j = crossing j; the external string
// form puts crossing 0 leftmost.
uint32_t state_from_string(const std::string& s, int n);
std::string state_to_string(uint32_t state, int n);

// Diagram with interned labels. Label ids are assigned in sorted order of the
// stripped labels, so id order is the canonical label order.
struct Cdiag {
  int n = 0;
  std::vector<std::string> labels;   // stripped, sorted, unique
  std::vector<std::string> display;  // token as written (marker kept)
  std::vector<uint8_t> marked;
  std::vector<std::array<int, 4>> tup;

  int label_count() const { return static_cast<int>(labels.size()); }
  int label_id(const std::string& stripped) const;  // -1 if absent
};

Cdiag compile(const Tangle& d);

struct Component {
  bool is_arc = false;
  std::vector<int> labels;  // ascending label ids
};

struct Resolved {
  std::vector<Component> comps;  // canonical order: by smallest label id
  int circles = 0;
  int arcs = 0;
  std::vector<int> comp_of;  // label id -> component index
};

// Union-find closure of the per-crossing joins for one state. Covers labeled
// strands only; free components are accounted for by the complex builder.
Resolved resolve(const Cdiag& cd, uint32_t state, Pairing pairing);

// All 2^n states grouped by weight 0..n; within a weight class states are
// ordered by descending value of their external string read as binary.
std::vector<std::vector<uint32_t>> enumerate_states(int n, int max_n = kMaxCrossingsDefault);

}  // namespace tangleh
