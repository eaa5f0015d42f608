#pragma once

#include <array>
#include <string>
#include <vector>

namespace tangleh {

// A strand token is the label as written, optionally carrying one '|' on
// either side to mark an open end. Identity is the stripped label.
std::string strip_label(const std::string& token);
bool is_marked(const std::string& token);

struct Tangle {
  std::vector<std::array<std::string, 4>> tuples;  // tokens as written
  std::string signs;                               // one of "+-" per crossing
  int free_circles = 0;  // closed loops touching no crossing
  int free_arcs = 0;     // open strands touching no crossing
  bool signs_defaulted = false;

  int n() const { return static_cast<int>(tuples.size()); }
  int n_plus() const;
  int n_minus() const;

  bool operator==(const Tangle& o) const {
    return tuples == o.tuples && signs == o.signs &&
           free_circles == o.free_circles && free_arcs == o.free_arcs;
  }
};

// Checks the once-marked / twice-unmarked label discipline, sign length and
// sign alphabet. Throws LabelMultiplicity / SignLengthMismatch / MalformedSyntax.
void validate_tangle(const Tangle& d);

// Accepts {"pd": [[..4 tokens..],...], "signs": "...", "free": {"circles": r, "arcs": t}}
// or a bare [[..],..] array. Missing signs default to all '+' (flagged).
Tangle parse_pd_code(const std::string& text);

// Canonical whitespace-free JSON; parse_pd_code(serialize_pd_code(d)) == d.
std::string serialize_pd_code(const Tangle& d);

struct GaussCode {
  std::vector<std::vector<int>> components;  // signed crossing ids
  std::vector<char> topologies;              // 'o' or 'c' per component
  int crossings() const;
};

// Accepts {"gauss": [[+1,-2,...],...], "topology": ["o","c",...]}; entries may
// be integers or strings with an ignored L/R handedness suffix ("-2R").
GaussCode parse_gauss_code(const std::string& text);

}  // namespace tangleh
