#pragma once

#include <map>
#include <string>
#include <vector>

#include "tangleh/complex.hpp"

namespace tangleh {

// Display tokens of a component, ASCII-sorted: "['10|', '3', '6|']" and
// "10|~3~6|" forms.
std::string comp_bracket(const Cdiag& cd, const Component& c);
std::string comp_joined(const Cdiag& cd, const Component& c);

// Full tensor factor string of one basis element of `state`, labeled
// components in canonical order first, then free circles, then free arcs:
// "w(['10|', '3', '6|']) (x) v_+(['4', '9']) (x) w(['@arc'])".
std::string generator_factors(const Tangle& d, const Cdiag& cd, const Resolved& r,
                              uint32_t minus_mask);

std::string smooth_report(const Tangle& d, const std::string& state, Pairing pairing,
                          int max_n = kMaxCrossingsDefault);

std::string localmap_report(const Tangle& d, const std::string& from_state,
                            const std::string& to_state, Pairing pairing,
                            int max_n = kMaxCrossingsDefault);

// Field-independent view of a homology computation, ready to print.
struct RepTerm {
  GenInfo g;
  std::string coeff;
  double weight = 1.0;  // legacy-grading averaging weight
};

struct Summary {
  int n = 0, npl = 0, nmi = 0;
  std::string field_name;
  std::string pairing_name;
  Table table;
  std::map<Kq, std::vector<std::vector<RepTerm>>> reps;
  Laurent euler;
  bool signs_defaulted = false;
};

double coeff_weight(const QField& K, const QField::Elem& e);
double coeff_weight(const PField& K, const PField::Elem& e);

template <class F>
Summary summarize(const Tangle& d, const IComplex& C, const HomologyResult<F>& H, const F& K) {
  Summary s;
  s.n = C.n;
  s.npl = C.npl;
  s.nmi = C.nmi;
  s.field_name = K.name();
  s.pairing_name = C.pairing == Pairing::ad ? "ad" : "ab";
  s.table = H.table;
  s.signs_defaulted = d.signs_defaulted;
  for (const auto& [kq, classes] : H.reps) {
    auto& out = s.reps[kq];
    for (const auto& cls : classes) {
      std::vector<RepTerm> terms;
      for (const auto& [g, c] : cls) terms.push_back({g, K.to_string(c), coeff_weight(K, c)});
      out.push_back(std::move(terms));
    }
  }
  return s;
}

// Shift that places the smallest populated quantum degree at zero.
int min_zero_shift(const Table& t);

// One "Detect a homology class of dimension K with quantum degree Q." line
// per class; legacy prints the weighted-average quantum degree in decimal.
std::string homology_text(const Tangle& d, const Summary& s, bool legacy, int q_shift);

std::string homology_json(const Tangle& d, const Summary& s, bool normalized, int q_shift);

}  // namespace tangleh
