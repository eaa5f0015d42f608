#include "tangleh/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "tangleh/error.hpp"
#include "tangleh/moves.hpp"

namespace tangleh {

namespace {

std::vector<std::string> comp_tokens(const Cdiag& cd, const Component& c) {
  std::vector<std::string> toks;
  toks.reserve(c.labels.size());
  for (int id : c.labels) toks.push_back(cd.display[id]);
  std::sort(toks.begin(), toks.end());
  return toks;
}

std::string bracket_list(const std::vector<std::string>& toks) {
  std::string out = "[";
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ", ";
    out += "'" + toks[i] + "'";
  }
  return out + "]";
}

std::string factor(const std::string& sym, const std::string& rep) { return sym + "(" + rep + ")"; }

}  // namespace

std::string comp_bracket(const Cdiag& cd, const Component& c) {
  return bracket_list(comp_tokens(cd, c));
}

std::string comp_joined(const Cdiag& cd, const Component& c) {
  auto toks = comp_tokens(cd, c);
  std::string out;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) out += "~";
    out += toks[i];
  }
  return out;
}

std::string generator_factors(const Tangle& d, const Cdiag& cd, const Resolved& r,
                              uint32_t minus_mask) {
  std::vector<std::string> parts;
  int circle_pos = 0;
  auto vsym = [&minus_mask](int pos) {
    return (minus_mask >> pos & 1u) ? std::string("v_-") : std::string("v_+");
  };
  for (const auto& c : r.comps) {
    if (c.is_arc)
      parts.push_back(factor("w", comp_bracket(cd, c)));
    else
      parts.push_back(factor(vsym(circle_pos++), comp_bracket(cd, c)));
  }
  for (int i = 0; i < d.free_circles; ++i)
    parts.push_back(factor(vsym(circle_pos++), bracket_list({kFreeCircle})));
  for (int i = 0; i < d.free_arcs; ++i) parts.push_back(factor("w", bracket_list({kFreeArc})));
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " (x) ";
    out += parts[i];
  }
  return out.empty() ? "1" : out;  // the empty diagram has the empty tensor
}

std::string smooth_report(const Tangle& d, const std::string& state, Pairing pairing, int max_n) {
  validate_tangle(d);
  if (d.n() > max_n)
    fail(Err::TooManyCrossings,
         std::to_string(d.n()) + " crossings exceed the cap of " + std::to_string(max_n));
  Cdiag cd = compile(d);
  uint32_t s = state_from_string(state, d.n());
  Resolved r = resolve(cd, s, pairing);
  std::string out = "Smoothing State: " + state_to_string(s, d.n()) + "\n";
  for (const auto& c : r.comps)
    out += comp_joined(cd, c) + " (Type: " + (c.is_arc ? "arc" : "circle") + ")\n";
  for (int i = 0; i < d.free_circles; ++i) out += std::string(kFreeCircle) + " (Type: circle)\n";
  for (int i = 0; i < d.free_arcs; ++i) out += std::string(kFreeArc) + " (Type: arc)\n";
  return out;
}

std::string localmap_report(const Tangle& d, const std::string& from_state,
                            const std::string& to_state, Pairing pairing, int max_n) {
  validate_tangle(d);
  if (d.n() > max_n)
    fail(Err::TooManyCrossings,
         std::to_string(d.n()) + " crossings exceed the cap of " + std::to_string(max_n));
  Cdiag cd = compile(d);
  uint32_t s = state_from_string(from_state, d.n());
  uint32_t t = state_from_string(to_state, d.n());
  Resolved rs = resolve(cd, s, pairing);
  Resolved rt = resolve(cd, t, pairing);
  Edge e = classify_transition(cd, rs, rt, s, t, d.free_circles);

  std::string out = "Transition Type: " + std::string(ttype_print(e.type)) + "\n\n";
  auto elements = [&](const Resolved& r) {
    std::string block;
    for (const auto& c : r.comps)
      block += std::string("  - Type: ") + (c.is_arc ? "arc" : "circle") +
               ", Representative: " + comp_bracket(cd, c) + "\n";
    for (int i = 0; i < d.free_circles; ++i)
      block += "  - Type: circle, Representative: " + bracket_list({kFreeCircle}) + "\n";
    for (int i = 0; i < d.free_arcs; ++i)
      block += "  - Type: arc, Representative: " + bracket_list({kFreeArc}) + "\n";
    return block;
  };
  out += "Pre-State Elements:\n" + elements(rs);
  out += "Post-State Elements:\n" + elements(rt);
  out += "\nCalculated Coefficients:\n";

  const int r_s = rs.circles + d.free_circles;
  const int r_t = rt.circles + d.free_circles;
  for (uint32_t i = 0; i < (1u << r_s); ++i) {
    uint32_t pre_mask = mask_from_index(i, r_s);
    auto targets = local_map(e, {s, pre_mask});
    for (uint32_t j = 0; j < (1u << r_t); ++j) {
      uint32_t post_mask = mask_from_index(j, r_t);
      int coeff = static_cast<int>(std::count(targets.begin(), targets.end(), post_mask));
      out += generator_factors(d, cd, rs, pre_mask) + " -> " +
             generator_factors(d, cd, rt, post_mask) +
             ": Coefficient = " + std::to_string(coeff) + "\n";
    }
  }
  return out;
}

double coeff_weight(const QField&, const QField::Elem& e) { return std::fabs(e.get_d()); }

double coeff_weight(const PField&, const PField::Elem&) { return 1.0; }

int min_zero_shift(const Table& t) {
  bool seen = false;
  int mn = 0;
  for (const auto& [kq, dim] : t) {
    if (!dim) continue;
    if (!seen || kq.second < mn) mn = kq.second;
    seen = true;
  }
  return seen ? -mn : 0;
}

std::string homology_text(const Tangle&, const Summary& s, bool legacy, int q_shift) {
  // Table is keyed (k,q), so iteration is already in (k,q) order.
  std::string out;
  char buf[64];
  for (const auto& [kq, dim] : s.table) {
    auto rit = s.reps.find(kq);
    for (int j = 0; j < dim; ++j) {
      std::string qstr;
      if (legacy) {
        double avg = kq.second;
        if (rit != s.reps.end() && j < static_cast<int>(rit->second.size())) {
          double num = 0, den = 0;
          for (const auto& term : rit->second[j]) {
            num += term.weight * term.g.q;
            den += term.weight;
          }
          if (den > 0) avg = num / den;
        }
        std::snprintf(buf, sizeof buf, "%.1f", avg + q_shift);
        qstr = buf;
      } else {
        qstr = std::to_string(kq.second + q_shift);
      }
      out += "Detect a homology class of dimension " + std::to_string(kq.first) +
             " with quantum degree " + qstr + ".\n";
    }
  }
  return out;
}

std::string homology_json(const Tangle& d, const Summary& s, bool normalized, int q_shift) {
  using nlohmann::ordered_json;
  Cdiag cd = compile(d);
  std::map<uint32_t, Resolved> cache;
  auto resolved = [&](uint32_t state) -> const Resolved& {
    auto it = cache.find(state);
    if (it == cache.end())
      it = cache.emplace(state, resolve(cd, state, pairing_from_string(s.pairing_name))).first;
    return it->second;
  };

  ordered_json doc;
  doc["n"] = s.n;
  doc["n_plus"] = s.npl;
  doc["n_minus"] = s.nmi;
  doc["field"] = s.field_name;
  doc["pairing"] = s.pairing_name;
  if (normalized) doc["q_shift"] = q_shift;
  if (s.signs_defaulted)
    doc["warnings"] = ordered_json::array({"sign type defaulted to all '+'"});
  doc["homology"] = ordered_json::array();
  for (const auto& [kq, dim] : s.table) {
    ordered_json cell;
    cell["k"] = kq.first;
    cell["q"] = kq.second + q_shift;
    cell["dim"] = dim;
    cell["generators"] = ordered_json::array();
    auto rit = s.reps.find(kq);
    if (rit != s.reps.end()) {
      for (const auto& cls : rit->second) {
        std::string txt;
        for (size_t i = 0; i < cls.size(); ++i) {
          if (i) txt += " + ";
          if (cls[i].coeff != "1") txt += cls[i].coeff + " * ";
          txt += state_to_string(cls[i].g.state, s.n) + ": " +
                 generator_factors(d, cd, resolved(cls[i].g.state), cls[i].g.minus_mask);
        }
        cell["generators"].push_back(txt);
      }
    }
    doc["homology"].push_back(cell);
  }
  doc["euler"] = s.euler.str();
  return doc.dump(2) + "\n";
}

}  // namespace tangleh
