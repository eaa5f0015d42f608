#include "tangleh/pd.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "json.hpp"
#include "tangleh/error.hpp"

namespace tangleh {

using nlohmann::ordered_json;

std::string strip_label(const std::string& token) {
  std::string out;
  int bars = 0;
  for (char c : token) {
    if (c == '|') {
      ++bars;
    } else {
      out.push_back(c);
    }
  }
  if (bars > 1) fail(Err::MalformedSyntax, "label '" + token + "' carries more than one '|'");
  if (out.empty()) fail(Err::MalformedSyntax, "empty strand label" + (bars ? std::string(" '") + token + "'" : ""));
  return out;
}

bool is_marked(const std::string& token) {
  return token.find('|') != std::string::npos;
}

int Tangle::n_plus() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), '+'));
}

int Tangle::n_minus() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), '-'));
}

void validate_tangle(const Tangle& d) {
  if (static_cast<int>(d.signs.size()) != d.n())
    fail(Err::SignLengthMismatch,
         "sign string length " + std::to_string(d.signs.size()) +
             " does not match crossing count " + std::to_string(d.n()));
  for (char c : d.signs)
    if (c != '+' && c != '-')
      fail(Err::MalformedSyntax, std::string("sign character '") + c + "' is not '+' or '-'");
  if (d.free_circles < 0 || d.free_arcs < 0)
    fail(Err::MalformedSyntax, "negative free component count");

  struct Occ {
    int count = 0;
    int marks = 0;
  };
  std::map<std::string, Occ> occ;
  for (const auto& t : d.tuples) {
    for (const auto& tok : t) {
      auto s = strip_label(tok);
      auto& o = occ[s];
      ++o.count;
      if (is_marked(tok)) ++o.marks;
    }
  }
  for (const auto& [lab, o] : occ) {
    if (o.marks == 0 && o.count == 2) continue;
    if (o.marks == 1 && o.count == 1) continue;
    fail(Err::LabelMultiplicity,
         "label '" + lab + "' occurs " + std::to_string(o.count) + " time(s) with " +
             std::to_string(o.marks) + " boundary mark(s); expected twice unmarked or once marked");
  }
}

namespace {

Tangle tangle_from_json(const ordered_json& j) {
  Tangle d;
  const ordered_json* pd = nullptr;
  if (j.is_array()) {
    pd = &j;
  } else if (j.is_object()) {
    if (!j.contains("pd")) fail(Err::MalformedSyntax, "document has no \"pd\" key");
    pd = &j.at("pd");
    if (j.contains("signs")) {
      if (!j.at("signs").is_string()) fail(Err::MalformedSyntax, "\"signs\" must be a string");
      d.signs = j.at("signs").get<std::string>();
      d.signs_defaulted = false;
    }
    if (j.contains("free")) {
      const auto& f = j.at("free");
      if (!f.is_object()) fail(Err::MalformedSyntax, "\"free\" must be an object");
      if (f.contains("circles")) d.free_circles = f.at("circles").get<int>();
      if (f.contains("arcs")) d.free_arcs = f.at("arcs").get<int>();
    }
  } else {
    fail(Err::MalformedSyntax, "PD document must be a JSON array or object");
  }
  if (!pd->is_array()) fail(Err::MalformedSyntax, "\"pd\" must be an array of 4-tuples");
  for (const auto& row : *pd) {
    if (!row.is_array() || row.size() != 4)
      fail(Err::MalformedSyntax, "crossing " + std::to_string(d.tuples.size()) + " is not a 4-tuple");
    std::array<std::string, 4> t;
    for (int i = 0; i < 4; ++i) {
      const auto& cell = row.at(i);
      if (cell.is_string()) {
        t[i] = cell.get<std::string>();
      } else if (cell.is_number_integer()) {
        t[i] = std::to_string(cell.get<long long>());
      } else {
        fail(Err::MalformedSyntax, "strand labels must be strings or integers");
      }
    }
    d.tuples.push_back(t);
  }
  if (d.signs.empty() && d.n() > 0 && (!j.is_object() || !j.contains("signs"))) {
    d.signs.assign(d.n(), '+');
    d.signs_defaulted = true;
  }
  return d;
}

}  // namespace

Tangle parse_pd_code(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::MalformedSyntax, std::string("invalid JSON: ") + e.what());
  }
  Tangle d;
  try {
    d = tangle_from_json(j);
  } catch (const TangleError&) {
    throw;
  } catch (const std::exception& e) {
    fail(Err::MalformedSyntax, std::string("invalid PD document: ") + e.what());
  }
  validate_tangle(d);
  return d;
}

std::string serialize_pd_code(const Tangle& d) {
  ordered_json j;
  j["pd"] = ordered_json::array();
  for (const auto& t : d.tuples) j["pd"].push_back({t[0], t[1], t[2], t[3]});
  j["signs"] = d.signs;
  if (d.free_circles > 0 || d.free_arcs > 0) {
    j["free"] = ordered_json::object();
    j["free"]["circles"] = d.free_circles;
    j["free"]["arcs"] = d.free_arcs;
  }
  return j.dump();
}

int GaussCode::crossings() const {
  int mx = 0;
  for (const auto& c : components)
    for (int v : c) mx = std::max(mx, std::abs(v));
  return mx;
}

namespace {

int gauss_entry(const ordered_json& cell) {
  if (cell.is_number_integer()) {
    long long v = cell.get<long long>();
    if (v == 0) fail(Err::MalformedSyntax, "crossing id 0 is not allowed in a Gauss code");
    return static_cast<int>(v);
  }
  if (cell.is_string()) {
    std::string s = cell.get<std::string>();
    if (!s.empty() && (s.back() == 'L' || s.back() == 'R')) s.pop_back();
    if (s.empty() || s == "+" || s == "-")
      fail(Err::MalformedSyntax, "bad Gauss entry '" + cell.get<std::string>() + "'");
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail(Err::MalformedSyntax, "bad Gauss entry '" + cell.get<std::string>() + "'");
    }
    if (pos != s.size() || v == 0)
      fail(Err::MalformedSyntax, "bad Gauss entry '" + cell.get<std::string>() + "'");
    return static_cast<int>(v);
  }
  fail(Err::MalformedSyntax, "Gauss entries must be integers or strings");
}

}  // namespace

GaussCode parse_gauss_code(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::MalformedSyntax, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gauss"))
    fail(Err::MalformedSyntax, "Gauss document must be an object with a \"gauss\" key");
  const auto& g = j.at("gauss");
  if (!g.is_array()) fail(Err::MalformedSyntax, "\"gauss\" must be an array of components");

  GaussCode code;
  for (const auto& row : g) {
    if (!row.is_array()) fail(Err::MalformedSyntax, "each Gauss component must be an array");
    std::vector<int> comp;
    for (const auto& cell : row) comp.push_back(gauss_entry(cell));
    code.components.push_back(std::move(comp));
  }

  if (!j.contains("topology"))
    fail(Err::TopologyLengthMismatch, "missing \"topology\" for " +
                                          std::to_string(code.components.size()) + " component(s)");
  const auto& topo = j.at("topology");
  if (!topo.is_array() || topo.size() != code.components.size())
    fail(Err::TopologyLengthMismatch,
         "topology length " + std::to_string(topo.is_array() ? topo.size() : 0) +
             " does not match component count " + std::to_string(code.components.size()));
  for (const auto& cell : topo) {
    std::string s = cell.is_string() ? cell.get<std::string>() : std::string();
    if (s != "o" && s != "c") fail(Err::MalformedSyntax, "topology flags must be \"o\" or \"c\"");
    code.topologies.push_back(s[0]);
  }

  std::map<int, std::pair<int, int>> seen;  // id -> (over count, under count)
  for (const auto& comp : code.components) {
    for (int v : comp) {
      auto& s = seen[std::abs(v)];
      if (v > 0)
        ++s.first;
      else
        ++s.second;
    }
  }
  for (const auto& [id, s] : seen) {
    int total = s.first + s.second;
    if (total != 2)
      fail(Err::LabelMultiplicity, "crossing label " + std::to_string(id) + " appears " +
                                       std::to_string(total) + " time(s); expected exactly twice");
    if (s.first != 1)
      fail(Err::SignPairing, "crossing label " + std::to_string(id) +
                                 " must appear once as overcrossing (+) and once as undercrossing (-)");
  }
  return code;
}

}  // namespace tangleh
