#include "tangleh/resolve.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "tangleh/error.hpp"

namespace tangleh {

Pairing pairing_from_string(const std::string& s) {
  if (s == "ad") return Pairing::ad;
  if (s == "ab") return Pairing::ab;
  fail(Err::MalformedSyntax, "zero-pairing must be 'ad' or 'ab', got '" + s + "'");
}

uint32_t state_from_string(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    fail(Err::StateLengthMismatch, "state '" + s + "' has length " + std::to_string(s.size()) +
                                       ", diagram has " + std::to_string(n) + " crossing(s)");
  uint32_t m = 0;
  for (int i = 0; i < n; ++i) {
    if (s[i] == '1')
      m |= 1u << i;
    else if (s[i] != '0')
      fail(Err::MalformedSyntax, "state '" + s + "' contains a character other than 0/1");
  }
  return m;
}

std::string state_to_string(uint32_t state, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (state & (1u << i)) s[i] = '1';
  return s;
}

int Cdiag::label_id(const std::string& stripped) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), stripped);
  if (it == labels.end() || *it != stripped) return -1;
  return static_cast<int>(it - labels.begin());
}

Cdiag compile(const Tangle& d) {
  Cdiag cd;
  cd.n = d.n();
  for (const auto& t : d.tuples)
    for (const auto& tok : t) cd.labels.push_back(strip_label(tok));
  std::sort(cd.labels.begin(), cd.labels.end());
  cd.labels.erase(std::unique(cd.labels.begin(), cd.labels.end()), cd.labels.end());

  cd.display.assign(cd.labels.size(), std::string());
  cd.marked.assign(cd.labels.size(), 0);
  for (const auto& t : d.tuples) {
    std::array<int, 4> row;
    for (int i = 0; i < 4; ++i) {
      int id = cd.label_id(strip_label(t[i]));
      row[i] = id;
      if (is_marked(t[i])) {
        cd.marked[id] = 1;
        cd.display[id] = t[i];  // keep the marker side as written
      } else if (cd.display[id].empty()) {
        cd.display[id] = t[i];
      }
    }
    cd.tup.push_back(row);
  }
  return cd;
}

namespace {

struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // deterministic root: smallest label id
    parent[b] = a;
  }
};

}  // namespace

Resolved resolve(const Cdiag& cd, uint32_t state, Pairing pairing) {
  int n = static_cast<int>(cd.tup.size());
  if (n < 32 && state >= (1u << n))
    fail(Err::StateLengthMismatch, "state out of range for " + std::to_string(n) + " crossing(s)");

  UF uf(cd.label_count());
  for (int j = 0; j < n; ++j) {
    const auto& t = cd.tup[j];
    bool one = (state >> j) & 1u;
    bool join_ab = (pairing == Pairing::ad) ? one : !one;
    if (join_ab) {
      uf.join(t[0], t[1]);
      uf.join(t[2], t[3]);
    } else {
      uf.join(t[0], t[3]);
      uf.join(t[1], t[2]);
    }
  }

  Resolved r;
  r.comp_of.assign(cd.label_count(), -1);
  std::map<int, int> root_to_comp;  // ascending roots = canonical order
  for (int id = 0; id < cd.label_count(); ++id) {
    int root = uf.find(id);
    auto [it, fresh] = root_to_comp.try_emplace(root, 0);
    if (fresh) {
      it->second = static_cast<int>(r.comps.size());
      r.comps.push_back({});
    }
    r.comps[it->second].labels.push_back(id);
    r.comp_of[id] = it->second;
  }
  for (auto& c : r.comps) {
    int marks = 0;
    for (int id : c.labels) marks += cd.marked[id];
    if (marks != 0 && marks != 2)
      fail(Err::InternalInconsistency,
           "resolved component with " + std::to_string(marks) + " open end(s); expected 0 or 2");
    c.is_arc = marks == 2;
    if (c.is_arc)
      ++r.arcs;
    else
      ++r.circles;
  }
  return r;
}

std::vector<std::vector<uint32_t>> enumerate_states(int n, int max_n) {
  if (n > max_n)
    fail(Err::TooManyCrossings, std::to_string(n) + " crossings exceeds the configured maximum of " +
                                    std::to_string(max_n));
  if (n < 0 || n > 30) fail(Err::TooManyCrossings, "crossing count out of range");
  std::vector<std::vector<uint32_t>> groups(n + 1);
  // v runs over string-as-binary values; bit i of the mask is character i.
  for (int64_t v = (int64_t(1) << n) - 1; v >= 0; --v) {
    uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (v & (int64_t(1) << (n - 1 - i))) mask |= 1u << i;
    groups[std::popcount(mask)].push_back(mask);
  }
  return groups;
}

}  // namespace tangleh
