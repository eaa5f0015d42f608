#include "tangleh/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tangleh/error.hpp"

namespace tangleh {

namespace {

std::vector<std::string> fresh_labels(const Tangle& d, int k) {
  std::set<std::string> used;
  for (const auto& t : d.tuples)
    for (const auto& tok : t) used.insert(strip_label(tok));
  std::vector<std::string> out;
  for (long long i = 1; static_cast<int>(out.size()) < k; ++i) {
    std::string c = std::to_string(i);
    if (!used.count(c)) out.push_back(c);
  }
  return out;
}

struct Occ {
  int ti = -1, si = -1;
  std::string token;
};

std::vector<Occ> find_occurrences(const Tangle& d, const std::string& stripped) {
  std::vector<Occ> occs;
  for (int ti = 0; ti < static_cast<int>(d.tuples.size()); ++ti)
    for (int si = 0; si < 4; ++si)
      if (strip_label(d.tuples[ti][si]) == stripped) occs.push_back({ti, si, d.tuples[ti][si]});
  return occs;
}

std::string keep_marker(const std::string& original, const std::string& core) {
  if (!original.empty() && original.front() == '|') return "|" + core;
  if (!original.empty() && original.back() == '|') return core + "|";
  return core;
}

// What one R2 side splices into: the three segment labels replacing the
// strand, outer segments first/last along it.
struct Side {
  std::string s1, s2, s3;
};

// Consumes the addressed strand from `out` in place and hands back its
// segment labels; fresh labels are drawn from `pool` back to front.
Side splice_side(Tangle& out, const std::string& strand, std::vector<std::string>& pool) {
  auto draw = [&pool] {
    std::string l = pool.back();
    pool.pop_back();
    return l;
  };
  if (strand == kFreeArc) {
    if (out.free_arcs < 1) fail(Err::UnknownStrand, "no free arc available: " + std::string(kFreeArc));
    out.free_arcs -= 1;
    Side s;
    s.s1 = "|" + draw();
    s.s2 = draw();
    s.s3 = draw() + "|";
    return s;
  }
  if (strand == kFreeCircle) {
    if (out.free_circles < 1)
      fail(Err::UnknownStrand, "no free circle available: " + std::string(kFreeCircle));
    out.free_circles -= 1;
    Side s;
    s.s1 = draw();
    s.s2 = draw();
    s.s3 = s.s1;  // the circle closes back onto its first segment
    return s;
  }
  auto occs = find_occurrences(out, strand);
  Side s;
  s.s1 = draw();
  s.s2 = draw();
  s.s3 = draw();
  if (occs.size() == 2) {
    out.tuples[occs[0].ti][occs[0].si] = s.s1;
    out.tuples[occs[1].ti][occs[1].si] = s.s3;
  } else if (occs.size() == 1) {
    s.s1 = keep_marker(occs[0].token, s.s1);
    out.tuples[occs[0].ti][occs[0].si] = s.s3;
  } else {
    fail(Err::UnknownStrand, "no strand labeled " + strand);
  }
  return s;
}

}  // namespace

Tangle apply_r1(const Tangle& d, const std::string& strand, char handedness) {
  validate_tangle(d);
  if (handedness != '+' && handedness != '-')
    fail(Err::MalformedSyntax, std::string("handedness must be '+' or '-', got '") + handedness +
                                   "'");
  const std::string core = strip_label(strand);
  Tangle out = d;
  auto fresh = fresh_labels(d, 3);
  std::string L = fresh[0], A = fresh[1], M = fresh[2];

  if (core == kFreeArc) {
    if (out.free_arcs < 1) fail(Err::UnknownStrand, "no free arc available: " + core);
    out.free_arcs -= 1;
    L = "|" + L;
    M = M + "|";
  } else if (core == kFreeCircle) {
    if (out.free_circles < 1) fail(Err::UnknownStrand, "no free circle available: " + core);
    out.free_circles -= 1;
    M = L;  // the circle closes through the kink
  } else {
    auto occs = find_occurrences(out, core);
    if (occs.size() == 2) {
      out.tuples[occs[0].ti][occs[0].si] = L;
      out.tuples[occs[1].ti][occs[1].si] = M;
    } else if (occs.size() == 1) {
      L = keep_marker(occs[0].token, L);
      out.tuples[occs[0].ti][occs[0].si] = M;
    } else {
      fail(Err::UnknownStrand, "no strand labeled " + core);
    }
  }

  if (handedness == '+')
    out.tuples.push_back({L, A, A, M});
  else
    out.tuples.push_back({L, M, A, A});
  out.signs.push_back(handedness);
  out.signs_defaulted = false;
  validate_tangle(out);
  return out;
}

Tangle apply_r2(const Tangle& d, const std::string& strand1, const std::string& strand2) {
  validate_tangle(d);
  const std::string c1 = strip_label(strand1);
  const std::string c2 = strip_label(strand2);
  Tangle out = d;

  const bool pseudo = (c1 == kFreeArc || c1 == kFreeCircle);
  if (c1 == c2 && !pseudo) {
    // Fold-back: the strand becomes the path a -c1- b -c2- c -c2- d -c1- e.
    auto fresh = fresh_labels(d, 5);
    std::string a = fresh[0], b = fresh[1], c = fresh[2], dd = fresh[3], e = fresh[4];
    auto occs = find_occurrences(out, c1);
    if (occs.size() == 2) {
      out.tuples[occs[0].ti][occs[0].si] = a;
      out.tuples[occs[1].ti][occs[1].si] = e;
    } else if (occs.size() == 1) {
      a = keep_marker(occs[0].token, a);
      out.tuples[occs[0].ti][occs[0].si] = e;
    } else {
      fail(Err::UnknownStrand, "no strand labeled " + c1);
    }
    out.tuples.push_back({a, dd, b, e});
    out.tuples.push_back({c, c, b, dd});
    out.signs += "+-";
    out.signs_defaulted = false;
    validate_tangle(out);
    return out;
  }

  auto fresh = fresh_labels(d, 6);
  std::reverse(fresh.begin(), fresh.end());  // draws pop from the back
  Side x = splice_side(out, c1, fresh);
  Side y = splice_side(out, c2, fresh);
  out.tuples.push_back({y.s1, x.s2, y.s2, x.s1});
  out.tuples.push_back({x.s2, y.s2, x.s3, y.s3});
  out.signs += "+-";
  out.signs_defaulted = false;
  validate_tangle(out);
  return out;
}

Tangle random_tangle(uint64_t seed, int n, int arcs, int max_n) {
  if (n < 0 || arcs < 0)
    fail(Err::InfeasibleParameters, "crossing and arc counts must be nonnegative");
  if (n > max_n)
    fail(Err::InfeasibleParameters,
         "requested " + std::to_string(n) + " crossings, cap is " + std::to_string(max_n));

  std::mt19937_64 rng(seed);
  auto ri = [&rng](int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };

  long long next_label = 1;
  auto fresh = [&next_label] { return std::to_string(next_label++); };

  const int m0 = ri(0, 2 * arcs);
  std::vector<std::string> cur;
  for (int i = 0; i < m0; ++i) cur.push_back(fresh());

  std::vector<std::array<std::string, 4>> tuples;
  std::string signs;
  std::map<std::string, int> occ;
  std::map<std::string, std::string> parentof;
  auto canon = [&parentof](std::string l) {
    for (auto it = parentof.find(l); it != parentof.end(); it = parentof.find(l)) l = it->second;
    return l;
  };

  int crossings_left = n;
  int cups_budget = ri(0, n + 2);
  while (crossings_left > 0 || cups_budget > 0) {
    const bool cando_cross = crossings_left > 0 && cur.size() >= 2;
    if (cups_budget > 0 && (!cando_cross || ri(0, 99) < 35)) {
      int j = ri(0, static_cast<int>(cur.size()));
      std::string L = fresh();
      cur.insert(cur.begin() + j, {L, L});
      cups_budget -= 1;
      continue;
    }
    if (cando_cross) {
      int i = ri(0, static_cast<int>(cur.size()) - 2);
      std::string x = cur[i], y = cur[i + 1];
      std::string u = fresh(), v = fresh();
      std::array<std::string, 4> t{x, y, v, u};
      std::rotate(t.begin(), t.begin() + ri(0, 3), t.end());
      for (const auto& lab : t) occ[lab] += 1;
      tuples.push_back(t);
      signs.push_back(ri(0, 1) ? '-' : '+');
      cur[i] = u;
      cur[i + 1] = v;
      crossings_left -= 1;
      continue;
    }
    cups_budget += 1;  // too narrow to cross: force a cup
  }

  const int m1_target = 2 * arcs - m0;
  while (static_cast<int>(cur.size()) < m1_target) {
    int j = ri(0, static_cast<int>(cur.size()));
    std::string L = fresh();
    cur.insert(cur.begin() + j, {L, L});
  }

  int free_circles = 0;
  while (static_cast<int>(cur.size()) > m1_target) {
    int i = ri(0, static_cast<int>(cur.size()) - 2);
    std::string a = canon(cur[i]), b = canon(cur[i + 1]);
    if (a == b) {
      if (occ[a] == 0) free_circles += 1;
    } else {
      if (occ[b] > 0 && occ[a] == 0) std::swap(a, b);
      parentof[b] = a;
      occ[a] += occ[b];
      occ.erase(b);
    }
    cur.erase(cur.begin() + i, cur.begin() + i + 2);
  }

  std::map<std::string, int> marks;
  for (const auto& l : cur) marks[canon(l)] += 1;
  for (int i = 0; i < m0; ++i) marks[canon(std::to_string(i + 1))] += 1;

  int free_arcs = 0;
  for (const auto& [l, k] : marks) {
    if (occ.count(l) && occ[l] > 0) continue;
    if (k == 2)
      free_arcs += 1;
    else
      fail(Err::InternalInconsistency, "generator left a dangling end on " + l);
  }

  Tangle out;
  for (const auto& t : tuples) {
    std::array<std::string, 4> row;
    for (int i = 0; i < 4; ++i) {
      std::string c = canon(t[i]);
      auto mi = marks.find(c);
      row[i] = (mi != marks.end() && mi->second == 1 && occ[c] == 1) ? "|" + c : c;
    }
    out.tuples.push_back(row);
  }
  out.signs = signs;
  out.free_circles = free_circles;
  out.free_arcs = free_arcs;
  validate_tangle(out);
  return out;
}

}  // namespace tangleh
