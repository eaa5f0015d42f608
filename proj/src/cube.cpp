#include "tangleh/cube.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tangleh/error.hpp"

namespace tangleh {

const char* ttype_name(Ttype t) {
  switch (t) {
    case Ttype::merge_circles: return "merge_circles";
    case Ttype::split_circle: return "split_circle";
    case Ttype::saddle_arcs: return "saddle_arcs";
    case Ttype::split_arc_circle: return "split_arc_circle";
    case Ttype::merge_arc_circle: return "merge_arc_circle";
  }
  return "?";
}

const char* ttype_print(Ttype t) {
  return t == Ttype::saddle_arcs ? "saddle" : ttype_name(t);
}

int koszul_sign(uint32_t from, int bit) {
  return (std::popcount(from & ((1u << bit) - 1u)) & 1) ? -1 : 1;
}

namespace {

std::vector<int> circle_positions(const Resolved& r) {
  std::vector<int> pos(r.comps.size(), -1);
  int next = 0;
  for (size_t i = 0; i < r.comps.size(); ++i)
    if (!r.comps[i].is_arc) pos[i] = next++;
  return pos;
}

}  // namespace

Edge classify_transition(const Cdiag& cd, const Resolved& rs, const Resolved& rt,
                         uint32_t s, uint32_t t, int free_circles) {
  uint32_t diff = s ^ t;
  if (std::popcount(diff) != 1 || (s & diff) != 0)
    fail(Err::NotAdjacent, "states " + state_to_string(s, cd.n) + " -> " +
                               state_to_string(t, cd.n) +
                               " do not differ by one 0->1 bit flip");
  Edge e;
  e.from = s;
  e.to = t;
  e.bit = std::countr_zero(diff);
  e.sign = koszul_sign(s, e.bit);

  std::map<std::vector<int>, int> target_by_labels;
  for (size_t i = 0; i < rt.comps.size(); ++i) target_by_labels[rt.comps[i].labels] = static_cast<int>(i);

  std::vector<int> match(rs.comps.size(), -1);
  std::vector<uint8_t> target_used(rt.comps.size(), 0);
  for (size_t i = 0; i < rs.comps.size(); ++i) {
    auto it = target_by_labels.find(rs.comps[i].labels);
    if (it != target_by_labels.end() && rt.comps[it->second].is_arc == rs.comps[i].is_arc) {
      match[i] = it->second;
      target_used[it->second] = 1;
    } else {
      e.src_aff_comps.push_back(static_cast<int>(i));
    }
  }
  for (size_t i = 0; i < rt.comps.size(); ++i)
    if (!target_used[i]) e.dst_aff_comps.push_back(static_cast<int>(i));

  auto kinds = [](const Resolved& r, const std::vector<int>& idx) {
    int circles = 0, arcs = 0;
    for (int i : idx) (r.comps[i].is_arc ? arcs : circles)++;
    return std::pair(circles, arcs);
  };
  auto [sc, sa] = kinds(rs, e.src_aff_comps);
  auto [tc, ta] = kinds(rt, e.dst_aff_comps);

  if (sc == 0 && sa == 0 && tc == 0 && ta == 0) {
    e.type = Ttype::saddle_arcs;  // partition unchanged as a set: zero map
  } else if (sc == 2 && sa == 0 && tc == 1 && ta == 0) {
    e.type = Ttype::merge_circles;
  } else if (sc == 1 && sa == 0 && tc == 2 && ta == 0) {
    e.type = Ttype::split_circle;
  } else if (sc == 0 && sa == 2 && tc == 0 && ta == 2) {
    e.type = Ttype::saddle_arcs;
  } else if (sc == 0 && sa == 1 && tc == 1 && ta == 1) {
    e.type = Ttype::split_arc_circle;
  } else if (sc == 1 && sa == 1 && tc == 0 && ta == 1) {
    e.type = Ttype::merge_arc_circle;
  } else {
    fail(Err::UnrecognizedTransition,
         "component delta (" + std::to_string(sc) + " circle(s) + " + std::to_string(sa) +
             " arc(s) -> " + std::to_string(tc) + " circle(s) + " + std::to_string(ta) +
             " arc(s)) on edge " + state_to_string(s, cd.n) + " -> " +
             state_to_string(t, cd.n) + " matches no cobordism type");
  }

  auto spos = circle_positions(rs);
  auto tpos = circle_positions(rt);
  e.circ_map.assign(rs.circles + free_circles, -1);
  for (size_t i = 0; i < rs.comps.size(); ++i)
    if (match[i] >= 0 && !rs.comps[i].is_arc) e.circ_map[spos[i]] = tpos[match[i]];
  for (int f = 0; f < free_circles; ++f) e.circ_map[rs.circles + f] = rt.circles + f;

  std::vector<int> src_circ, dst_circ;
  for (int i : e.src_aff_comps)
    if (!rs.comps[i].is_arc) src_circ.push_back(spos[i]);
  for (int i : e.dst_aff_comps)
    if (!rt.comps[i].is_arc) dst_circ.push_back(tpos[i]);
  std::sort(src_circ.begin(), src_circ.end());
  std::sort(dst_circ.begin(), dst_circ.end());
  if (src_circ.size() > 0) e.src_c1 = src_circ[0];
  if (src_circ.size() > 1) e.src_c2 = src_circ[1];
  if (dst_circ.size() > 0) e.dst_c1 = dst_circ[0];
  if (dst_circ.size() > 1) e.dst_c2 = dst_circ[1];
  return e;
}

std::vector<uint32_t> local_map(const Edge& e, const Generator& g) {
  if (g.state != e.from)
    fail(Err::StateMismatch, "generator state " + std::to_string(g.state) +
                                 " does not match edge source " + std::to_string(e.from));
  uint32_t base = 0;
  for (size_t p = 0; p < e.circ_map.size(); ++p)
    if (e.circ_map[p] >= 0 && (g.minus_mask >> p) & 1u) base |= 1u << e.circ_map[p];

  switch (e.type) {
    case Ttype::merge_circles: {
      bool b1 = (g.minus_mask >> e.src_c1) & 1u;
      bool b2 = (g.minus_mask >> e.src_c2) & 1u;
      if (b1 && b2) return {};
      if (b1 || b2) base |= 1u << e.dst_c1;
      return {base};
    }
    case Ttype::split_circle: {
      if ((g.minus_mask >> e.src_c1) & 1u)
        return {base | (1u << e.dst_c1) | (1u << e.dst_c2)};
      return {base | (1u << e.dst_c2), base | (1u << e.dst_c1)};
    }
    case Ttype::saddle_arcs:
      return {};
    case Ttype::split_arc_circle:
      return {base | (1u << e.dst_c1)};
    case Ttype::merge_arc_circle:
      if ((g.minus_mask >> e.src_c1) & 1u) return {};
      return {base};
  }
  return {};
}

}  // namespace tangleh
