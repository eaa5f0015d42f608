#include "tangleh/complex.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "tangleh/error.hpp"

namespace tangleh {

uint32_t mask_from_index(uint32_t idx, int r) {
  uint32_t mask = 0;
  for (int p = 0; p < r; ++p)
    if (idx >> (r - 1 - p) & 1u) mask |= 1u << p;
  return mask;
}

uint32_t index_from_mask(uint32_t mask, int r) {
  uint32_t idx = 0;
  for (int p = 0; p < r; ++p)
    if (mask >> p & 1u) idx |= 1u << (r - 1 - p);
  return idx;
}

IComplex build_complex(const Tangle& d, Pairing pairing, int max_n) {
  validate_tangle(d);
  IComplex C;
  C.dia = d;
  C.pairing = pairing;
  C.n = d.n();
  C.npl = d.n_plus();
  C.nmi = d.n_minus();
  C.cd = compile(C.dia);

  auto groups = enumerate_states(C.n, max_n);

  struct StateInfo {
    int gen_base = -1;  // offset into gens[ell]
    int r = 0;          // circles incl. free
    Resolved res;
  };
  std::vector<StateInfo> info(size_t{1} << C.n);

  C.gens.assign(C.n + 1, {});
  for (int ell = 0; ell <= C.n; ++ell) {
    for (uint32_t s : groups[ell]) {
      auto& si = info[s];
      si.res = resolve(C.cd, s, pairing);
      si.r = si.res.circles + d.free_circles;
      si.gen_base = static_cast<int>(C.gens[ell].size());
      const int t_tot = si.res.arcs + d.free_arcs;
      const int qbase = ell + C.npl - 2 * C.nmi;  // k + n_plus - n_minus with k = ell - n_minus
      for (uint32_t idx = 0; idx < (1u << si.r); ++idx) {
        uint32_t mask = mask_from_index(idx, si.r);
        C.gens[ell].push_back({s, mask, qbase + gen_theta(si.r, t_tot, mask)});
      }
    }
  }

  C.D.assign(C.n, {});
  for (int ell = 0; ell < C.n; ++ell) {
    C.D[ell].assign(C.gens[ell].size(), {});
    for (uint32_t s : groups[ell]) {
      const auto& si = info[s];
      for (int j = 0; j < C.n; ++j) {
        if (s >> j & 1u) continue;
        uint32_t t = s | (1u << j);
        const auto& ti = info[t];
        Edge e = classify_transition(C.cd, si.res, ti.res, s, t, d.free_circles);
        for (uint32_t idx = 0; idx < (1u << si.r); ++idx) {
          uint32_t mask = mask_from_index(idx, si.r);
          auto targets = local_map(e, {s, mask});
          auto& row = C.D[ell][si.gen_base + idx];
          for (uint32_t tm : targets) {
            int col = ti.gen_base + static_cast<int>(index_from_mask(tm, ti.r));
            if (C.gens[ell + 1][col].q != C.gens[ell][si.gen_base + idx].q)
              fail(Err::InternalInconsistency, "differential does not preserve the quantum degree");
            row.emplace_back(col, e.sign);
          }
        }
      }
    }
    for (auto& row : C.D[ell])
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // d∘d = 0 over the integers (hence over every coefficient field).
  for (int ell = 0; ell + 1 < C.n; ++ell) {
    for (const auto& row : C.D[ell]) {
      std::map<int, long long> acc;
      for (auto [c1, v1] : row)
        for (auto [c2, v2] : C.D[ell + 1][c1]) acc[c2] += static_cast<long long>(v1) * v2;
      for (auto& [col, v] : acc)
        if (v != 0) fail(Err::InternalInconsistency, "d∘d != 0 over the integers");
    }
  }
  return C;
}

namespace detail {

QBlocks q_blocks(const IComplex& C) {
  QBlocks b;
  b.groups.resize(C.n + 1);
  b.local_of.resize(C.n + 1);
  for (int ell = 0; ell <= C.n; ++ell) {
    b.local_of[ell].assign(C.gens[ell].size(), -1);
    for (int i = 0; i < static_cast<int>(C.gens[ell].size()); ++i) {
      auto& g = b.groups[ell][C.gens[ell][i].q];
      b.local_of[ell][i] = static_cast<int>(g.size());
      g.push_back(i);
    }
  }
  return b;
}

int rank_dense_gf2(const std::vector<int>& rows_idx, const std::vector<IRow>& drows,
                   const std::vector<int>& local_of, int cols) {
  const int words = (cols + 63) >> 6;
  std::vector<std::vector<uint64_t>> piv;
  std::vector<int> pivot_at(cols, -1);
  std::vector<uint64_t> cur(words);
  int rank = 0;
  for (int ri : rows_idx) {
    std::fill(cur.begin(), cur.end(), 0ull);
    for (auto [c, v] : drows[ri]) {
      if (v & 1) {
        int lc = local_of[c];
        cur[lc >> 6] ^= 1ull << (lc & 63);
      }
    }
    for (;;) {
      int lead = -1;
      for (int w = 0; w < words; ++w) {
        if (cur[w]) {
          lead = (w << 6) + std::countr_zero(cur[w]);
          break;
        }
      }
      if (lead < 0) break;
      int p = pivot_at[lead];
      if (p < 0) {
        pivot_at[lead] = static_cast<int>(piv.size());
        piv.push_back(cur);
        ++rank;
        break;
      }
      const auto& pr = piv[p];
      for (int w = lead >> 6; w < words; ++w) cur[w] ^= pr[w];
    }
  }
  return rank;
}

void run_parallel(int tasks, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, tasks);
  if (threads <= 1) {
    for (int i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr eptr;
  std::mutex emu;
  auto body = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= tasks) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(emu);
        if (!eptr) eptr = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (eptr) std::rethrow_exception(eptr);
}

}  // namespace detail

Laurent graded_euler_characteristic(const Tangle& d, Pairing pairing, int max_n) {
  validate_tangle(d);
  Cdiag cd = compile(d);
  auto groups = enumerate_states(d.n(), max_n);
  const int npl = d.n_plus(), nmi = d.n_minus();

  Laurent chi;
  std::vector<long long> binom{1};
  for (int ell = 0; ell <= d.n(); ++ell) {
    const long long sgn = ((ell - nmi) % 2 + 2) % 2 ? -1 : 1;
    for (uint32_t s : groups[ell]) {
      Resolved r = resolve(cd, s, pairing);
      const int rc = r.circles + d.free_circles;
      const int ta = r.arcs + d.free_arcs;
      const int base = ell + npl - 2 * nmi - ta;
      binom.assign(1, 1);
      for (int i = 1; i <= rc; ++i) {
        binom.push_back(0);
        for (int j = i; j > 0; --j) binom[j] += binom[j - 1];
      }
      for (int j = 0; j <= rc; ++j) chi.add(base + rc - 2 * j, sgn * binom[j]);
    }
  }
  return chi;
}

Laurent table_euler(const Table& t) {
  Laurent chi;
  for (auto& [kq, dim] : t) chi.add(kq.second, (kq.first % 2 + 2) % 2 ? -dim : dim);
  return chi;
}

Table convolve_tables(const Table& a, const Table& b) {
  Table out;
  for (auto& [ka, da] : a)
    for (auto& [kb, db] : b) {
      int& slot = out[{ka.first + kb.first, ka.second + kb.second}];
      slot += da * db;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Tangle disjoint_union(const Tangle& a, const Tangle& b) {
  auto rename = [](const Tangle& t, const std::string& prefix) {
    Tangle out = t;
    for (auto& tup : out.tuples)
      for (auto& tok : tup) {
        bool lead = !tok.empty() && tok.front() == '|';
        bool trail = !tok.empty() && tok.back() == '|';
        std::string core = strip_label(tok);
        tok = (lead ? "|" : "") + prefix + core + (trail ? "|" : "");
      }
    return out;
  };
  Tangle u = rename(a, "a");
  Tangle rb = rename(b, "b");
  u.tuples.insert(u.tuples.end(), rb.tuples.begin(), rb.tuples.end());
  u.signs += rb.signs;
  u.free_circles += rb.free_circles;
  u.free_arcs += rb.free_arcs;
  u.signs_defaulted = a.signs_defaulted && b.signs_defaulted;
  validate_tangle(u);
  return u;
}

}  // namespace tangleh
