#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tangleh/cube.hpp"
#include "tangleh/field.hpp"
#include "tangleh/laurent.hpp"
#include "tangleh/sparse.hpp"

namespace tangleh {

// Basis index within a state: circle position 0 is the most significant bit
// and v_+ sorts before v_-.
uint32_t mask_from_index(uint32_t idx, int r);
uint32_t index_from_mask(uint32_t mask, int r);

inline int gen_theta(int circles, int arcs, uint32_t minus_mask) {
  return circles - 2 * std::popcount(minus_mask) - arcs;
}

struct GenInfo {
  uint32_t state = 0;
  uint32_t minus_mask = 0;
  int q = 0;
};

using IRow = std::vector<std::pair<int, int>>;  // (column, integer coefficient)

// Integer cochain complex of the cube: cube degree ell runs 0..n, height
// k = ell - n_minus. All differential coefficients are +-1; the complex is
// field-independent and gets mapped into a field at elimination time.
struct IComplex {
  Tangle dia;
  Cdiag cd;
  Pairing pairing = Pairing::ad;
  int n = 0, npl = 0, nmi = 0;

  std::vector<std::vector<GenInfo>> gens;  // [ell] -> generators, state-major
  std::vector<std::vector<IRow>> D;        // [ell] -> rows mapping into ell+1

  int height(int ell) const { return ell - nmi; }
  int total_circles(const Resolved& r) const { return r.circles + dia.free_circles; }
  int total_arcs(const Resolved& r) const { return r.arcs + dia.free_arcs; }
};

// Builds bases and signed differentials, verifies q-homogeneity and d∘d = 0
// over the integers (InternalInconsistency if violated).
IComplex build_complex(const Tangle& d, Pairing pairing, int max_n = kMaxCrossingsDefault);

using Kq = std::pair<int, int>;      // (height k, quantum degree q)
using Table = std::map<Kq, int>;     // nonzero dimensions only

template <class F>
struct HomologyResult {
  Table table;
  // per (k,q): one vector of terms per homology class
  std::map<Kq, std::vector<std::vector<std::pair<GenInfo, typename F::Elem>>>> reps;
};

namespace detail {

struct QBlocks {
  // per ell: q value -> global generator indices, plus global -> local lookup
  std::vector<std::map<int, std::vector<int>>> groups;
  std::vector<std::vector<int>> local_of;
};

QBlocks q_blocks(const IComplex& C);

template <class F>
SparseRow<F> to_field_row(const F& K, const IRow& row, const std::vector<int>& local_of) {
  SparseRow<F> out;
  out.reserve(row.size());
  for (auto [col, c] : row) out.emplace_back(local_of[col], K.from_int(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void run_parallel(int tasks, int threads, const std::function<void(int)>& fn);

// Dense bitset rank over GF(2); rows are the integer differential rows named
// by rows_idx, with columns remapped through local_of.
int rank_dense_gf2(const std::vector<int>& rows_idx, const std::vector<IRow>& drows,
                   const std::vector<int>& local_of, int cols);

}  // namespace detail

template <class F>
HomologyResult<F> compute_homology(const IComplex& C, const F& K, bool want_reps = true,
                                   int threads = 0) {
  auto blocks = detail::q_blocks(C);
  HomologyResult<F> H;

  if (!want_reps) {
    // Each differential block d_ell restricted to one q is the out-matrix of
    // (ell, q) and the in-matrix of (ell+1, q); rank it once.
    struct RTask {
      int ell, q, rows;
    };
    std::vector<RTask> rtasks;
    for (int ell = 0; ell < C.n; ++ell)
      for (auto& [q, idx] : blocks.groups[ell])
        rtasks.push_back({ell, q, static_cast<int>(idx.size())});
    std::sort(rtasks.begin(), rtasks.end(),
              [](const RTask& a, const RTask& b) { return a.rows > b.rows; });
    std::vector<int> rank(rtasks.size(), 0);

    auto work = [&](int ti) {
      const int ell = rtasks[ti].ell, q = rtasks[ti].q;
      auto jt = blocks.groups[ell + 1].find(q);
      if (jt == blocks.groups[ell + 1].end()) return;  // no target gens: zero map
      const auto& idx = blocks.groups[ell].at(q);
      const int cols = static_cast<int>(jt->second.size());
      if constexpr (std::is_same_v<F, PField>) {
        if (K.p == 2) {
          rank[ti] = detail::rank_dense_gf2(idx, C.D[ell], blocks.local_of[ell + 1], cols);
          return;
        }
      }
      std::vector<SparseRow<F>> rows(idx.size());
      for (size_t i = 0; i < idx.size(); ++i)
        rows[i] = detail::to_field_row(K, C.D[ell][idx[i]], blocks.local_of[ell + 1]);
      (void)cols;
      rank[ti] = static_cast<int>(rref(K, rows).size());
    };
    detail::run_parallel(static_cast<int>(rtasks.size()), threads, work);

    std::map<Kq, int> rank_at;  // (ell, q) -> rank of d_ell on the q block
    for (size_t ti = 0; ti < rtasks.size(); ++ti)
      rank_at[{rtasks[ti].ell, rtasks[ti].q}] = rank[ti];
    auto rk = [&rank_at](int ell, int q) {
      auto it = rank_at.find({ell, q});
      return it == rank_at.end() ? 0 : it->second;
    };
    for (int ell = 0; ell <= C.n; ++ell) {
      for (auto& [q, idx] : blocks.groups[ell]) {
        int dim = static_cast<int>(idx.size()) - rk(ell, q) - rk(ell - 1, q);
        if (dim < 0)
          fail(Err::InternalInconsistency, "negative homology dimension: d∘d != 0 in a q block");
        if (dim) H.table[{C.height(ell), q}] = dim;
      }
    }
    return H;
  }

  struct Task {
    int ell, q;
  };
  std::vector<Task> tasks;
  for (int ell = 0; ell <= C.n; ++ell)
    for (auto& [q, idx] : blocks.groups[ell]) tasks.push_back({ell, q});

  struct Slot {
    int dim = 0;
    std::vector<std::vector<std::pair<GenInfo, typename F::Elem>>> reps;
  };
  std::vector<Slot> out(tasks.size());

  auto work = [&](int ti) {
    const auto& [ell, q] = tasks[ti];
    const auto& idx = blocks.groups[ell].at(q);
    const int m = static_cast<int>(idx.size());

    int out_cols = 0;
    if (ell < C.n) {
      auto jt = blocks.groups[ell + 1].find(q);
      if (jt != blocks.groups[ell + 1].end()) out_cols = static_cast<int>(jt->second.size());
    }
    SparseMatrix<F> mout(m, out_cols);
    if (ell < C.n) {
      for (int i = 0; i < m; ++i)
        mout.row[i] = detail::to_field_row(K, C.D[ell][idx[i]], blocks.local_of[ell + 1]);
    }
    std::vector<SparseRow<F>> image_rows;
    if (ell > 0) {
      auto it = blocks.groups[ell - 1].find(q);
      if (it != blocks.groups[ell - 1].end())
        for (int r : it->second)
          image_rows.push_back(detail::to_field_row(K, C.D[ell - 1][r], blocks.local_of[ell]));
    }

    auto ker = kernel_basis(K, mout);
    auto img = echelon_rows(K, std::move(image_rows));
    auto reps = quotient_representatives(K, ker, img);
    out[ti].dim = static_cast<int>(reps.size());
    for (auto& rep : reps) {
      std::vector<std::pair<GenInfo, typename F::Elem>> terms;
      for (auto& [local, coeff] : rep) terms.emplace_back(C.gens[ell][idx[local]], coeff);
      out[ti].reps.push_back(std::move(terms));
    }
  };
  detail::run_parallel(static_cast<int>(tasks.size()), threads, work);

  for (size_t ti = 0; ti < tasks.size(); ++ti) {
    if (!out[ti].dim) continue;
    Kq kq{C.height(tasks[ti].ell), tasks[ti].q};
    H.table[kq] = out[ti].dim;
    H.reps[kq] = std::move(out[ti].reps);
  }
  return H;
}

template <class F>
Table homology_table(const Tangle& d, const F& K, Pairing pairing,
                     int max_n = kMaxCrossingsDefault, int threads = 0) {
  auto C = build_complex(d, pairing, max_n);
  return compute_homology(C, K, false, threads).table;
}

// State-sum oracle: no linear algebra involved.
Laurent graded_euler_characteristic(const Tangle& d, Pairing pairing,
                                    int max_n = kMaxCrossingsDefault);

Laurent table_euler(const Table& t);

Table convolve_tables(const Table& a, const Table& b);

// Relabels both inputs onto disjoint label sets and concatenates.
Tangle disjoint_union(const Tangle& a, const Tangle& b);

struct ShiftReport {
  int dk = 0;  // k_tau - k_sigma
  int dq = 0;
};

// Checks H(T, tau) == H(T, sigma) shifted by (n_minus(sigma) - n_minus(tau),
// 3*(n_minus(sigma) - n_minus(tau))). Throws ShiftMismatch on violation.
template <class F>
ShiftReport verify_sign_type_shift(const Tangle& d, const std::string& sigma,
                                   const std::string& tau, const F& K, Pairing pairing,
                                   int max_n = kMaxCrossingsDefault) {
  Tangle a = d, b = d;
  a.signs = sigma;
  b.signs = tau;
  validate_tangle(a);
  validate_tangle(b);
  ShiftReport rep;
  rep.dk = a.n_minus() - b.n_minus();
  rep.dq = 3 * rep.dk;
  auto ta = homology_table(a, K, pairing, max_n);
  auto tb = homology_table(b, K, pairing, max_n);
  Table shifted;
  for (auto& [kq, dim] : ta) shifted[{kq.first + rep.dk, kq.second + rep.dq}] = dim;
  if (shifted != tb)
    fail(Err::ShiftMismatch, "homology tables do not match under the height/quantum shift (dk=" +
                                 std::to_string(rep.dk) + ", dq=" + std::to_string(rep.dq) + ")");
  return rep;
}

// Checks H(T1 ⊔ T2) == convolution of the factors. Throws ConvolutionMismatch.
template <class F>
void verify_disjoint_union(const Tangle& a, const Tangle& b, const F& K, Pairing pairing,
                           int max_n = kMaxCrossingsDefault) {
  auto u = disjoint_union(a, b);
  auto tu = homology_table(u, K, pairing, max_n);
  auto want = convolve_tables(homology_table(a, K, pairing, max_n),
                              homology_table(b, K, pairing, max_n));
  if (tu != want)
    fail(Err::ConvolutionMismatch,
         "homology of the disjoint union does not equal the graded convolution of the factors");
}

}  // namespace tangleh
