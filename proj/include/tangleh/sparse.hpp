#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tangleh/error.hpp"

namespace tangleh {

// Sparse row vector: (column, value) pairs sorted by column, values nonzero.
template <class F>
using SparseRow = std::vector<std::pair<int, typename F::Elem>>;

// Row-major sparse matrix. Vectors act on rows: x maps to x*M, so the kernel
// below is {x : x*M = 0} and the image is the row space.
template <class F>
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseRow<F>> row;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}
};

namespace detail {

template <class F>
SparseRow<F> axpy(const F& K, const SparseRow<F>& r, const typename F::Elem& c,
                  const SparseRow<F>& s) {
  SparseRow<F> out;
  out.reserve(r.size() + s.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      auto v = K.mul(c, s[j].second);
      if (!K.is_zero(v)) out.emplace_back(s[j].first, v);
      ++j;
    } else {
      auto v = K.add(r[i].second, K.mul(c, s[j].second));
      if (!K.is_zero(v)) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
void scale(const F& K, SparseRow<F>& r, const typename F::Elem& c) {
  for (auto& [col, v] : r) v = K.mul(v, c);
}

}  // namespace detail

// In-place reduced row echelon form with deterministic pivoting: pivot columns
// are taken leftmost first, the pivot row is the lowest-index candidate.
// Returns (pivot column, row index) pairs in elimination order.
template <class F>
std::vector<std::pair<int, int>> rref(const F& K, std::vector<SparseRow<F>>& m) {
  std::vector<std::pair<int, int>> pivots;
  std::vector<uint8_t> used(m.size(), 0);
  while (true) {
    int pcol = -1, prow = -1;
    for (size_t i = 0; i < m.size(); ++i) {
      if (used[i] || m[i].empty()) continue;
      int lead = m[i].front().first;
      if (pcol == -1 || lead < pcol) {
        pcol = lead;
        prow = static_cast<int>(i);
      }
    }
    if (prow < 0) break;
    used[prow] = 1;
    pivots.emplace_back(pcol, prow);
    detail::scale(K, m[prow], K.inv(m[prow].front().second));
    for (size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == prow || m[i].empty()) continue;
      auto it = std::lower_bound(m[i].begin(), m[i].end(), pcol,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == m[i].end() || it->first != pcol) continue;
      m[i] = detail::axpy(K, m[i], K.neg(it->second), m[prow]);
    }
  }
  return pivots;
}

template <class F>
int rank(const F& K, const SparseMatrix<F>& M) {
  auto rows = M.row;
  return static_cast<int>(rref(K, rows).size());
}

// Reduce r against an echelonized basis (rref output rows).
template <class F>
SparseRow<F> reduce_against(const F& K, SparseRow<F> r,
                            const std::vector<SparseRow<F>>& basis) {
  for (const auto& b : basis) {
    if (b.empty()) continue;
    int lead = b.front().first;
    auto it = std::lower_bound(r.begin(), r.end(), lead,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != lead) continue;
    r = detail::axpy(K, r, K.neg(it->second), b);
  }
  return r;
}

// Sorts echelon rows by leading column and drops empty ones.
template <class F>
std::vector<SparseRow<F>> echelon_rows(const F& K, std::vector<SparseRow<F>> rows) {
  rref(K, rows);
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const auto& r) { return r.empty(); }),
             rows.end());
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  return rows;
}

// Basis of {x : x*M = 0}, echelonized; x has M.rows coordinates.
template <class F>
std::vector<SparseRow<F>> kernel_basis(const F& K, const SparseMatrix<F>& M) {
  // Augment each row with an identity tag; combos surviving with zero matrix
  // part are kernel vectors.
  const int shift = M.cols;
  std::vector<SparseRow<F>> aug(M.row.size());
  for (size_t i = 0; i < M.row.size(); ++i) {
    aug[i] = M.row[i];
    aug[i].emplace_back(shift + static_cast<int>(i), F::one());
  }
  // Eliminate only on matrix columns (< shift).
  std::vector<uint8_t> used(aug.size(), 0);
  while (true) {
    int pcol = -1, prow = -1;
    for (size_t i = 0; i < aug.size(); ++i) {
      if (used[i] || aug[i].empty() || aug[i].front().first >= shift) continue;
      int lead = aug[i].front().first;
      if (pcol == -1 || lead < pcol) {
        pcol = lead;
        prow = static_cast<int>(i);
      }
    }
    if (prow < 0) break;
    used[prow] = 1;
    detail::scale(K, aug[prow], K.inv(aug[prow].front().second));
    for (size_t i = 0; i < aug.size(); ++i) {
      if (static_cast<int>(i) == prow || aug[i].empty()) continue;
      auto it = std::lower_bound(aug[i].begin(), aug[i].end(), pcol,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == aug[i].end() || it->first != pcol) continue;
      aug[i] = detail::axpy(K, aug[i], K.neg(it->second), aug[prow]);
    }
  }
  std::vector<SparseRow<F>> ker;
  for (auto& r : aug) {
    if (r.empty() || r.front().first < shift) continue;
    SparseRow<F> v;
    v.reserve(r.size());
    for (auto& [c, val] : r) v.emplace_back(c - shift, val);
    ker.push_back(std::move(v));
  }
  return echelon_rows(K, std::move(ker));
}

// Extends an echelon basis of span(image) to one of span(kernel); returns the
// extension (one representative per quotient dimension). Throws
// ImageNotInKernel if some image vector is not a kernel combination.
template <class F>
std::vector<SparseRow<F>> quotient_representatives(const F& K,
                                                   const std::vector<SparseRow<F>>& kernel,
                                                   const std::vector<SparseRow<F>>& image) {
  auto kb = echelon_rows(K, kernel);
  auto ib = echelon_rows(K, image);
  for (const auto& v : ib) {
    if (!reduce_against(K, v, kb).empty())
      fail(Err::ImageNotInKernel, "image vector does not lie in the kernel span");
  }
  std::vector<SparseRow<F>> residual;
  for (const auto& v : kb) {
    auto r = reduce_against(K, v, ib);
    if (!r.empty()) residual.push_back(std::move(r));
  }
  auto reps = echelon_rows(K, std::move(residual));
  if (reps.size() != kb.size() - ib.size())
    fail(Err::InternalInconsistency, "quotient dimension does not match rank arithmetic");
  return reps;
}

}  // namespace tangleh
