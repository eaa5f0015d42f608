#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "tangleh/complex.hpp"
#include "tangleh/error.hpp"
#include "tangleh/field.hpp"
#include "tangleh/sparse.hpp"

using namespace tangleh;

namespace {

template <class F>
SparseRow<F> row_from(const F& K, const std::vector<long>& dense) {
  SparseRow<F> r;
  for (size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.emplace_back(static_cast<int>(i), K.from_int(dense[i]));
  return r;
}

template <class F>
SparseMatrix<F> matrix_from(const F& K, const std::vector<std::vector<long>>& dense, int cols) {
  SparseMatrix<F> M(static_cast<int>(dense.size()), cols);
  for (size_t i = 0; i < dense.size(); ++i) M.row[i] = row_from(K, dense[i]);
  return M;
}

// x*M as a dense vector, for independent verification of kernel claims.
template <class F>
std::vector<typename F::Elem> apply(const F& K, const SparseRow<F>& x, const SparseMatrix<F>& M) {
  std::vector<typename F::Elem> out(M.cols, F::zero());
  for (const auto& [r, c] : x)
    for (const auto& [col, v] : M.row[r]) out[col] = K.add(out[col], K.mul(c, v));
  return out;
}

template <class F>
bool all_zero(const F& K, const std::vector<typename F::Elem>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& e) { return K.is_zero(e); });
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank of a fixed integer matrix over several fields") {
    std::vector<std::vector<long>> rows = {
        {0, 1, 0, 0}, {0, 0, 0, 1}, {0, -1, -1, 0}, {0, 0, 0, -1}};
    QField Q;
    CHECK(rank(Q, matrix_from(Q, rows, 4)) == 3);
    PField F2(2);
    CHECK(rank(F2, matrix_from(F2, rows, 4)) == 3);
    PField F7(7);
    CHECK(rank(F7, matrix_from(F7, rows, 4)) == 3);
  }

  TEST_CASE("rref pivots leftmost column, lowest row, and fully reduces") {
    QField Q;
    std::vector<SparseRow<QField>> m = {
        row_from(Q, {2, 4, 0}), row_from(Q, {1, 2, 1}), row_from(Q, {0, 0, 3})};
    auto pivots = rref(Q, m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == std::pair<int, int>{0, 0});  // column 0 via row 0, not row 1
    CHECK(pivots[1] == std::pair<int, int>{2, 1});
    // reduced form: pivot entries 1, eliminated everywhere else
    CHECK(m[0] == row_from(Q, {1, 2, 0}));
    CHECK(m[1] == row_from(Q, {0, 0, 1}));
    CHECK(m[2].empty());
  }

  TEST_CASE("echelon form is canonical under row permutation") {
    QField Q;
    std::vector<std::vector<long>> rows = {{1, 2, 0, 3}, {0, 1, 1, 0}, {1, 3, 1, 3}, {2, 4, 0, 7}};
    std::vector<SparseRow<QField>> a, b;
    for (const auto& r : rows) a.push_back(row_from(Q, r));
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) b.push_back(row_from(Q, *it));
    CHECK(echelon_rows(Q, a) == echelon_rows(Q, b));
  }

  TEST_CASE("kernel basis spans exactly the left null space") {
    QField Q;
    // rows 0 and 1 sum to row 2, rows 3 = 2*row 0
    SparseMatrix<QField> M = matrix_from(
        Q, {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {2, 0, 2}}, 3);
    auto ker = kernel_basis(Q, M);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(all_zero(Q, apply(Q, v, M)));
    // x = e0 + e1 - e2 must reduce to nothing against the kernel basis
    auto probe = reduce_against(Q, row_from(Q, {1, 1, -1, 0}), ker);
    CHECK(probe.empty());
    // a non-kernel vector must not
    CHECK(!reduce_against(Q, row_from(Q, {1, 0, 0, 0}), ker).empty());
  }

  TEST_CASE("kernel of a zero and of an injective map") {
    QField Q;
    SparseMatrix<QField> Z(3, 2);  // all-zero rows
    auto kz = kernel_basis(Q, Z);
    CHECK(kz.size() == 3);
    SparseMatrix<QField> I = matrix_from(Q, {{1, 0}, {0, 1}}, 2);
    CHECK(kernel_basis(Q, I).empty());
  }

  TEST_CASE("rank plus nullity covers the rows on random matrices") {
    std::mt19937_64 rng(7);
    QField Q;
    PField F2(2);
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + int(rng() % 8), c = 1 + int(rng() % 8);
      std::vector<std::vector<long>> rows(r, std::vector<long>(c, 0));
      for (auto& row : rows)
        for (auto& v : row) v = long(rng() % 3) - 1;
      auto Mq = matrix_from(Q, rows, c);
      CHECK(rank(Q, Mq) + int(kernel_basis(Q, Mq).size()) == r);
      auto M2 = matrix_from(F2, rows, c);
      CHECK(rank(F2, M2) + int(kernel_basis(F2, M2).size()) == r);
      // characteristic 0 rank never exceeds the mod-p one... the reverse:
      // GF(p) rank can only drop, never rise
      CHECK(rank(F2, M2) <= rank(Q, Mq));
      PField Fbig(65521);
      CHECK(rank(Fbig, matrix_from(Fbig, rows, c)) == rank(Q, Mq));
    }
  }

  TEST_CASE("quotient representatives") {
    QField Q;
    // kernel = span{e0, e1, e2}, image = span{e0 + e1}
    std::vector<SparseRow<QField>> kernel = {
        row_from(Q, {1, 0, 0}), row_from(Q, {0, 1, 0}), row_from(Q, {0, 0, 1})};
    std::vector<SparseRow<QField>> image = {row_from(Q, {1, 1, 0})};
    auto reps = quotient_representatives(Q, kernel, image);
    CHECK(reps.size() == 2);
    for (const auto& v : reps) CHECK(reduce_against(Q, v, echelon_rows(Q, kernel)).empty());

    std::vector<SparseRow<QField>> bad_image = {row_from(Q, {0, 0, 0, 1})};
    CHECK_THROWS_AS(quotient_representatives(Q, kernel, bad_image), TangleError);
    try {
      quotient_representatives(Q, kernel, bad_image);
    } catch (const TangleError& e) {
      CHECK(e.code() == Err::ImageNotInKernel);
    }
  }

  TEST_CASE("dense bit elimination matches sparse rank over GF(2)") {
    std::mt19937_64 rng(11);
    PField F2(2);
    for (int trial = 0; trial < 25; ++trial) {
      int r = 1 + int(rng() % 10);
      int c = 1 + int(rng() % 10);
      std::vector<IRow> drows(r);
      std::vector<std::vector<long>> dense(r, std::vector<long>(c, 0));
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
          int v = int(rng() % 3) - 1;
          if (v != 0) {
            drows[i].emplace_back(j, v);
            dense[i][j] = v;
          }
        }
      }
      std::vector<int> rows_idx(r);
      for (int i = 0; i < r; ++i) rows_idx[i] = i;
      std::vector<int> local_of(c);
      for (int j = 0; j < c; ++j) local_of[j] = j;
      int got = detail::rank_dense_gf2(rows_idx, drows, local_of, c);
      CHECK(got == rank(F2, matrix_from(F2, dense, c)));
    }
  }

  TEST_CASE("parallel runner covers every task and propagates failures") {
    std::vector<int> hits(64, 0);
    detail::run_parallel(64, 4, [&](int i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    detail::run_parallel(8, 1, [&](int i) { hits[i]++; });  // serial path
    CHECK(hits[7] == 2);
    CHECK_THROWS_AS(detail::run_parallel(16, 4,
                                         [&](int i) {
                                           if (i == 9) fail(Err::InternalInconsistency, "boom");
                                         }),
                    TangleError);
  }
}
