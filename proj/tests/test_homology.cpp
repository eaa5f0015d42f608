#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tangleh/complex.hpp"
#include "tangleh/error.hpp"
#include "tangleh/field.hpp"
#include "tangleh/moves.hpp"
#include "tangleh/pd.hpp"
#include "tangleh/render.hpp"

using namespace tangleh;

namespace {

const char* kTri = R"([["2","5","3","6"],["4","|1","5","2"],["6","3","7|","4"]])";
const char* kTwist2 = R"({"pd":[["|1","3","2","2"],["3","5|","4","4"]],"signs":"--"})";
const char* kOneCross = R"([["|1","|2","3|","4|"]])";

Table table_of(const char* code, Pairing p = Pairing::ad) {
  QField Q;
  return homology_table(parse_pd_code(code), Q, p);
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("three positive crossings, one open strand") {
    Table t = table_of(kTri);
    CHECK(t == Table{{{0, 1}, 1}, {{2, 5}, 1}, {{3, 7}, 1}});
    CHECK(graded_euler_characteristic(parse_pd_code(kTri), Pairing::ad).str() ==
          "q + q^5 - q^7");
  }

  TEST_CASE("double negative twist on a strand") {
    Tangle d = parse_pd_code(kTwist2);
    IComplex C = build_complex(d, Pairing::ad);
    CHECK(C.nmi == 2);
    // chain group dimensions 1, 4, 4 at cube degrees 0, 1, 2
    CHECK(C.gens[0].size() == 1);
    CHECK(C.gens[1].size() == 4);
    CHECK(C.gens[2].size() == 4);
    // lowest differential: generator at state 00 hits exactly the two circle
    // generators carrying v_-, with coefficient +1
    REQUIRE(C.D[0].size() == 1);
    IRow d0 = C.D[0][0];
    std::vector<int> dense(4, 0);
    for (auto [col, c] : d0) dense[col] = c;
    CHECK(dense == std::vector<int>{0, 1, 0, 1});

    QField Q;
    auto H = compute_homology(C, Q, true);
    CHECK(H.table == Table{{{0, -1}, 1}});
    REQUIRE(H.reps.count({0, -1}) == 1);
    CHECK(H.reps.at({0, -1}).size() == 1);
  }

  TEST_CASE("single crossing, both signs") {
    Tangle d = parse_pd_code(kOneCross);
    QField Q;
    CHECK(homology_table(d, Q, Pairing::ad) == Table{{{0, -1}, 1}, {{1, 0}, 1}});
    d.signs = "-";
    CHECK(homology_table(d, Q, Pairing::ad) == Table{{{-1, -4}, 1}, {{0, -3}, 1}});
    CHECK(graded_euler_characteristic(d, Pairing::ad).str() == "-q^-4 + q^-3");
  }

  TEST_CASE("crossing-free diagrams concentrate in height zero") {
    for (int r = 0; r <= 3; ++r) {
      for (int a = 0; a <= 2; ++a) {
        Tangle d;
        d.free_circles = r;
        d.free_arcs = a;
        QField Q;
        Table t = homology_table(d, Q, Pairing::ad);
        int total = 0;
        Laurent expect;
        expect.add(-a, 1);
        Laurent qq;
        qq.add(1, 1);
        qq.add(-1, 1);
        for (int i = 0; i < r; ++i) expect = expect * qq;
        for (auto& [kq, dim] : t) {
          CHECK(kq.first == 0);
          total += dim;
        }
        CHECK(total == (1 << r));
        CHECK(table_euler(t) == expect);
        CHECK(graded_euler_characteristic(d, Pairing::ad) == expect);
      }
    }
    QField Q;
    Tangle d = parse_pd_code(R"({"pd":[],"signs":"","free":{"circles":1,"arcs":2}})");
    CHECK(homology_table(d, Q, Pairing::ad) == Table{{{0, -3}, 1}, {{0, -1}, 1}});
  }

  TEST_CASE("both quantum degree formulas agree on every generator") {
    Tangle d = parse_pd_code(kTri);
    IComplex C = build_complex(d, Pairing::ad);
    for (int ell = 0; ell <= C.n; ++ell) {
      for (const auto& g : C.gens[ell]) {
        Resolved r = resolve(C.cd, g.state, C.pairing);
        int theta = gen_theta(C.total_circles(r), C.total_arcs(r), g.minus_mask);
        CHECK(g.q == C.height(ell) + C.npl - C.nmi + theta);
        CHECK(g.q == ell + C.n - 3 * C.nmi + theta);
      }
    }
  }

  TEST_CASE("graded euler characteristic matches the homology table") {
    std::mt19937_64 rng(23);
    QField Q;
    for (int trial = 0; trial < 12; ++trial) {
      uint64_t seed = rng();
      int n = 1 + int(rng() % 5);
      int arcs = int(rng() % 3);
      Tangle d = random_tangle(seed, n, arcs);
      Table t = homology_table(d, Q, Pairing::ad);
      CHECK(table_euler(t) == graded_euler_characteristic(d, Pairing::ad));
    }
  }

  TEST_CASE("field choice can matter but tables agree here") {
    QField Q;
    PField F2(2), F3(3);
    Tangle d = parse_pd_code(kTri);
    Table tq = homology_table(d, Q, Pairing::ad);
    CHECK(homology_table(d, F2, Pairing::ad) == tq);
    CHECK(homology_table(d, F3, Pairing::ad) == tq);
  }

  TEST_CASE("sign type changes shift the table") {
    QField Q;
    Tangle d = parse_pd_code(kTri);
    auto rep = verify_sign_type_shift(d, "+++", "--+", Q, Pairing::ad);
    CHECK(rep.dk == -2);
    CHECK(rep.dq == -6);
    auto rep2 = verify_sign_type_shift(d, "-+-", "-+-", Q, Pairing::ad);
    CHECK(rep2.dk == 0);
    // a wrong sign string is rejected before any computation
    CHECK_THROWS_AS(verify_sign_type_shift(d, "++", "+++", Q, Pairing::ad), TangleError);
  }

  TEST_CASE("disjoint union convolves the tables") {
    QField Q;
    Tangle a = parse_pd_code(kTri);
    Tangle b = parse_pd_code(kOneCross);
    verify_disjoint_union(a, b, Q, Pairing::ad);

    Tangle u = disjoint_union(a, b);
    CHECK(u.n() == 4);
    CHECK(u.signs == "++++");
    Table tu = homology_table(u, Q, Pairing::ad);
    CHECK(tu == convolve_tables(homology_table(a, Q, Pairing::ad),
                                homology_table(b, Q, Pairing::ad)));
  }

  TEST_CASE("convolution arithmetic") {
    Table a{{{0, 1}, 1}, {{1, 3}, 2}};
    Table b{{{0, -1}, 1}, {{2, 5}, 1}};
    Table got = convolve_tables(a, b);
    CHECK(got == Table{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 6}, 1}, {{3, 8}, 2}});
    CHECK(convolve_tables(a, Table{}) == Table{});
    CHECK(table_euler(got) == table_euler(a) * table_euler(b));
  }

  TEST_CASE("normalization shift moves the minimum quantum degree to zero") {
    CHECK(min_zero_shift(Table{{{0, -3}, 1}, {{1, 2}, 1}}) == 3);
    CHECK(min_zero_shift(Table{{{0, 4}, 1}}) == -4);
    CHECK(min_zero_shift(Table{}) == 0);
  }

  TEST_CASE("defaulted and explicit all-plus signs give the same complex") {
    QField Q;
    Tangle bare = parse_pd_code(kTri);
    Tangle expl = bare;
    expl.signs = "+++";
    expl.signs_defaulted = false;
    CHECK(homology_table(bare, Q, Pairing::ad) == homology_table(expl, Q, Pairing::ad));
  }
}
