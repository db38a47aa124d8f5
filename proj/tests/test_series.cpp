#include <map>
#include <set>
#include <vector>

#include "doctest.h"

#include "helpers.hpp"
#include "trx/bijection.hpp"
#include "trx/series.hpp"
#include "trx/ternary_tree.hpp"

using namespace trx;

TEST_SUITE("series") {

TEST_CASE("tree series matches the exact count") {
  Series a = series_A(12);
  CHECK(a.c[0] == 0);
  for (int n = 1; n <= 12; ++n) {
    CHECK(a.c[n].get_den() == 1);
    CHECK(a.c[n].get_num() == count_ternary(n));
  }
}

TEST_CASE("4-connected series coefficients") {
  Series c = series_C(13);
  CHECK(c.c[0] == 0);
  const long want[] = {1, 0, 1, 3, 12, 52, 241};
  for (int k = 1; k <= 7; ++k) CHECK(c.c[k] == want[k - 1]);
  // alternating-sum formula, independently of the algebraic route
  for (long n = 2; n <= 13; ++n) {
    CHECK(c.c[n - 1].get_den() == 1);
    CHECK(tutte_4connected(n) == c.c[n - 1].get_num());
  }
}

TEST_CASE("rooted counts") {
  const long small[] = {1, 2, 6, 22, 91};
  for (long n = 1; n <= 5; ++n) {
    CHECK(rooted_irreducible_count(n) == small[n - 1]);
    // signature classes of the generator output count the same objects
    CHECK((long)testutil::all_triangulations((int)n).size() == small[n - 1]);
  }
  for (long n = 1; n <= 50; ++n) {
    mpq_class q(4 * count_ternary(n), 2 * n + 2);
    q.canonicalize();
    CHECK(q.get_den() == 1);
    CHECK(rooted_irreducible_count(n) == q.get_num());
  }
}

TEST_CASE("unrooted counts quotient the quarter turn") {
  // oracle: orbits of signature classes under rotating the outer roles
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    long orbits = 0;
    for (const auto& inst : testutil::all_triangulations(n)) {
      if (seen.count(map_signature(inst.t))) continue;
      ++orbits;
      Triangulation r = inst.t;
      for (int k = 0; k < 4; ++k) {
        seen.insert(map_signature(r));
        const PlanarMap& m = r.map;
        std::vector<std::vector<int>> rot(m.nv);
        for (int v = 0; v < m.nv; ++v)
          for (int d : m.darts_at(v)) rot[v].push_back(m.head(d));
        r = make_triangulation(rot, {r.outer[1], r.outer[2], r.outer[3], r.outer[0]});
      }
    }
    CHECK(unrooted_irreducible_count(n) == orbits);
  }
  // four rotations per orbit, minus a vanishing share of symmetric objects
  mpz_class r20 = rooted_irreducible_count(20), u20 = unrooted_irreducible_count(20);
  CHECK(4 * u20 >= r20);
  CHECK(1000 * (4 * u20 - r20) < r20);
}

TEST_CASE("red edge distribution against direct enumeration") {
  BivariateSeries red = bivariate_red_edges(6);
  BivariateSeries internal = bivariate_internal_red(6);
  for (int n = 1; n <= 6; ++n) {
    std::map<int, long> red_hist, int_hist;
    for (const TernaryTree& t : enumerate_trees(n))
      for (bool root_red : {true, false}) {
        BicoloredTree b = bicolor(t, root_red);
        red_hist[count_red_edges(b)]++;
        int_hist[count_internal_red_edges(b)]++;
      }
    mpz_class total = 0;
    for (size_t k = 0; k < red.zu[n].size(); ++k) {
      long want = red_hist.count((int)k) ? red_hist[(int)k] : 0;
      CHECK(red.zu[n][k] == want);
      total += red.zu[n][k];
    }
    CHECK(total == 2 * count_ternary(n));
    for (size_t k = 0; k < internal.zu[n].size(); ++k) {
      long want = int_hist.count((int)k) ? int_hist[(int)k] : 0;
      CHECK(internal.zu[n][k] == want);
    }
  }
}

TEST_CASE("exact means and the symmetry behind them") {
  std::vector<mpq_class> mr = mean_red_edges(220);
  std::vector<mpq_class> mi = mean_internal_red(220);
  // color symmetry pins the red edge mean at (3n+1)/2 exactly
  for (int n = 1; n <= 220; ++n) {
    mpq_class want(3 * n + 1, 2);
    want.canonicalize();
    CHECK(mr[n] == want);
  }
  // the internal red mean divided by n approaches 5/54 from below
  mpq_class limit(5, 54);
  for (int n : {50, 100, 200}) {
    mpq_class ratio = mi[n] / n;
    CHECK(ratio < limit);
    CHECK(ratio > limit * mpq_class(9, 10));
  }
  CHECK(mi[50] / 50 < mi[100] / 100);
  CHECK(mi[100] / 100 < mi[200] / 200);
  // cross-check the jet computation against the bivariate table
  BivariateSeries internal = bivariate_internal_red(6);
  for (int n = 1; n <= 6; ++n) {
    mpz_class wsum = 0, total = 0;
    for (size_t k = 0; k < internal.zu[n].size(); ++k) {
      wsum += (long)k * internal.zu[n][k];
      total += internal.zu[n][k];
    }
    mpq_class want(wsum, total);
    want.canonicalize();
    CHECK(mi[n] == want);
  }
}

} // TEST_SUITE
