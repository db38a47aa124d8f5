#include <algorithm>
#include <sstream>

#include "doctest.h"

#include "helpers.hpp"
#include "trx/planar_map.hpp"
#include "trx/triangulation.hpp"

using namespace trx;

TEST_SUITE("planar_map") {

TEST_CASE("triangle map basics") {
  PlanarMap m = build_map({{1, 2}, {2, 0}, {0, 1}});
  CHECK(m.nv == 3);
  CHECK(m.dart_count() == 6);
  CHECK(m.edge_count() == 3);
  CHECK(m.face_count() == 2);
  m.check_consistency();
  for (int v = 0; v < 3; ++v) CHECK(m.degree(v) == 2);
  CHECK(m.dart_between(0, 1) >= 0);
  CHECK(m.dart_between(0, 0) == -1);
  int d = m.dart_between(0, 1);
  CHECK(m.head(d) == 1);
  CHECK(m.vert[m.twn[d]] == 1);
}

TEST_CASE("left-face convention on the wheel") {
  Triangulation t = testutil::wheel();
  const PlanarMap& m = t.map;
  // outer face cycle reads W,N,E,S in clockwise storage order
  std::vector<int> cyc = m.face_vertices(m.outer_face);
  auto it = std::find(cyc.begin(), cyc.end(), t.W());
  REQUIRE(it != cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  CHECK(cyc == std::vector<int>{t.W(), t.N(), t.E(), t.S()});
  // every inner face is a ccw triangle containing the center
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face) continue;
    CHECK(m.face_size(f) == 3);
    std::vector<int> fv = m.face_vertices(f);
    CHECK(std::count(fv.begin(), fv.end(), 0) == 1);
  }
  // the sector between d and nxt(d) belongs to the face left of d
  for (int d = 0; d < m.dart_count(); ++d) CHECK(m.face_of[d] == m.face_of[m.phi(d)]);
}

TEST_CASE("build_map rejects broken input") {
  CHECK_THROWS_AS(build_map({{0, 1}, {0}}), Error);                 // loop
  CHECK_THROWS_AS(build_map({{1, 1}, {0, 0}}), Error);              // repeated neighbor
  CHECK_THROWS_AS(build_map({{1}, {0, 2}, {}}), Error);             // asymmetric adjacency
  CHECK_THROWS_AS(build_map({{1}, {0}, {3}, {2}}), Error);          // disconnected
  try {
    build_map({{1}, {0}, {3}, {2}});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == errc::disconnected);
  }
  // K5-style rotation cannot be planar
  CHECK_THROWS_AS(build_map({{1, 2, 3, 4},
                             {2, 3, 4, 0},
                             {3, 4, 0, 1},
                             {4, 0, 1, 2},
                             {0, 1, 2, 3}}),
                  Error);
}

TEST_CASE("outer hint lookup") {
  CHECK_THROWS_AS(build_map({{1, 2}, {2, 0}, {0, 1}}, std::vector<int>{0, 1}), Error);
  PlanarMap m = build_map({{1, 2}, {2, 0}, {0, 1}}, std::vector<int>{0, 1, 2});
  CHECK(m.outer_face >= 0);
}

TEST_CASE("map file round trip") {
  Rng rng(11);
  auto res = testutil::random_instance(20, rng);
  std::ostringstream out;
  write_map_lines(out, res.t.map, res.t.outer);
  std::istringstream in(out.str());
  MapFile mf = parse_map_file(in);
  Triangulation t2 = make_triangulation(mf);
  CHECK(map_signature(t2) == map_signature(res.t));
  CHECK(t2.outer == res.t.outer);
}

TEST_CASE("map file parse errors") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_map_file(in);
      return false;
    } catch (const Error& e) {
      return e.code() == errc::bad_format;
    }
  };
  CHECK(bad(""));
  CHECK(bad("notamap 3\n"));
  CHECK(bad("planarmap x\n"));
  CHECK(bad("planarmap 2\n0: 1\nouter: 0 1 0 1\n"));            // vertex 1 missing
  CHECK(bad("planarmap 2\n0: 1\n0: 1\n1: 0\nouter: 0 1 0 1\n")); // listed twice
  CHECK(bad("planarmap 2\n0: 1\n1: 0\n"));                      // no outer line
  CHECK(bad("planarmap 2\n0: 1\n1: 0\nouter: 0 1\n"));          // short outer line
  CHECK(bad("planarmap 1\n0:\nouter: 0 0 0 0\n0 0 green 0\n")); // bad color
  CHECK(bad("planarmap 1\n0:\nouter: 0 0 0 0\n0 0 red\n"));     // short structure line
  // comments are fine anywhere
  std::istringstream ok("# hi\nplanarmap 2\n# rows\n0: 1\n1: 0\nouter: 0 1 0 1\n");
  CHECK(parse_map_file(ok).rot.size() == 2);
}

TEST_CASE("triangulation validation errors") {
  // inner face of size 4: the empty quadrangle
  CHECK_THROWS_AS(make_triangulation({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1, 2, 3}), Error);
  // outer face of size 3
  CHECK_THROWS_AS(make_triangulation({{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2, 2}), Error);
  // wrong role order on the outer cycle (ccw instead of cw)
  try {
    make_triangulation({{3, 2, 1, 4}, {4, 0, 2}, {1, 0, 3}, {2, 0, 4}, {3, 0, 1}}, {1, 4, 3, 2});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_label_order);
  }
}

TEST_CASE("separating triangle detection") {
  // K4 inside the quadrangle: the triangle 1,2,3 encloses vertex 0
  std::vector<std::vector<int>> rot = {
      {2, 1, 3},             // center
      {4, 3, 0, 2, 5},       // upper left inner
      {6, 5, 1, 0, 3, 7},    // right inner
      {2, 0, 1, 4, 7},       // lower inner
      {7, 3, 1, 5},          // W
      {4, 1, 2, 6},          // N
      {5, 2, 7},             // E
      {6, 2, 3, 4},          // S
  };
  PlanarMap m = build_map(rot);
  CHECK(has_separating_triangle(m));
  try {
    make_triangulation(rot, {4, 5, 6, 7});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == errc::separating_triangle);
  }
  // the wheel has none
  CHECK_FALSE(has_separating_triangle(testutil::wheel().map));
}

} // TEST_SUITE
