#include <string>
#include <vector>

#include "doctest.h"

#include "helpers.hpp"
#include "trx/bijection.hpp"
#include "trx/drawing.hpp"

using namespace trx;

namespace {

void check_one(const Triangulation& t, const TransversalStructure& s, bool minimal) {
  GridDrawing ref = transversal_draw(t, s);
  GridDrawing fast = fast_coordinates(t, s);
  CHECK(ref.xy == fast.xy);
  CHECK(ref.width == fast.width);
  CHECK(ref.height == fast.height);

  CHECK(ref.width + ref.height == t.map.nv - 1);
  CHECK(ref.width == red_map(t, s).map.face_count() - 1);
  CHECK(ref.height == blue_map(t, s).map.face_count() - 1);

  // corner placement
  CHECK(ref.xy[t.S()] == std::array<int, 2>{0, 0});
  CHECK(ref.xy[t.W()] == std::array<int, 2>{0, ref.height});
  CHECK(ref.xy[t.N()] == std::array<int, 2>{ref.width, ref.height});
  CHECK(ref.xy[t.E()] == std::array<int, 2>{ref.width, 0});

  CHECK(verify_drawing(t, s, ref).ok);
  CHECK(verify_drawing_brute(t, ref).ok);

  GridDrawing small = compact(ref);
  CHECK(verify_drawing(t, s, small).ok);
  CHECK(verify_drawing_brute(t, small).ok);
  if (minimal) {
    CHECK(small.width == ref.width - ccw_internal_edges(t, phi(s), true));
    CHECK(small.height == ref.height - ccw_internal_edges(t, phi(s), false));
  }
}

} // namespace

TEST_SUITE("drawing") {

TEST_CASE("single inner vertex lands mid grid") {
  ClosureResult c = closure(bicolor(tree_from_word("NLLL"), true));
  TransversalStructure s = orient_partition(c.t, c.red);
  GridDrawing d = fast_coordinates(c.t, s);
  CHECK(d.width == 2);
  CHECK(d.height == 2);
  CHECK(d.xy[0] == std::array<int, 2>{1, 1}); // the single inner vertex
  check_one(c.t, s, true);
}

TEST_CASE("reference and fast coordinates agree everywhere") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& inst : testutil::all_triangulations(n))
      check_one(inst.t, orient_partition(inst.t, inst.red), true);
  Rng rng(61);
  for (int n : {50, 200}) {
    auto inst = testutil::random_instance(n, rng);
    check_one(inst.t, orient_partition(inst.t, inst.red), true);
  }
}

TEST_CASE("non-minimal structures draw correctly too") {
  Rng rng(71);
  for (int rep = 0; rep < 5; ++rep) {
    auto inst = testutil::random_instance(40, rng);
    EdgePartition red = inst.red;
    for (int step = 0; step < 6; ++step) {
      auto cyc = alternating_four_cycles(inst.t, red);
      std::vector<const AltFourCycle*> lefts;
      for (const auto& c : cyc)
        if (!c.right && !c.interior_edges.empty()) lefts.push_back(&c);
      if (lefts.empty()) break;
      red = flop(inst.t, red, *lefts[rng.below(lefts.size())]);
    }
    if (red == inst.red) continue;
    check_one(inst.t, orient_partition(inst.t, red), false);
  }
}

TEST_CASE("text round trip and parse errors") {
  Rng rng(81);
  auto inst = testutil::random_instance(25, rng);
  GridDrawing d = fast_coordinates(inst.t, orient_partition(inst.t, inst.red));
  GridDrawing back = parse_drawing(write_drawing(d));
  CHECK(back.xy == d.xy);
  CHECK(back.width == d.width);
  CHECK(back.height == d.height);

  CHECK_THROWS_AS(parse_drawing(""), Error);
  CHECK_THROWS_AS(parse_drawing("mesh 3 3\n0 1 1\n"), Error);
  CHECK_THROWS_AS(parse_drawing("grid 3\n"), Error);
  CHECK_THROWS_AS(parse_drawing("grid 3 3\n1 0 0\n"), Error);     // ids not in order
  CHECK_THROWS_AS(parse_drawing("grid 3 3\n0 1 1\nword\n"), Error);
}

TEST_CASE("verification catches broken drawings") {
  ClosureResult c = closure(bicolor(tree_from_word("NLLL"), true));
  TransversalStructure s = orient_partition(c.t, c.red);
  GridDrawing d = fast_coordinates(c.t, s);

  GridDrawing off = d;
  off.xy[0] = {3, 1}; // outside the 2 x 2 grid
  CHECK_FALSE(verify_drawing(c.t, s, off).ok);

  GridDrawing dup = d;
  dup.xy[0] = {0, 0}; // on top of S: degenerate faces, overlapping edges
  DrawingReport rep = verify_drawing(c.t, s, dup);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.reason.empty());
  CHECK_FALSE(verify_drawing_brute(c.t, dup).ok);

  GridDrawing wrong = d;
  wrong.xy[0] = {1, 2}; // on the top edge: outer face no longer simple
  bool still_ok = verify_drawing(c.t, s, wrong).ok && verify_drawing_brute(c.t, wrong).ok;
  CHECK_FALSE(still_ok);
}

TEST_CASE("svg output contains every vertex and edge") {
  Rng rng(91);
  auto inst = testutil::random_instance(12, rng);
  TransversalStructure s = orient_partition(inst.t, inst.red);
  GridDrawing d = fast_coordinates(inst.t, s);
  std::string svg = emit_svg(inst.t, s, d, 30, true);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  size_t circles = 0, lines = 0;
  for (size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1))
    ++circles;
  for (size_t p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1))
    ++lines;
  CHECK(circles == (size_t)inst.t.map.nv);
  CHECK(lines >= (size_t)inst.t.map.edge_count());
}

} // TEST_SUITE
