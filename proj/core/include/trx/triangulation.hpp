#pragma once

#include <array>
#include <vector>

#include "trx/planar_map.hpp"

namespace trx {

// Irreducible triangulation of the 4-gon: a planar map whose outer face is a
// quadrangle W,N,E,S (clockwise along the outer cycle), whose inner faces are
// all triangles, and which has no separating 3-cycle (every 3-cycle bounds a
// face).  Outer vertex roles are fixed by index into `outer`.
struct Triangulation {
  PlanarMap map;
  std::array<int, 4> outer; // W, N, E, S
  int n_inner = 0;

  int W() const { return outer[0]; }
  int N() const { return outer[1]; }
  int E() const { return outer[2]; }
  int S() const { return outer[3]; }
  bool is_outer_vertex(int v) const {
    return v == outer[0] || v == outer[1] || v == outer[2] || v == outer[3];
  }
  bool is_outer_edge(int d) const {
    return map.face_of[d] == map.outer_face || map.face_of[map.twn[d]] == map.outer_face;
  }
};

// Builds and fully validates a triangulation from a rotation system plus the
// outer cycle (W N E S read clockwise).  Throws not_quad_outer,
// bad_label_order, non_triangular_inner_face, or separating_triangle.
Triangulation make_triangulation(const std::vector<std::vector<int>>& rot,
                                 const std::array<int, 4>& outer);
Triangulation make_triangulation(const MapFile& mf);

// Validation pieces, usable separately.
void check_quad_outer(const PlanarMap& m, const std::array<int, 4>& outer);
void check_inner_triangles(const PlanarMap& m);
// True iff some 3-cycle of the map is not the boundary of a face.
bool has_separating_triangle(const PlanarMap& m);

// Angular map of a triangulation: black vertices are the vertices of T, white
// vertices are the inner faces of T, and there is one edge per inner angle
// (angle at the origin of dart d, between d and its ccw successor, lying in
// the face left of d).  The rotation at a black vertex lists its angles in
// ccw order; at a white vertex it follows the face cycle.
struct AngularMap {
  PlanarMap map;          // black ids = T vertex ids, white ids = nv + inner face rank
  int n_black = 0;        // == T.map.nv
  std::vector<int> white_of_face;  // T face id -> white vertex id (-1 for outer)
  std::vector<int> face_of_white;  // white rank -> T face id
  std::vector<int> qedge_of_tdart; // T dart -> angular edge of the angle (d, nxt d)
  std::vector<int> qdart_of_tdart; // same angle, as the dart out of the black endpoint

  bool is_black(int v) const { return v < n_black; }
};

AngularMap make_angular_map(const Triangulation& t);

// Target out-degrees for orientations of the angular map: inner black
// vertices 4, white vertices 1, N and S get 2, W and E get 0.
std::vector<int> alpha0_degrees(const Triangulation& t, const AngularMap& q);

// An orientation of the angular map with the out-degrees above, encoded per
// angular edge (true = the edge is oriented out of its black endpoint).
using Alpha0Orientation = std::vector<bool>;

// Out-degree of every angular vertex under o; index by q.map vertex id.
std::vector<int> alpha0_outdegrees(const AngularMap& q, const Alpha0Orientation& o);

// Some orientation of the angular map with the alpha0 out-degrees, found by
// max-flow; throws no_orientation if none exists (cannot happen for a valid
// irreducible triangulation).
Alpha0Orientation find_alpha0(const Triangulation& t, const AngularMap& q);

} // namespace trx
