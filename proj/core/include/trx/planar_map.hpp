#pragma once
#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "trx/errors.hpp"

namespace trx {

// Combinatorial planar map as a rotation system on darts (half-edges).
//
// Conventions used throughout the project:
//  * next(d) is the successor of dart d in counterclockwise order around its
//    origin vertex.
//  * face traversal follows phi(d) = prev(twin(d)), so the face lying to the
//    LEFT of d is traced; inner faces come out as ccw vertex cycles and the
//    outer face cycle reads its vertices in clockwise order.  The angular
//    sector at the origin of d between d and next(d) belongs to that face.
struct PlanarMap {
  int nv = 0;
  std::vector<int> vert; // dart -> origin vertex
  std::vector<int> nxt;  // dart -> ccw successor around origin
  std::vector<int> prv;  // dart -> ccw predecessor
  std::vector<int> twn;  // dart -> opposite dart

  // filled by finalize()
  std::vector<int> vert_dart; // vertex -> one incident dart (-1 if isolated)
  std::vector<int> edge_of;   // dart -> edge index
  std::vector<int> edge_dart; // edge -> representative dart (its twin is the other side)
  std::vector<int> face_of;   // dart -> face index
  std::vector<int> face_dart; // face -> representative dart
  int outer_face = -1;

  int dart_count() const { return (int)vert.size(); }
  int edge_count() const { return (int)edge_dart.size(); }
  int face_count() const { return (int)face_dart.size(); }

  int head(int dart) const { return vert[twn[dart]]; } // vertex the dart points to
  int phi(int dart) const { return prv[twn[dart]]; }   // next dart of the face left of `dart`
  int phi_inv(int dart) const { return twn[nxt[dart]]; }

  int degree(int v) const;
  std::vector<int> darts_at(int v) const;     // ccw order starting at vert_dart[v]
  std::vector<int> face_darts(int f) const;   // phi order
  std::vector<int> face_vertices(int f) const;
  int face_size(int f) const;

  // locate the dart at u pointing to v, -1 if absent (scans u's rotation)
  int dart_between(int u, int v) const;

  // recompute edge and face indexing from (vert, nxt, twn)
  void finalize();

  // sanity of the permutation structure itself; throws on corruption
  void check_consistency() const;
};

// Build a map from ccw neighbor lists. rot[v] lists the neighbors of v in ccw
// order. Requirements: no loops, no repeated neighbor within one list, u lists
// v exactly when v lists u. Throws bad_format, disconnected or
// non_planar_rotation (Euler check against the rotation system's face count).
PlanarMap build_map(const std::vector<std::vector<int>>& rot);

// As above, and also locates the face whose vertex cycle reads `outer_hint`
// (cyclically, in the stored clockwise sense) and records it as the outer
// face. Throws bad_outer_hint if absent.
PlanarMap build_map(const std::vector<std::vector<int>>& rot,
                    const std::vector<int>& outer_hint);

// ---- file format ----
// Line 1: "planarmap <vertex_count>", then one line per vertex
// "<v>: <a> <b> ..." (ccw neighbors), then "outer: <W> <N> <E> <S>" (the outer
// quadrangle, clockwise). Lines starting with '#' are ignored.
struct MapFile {
  std::vector<std::vector<int>> rot;
  std::array<int, 4> outer; // W N E S
  // optional structure section: one entry per inner edge "u v color head"
  struct EdgeLine {
    int u, v;
    bool red;
    int head;
  };
  std::vector<EdgeLine> edges;
};

MapFile parse_map_file(std::istream& in);
MapFile parse_map_file(const std::string& path);
void write_map_lines(std::ostream& out, const PlanarMap& m, const std::array<int, 4>& outer);

} // namespace trx
