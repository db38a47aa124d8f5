#pragma once

#include <array>
#include <string>
#include <vector>

#include "trx/transversal.hpp"

namespace trx {

struct GridDrawing {
  std::vector<std::array<int, 2>> xy; // per vertex: x, y
  int width = 0, height = 0;          // grid is [0,width] x [0,height]
};

// Separating path of v in a directed red or blue submap: the rightmost
// ingoing path from the source up to v followed by the leftmost outgoing
// path from v to the sink.  Returned as the vertex sequence source..sink;
// for v = source or sink the corresponding half is empty.
std::vector<int> separating_path(const DirectedSubmap& m, int v);

// Face-counting drawing: the abscissa of a vertex is the number of inner
// faces of the red map on the left of its separating red path, the ordinate
// the number of inner faces of the blue map on the right of its separating
// blue path.  Reference implementation: walks the path and floods the faces
// on its side, vertex by vertex.
GridDrawing transversal_draw(const Triangulation& t, const TransversalStructure& s);

// Same output in linear time: face counts are decomposed into the four areas
// under/left-of a path and resolved by two sweeps of the red map (down-sets
// up from the source, up-sets down from the sink, then per-face left areas),
// with ordinates obtained by re-running the abscissa pass on the instance
// rotated a quarter turn.
GridDrawing fast_coordinates(const Triangulation& t, const TransversalStructure& s);

// Deletes every x line and y line that carries no vertex, preserving the
// relative order of coordinates.
GridDrawing compact(const GridDrawing& d);

// Inner edges of the given color whose ccw-consecutive edge at each endpoint
// has that same color.  On a minimal structure the red count equals the
// number of x lines left unused by transversal_draw.
int ccw_internal_edges(const Triangulation& t, const EdgePartition& red, bool red_color);

struct DrawingReport {
  bool ok = true;
  std::string reason;
};

// Exact integer planarity certificate: every inner face is a simple strictly
// counterclockwise polygon, the outer quadrangle is simple and clockwise,
// all coordinates lie on the grid, and the orientation property holds (red
// edges strictly up and weakly right, blue strictly right and weakly down).
DrawingReport verify_drawing(const Triangulation& t, const TransversalStructure& s,
                             const GridDrawing& d);

// Independent quadratic checker: tests every pair of edge segments for
// crossings or overlaps with exact integer arithmetic.
DrawingReport verify_drawing_brute(const Triangulation& t, const GridDrawing& d);

std::string emit_svg(const Triangulation& t, const TransversalStructure& s,
                     const GridDrawing& d, int unit = 40, bool grid_lines = false);

// Text round-trip: header `grid W H`, then one `v x y` line per vertex.
std::string write_drawing(const GridDrawing& d);
GridDrawing parse_drawing(const std::string& text);

} // namespace trx
