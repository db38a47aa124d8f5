#pragma once

#include <string>
#include <vector>

#include "trx/ternary_tree.hpp"
#include "trx/transversal.hpp"
#include "trx/triangulation.hpp"

namespace trx {

// A bicolored tree in the middle of being closed into a triangulation.  The
// vertex set is the tree's nodes; every dart either has a twin (a closed
// edge) or twn = -1 (a stem).  The contour walk follows the infinite face
// with the figure on its right; a stem is bounced off, a closed edge is
// crossed to its twin.
struct PartialFigure {
  int nv = 0;
  std::vector<int> vert, nxt, prv, twn;
  std::vector<bool> red; // per dart; both darts of a closed edge agree
  int root_stem = -1;    // dart of the root's own stem, possibly matched later

  bool is_stem(int d) const { return twn[d] < 0; }
  int contour_next(int d) const { return is_stem(d) ? nxt[d] : nxt[twn[d]]; }
  int stem_count() const;
  int boundary_edge_count() const; // closed-edge sides on the contour
};

PartialFigure make_figure(const BicoloredTree& b);

// Walks the contour once looking for a stem followed by two closed-edge
// sides; if found, completes the stem into an edge closing that triangle
// (the new half-edge gets the stem's color) and returns true.
bool local_closure(PartialFigure& fig);

// All local closures, to the fixed point.  The fixed point does not depend on
// the order in which applicable closures are performed; the randomized
// variant exists to test exactly that.
void partial_closure(PartialFigure& fig);
void partial_closure_random(PartialFigure& fig, Rng& rng);

// Canonical serialization of a figure (rotation, matching, colors), for
// order-independence comparisons.
std::string figure_signature(const PartialFigure& fig);

struct ClosureResult {
  Triangulation t;     // inner vertex ids = tree node ids, outer ids n..n+3
  EdgePartition red;   // the minimal transversal partition of t
  int root_edge = -1;  // edge of t completing the tree's root stem
};

// Attaches the outer quadrangle to a partially closed figure: the unmatched
// stems fall into four color-alternating intervals along the contour, each
// interval's stems are plugged into one new outer vertex, and the outer
// roles W,N,E,S are fixed by the root stem: its interval takes S when red and
// W when blue, so that stem colors match the outer conditions.  When the root
// stem was matched during partial closure, the first red interval counting
// from the lowest unmatched stem dart takes S.  With far_pole the root
// interval takes the opposite pole of its color (N red, E blue), which
// relabels the outer roles half way round and leaves everything else alone.
ClosureResult complete_closure(PartialFigure fig, bool far_pole = false);

// The four closure variants of one tree shape (root color x pole choice)
// produce each pair (triangulation, stem edge completing the root) exactly
// once over all shapes; drawing the shape, the root color and the pole
// uniformly therefore samples triangulations with the outer roles fixed
// uniformly.
ClosureResult closure(const BicoloredTree& b, bool far_pole = false);

// Orientation of the half-edges of T induced by a minimal partition: a
// half-edge at an inner vertex points outward iff the angle it opens
// clockwise is bicolored; half-edges at outer vertices are ingoing.  Inner
// edges with both halves outgoing are the tree edges (they span the inner
// vertices); the rest have exactly one outgoing half, at its inner origin,
// and are the stem edges.  A doubly-ingoing edge means the partition was not
// minimal: not_minimal is thrown.
struct FourOrientation {
  std::vector<bool> outgoing;  // per dart; false for both darts of outer edges
  std::vector<bool> tree_edge; // per edge; false for outer and stem edges
  std::vector<int> stem_edges; // edge ids, 2n+2 of them
};

FourOrientation four_orientation(const Triangulation& t, const EdgePartition& red);

struct OpeningResult {
  BicoloredTree tree;
  std::vector<int> node_of_vertex; // t vertex -> tree node, -1 for outer
  int root_edge = -1;              // stem edge the tree was rooted at
};

// Deletes the ingoing halves of the 4-orientation and reads the remaining
// tree rooted at the given stem edge.  The canonical root, used when no edge
// is supplied, is the stem edge at S that comes first in ccw order after the
// outer edge toward E; with that choice closure(opening(T)) rebuilds T with
// identical outer labels.  The last overload computes the minimal partition
// itself (find_alpha0, sweep_preimage, minimalize).
OpeningResult opening(const Triangulation& t, const EdgePartition& red, int root_edge);
OpeningResult opening(const Triangulation& t, const EdgePartition& red);
OpeningResult opening(const Triangulation& t);

int canonical_root_edge(const Triangulation& t, const EdgePartition& red);

// Canonical signature of a labeled triangulation: darts are relabeled by a
// breadth-first traversal seeded at the W->N outer dart, and the relabeled
// (nxt, twn) tables are serialized together with the optional edge colors
// and marked edge.  Equal signatures == isomorphic labeled objects.
std::string map_signature(const Triangulation& t, const EdgePartition* red = nullptr,
                          int marked_edge = -1);

} // namespace trx
