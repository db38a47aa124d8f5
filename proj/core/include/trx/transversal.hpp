#pragma once

#include <string>
#include <vector>

#include "trx/triangulation.hpp"

namespace trx {

// Colors of the inner edges only; the entry for an outer edge is ignored.
using EdgePartition = std::vector<bool>; // true = red

// Transversal structure on an irreducible triangulation: per-edge color plus
// per-dart direction.  Conditions, with rotations read clockwise:
//  - at each inner vertex: non-empty intervals out-red, out-blue, in-red,
//    in-blue, in this cyclic order;
//  - inner edges at N, E, S, W are respectively ingoing red, ingoing blue,
//    outgoing red, outgoing blue.
// The induced orientation is then acyclic with sources W,S and sinks E,N.
// Outer edges carry no color or direction.
struct TransversalStructure {
  EdgePartition red;
  std::vector<bool> outgoing; // per dart: edge is directed away from vert[d]
};

// Report of the first violated structure condition, empty reason when valid.
struct StructureReport {
  bool ok = true;
  std::string reason;
};

// Checks the interval conditions at every vertex plus acyclicity of the
// orientation; verify_* reports, check_* throws invalid_structure.
StructureReport verify_structure(const Triangulation& t, const TransversalStructure& s);
void check_structure(const Triangulation& t, const TransversalStructure& s);
bool is_valid_structure(const Triangulation& t, const TransversalStructure& s);
// Same checks on the colors alone: four non-empty alternating color intervals
// at inner vertices, monochromatic outer vertices with N red, E blue, S red,
// W blue.
StructureReport verify_partition(const Triangulation& t, const EdgePartition& red);

// Forgets directions.
EdgePartition phi(const TransversalStructure& s);

// Orientation of the angular map induced by a partition: the angular edge of
// an inner angle points out of its triangulation vertex iff the two edges
// delimiting the angle have distinct colors, the outer edges counting as
// blue.  The result has the alpha0 out-degrees.
Alpha0Orientation psi(const Triangulation& t, const AngularMap& q, const EdgePartition& red);

// Inverse of psi modulo directions: builds a transversal structure whose
// bicolored angles are exactly the edges of `o` pointing out of their black
// endpoint, by sweeping a path from the neighbours of N down to W,S,E and
// coloring the swept edges.  Throws stuck if no admissible sweep step exists
// (impossible on a valid alpha0-orientation).
TransversalStructure sweep_preimage(const Triangulation& t, const AngularMap& q,
                                    const Alpha0Orientation& o);

// Recovers the directions from the colors alone (the direction part of a
// transversal structure is determined by the edge bicoloration).  Throws
// invalid_structure if no consistent orientation exists.
TransversalStructure orient_partition(const Triangulation& t, const std::vector<bool>& red);

// Computes the minimal transversal structure from scratch: find some
// alpha0-orientation by flow, sweep its preimage, then flip every right
// alternating 4-cycle away.
TransversalStructure minimal_structure(const Triangulation& t);

// Alternating 4-cycle: a cycle v0 v1 v2 v3 of inner edges whose colors
// alternate around the cycle.  Vertices are stored so that the interior of
// the cycle is on the left when walking v0 -> v1 -> v2 -> v3, and the tuple
// is rotated to start at the smallest vertex id; the cycle edge from v_i to
// v_{i+1} is v_i's right edge, the one to v_{i-1} its left edge.  In a right
// cycle the interior edges at each cycle vertex all have the color of that
// vertex's right edge; in a left cycle, of its left edge.  Every alternating
// 4-cycle of a transversal partition is one or the other.
struct AltFourCycle {
  std::array<int, 4> verts;
  bool right;
  std::vector<int> interior_edges; // edge ids strictly inside, sorted
};

std::vector<AltFourCycle> alternating_four_cycles(const Triangulation& t,
                                                  const EdgePartition& red);

// Switches the color of every edge strictly inside the cycle; the cycle's own
// four edges keep their colors.  Throws not_right_cycle (resp. not_left_cycle)
// when `flip` (resp. `flop`) is applied to a cycle of the wrong kind.
EdgePartition flip(const Triangulation& t, const EdgePartition& red, const AltFourCycle& c);
EdgePartition flop(const Triangulation& t, const EdgePartition& red, const AltFourCycle& c);

// Repeatedly flips the right alternating 4-cycle with the smallest vertex
// tuple until none remains; the result is the lattice minimum, so it does not
// depend on the flip order.
EdgePartition minimalize(const Triangulation& t, EdgePartition red);
bool is_minimal(const Triangulation& t, const EdgePartition& red);

// Submap on the full vertex set spanned by the red (blue) inner edges plus
// the four outer edges.  The structure directions plus outer paths
// S->W->N and S->E->N (for blue: W->S->E and W->N->E) make it a bipolar
// orientation with source S and sink N (blue: W to E).  Edge and vertex ids
// are preserved; use the returned DirectedSubmap maps to translate darts.
struct DirectedSubmap {
  PlanarMap map;
  std::vector<int> dart_of;      // submap dart -> original dart
  std::vector<bool> outgoing;    // per submap dart: points away from its origin
  std::vector<int> sub_dart_of;  // original dart -> submap dart or -1
  int source = -1, sink = -1;
};

DirectedSubmap red_map(const Triangulation& t, const TransversalStructure& s);
DirectedSubmap blue_map(const Triangulation& t, const TransversalStructure& s);

} // namespace trx
