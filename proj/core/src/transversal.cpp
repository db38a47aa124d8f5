#include "trx/transversal.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

#include "trx/errors.hpp"

namespace trx {

namespace {

// clockwise category of a dart at an inner vertex
// 0 = out-red, 1 = out-blue, 2 = in-red, 3 = in-blue
int category(bool out, bool is_red) { return (out ? 0 : 2) + (is_red ? 0 : 1); }

// required color of inner edges at each pole, in outer[] order W,N,E,S
constexpr bool kPoleRed[4] = {false, true, false, true};
// required direction at each pole (true = outgoing from the pole)
constexpr bool kPoleOut[4] = {true, false, false, true};

} // namespace

StructureReport verify_partition(const Triangulation& t, const EdgePartition& red) {
  const PlanarMap& m = t.map;
  static const char* pole_name[4] = {"W", "N", "E", "S"};
  for (int k = 0; k < 4; ++k) {
    for (int d : m.darts_at(t.outer[k])) {
      if (t.is_outer_edge(d)) continue;
      if (red[m.edge_of[d]] != kPoleRed[k])
        return {false, std::string("inner edge at ") + pole_name[k] + " has the wrong color"};
    }
  }
  for (int v = 0; v < m.nv; ++v) {
    if (t.is_outer_vertex(v)) continue;
    std::vector<int> ds = m.darts_at(v);
    int changes = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      bool a = red[m.edge_of[ds[i]]];
      bool b = red[m.edge_of[ds[(i + 1) % ds.size()]]];
      if (a != b) ++changes;
    }
    if (changes != 4)
      return {false, "vertex " + std::to_string(v) + " has " + std::to_string(changes) +
                         " color changes instead of 4"};
  }
  return {};
}

StructureReport verify_structure(const Triangulation& t, const TransversalStructure& s) {
  const PlanarMap& m = t.map;
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = m.edge_dart[e];
    if (t.is_outer_edge(d)) continue;
    if (s.outgoing[d] == s.outgoing[m.twn[d]])
      return {false, "edge " + std::to_string(e) + " is not directed consistently"};
  }
  static const char* pole_name[4] = {"W", "N", "E", "S"};
  for (int k = 0; k < 4; ++k) {
    for (int d : m.darts_at(t.outer[k])) {
      if (t.is_outer_edge(d)) continue;
      if (s.red[m.edge_of[d]] != kPoleRed[k] || s.outgoing[d] != kPoleOut[k])
        return {false, std::string("inner edge at ") + pole_name[k] + " breaks the border condition"};
    }
  }
  for (int v = 0; v < m.nv; ++v) {
    if (t.is_outer_vertex(v)) continue;
    std::vector<int> ds = m.darts_at(v); // ccw; read it backwards for clockwise
    std::reverse(ds.begin(), ds.end());
    int total = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      int a = category(s.outgoing[ds[i]], s.red[m.edge_of[ds[i]]]);
      int j = (i + 1) % ds.size();
      int b = category(s.outgoing[ds[j]], s.red[m.edge_of[ds[j]]]);
      int diff = (b - a + 4) % 4;
      if (diff > 1)
        return {false, "bad interval order at vertex " + std::to_string(v)};
      total += diff;
    }
    if (total != 4)
      return {false, "vertex " + std::to_string(v) + " does not show all four intervals"};
  }
  // acyclicity of the induced orientation on inner edges
  std::vector<int> indeg(m.nv, 0);
  for (int d = 0; d < m.dart_count(); ++d)
    if (!t.is_outer_edge(d) && s.outgoing[d]) ++indeg[m.head(d)];
  std::queue<int> q;
  for (int v = 0; v < m.nv; ++v)
    if (indeg[v] == 0) q.push(v);
  int done = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++done;
    for (int d : m.darts_at(v))
      if (!t.is_outer_edge(d) && s.outgoing[d])
        if (--indeg[m.head(d)] == 0) q.push(m.head(d));
  }
  if (done != m.nv) return {false, "orientation has a directed cycle"};
  return {};
}

void check_structure(const Triangulation& t, const TransversalStructure& s) {
  StructureReport r = verify_structure(t, s);
  if (!r.ok) throw Error(errc::invalid_structure, r.reason);
}

bool is_valid_structure(const Triangulation& t, const TransversalStructure& s) {
  return verify_structure(t, s).ok;
}

EdgePartition phi(const TransversalStructure& s) { return s.red; }

Alpha0Orientation psi(const Triangulation& t, const AngularMap& q, const EdgePartition& red) {
  const PlanarMap& m = t.map;
  // outer edges act as blue when deciding whether an angle is bicolored
  auto color = [&](int d) { return t.is_outer_edge(d) ? false : (bool)red[m.edge_of[d]]; };
  Alpha0Orientation o(q.map.edge_count(), false);
  for (int d = 0; d < m.dart_count(); ++d) {
    int qe = q.qedge_of_tdart[d];
    if (qe < 0) continue;
    o[qe] = color(d) != color(m.nxt[d]);
  }
#ifndef NDEBUG
  std::vector<int> want = alpha0_degrees(t, q), have = alpha0_outdegrees(q, o);
  assert(want == have);
#endif
  return o;
}

namespace {

// state of the sweep: the path P from W to E as vertices plus the connecting
// darts pd[i] = P[i] -> P[i+1]
struct SweepPath {
  std::vector<int> verts;
  std::vector<int> darts;

  void rebuild_darts(const PlanarMap& m) {
    darts.resize(verts.size() - 1);
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      darts[i] = m.dart_between(verts[i], verts[i + 1]);
      assert(darts[i] >= 0);
    }
  }
};

} // namespace

TransversalStructure sweep_preimage(const Triangulation& t, const AngularMap& q,
                                    const Alpha0Orientation& o) {
  const PlanarMap& m = t.map;
  int ne = m.edge_count();
  TransversalStructure s;
  s.red.assign(ne, false);
  s.outgoing.assign(m.dart_count(), false);
  std::vector<char> colored(ne, 0);

  auto paint = [&](int d, bool is_red, bool out) {
    int e = m.edge_of[d];
    assert(!t.is_outer_edge(d) && !colored[e]);
    colored[e] = 1;
    s.red[e] = is_red;
    s.outgoing[d] = out;
    s.outgoing[m.twn[d]] = !out;
  };

  // P starts as the neighbours of N from W to E; their edges to N become red
  SweepPath P;
  int dNW = m.dart_between(t.N(), t.W()), dNE = m.dart_between(t.N(), t.E());
  P.verts.push_back(t.W());
  for (int d = m.nxt[dNW]; d != dNE; d = m.nxt[d]) {
    paint(d, true, false); // into N
    P.verts.push_back(m.head(d));
  }
  P.verts.push_back(t.E());
  P.rebuild_darts(m);

  // the angular edge seen from P[j] across its left (right) path edge
  auto eps_left = [&](int j) { return q.qedge_of_tdart[m.twn[P.darts[j - 1]]]; };
  auto eps_right = [&](int j) { return q.qedge_of_tdart[m.prv[P.darts[j]]]; };
  auto ingoing = [&](int qe) { return qe >= 0 && !o[qe]; };

  while (!(P.verts.size() == 3 && P.verts[1] == t.S())) {
    // admissible pair: eps_right(a) and eps_left(b) ingoing, everything
    // strictly between has both angular edges outgoing; scanning b from the
    // left and walking back always finds one
    int a = -1, b = -1;
    for (int j = 1; j < (int)P.verts.size() && b < 0; ++j) {
      if (!ingoing(eps_left(j))) continue;
      for (int i = j - 1; i >= 0; --i) {
        if (t.is_outer_edge(P.darts[i])) break;
        int qr = eps_right(i);
        if (qr < 0) break;
        if (!o[qr]) {
          a = i;
          b = j;
          break;
        }
        if (i >= 1 && ingoing(eps_left(i))) break;
      }
    }
    if (b < 0) throw Error(errc::stuck, "no admissible sweep pair");
    assert(b - a >= 2);

    // path edges of the pair turn blue, oriented towards E
    for (int i = a; i < b; ++i) paint(P.darts[i], false, true);

    // fan below each interior vertex turns red, oriented up into it; the fan
    // heads stitched together are the replacement path
    std::vector<int> chain;
    for (int i = a + 1; i < b; ++i) {
      int dl = m.twn[P.darts[i - 1]], dr = P.darts[i];
      int fan = 0;
      for (int d = m.nxt[dl]; d != dr; d = m.nxt[d]) {
        paint(d, true, false);
        int h = m.head(d);
        if (chain.empty() || chain.back() != h) chain.push_back(h);
        ++fan;
      }
      assert(fan >= 1); // every interior path vertex has a neighbour below
    }

    std::vector<int> nv(P.verts.begin(), P.verts.begin() + a + 1);
    nv.insert(nv.end(), chain.begin(), chain.end());
    nv.insert(nv.end(), P.verts.begin() + b, P.verts.end());
    P.verts.swap(nv);
#ifndef NDEBUG
    std::vector<int> chk = P.verts;
    std::sort(chk.begin(), chk.end());
    assert(std::adjacent_find(chk.begin(), chk.end()) == chk.end()); // still simple
#endif
    P.rebuild_darts(m);
  }

  for (int e = 0; e < ne; ++e) assert(colored[e] || t.is_outer_edge(m.edge_dart[e]));
  return s;
}

TransversalStructure orient_partition(const Triangulation& t, const std::vector<bool>& red) {
  StructureReport pr = verify_partition(t, red);
  if (!pr.ok) throw Error(errc::invalid_structure, pr.reason);
  const PlanarMap& m = t.map;
  TransversalStructure s;
  s.red = red;
  s.outgoing.assign(m.dart_count(), false);
  std::vector<char> edge_known(m.edge_count(), 0);

  auto set_dart = [&](int d, bool out) {
    s.outgoing[d] = out;
    s.outgoing[m.twn[d]] = !out;
    edge_known[m.edge_of[d]] = 1;
  };

  // border condition pins every pole-incident inner edge
  for (int k = 0; k < 4; ++k)
    for (int d : m.darts_at(t.outer[k]))
      if (!t.is_outer_edge(d)) set_dart(d, kPoleOut[k]);

  // at an inner vertex the clockwise rotation splits into four color blocks;
  // one bit (which red block is the outgoing one) fixes every direction there
  std::vector<char> phase_known(m.nv, 0);
  std::queue<int> bfs;
  for (int v = 0; v < m.nv; ++v) {
    if (t.is_outer_vertex(v)) continue;
    bool any = false;
    for (int d : m.darts_at(v)) any = any || edge_known[m.edge_of[d]];
    if (any) bfs.push(v);
  }
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    if (phase_known[v]) continue;
    std::vector<int> ds = m.darts_at(v);
    std::reverse(ds.begin(), ds.end()); // clockwise
    int k = (int)ds.size();
    std::vector<int> block(k, 0);
    for (int i = 1; i < k; ++i) {
      bool a = red[m.edge_of[ds[i - 1]]], b = red[m.edge_of[ds[i]]];
      block[i] = block[i - 1] + (a != b ? 1 : 0);
    }
    if (red[m.edge_of[ds[0]]] == red[m.edge_of[ds[k - 1]]]) {
      // first and last dart share the first block
      for (int i = k - 1; i >= 0 && block[i] == block[k - 1]; --i) block[i] = 0;
    }
    int base0 = red[m.edge_of[ds[0]]] ? 0 : 1;
    int anchor = -1;
    for (int i = 0; i < k && anchor < 0; ++i)
      if (edge_known[m.edge_of[ds[i]]]) anchor = i;
    assert(anchor >= 0);
    int x = -1;
    for (int cand = 0; cand < 2; ++cand) {
      int cat = (base0 + 2 * cand + block[anchor]) % 4;
      if ((cat < 2) == s.outgoing[ds[anchor]]) x = cand;
    }
    assert(x >= 0);
    phase_known[v] = 1;
    for (int i = 0; i < k; ++i) {
      int cat = (base0 + 2 * x + block[i]) % 4;
      bool out = cat < 2;
      int e = m.edge_of[ds[i]];
      if (edge_known[e]) {
        if (s.outgoing[ds[i]] != out)
          throw Error(errc::invalid_structure, "no consistent edge orientation exists");
      } else {
        set_dart(ds[i], out);
        int w = m.head(ds[i]);
        if (!t.is_outer_vertex(w) && !phase_known[w]) bfs.push(w);
      }
    }
  }
  for (int e = 0; e < m.edge_count(); ++e)
    assert(edge_known[e] || t.is_outer_edge(m.edge_dart[e]));
  StructureReport r = verify_structure(t, s);
  if (!r.ok) throw Error(errc::invalid_structure, r.reason);
  return s;
}

TransversalStructure minimal_structure(const Triangulation& t) {
  AngularMap q = make_angular_map(t);
  Alpha0Orientation o = find_alpha0(t, q);
  TransversalStructure swept = sweep_preimage(t, q, o);
  assert(is_valid_structure(t, swept));
  EdgePartition low = minimalize(t, swept.red);
  return orient_partition(t, low);
}

namespace {

// faces enclosed by the 4-cycle when walked starting with dart d01; empty
// result means that side touches the outer face
std::vector<int> enclosed_faces(const PlanarMap& m, int d01, const std::array<int, 4>& cyc_edges) {
  auto on_cycle = [&](int e) {
    return e == cyc_edges[0] || e == cyc_edges[1] || e == cyc_edges[2] || e == cyc_edges[3];
  };
  std::vector<char> seen(m.face_count(), 0);
  std::vector<int> stack{m.face_of[d01]}, out;
  seen[m.face_of[d01]] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    out.push_back(f);
    for (int d : m.face_darts(f)) {
      if (on_cycle(m.edge_of[d])) continue;
      int g = m.face_of[m.twn[d]];
      if (!seen[g]) {
        seen[g] = 1;
        stack.push_back(g);
      }
    }
  }
  if (seen[m.outer_face]) return {};
  return out;
}

} // namespace

std::vector<AltFourCycle> alternating_four_cycles(const Triangulation& t,
                                                  const EdgePartition& red) {
  const PlanarMap& m = t.map;
  auto inner_red = [&](int d) -> int {
    if (t.is_outer_edge(d)) return -1;
    return red[m.edge_of[d]] ? 1 : 0;
  };
  std::set<std::array<int, 4>> seen;
  std::vector<AltFourCycle> out;
  for (int v0 = 0; v0 < m.nv; ++v0) {
    if (t.is_outer_vertex(v0)) continue;
    std::vector<int> d0s = m.darts_at(v0);
    for (int d1 : d0s) {
      int c1 = inner_red(d1);
      if (c1 < 0) continue;
      int v1 = m.head(d1);
      if (v1 < v0) continue;
      for (int d3 : d0s) {
        int c3 = inner_red(d3);
        if (d3 == d1 || c3 < 0 || c3 == c1) continue;
        int v3 = m.head(d3);
        if (v3 < v0) continue;
        for (int d12 : m.darts_at(v1)) {
          if (inner_red(d12) != (c1 ^ 1)) continue;
          int v2 = m.head(d12);
          if (v2 <= v0 || v2 == v3) continue;
          int d23 = m.dart_between(v2, v3);
          if (d23 < 0 || inner_red(d23) != c1) continue;
          // alternating cycle v0 v1 v2 v3; orient it interior-on-the-left
          std::array<int, 4> edges{m.edge_of[d1], m.edge_of[d12], m.edge_of[d23],
                                   m.edge_of[m.dart_between(v3, v0)]};
          std::array<int, 4> walk{v0, v1, v2, v3};
          std::vector<int> faces = enclosed_faces(m, d1, edges);
          if (faces.empty()) {
            walk = {v0, v3, v2, v1};
            faces = enclosed_faces(m, d3, edges);
            assert(!faces.empty());
          }
          if (!seen.insert(walk).second) continue;

          AltFourCycle c;
          c.verts = walk;
          std::set<int> inside;
          for (int f : faces)
            for (int d : m.face_darts(f)) {
              int e = m.edge_of[d];
              if (e != edges[0] && e != edges[1] && e != edges[2] && e != edges[3])
                inside.insert(e);
            }
          c.interior_edges.assign(inside.begin(), inside.end());
          assert(!c.interior_edges.empty());

          // interior edges at a cycle vertex all match one of its two cycle
          // edges; any of them settles the kind, the rest agree
          int vote = -1;
          for (int i = 0; i < 4; ++i) {
            int a = m.dart_between(walk[i], walk[(i + 1) % 4]);
            int bdart = m.dart_between(walk[i], walk[(i + 3) % 4]);
            bool right_color = red[m.edge_of[a]];
            for (int d = m.nxt[a]; d != bdart; d = m.nxt[d]) {
              int got = red[m.edge_of[d]] == right_color ? 1 : 0;
              assert(vote < 0 || vote == got);
              vote = got;
            }
          }
          assert(vote >= 0);
          c.right = vote == 1;
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

namespace {

EdgePartition switch_interior(const EdgePartition& red, const AltFourCycle& c) {
  EdgePartition r = red;
  for (int e : c.interior_edges) r[e] = !r[e];
  return r;
}

} // namespace

EdgePartition flip(const Triangulation&, const EdgePartition& red, const AltFourCycle& c) {
  if (!c.right) throw Error(errc::not_right_cycle, "flip needs a right alternating 4-cycle");
  return switch_interior(red, c);
}

EdgePartition flop(const Triangulation&, const EdgePartition& red, const AltFourCycle& c) {
  if (c.right) throw Error(errc::not_left_cycle, "flop needs a left alternating 4-cycle");
  return switch_interior(red, c);
}

EdgePartition minimalize(const Triangulation& t, EdgePartition red) {
  for (;;) {
    std::vector<AltFourCycle> cycles = alternating_four_cycles(t, red);
    const AltFourCycle* pick = nullptr;
    for (const AltFourCycle& c : cycles)
      if (c.right && (!pick || c.verts < pick->verts)) pick = &c;
    if (!pick) return red;
    red = flip(t, red, *pick);
  }
}

bool is_minimal(const Triangulation& t, const EdgePartition& red) {
  for (const AltFourCycle& c : alternating_four_cycles(t, red))
    if (c.right) return false;
  return true;
}

namespace {

DirectedSubmap color_submap(const Triangulation& t, const TransversalStructure& s, bool want_red) {
  const PlanarMap& m = t.map;
  auto keep = [&](int d) { return t.is_outer_edge(d) || s.red[m.edge_of[d]] == want_red; };

  std::vector<std::vector<int>> rot(m.nv);
  for (int v = 0; v < m.nv; ++v)
    for (int d : m.darts_at(v))
      if (keep(d)) rot[v].push_back(m.head(d));

  DirectedSubmap sub;
  std::vector<int> outer_cycle(t.outer.begin(), t.outer.end());
  sub.map = build_map(rot, outer_cycle);

  // build_map numbers darts vertex by vertex in list order, which lets us
  // line the two dart sets up without any search
  sub.dart_of.reserve(sub.map.dart_count());
  sub.sub_dart_of.assign(m.dart_count(), -1);
  for (int v = 0; v < m.nv; ++v)
    for (int d : m.darts_at(v))
      if (keep(d)) {
        sub.sub_dart_of[d] = (int)sub.dart_of.size();
        sub.dart_of.push_back(d);
      }
  assert((int)sub.dart_of.size() == sub.map.dart_count());

  // inner edges keep their structure direction; the outer quadrangle is
  // oriented as the two lateral paths of the bipolar orientation
  sub.outgoing.assign(sub.map.dart_count(), false);
  int W = t.W(), N = t.N(), E = t.E(), S = t.S();
  for (int sd = 0; sd < sub.map.dart_count(); ++sd) {
    int d = sub.dart_of[sd];
    if (!t.is_outer_edge(d)) {
      sub.outgoing[sd] = s.outgoing[d];
      continue;
    }
    int u = m.vert[d], w = m.head(d);
    bool out;
    if (want_red) // S -> W -> N and S -> E -> N
      out = u == S || (u == W && w == N) || (u == E && w == N);
    else // W -> S -> E and W -> N -> E
      out = u == W || (u == S && w == E) || (u == N && w == E);
    sub.outgoing[sd] = out;
  }
  sub.source = want_red ? S : W;
  sub.sink = want_red ? N : E;
  return sub;
}

} // namespace

DirectedSubmap red_map(const Triangulation& t, const TransversalStructure& s) {
  return color_submap(t, s, true);
}

DirectedSubmap blue_map(const Triangulation& t, const TransversalStructure& s) {
  return color_submap(t, s, false);
}

} // namespace trx
