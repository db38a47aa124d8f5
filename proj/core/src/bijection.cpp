#include "trx/bijection.hpp"

#include <algorithm>
#include <cassert>

#include "trx/errors.hpp"

namespace trx {

int PartialFigure::stem_count() const {
  int c = 0;
  for (int x : twn) c += x < 0;
  return c;
}

int PartialFigure::boundary_edge_count() const {
  int s0 = -1;
  for (int d = 0; d < (int)twn.size() && s0 < 0; ++d)
    if (twn[d] < 0) s0 = d;
  if (s0 < 0) return 0;
  int c = 0, d = s0;
  do {
    if (!is_stem(d)) ++c;
    d = contour_next(d);
  } while (d != s0);
  return c;
}

PartialFigure make_figure(const BicoloredTree& b) {
  int n = b.tree.node_count();
  PartialFigure f;
  f.nv = n;
  f.vert.resize(4 * n);
  f.nxt.resize(4 * n);
  f.prv.resize(4 * n);
  f.twn.assign(4 * n, -1);
  f.red.resize(4 * n);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < 4; ++k) {
      int d = 4 * v + k;
      f.vert[d] = v;
      f.nxt[d] = 4 * v + (k + 1) % 4;
      f.prv[d] = 4 * v + (k + 3) % 4;
      f.red[d] = k == 0 ? (bool)b.parent_red[v] : b.slot_red(v, k - 1);
    }
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 3; ++s) {
      int c = b.tree.child[v][s];
      if (c < 0) continue;
      f.twn[4 * v + s + 1] = 4 * c;
      f.twn[4 * c] = 4 * v + s + 1;
      assert(f.red[4 * v + s + 1] == f.red[4 * c]);
    }
  f.root_stem = 4 * b.tree.root;
  return f;
}

namespace {

int lowest_stem(const PartialFigure& fig) {
  for (int d = 0; d < (int)fig.twn.size(); ++d)
    if (fig.twn[d] < 0) return d;
  return -1;
}

int contour_length(const PartialFigure& fig, int start) {
  int len = 0, d = start;
  do {
    ++len;
    d = fig.contour_next(d);
  } while (d != start);
  return len;
}

// closes stem u against the two following contour edge sides e1 (at u's
// vertex) and e2; the new half-edge lands just after twn(e2) in the rotation
// at e2's head, which makes (u, twn e2, twn e1) the new triangular face
void close_at(PartialFigure& fig, int u, int e1, int e2) {
  assert(fig.is_stem(u) && !fig.is_stem(e1) && !fig.is_stem(e2));
  assert(e1 == fig.nxt[u] && e2 == fig.contour_next(e1));
  int h = (int)fig.vert.size();
  int anchor = fig.twn[e2];
  fig.vert.push_back(fig.vert[anchor]);
  fig.nxt.push_back(fig.nxt[anchor]);
  fig.prv.push_back(anchor);
  fig.twn.push_back(u);
  fig.red.push_back(fig.red[u]);
  fig.prv[fig.nxt[anchor]] = h;
  fig.nxt[anchor] = h;
  fig.twn[u] = h;
}

// one sweep around the contour with a reduction stack; returns the number of
// closures performed
int closure_pass(PartialFigure& fig) {
  int s0 = lowest_stem(fig);
  if (s0 < 0) return 0;
  int limit = 2 * contour_length(fig, s0) + 4;
  std::vector<int> stk;
  stk.reserve(limit);
  int d = s0, closures = 0;
  for (int step = 0; step < limit; ++step) {
    stk.push_back(d);
    while ((int)stk.size() >= 3) {
      int f2 = stk[stk.size() - 1], f1 = stk[stk.size() - 2], s = stk[stk.size() - 3];
      if (fig.is_stem(f2) || fig.is_stem(f1) || !fig.is_stem(s)) break;
      stk.resize(stk.size() - 3);
      close_at(fig, s, f1, f2);
      ++closures;
      stk.push_back(s); // the closed stem stays on the contour as an edge side
    }
    d = fig.contour_next(stk.back());
  }
  return closures;
}

} // namespace

bool local_closure(PartialFigure& fig) {
  int s0 = lowest_stem(fig);
  if (s0 < 0) return false;
  int len = contour_length(fig, s0);
  int w0 = -1, w1 = -1, d = s0;
  for (int step = 0; step < len + 2; ++step) {
    if (w0 >= 0 && fig.is_stem(w0) && !fig.is_stem(w1) && !fig.is_stem(d)) {
      close_at(fig, w0, w1, d);
      return true;
    }
    w0 = w1;
    w1 = d;
    d = fig.contour_next(d);
  }
  return false;
}

void partial_closure(PartialFigure& fig) {
  while (closure_pass(fig) > 0) {
  }
}

void partial_closure_random(PartialFigure& fig, Rng& rng) {
  for (;;) {
    int s0 = lowest_stem(fig);
    if (s0 < 0) return;
    int len = contour_length(fig, s0);
    std::vector<std::array<int, 3>> pats;
    int w0 = -1, w1 = -1, d = s0;
    for (int step = 0; step < len + 2; ++step) {
      if (w0 >= 0 && fig.is_stem(w0) && !fig.is_stem(w1) && !fig.is_stem(d))
        pats.push_back({w0, w1, d});
      w0 = w1;
      w1 = d;
      d = fig.contour_next(d);
    }
    if (pats.empty()) return;
    auto& p = pats[rng.below(pats.size())];
    close_at(fig, p[0], p[1], p[2]);
  }
}

std::string figure_signature(const PartialFigure& fig) {
  std::vector<int> rank(fig.vert.size(), -1);
  for (int v = 0; v < fig.nv; ++v) {
    int r = 0, d = 4 * v;
    do {
      rank[d] = r++;
      d = fig.nxt[d];
    } while (d != 4 * v);
  }
  std::string out;
  for (int v = 0; v < fig.nv; ++v) {
    int d = 4 * v;
    do {
      out += fig.red[d] ? 'r' : 'b';
      if (fig.is_stem(d))
        out += '*';
      else
        out += std::to_string(fig.vert[fig.twn[d]]) + "." + std::to_string(rank[fig.twn[d]]);
      out += d == fig.root_stem ? '!' : ' ';
      d = fig.nxt[d];
    } while (d != 4 * v);
    out += '/';
  }
  return out;
}

ClosureResult complete_closure(PartialFigure fig, bool far_pole) {
  partial_closure(fig);
  int n = fig.nv;

  // unmatched stems in contour order, with the number of edge sides after each
  int s0 = lowest_stem(fig);
  assert(s0 >= 0);
  std::vector<int> stems;
  std::vector<int> gap;
  {
    int d = s0;
    do {
      if (fig.is_stem(d)) {
        stems.push_back(d);
        gap.push_back(0);
      } else {
        ++gap.back();
      }
      d = fig.contour_next(d);
    } while (d != s0);
  }
  int m = (int)stems.size();
  assert(m == fig.stem_count() && m >= 4);

  // a gap without an edge side separates two of the four stem intervals
  std::vector<int> brk;
  for (int i = 0; i < m; ++i) {
    assert(gap[i] <= 1); // otherwise a local closure would still apply
    if (gap[i] == 0) brk.push_back(i);
  }
  assert((int)brk.size() == 4);
  std::array<std::vector<int>, 4> intervals;
  for (int j = 0; j < 4; ++j) {
    int i = (brk[j] + 1) % m, last = brk[(j + 1) % 4];
    for (;; i = (i + 1) % m) {
      intervals[j].push_back(stems[i]);
      if (i == last) break;
    }
  }
  auto icolor = [&](int j) { return (bool)fig.red[intervals[j][0]]; };
#ifndef NDEBUG
  for (int j = 0; j < 4; ++j) {
    for (int d : intervals[j]) assert((bool)fig.red[d] == icolor(j));
    assert(icolor(j) != icolor((j + 1) % 4));
  }
#endif

  // the interval of the root stem takes S when red, W when blue; if the root
  // stem was matched during the partial closure, the first red interval
  // counting from the lowest unmatched stem takes S
  int first = -1;
  bool first_red;
  if (fig.is_stem(fig.root_stem)) {
    for (int j = 0; j < 4; ++j)
      if (std::find(intervals[j].begin(), intervals[j].end(), fig.root_stem) != intervals[j].end())
        first = j;
    assert(first >= 0);
    first_red = icolor(first);
  } else {
    int j0 = -1;
    for (int j = 0; j < 4 && j0 < 0; ++j)
      if (std::find(intervals[j].begin(), intervals[j].end(), stems[0]) != intervals[j].end())
        j0 = j;
    first = icolor(j0) ? j0 : (j0 + 1) % 4;
    first_red = true;
  }
  int W = n, N = n + 1, E = n + 2, S = n + 3;
  std::array<int, 4> vid = first_red ? std::array<int, 4>{S, E, N, W}
                                     : std::array<int, 4>{W, S, E, N};
  // far_pole plugs the root interval into the opposite pole of its color (N
  // instead of S, E instead of W), turning the outer roles half way round
  if (far_pole) vid = {vid[2], vid[3], vid[0], vid[1]};
  std::array<int, 4> pole_of{}; // by interval index
  std::array<int, 4> iv_of_pole_slot{};
  for (int k = 0; k < 4; ++k) {
    pole_of[(first + k) % 4] = vid[k];
    iv_of_pole_slot[k] = (first + k) % 4;
  }
  std::vector<int> pole_of_stem(fig.vert.size(), -1);
  for (int j = 0; j < 4; ++j)
    for (int d : intervals[j]) pole_of_stem[d] = pole_of[j];

  // neighbor rows: tree nodes keep their rotation; every pole gets the next
  // pole, its interval's stems in reverse contour order, then the previous
  // pole, which is the ccw rotation of the plugged figure
  std::vector<std::vector<int>> rot(n + 4);
  std::vector<std::vector<int>> fdart(n);
  for (int v = 0; v < n; ++v) {
    int d = 4 * v;
    do {
      rot[v].push_back(fig.is_stem(d) ? pole_of_stem[d] : fig.vert[fig.twn[d]]);
      fdart[v].push_back(d);
      d = fig.nxt[d];
    } while (d != 4 * v);
  }
  for (int k = 0; k < 4; ++k) {
    int j = iv_of_pole_slot[k], p = vid[k];
    rot[p].push_back(vid[(k + 1) % 4]);
    for (auto it = intervals[j].rbegin(); it != intervals[j].rend(); ++it)
      rot[p].push_back(fig.vert[*it]);
    rot[p].push_back(vid[(k + 3) % 4]);
  }

  ClosureResult res;
  res.t = make_triangulation(rot, {W, N, E, S});
  const PlanarMap& tm = res.t.map;

  std::vector<int> off(n + 5, 0);
  for (int v = 0; v < n + 4; ++v) off[v + 1] = off[v] + (int)rot[v].size();
  res.red.assign(tm.edge_count(), false);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < (int)rot[v].size(); ++k)
      res.red[tm.edge_of[off[v] + k]] = fig.red[fdart[v][k]];

  int rv = fig.vert[fig.root_stem];
  for (int k = 0; k < (int)fdart[rv].size(); ++k)
    if (fdart[rv][k] == fig.root_stem) res.root_edge = tm.edge_of[off[rv] + k];
  assert(res.root_edge >= 0);
#ifndef NDEBUG
  assert(verify_partition(res.t, res.red).ok);
#endif
  return res;
}

ClosureResult closure(const BicoloredTree& b, bool far_pole) {
  return complete_closure(make_figure(b), far_pole);
}

FourOrientation four_orientation(const Triangulation& t, const EdgePartition& red) {
  const PlanarMap& m = t.map;
  FourOrientation fo;
  fo.outgoing.assign(m.dart_count(), false);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (t.is_outer_vertex(m.vert[d])) continue;
    fo.outgoing[d] = red[m.edge_of[d]] != red[m.edge_of[m.prv[d]]];
  }
  fo.tree_edge.assign(m.edge_count(), false);
  int trees = 0;
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = m.edge_dart[e];
    if (t.is_outer_edge(d)) continue;
    bool a = fo.outgoing[d], b = fo.outgoing[m.twn[d]];
    if (a && b) {
      fo.tree_edge[e] = true;
      ++trees;
    } else if (!a && !b) {
      throw Error(errc::not_minimal, "edge " + std::to_string(e) + " has both half-edges ingoing");
    } else {
      fo.stem_edges.push_back(e);
    }
  }
  assert(trees == t.n_inner - 1);
  assert((int)fo.stem_edges.size() == 2 * t.n_inner + 2);
  return fo;
}

int canonical_root_edge(const Triangulation& t, const EdgePartition&) {
  const PlanarMap& m = t.map;
  int d = m.nxt[m.dart_between(t.S(), t.E())];
  assert(!t.is_outer_edge(d));
  return m.edge_of[d];
}

OpeningResult opening(const Triangulation& t, const EdgePartition& red, int root_edge) {
  FourOrientation fo = four_orientation(t, red);
  const PlanarMap& m = t.map;
  if (root_edge < 0 || root_edge >= m.edge_count() || fo.tree_edge[root_edge] ||
      t.is_outer_edge(m.edge_dart[root_edge]))
    throw Error(errc::bad_format, "root edge is not a stem edge");
  int rd = m.edge_dart[root_edge];
  if (!fo.outgoing[rd]) rd = m.twn[rd];
  assert(fo.outgoing[rd]);

  OpeningResult res;
  res.root_edge = root_edge;
  res.node_of_vertex.assign(m.nv, -1);
  TernaryTree& tree = res.tree.tree;
  std::vector<bool>& pred = res.tree.parent_red;

  struct Pend {
    int vertex, pdart, pnode, pslot;
  };
  std::vector<Pend> st{{m.vert[rd], rd, -1, -1}};
  while (!st.empty()) {
    Pend p = st.back();
    st.pop_back();
    int id = tree.node_count();
    tree.child.push_back({-1, -1, -1});
    pred.push_back(red[m.edge_of[p.pdart]]);
    assert(res.node_of_vertex[p.vertex] < 0);
    res.node_of_vertex[p.vertex] = id;
    if (p.pnode >= 0) tree.child[p.pnode][p.pslot] = id;
    // remaining outgoing darts in ccw order from the parent are left, middle,
    // right; push them reversed to pop the left subtree first
    std::array<int, 3> slot_dart{-1, -1, -1};
    int s = 0;
    for (int d = m.nxt[p.pdart]; d != p.pdart; d = m.nxt[d])
      if (fo.outgoing[d]) {
        assert(s < 3);
        slot_dart[s++] = d;
      }
    assert(s == 3);
    for (int k = 2; k >= 0; --k) {
      int d = slot_dart[k];
      if (fo.tree_edge[m.edge_of[d]]) st.push_back({m.head(d), m.twn[d], id, k});
    }
  }
  assert(tree.node_count() == t.n_inner);
#ifndef NDEBUG
  BicoloredTree check = bicolor(tree, pred[0]);
  assert(check.parent_red == pred);
#endif
  return res;
}

OpeningResult opening(const Triangulation& t, const EdgePartition& red) {
  return opening(t, red, canonical_root_edge(t, red));
}

OpeningResult opening(const Triangulation& t) {
  AngularMap q = make_angular_map(t);
  TransversalStructure s = sweep_preimage(t, q, find_alpha0(t, q));
  return opening(t, minimalize(t, s.red));
}

std::string map_signature(const Triangulation& t, const EdgePartition* red, int marked_edge) {
  const PlanarMap& m = t.map;
  int nd = m.dart_count();
  std::vector<int> canon(nd, -1), order;
  order.reserve(nd);
  int d0 = m.dart_between(t.W(), t.N());
  canon[d0] = 0;
  order.push_back(d0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int x : {m.nxt[d], m.twn[d]})
      if (canon[x] < 0) {
        canon[x] = (int)order.size();
        order.push_back(x);
      }
  }
  assert((int)order.size() == nd);
  std::string out;
  for (int d : order) {
    out += std::to_string(canon[m.nxt[d]]);
    out += ',';
    out += std::to_string(canon[m.twn[d]]);
    out += ';';
  }
  if (red) {
    out += '|';
    for (int d : order) out += t.is_outer_edge(d) ? 'o' : ((*red)[m.edge_of[d]] ? 'r' : 'b');
  }
  if (marked_edge >= 0) {
    int a = m.edge_dart[marked_edge];
    out += "|m" + std::to_string(std::min(canon[a], canon[m.twn[a]]));
  }
  return out;
}

} // namespace trx
