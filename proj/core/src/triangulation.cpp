#include "trx/triangulation.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace trx {

namespace {

// Index of the face whose cycle reads `outer` in phi (clockwise) order, or -1.
int find_outer_face(const PlanarMap& m, const std::array<int, 4>& outer) {
  for (int f = 0; f < m.face_count(); ++f) {
    if (m.face_size(f) != 4) continue;
    std::vector<int> cyc = m.face_vertices(f);
    for (int s = 0; s < 4; ++s) {
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) ok = cyc[(s + i) % 4] == outer[i];
      if (ok) return f;
    }
  }
  return -1;
}

} // namespace

void check_quad_outer(const PlanarMap& m, const std::array<int, 4>& outer) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (outer[i] == outer[j]) throw Error(errc::not_quad_outer, "outer labels not distinct");
  if (find_outer_face(m, outer) >= 0) return;
  std::array<int, 4> rev = {outer[0], outer[3], outer[2], outer[1]};
  if (find_outer_face(m, rev) >= 0)
    throw Error(errc::bad_label_order, "outer labels W,N,E,S run counterclockwise");
  throw Error(errc::not_quad_outer, "outer labels do not bound a quadrangular face");
}

void check_inner_triangles(const PlanarMap& m) {
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face) continue;
    if (m.face_size(f) != 3)
      throw Error(errc::non_triangular_inner_face,
                  "inner face of size " + std::to_string(m.face_size(f)));
  }
}

bool has_separating_triangle(const PlanarMap& m) {
  std::vector<std::vector<int>> adj(m.nv);
  for (int v = 0; v < m.nv; ++v) {
    adj[v] = m.darts_at(v);
    for (int& d : adj[v]) d = m.head(d);
    std::sort(adj[v].begin(), adj[v].end());
  }
  auto linked = [&](int u, int v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  };
  auto facial = [&](int d, int w) {
    // is one of the two faces at edge d the triangle closed by w?
    for (int s : {d, m.twn[d]}) {
      int f = m.face_of[s];
      if (m.face_size(f) == 3 && m.vert[m.phi(m.phi(s))] == w) return true;
    }
    return false;
  };
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = m.edge_dart[e];
    int u = m.vert[d], v = m.head(d);
    if (u > v) continue; // one orientation per edge
    for (int w : adj[u]) {
      if (w <= v) continue; // count each triangle once, u < v < w
      if (!linked(v, w)) continue;
      if (!facial(d, w)) return true;
    }
  }
  return false;
}

Triangulation make_triangulation(const std::vector<std::vector<int>>& rot,
                                 const std::array<int, 4>& outer) {
  Triangulation t;
  t.map = build_map(rot);
  check_quad_outer(t.map, outer);
  t.map.outer_face = find_outer_face(t.map, outer);
  t.outer = outer;
  t.n_inner = t.map.nv - 4;
  if (t.n_inner < 1) throw Error(errc::bad_format, "need at least one inner vertex");
  check_inner_triangles(t.map);
  if (has_separating_triangle(t.map))
    throw Error(errc::separating_triangle, "map contains a separating 3-cycle");
  // Euler consequences; cannot fail once the face checks passed
  if (t.map.edge_count() - 4 != 3 * t.n_inner + 1 ||
      t.map.face_count() - 1 != 2 * t.n_inner + 2)
    throw Error(errc::bad_format, "edge/face count out of line with Euler relation");
  return t;
}

Triangulation make_triangulation(const MapFile& mf) { return make_triangulation(mf.rot, mf.outer); }

AngularMap make_angular_map(const Triangulation& t) {
  const PlanarMap& m = t.map;
  AngularMap q;
  q.n_black = m.nv;
  q.white_of_face.assign(m.face_count(), -1);
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face) continue;
    q.white_of_face[f] = m.nv + (int)q.face_of_white.size();
    q.face_of_white.push_back(f);
  }

  int nq = m.nv + (int)q.face_of_white.size();
  std::vector<std::vector<int>> rot(nq);
  // black rotations: one angle per dart whose left face is inner, in ccw order
  std::vector<int> angle_rank(m.dart_count(), -1);
  for (int v = 0; v < m.nv; ++v)
    for (int d : m.darts_at(v)) {
      int f = m.face_of[d];
      if (f == m.outer_face) continue;
      angle_rank[d] = (int)rot[v].size();
      rot[v].push_back(q.white_of_face[f]);
    }
  // white rotations: the face cycle lists the corners ccw around the face
  for (std::size_t w = 0; w < q.face_of_white.size(); ++w)
    for (int d : m.face_darts(q.face_of_white[w])) rot[m.nv + w].push_back(m.vert[d]);

  q.map = build_map(rot);

  // darts of build_map are numbered per vertex in rotation order
  std::vector<int> offset(nq + 1, 0);
  for (int v = 0; v < nq; ++v) offset[v + 1] = offset[v] + (int)rot[v].size();
  q.qdart_of_tdart.assign(m.dart_count(), -1);
  q.qedge_of_tdart.assign(m.dart_count(), -1);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (angle_rank[d] < 0) continue;
    int qd = offset[m.vert[d]] + angle_rank[d];
    q.qdart_of_tdart[d] = qd;
    q.qedge_of_tdart[d] = q.map.edge_of[qd];
  }
  return q;
}

std::vector<int> alpha0_degrees(const Triangulation& t, const AngularMap& q) {
  std::vector<int> deg(q.map.nv, 1); // whites
  for (int v = 0; v < q.n_black; ++v) deg[v] = 4;
  deg[t.W()] = 0;
  deg[t.E()] = 0;
  deg[t.N()] = 2;
  deg[t.S()] = 2;
  return deg;
}

std::vector<int> alpha0_outdegrees(const AngularMap& q, const Alpha0Orientation& o) {
  std::vector<int> out(q.map.nv, 0);
  for (int e = 0; e < q.map.edge_count(); ++e) {
    int d = q.map.edge_dart[e];
    int a = q.map.vert[d], b = q.map.head(d);
    int black = q.is_black(a) ? a : b;
    int white = q.is_black(a) ? b : a;
    ++out[o[e] ? black : white];
  }
  return out;
}

namespace {

// max-flow (Dinic) on a unit-ish network; enough for the alpha0 search
struct FlowNet {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, it;

  explicit FlowNet(int n) : g(n) {}

  void add(int a, int b, int cap) {
    g[a].push_back({b, (int)g[b].size(), cap});
    g[b].push_back({a, (int)g[a].size() - 1, 0});
  }

  bool bfs(int s, int t) {
    level.assign(g.size(), -1);
    std::queue<int> bq;
    level[s] = 0;
    bq.push(s);
    while (!bq.empty()) {
      int v = bq.front();
      bq.pop();
      for (const Arc& a : g[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          bq.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = it[v]; i < (int)g[v].size(); ++i) {
      Arc& a = g[v][i];
      if (a.cap <= 0 || level[a.to] != level[v] + 1) continue;
      int got = dfs(a.to, t, std::min(f, a.cap));
      if (got > 0) {
        a.cap -= got;
        g[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (bfs(s, t)) {
      it.assign(g.size(), 0);
      while (int f = dfs(s, t, 1 << 30)) total += f;
    }
    return total;
  }
};

} // namespace

Alpha0Orientation find_alpha0(const Triangulation& t, const AngularMap& q) {
  int ne = q.map.edge_count(), nvq = q.map.nv;
  std::vector<int> deg = alpha0_degrees(t, q);
  // source -> edge (1) -> chosen tail vertex -> sink (alpha0 demand)
  int source = ne + nvq, sink = source + 1;
  FlowNet net(sink + 1);
  std::vector<std::array<int, 2>> arc_at(ne); // index into g[e] for both ends
  for (int e = 0; e < ne; ++e) {
    net.add(source, e, 1);
    int d = q.map.edge_dart[e];
    arc_at[e][0] = (int)net.g[e].size();
    net.add(e, ne + q.map.vert[d], 1);
    arc_at[e][1] = (int)net.g[e].size();
    net.add(e, ne + q.map.head(d), 1);
  }
  for (int v = 0; v < nvq; ++v) net.add(ne + v, sink, deg[v]);

  if (net.max_flow(source, sink) != ne)
    throw Error(errc::no_orientation, "alpha0 out-degrees are not realizable");

  Alpha0Orientation o(ne, false);
  for (int e = 0; e < ne; ++e) {
    int d = q.map.edge_dart[e];
    // the saturated arc points at the tail vertex
    int tail = net.g[e][arc_at[e][0]].cap == 0 ? q.map.vert[d] : q.map.head(d);
    o[e] = q.is_black(tail);
  }
  return o;
}

} // namespace trx
