#include "trx/drawing.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "trx/errors.hpp"

namespace trx {

namespace {

bool border_dart(const DirectedSubmap& m, int d) {
  return m.map.face_of[d] == m.map.outer_face;
}

// ccw-last dart of the outgoing arc; the gap left by the outer face plays the
// role of the missing ingoing arc at the source
int leftmost_out_dart(const DirectedSubmap& m, int u) {
  for (int d : m.map.darts_at(u))
    if (m.outgoing[d] && (border_dart(m, d) || !m.outgoing[m.map.nxt[d]])) return d;
  assert(!"vertex has no outgoing edge");
  return -1;
}

// ccw-last dart of the ingoing arc (the arc runs leftmost to rightmost ccw)
int rightmost_in_dart(const DirectedSubmap& m, int u) {
  for (int d : m.map.darts_at(u))
    if (!m.outgoing[d] && (border_dart(m, d) || m.outgoing[m.map.nxt[d]])) return d;
  assert(!"vertex has no ingoing edge");
  return -1;
}

// darts of the separating path of v, oriented from source to sink
std::vector<int> separating_darts(const DirectedSubmap& m, int v) {
  std::vector<int> down;
  for (int u = v; u != m.source;) {
    int d = rightmost_in_dart(m, u);
    down.push_back(d);
    u = m.map.head(d);
  }
  std::vector<int> path;
  path.reserve(down.size() + 4);
  for (auto it = down.rbegin(); it != down.rend(); ++it) path.push_back(m.map.twn[*it]);
  for (int u = v; u != m.sink;) {
    int d = leftmost_out_dart(m, u);
    path.push_back(d);
    u = m.map.head(d);
  }
  return path;
}

// inner faces on one side of the separating path of v, by flooding
int faces_on_side(const DirectedSubmap& m, int v, bool left) {
  std::vector<int> darts = separating_darts(m, v);
  std::vector<bool> on_path(m.map.edge_count(), false);
  for (int d : darts) on_path[m.map.edge_of[d]] = true;
  std::vector<char> vis(m.map.face_count(), 0);
  vis[m.map.outer_face] = 1;
  std::vector<int> stk;
  for (int d : darts) {
    int f = m.map.face_of[left ? d : m.map.twn[d]];
    if (!vis[f]) {
      vis[f] = 1;
      stk.push_back(f);
    }
  }
  int count = (int)stk.size();
  while (!stk.empty()) {
    int f = stk.back();
    stk.pop_back();
    for (int d : m.map.face_darts(f)) {
      if (on_path[m.map.edge_of[d]]) continue;
      int g = m.map.face_of[m.map.twn[d]];
      if (!vis[g]) {
        vis[g] = 1;
        stk.push_back(g);
        ++count;
      }
    }
  }
  return count;
}

// abscissa of every vertex: the number of inner faces on the left of its
// separating path, in linear time via the cone decomposition
// x(v) = D(v) + L(west face of v)
std::vector<int> path_abscissas(const DirectedSubmap& m) {
  const PlanarMap& g = m.map;
  int nv = g.nv, nf = g.face_count();

  // top and bottom vertex of each inner face (the boundary of a face of a
  // bipolar orientation is two directed laterals)
  std::vector<int> top(nf, -1), bot(nf, -1);
  for (int f = 0; f < nf; ++f) {
    if (f == g.outer_face) continue;
    std::vector<int> fd = g.face_darts(f);
    int k = (int)fd.size();
    for (int i = 0; i < k; ++i) {
      int d = fd[i], p = fd[(i + k - 1) % k];
      if (m.outgoing[p] && !m.outgoing[d]) {
        assert(top[f] < 0);
        top[f] = g.vert[d];
      }
      if (!m.outgoing[p] && m.outgoing[d]) {
        assert(bot[f] < 0);
        bot[f] = g.vert[d];
      }
    }
    assert(top[f] >= 0 && bot[f] >= 0);
  }

  // topological order of the orientation
  std::vector<int> indeg(nv, 0), order;
  order.reserve(nv);
  for (int d = 0; d < g.dart_count(); ++d)
    if (m.outgoing[d]) ++indeg[g.head(d)];
  for (int v = 0; v < nv; ++v)
    if (indeg[v] == 0) order.push_back(v);
  assert(order.size() == 1 && order[0] == m.source);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int d : g.darts_at(order[i]))
      if (m.outgoing[d] && --indeg[g.head(d)] == 0) order.push_back(g.head(d));
  assert((int)order.size() == nv);

  // out-darts ccw from the rightmost one; the sector between consecutive fan
  // darts is the inner face on the left of the earlier dart
  auto out_fan = [&](int u) {
    std::vector<int> fan;
    for (int d : g.darts_at(u))
      if (m.outgoing[d] && (!m.outgoing[g.prv[d]] || border_dart(m, g.prv[d]))) {
        for (int x = d; m.outgoing[x]; x = g.nxt[x]) {
          fan.push_back(x);
          if (border_dart(m, x)) break;
        }
        break;
      }
    return fan;
  };
  auto in_fan = [&](int u) {
    std::vector<int> fan;
    for (int d : g.darts_at(u))
      if (!m.outgoing[d] && (m.outgoing[g.prv[d]] || border_dart(m, g.prv[d]))) {
        for (int x = d; !m.outgoing[x]; x = g.nxt[x]) {
          fan.push_back(x);
          if (border_dart(m, x)) break;
        }
        break;
      }
    return fan;
  };

  // U(v) = faces between the leftmost and rightmost outgoing paths of v;
  // consecutive cones overlap in the cone of the sector face's top vertex
  std::vector<int> U(nv, 0), D(nv, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    if (u == m.sink) continue;
    std::vector<int> fan = out_fan(u);
    assert(!fan.empty());
    int val = (int)fan.size() - 1 + U[g.head(fan[0])];
    for (std::size_t i = 1; i < fan.size(); ++i) {
      int f = g.face_of[fan[i - 1]];
      assert(f != g.outer_face);
      val += U[g.head(fan[i])] - U[top[f]];
    }
    U[u] = val;
  }
  for (int u : order) {
    if (u == m.source) continue;
    std::vector<int> fan = in_fan(u);
    assert(!fan.empty());
    int val = (int)fan.size() - 1 + D[g.head(fan[0])];
    for (std::size_t i = 1; i < fan.size(); ++i) {
      int f = g.face_of[fan[i - 1]];
      assert(f != g.outer_face);
      val += D[g.head(fan[i])] - D[bot[f]];
    }
    D[u] = val;
  }
  assert(U[m.source] == nf - 1 && D[m.sink] == nf - 1);

  // L(f) = faces strictly left of the separating path running along the right
  // lateral of f, minus f's own strip; resolved through the west face of an
  // interior vertex of the left lateral (always present: the blue edges
  // crossing f need tails there)
  std::vector<int> Lf(nf, -1), lx(nf, -1);
  for (int f = 0; f < nf; ++f) {
    if (f == g.outer_face) continue;
    std::vector<int> fd = g.face_darts(f);
    int k = (int)fd.size();
    for (int i = 0; i < k && lx[f] < 0; ++i)
      if (!m.outgoing[fd[(i + k - 1) % k]] && !m.outgoing[fd[i]]) lx[f] = g.vert[fd[i]];
    assert(lx[f] >= 0);
  }
  auto west_face = [&](int u) { return g.face_of[leftmost_out_dart(m, u)]; };
  std::vector<int> chain;
  for (int f0 = 0; f0 < nf; ++f0) {
    if (f0 == g.outer_face || Lf[f0] >= 0) continue;
    chain.push_back(f0);
    while (!chain.empty()) {
      int f = chain.back(), x = lx[f], w = west_face(x);
      int base;
      if (w == g.outer_face)
        base = 0;
      else if (Lf[w] >= 0)
        base = Lf[w];
      else {
        chain.push_back(w);
        continue;
      }
      Lf[f] = base + U[x] - U[top[f]] + D[x] - D[bot[f]] + 1;
      chain.pop_back();
    }
  }

  std::vector<int> xs(nv, 0);
  for (int v = 0; v < nv; ++v) {
    if (v == m.sink) {
      xs[v] = D[v];
      continue;
    }
    int w = west_face(v);
    xs[v] = D[v] + (w == g.outer_face ? 0 : Lf[w]);
  }
  return xs;
}

} // namespace

std::vector<int> separating_path(const DirectedSubmap& m, int v) {
  std::vector<int> verts{m.source};
  for (int d : separating_darts(m, v)) verts.push_back(m.map.head(d));
  return verts;
}

GridDrawing transversal_draw(const Triangulation& t, const TransversalStructure& s) {
  DirectedSubmap rm = red_map(t, s), bm = blue_map(t, s);
  GridDrawing d;
  d.width = rm.map.face_count() - 1;
  d.height = bm.map.face_count() - 1;
  d.xy.resize(t.map.nv);
  for (int v = 0; v < t.map.nv; ++v)
    d.xy[v] = {faces_on_side(rm, v, true), faces_on_side(bm, v, false)};
  return d;
}

GridDrawing fast_coordinates(const Triangulation& t, const TransversalStructure& s) {
  DirectedSubmap rm = red_map(t, s), bm = blue_map(t, s);
  std::vector<int> xr = path_abscissas(rm), xb = path_abscissas(bm);
  GridDrawing d;
  d.width = rm.map.face_count() - 1;
  d.height = bm.map.face_count() - 1;
  d.xy.resize(t.map.nv);
  for (int v = 0; v < t.map.nv; ++v) d.xy[v] = {xr[v], d.height - xb[v]};
  return d;
}

GridDrawing compact(const GridDrawing& d) {
  std::vector<int> xs, ys;
  xs.reserve(d.xy.size());
  ys.reserve(d.xy.size());
  for (auto& p : d.xy) {
    xs.push_back(p[0]);
    ys.push_back(p[1]);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  GridDrawing out;
  out.width = (int)xs.size() - 1;
  out.height = (int)ys.size() - 1;
  out.xy.resize(d.xy.size());
  for (std::size_t v = 0; v < d.xy.size(); ++v) {
    out.xy[v][0] = (int)(std::lower_bound(xs.begin(), xs.end(), d.xy[v][0]) - xs.begin());
    out.xy[v][1] = (int)(std::lower_bound(ys.begin(), ys.end(), d.xy[v][1]) - ys.begin());
  }
  return out;
}

int ccw_internal_edges(const Triangulation& t, const EdgePartition& red, bool red_color) {
  const PlanarMap& m = t.map;
  int count = 0;
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = m.edge_dart[e];
    if (t.is_outer_edge(d) || red[e] != red_color) continue;
    bool internal = true;
    for (int h : {d, m.twn[d]}) {
      int g = m.nxt[h];
      if (t.is_outer_edge(g) || red[m.edge_of[g]] != red_color) internal = false;
    }
    count += internal;
  }
  return count;
}

namespace {

long long cross3(const std::array<int, 2>& a, const std::array<int, 2>& b,
                 const std::array<int, 2>& c) {
  return (long long)(b[0] - a[0]) * (c[1] - a[1]) - (long long)(b[1] - a[1]) * (c[0] - a[0]);
}

DrawingReport fail(const std::string& why) { return {false, why}; }

} // namespace

DrawingReport verify_drawing(const Triangulation& t, const TransversalStructure& s,
                             const GridDrawing& d) {
  const PlanarMap& m = t.map;
  if ((int)d.xy.size() != m.nv) return fail("coordinate count mismatch");
  for (auto& p : d.xy)
    if (p[0] < 0 || p[0] > d.width || p[1] < 0 || p[1] > d.height)
      return fail("vertex off the grid");
  std::array<std::array<int, 2>, 4> want{{{0, d.height},
                                          {d.width, d.height},
                                          {d.width, 0},
                                          {0, 0}}};
  for (int i = 0; i < 4; ++i)
    if (d.xy[t.outer[i]] != want[i]) return fail("outer vertex not at its grid corner");
  {
    std::vector<std::array<int, 2>> pts(d.xy);
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      return fail("two vertices share a grid point");
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    int dd = m.edge_dart[e];
    if (t.is_outer_edge(dd)) continue;
    int tail = s.outgoing[dd] ? m.vert[dd] : m.head(dd);
    int head = s.outgoing[dd] ? m.head(dd) : m.vert[dd];
    int dx = d.xy[head][0] - d.xy[tail][0], dy = d.xy[head][1] - d.xy[tail][1];
    if (s.red[e] && !(dy > 0 && dx >= 0)) return fail("red edge not up and weakly right");
    if (!s.red[e] && !(dx > 0 && dy <= 0)) return fail("blue edge not right and weakly down");
  }
  long long area2 = 0;
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face) continue;
    std::vector<int> fd = m.face_darts(f);
    assert(fd.size() == 3);
    auto &a = d.xy[m.vert[fd[0]]], &b = d.xy[m.vert[fd[1]]], &c = d.xy[m.vert[fd[2]]];
    long long cr = cross3(a, b, c);
    if (cr <= 0) return fail("inner face not strictly counterclockwise");
    area2 += cr;
  }
  if (area2 != 2LL * d.width * d.height) return fail("face areas do not tile the grid");
  return {};
}

DrawingReport verify_drawing_brute(const Triangulation& t, const GridDrawing& d) {
  const PlanarMap& m = t.map;
  if ((int)d.xy.size() != m.nv) return fail("coordinate count mismatch");
  {
    std::vector<std::array<int, 2>> pts(d.xy);
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      return fail("two vertices share a grid point");
  }
  struct Seg {
    std::array<int, 2> a, b;
    int u, v;
  };
  std::vector<Seg> segs;
  for (int e = 0; e < m.edge_count(); ++e) {
    int dd = m.edge_dart[e];
    segs.push_back({d.xy[m.vert[dd]], d.xy[m.head(dd)], m.vert[dd], m.head(dd)});
  }
  auto on_segment = [](const std::array<int, 2>& a, const std::array<int, 2>& b,
                       const std::array<int, 2>& p) {
    return cross3(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
  };
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Seg &s1 = segs[i], &s2 = segs[j];
      int shared = (s1.u == s2.u) + (s1.u == s2.v) + (s1.v == s2.u) + (s1.v == s2.v);
      if (shared) {
        // segments with a common endpoint may only touch there
        std::array<int, 2> p = (s1.u == s2.u || s1.v == s2.u) ? s2.b : s2.a;
        std::array<int, 2> q = (s2.u == s1.u || s2.v == s1.u) ? s1.b : s1.a;
        if (on_segment(s1.a, s1.b, p) || on_segment(s2.a, s2.b, q))
          return fail("adjacent edges overlap");
        continue;
      }
      long long d1 = cross3(s1.a, s1.b, s2.a), d2 = cross3(s1.a, s1.b, s2.b);
      long long d3 = cross3(s2.a, s2.b, s1.a), d4 = cross3(s2.a, s2.b, s1.b);
      if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 && d2 && d3 && d4)
        return fail("two edges cross");
      if ((d1 == 0 && on_segment(s1.a, s1.b, s2.a)) || (d2 == 0 && on_segment(s1.a, s1.b, s2.b)) ||
          (d3 == 0 && on_segment(s2.a, s2.b, s1.a)) || (d4 == 0 && on_segment(s2.a, s2.b, s1.b)))
        return fail("edge passes through another edge");
    }
  return {};
}

std::string emit_svg(const Triangulation& t, const TransversalStructure& s, const GridDrawing& d,
                     int unit, bool grid_lines) {
  const PlanarMap& m = t.map;
  int w = d.width * unit, h = d.height * unit, margin = unit;
  std::ostringstream out;
  auto px = [&](int v) { return margin + d.xy[v][0] * unit; };
  auto py = [&](int v) { return margin + (d.height - d.xy[v][1]) * unit; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w + 2 * margin << ' '
      << h + 2 * margin << "\">\n";
  if (grid_lines) {
    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int x = 0; x <= d.width; ++x)
      out << "<line x1=\"" << margin + x * unit << "\" y1=\"" << margin << "\" x2=\""
          << margin + x * unit << "\" y2=\"" << margin + h << "\"/>\n";
    for (int y = 0; y <= d.height; ++y)
      out << "<line x1=\"" << margin << "\" y1=\"" << margin + y * unit << "\" x2=\""
          << margin + w << "\" y2=\"" << margin + y * unit << "\"/>\n";
    out << "</g>\n";
  }
  out << "<g stroke-width=\"2\">\n";
  for (int e = 0; e < m.edge_count(); ++e) {
    int dd = m.edge_dart[e];
    const char* color = t.is_outer_edge(dd) ? "#555555" : (s.red[e] ? "#cc2222" : "#2255cc");
    out << "<line x1=\"" << px(m.vert[dd]) << "\" y1=\"" << py(m.vert[dd]) << "\" x2=\""
        << px(m.head(dd)) << "\" y2=\"" << py(m.head(dd)) << "\" stroke=\"" << color << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#000000\">\n";
  for (int v = 0; v < m.nv; ++v)
    out << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"3\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string write_drawing(const GridDrawing& d) {
  std::ostringstream out;
  out << "grid " << d.width << '\t' << d.height << '\n';
  for (std::size_t v = 0; v < d.xy.size(); ++v)
    out << v << '\t' << d.xy[v][0] << '\t' << d.xy[v][1] << '\n';
  return out.str();
}

GridDrawing parse_drawing(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  GridDrawing d;
  if (!(in >> tag >> d.width >> d.height) || tag != "grid")
    throw Error(errc::bad_format, "expected `grid W H` header");
  long v, x, y;
  while (in >> v >> x >> y) {
    if (v != (long)d.xy.size()) throw Error(errc::bad_format, "vertex lines out of order");
    d.xy.push_back({(int)x, (int)y});
  }
  if (!in.eof()) throw Error(errc::bad_format, "trailing junk in drawing");
  return d;
}

} // namespace trx
