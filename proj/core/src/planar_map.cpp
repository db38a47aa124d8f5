#include "trx/planar_map.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace trx {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_format: return "BAD_FORMAT";
    case errc::non_planar_rotation: return "NON_PLANAR_ROTATION";
    case errc::disconnected: return "DISCONNECTED";
    case errc::bad_outer_hint: return "BAD_OUTER_HINT";
    case errc::bad_label_order: return "BAD_LABEL_ORDER";
    case errc::non_triangular_inner_face: return "NON_TRIANGULAR_INNER_FACE";
    case errc::not_quad_outer: return "NOT_QUAD_OUTER";
    case errc::separating_triangle: return "SEPARATING_TRIANGLE";
    case errc::not_right_cycle: return "NOT_RIGHT_CYCLE";
    case errc::not_left_cycle: return "NOT_LEFT_CYCLE";
    case errc::stuck: return "STUCK";
    case errc::not_minimal: return "NOT_MINIMAL";
    case errc::no_orientation: return "NO_ORIENTATION";
    case errc::invalid_structure: return "INVALID_STRUCTURE";
    case errc::invalid_tree: return "INVALID_TREE";
    case errc::cap_exceeded: return "CAP_EXCEEDED";
  }
  return "UNKNOWN";
}

int PlanarMap::degree(int v) const {
  int d0 = vert_dart[v];
  if (d0 < 0) return 0;
  int deg = 0, d = d0;
  do {
    ++deg;
    d = nxt[d];
  } while (d != d0);
  return deg;
}

std::vector<int> PlanarMap::darts_at(int v) const {
  std::vector<int> out;
  int d0 = vert_dart[v];
  if (d0 < 0) return out;
  int d = d0;
  do {
    out.push_back(d);
    d = nxt[d];
  } while (d != d0);
  return out;
}

std::vector<int> PlanarMap::face_darts(int f) const {
  std::vector<int> out;
  int d0 = face_dart[f], d = d0;
  do {
    out.push_back(d);
    d = phi(d);
  } while (d != d0);
  return out;
}

std::vector<int> PlanarMap::face_vertices(int f) const {
  std::vector<int> out;
  for (int d : face_darts(f)) out.push_back(vert[d]);
  return out;
}

int PlanarMap::face_size(int f) const {
  int d0 = face_dart[f], d = d0, s = 0;
  do {
    ++s;
    d = phi(d);
  } while (d != d0);
  return s;
}

int PlanarMap::dart_between(int u, int v) const {
  int d0 = vert_dart[u];
  if (d0 < 0) return -1;
  int d = d0;
  do {
    if (head(d) == v) return d;
    d = nxt[d];
  } while (d != d0);
  return -1;
}

void PlanarMap::finalize() {
  int nd = dart_count();
  vert_dart.assign(nv, -1);
  for (int d = 0; d < nd; ++d)
    if (vert_dart[vert[d]] < 0) vert_dart[vert[d]] = d;

  edge_of.assign(nd, -1);
  edge_dart.clear();
  for (int d = 0; d < nd; ++d) {
    if (edge_of[d] >= 0) continue;
    int e = (int)edge_dart.size();
    edge_dart.push_back(d);
    edge_of[d] = e;
    edge_of[twn[d]] = e;
  }

  face_of.assign(nd, -1);
  face_dart.clear();
  for (int d = 0; d < nd; ++d) {
    if (face_of[d] >= 0) continue;
    int f = (int)face_dart.size();
    face_dart.push_back(d);
    int c = d;
    do {
      face_of[c] = f;
      c = phi(c);
    } while (c != d);
  }
}

void PlanarMap::check_consistency() const {
  int nd = dart_count();
  for (int d = 0; d < nd; ++d) {
    if (twn[twn[d]] != d || twn[d] == d) throw Error(errc::bad_format, "twin not an involution");
    if (nxt[prv[d]] != d || prv[nxt[d]] != d) throw Error(errc::bad_format, "rotation links broken");
    if (vert[nxt[d]] != vert[d]) throw Error(errc::bad_format, "rotation leaves vertex");
  }
}

PlanarMap build_map(const std::vector<std::vector<int>>& rot) {
  int nv = (int)rot.size();
  PlanarMap m;
  m.nv = nv;

  std::map<std::pair<int, int>, int> dart_at; // (origin, neighbor) -> dart
  for (int v = 0; v < nv; ++v) {
    std::vector<int> seen = rot[v];
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw Error(errc::bad_format, "duplicate edge in rotation list of vertex " + std::to_string(v));
    for (int u : rot[v]) {
      if (u < 0 || u >= nv) throw Error(errc::bad_format, "neighbor id out of range");
      if (u == v) throw Error(errc::bad_format, "loop at vertex " + std::to_string(v));
      int d = (int)m.vert.size();
      m.vert.push_back(v);
      dart_at[{v, u}] = d;
    }
  }
  int nd = (int)m.vert.size();
  m.nxt.assign(nd, -1);
  m.prv.assign(nd, -1);
  m.twn.assign(nd, -1);

  // ccw rotation links
  {
    int d = 0;
    for (int v = 0; v < nv; ++v) {
      int k = (int)rot[v].size();
      for (int i = 0; i < k; ++i) {
        int a = d + i, b = d + (i + 1) % k;
        m.nxt[a] = b;
        m.prv[b] = a;
      }
      d += k;
    }
  }
  // twins
  for (auto& [key, d] : dart_at) {
    auto it = dart_at.find({key.second, key.first});
    if (it == dart_at.end())
      throw Error(errc::bad_format, "edge " + std::to_string(key.first) + "-" +
                                        std::to_string(key.second) + " listed on one side only");
    m.twn[d] = it->second;
  }

  // connectivity over vertices
  if (nv > 0) {
    std::vector<char> vis(nv, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : rot[v])
        if (!vis[u]) {
          vis[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != nv) throw Error(errc::disconnected, "rotation system is not connected");
  }

  m.finalize();

  // genus 0 check: V - E + F = 2
  long euler = (long)nv - m.edge_count() + m.face_count();
  if (nd > 0 && euler != 2)
    throw Error(errc::non_planar_rotation,
                "Euler characteristic " + std::to_string(euler) + " (expected 2)");
  return m;
}

PlanarMap build_map(const std::vector<std::vector<int>>& rot, const std::vector<int>& outer_hint) {
  PlanarMap m = build_map(rot);
  int k = (int)outer_hint.size();
  for (int f = 0; f < m.face_count(); ++f) {
    if (m.face_size(f) != k) continue;
    std::vector<int> cyc = m.face_vertices(f);
    for (int s = 0; s < k; ++s) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = cyc[(s + i) % k] == outer_hint[i];
      if (ok) {
        m.outer_face = f;
        return m;
      }
    }
  }
  throw Error(errc::bad_outer_hint, "no face matches the outer cycle hint");
}

namespace {

std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    out.push_back(line);
  }
  return out;
}

} // namespace

MapFile parse_map_file(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw Error(errc::bad_format, "empty map file");

  std::istringstream head(lines[0]);
  std::string magic;
  int nv = -1;
  head >> magic >> nv;
  if (magic != "planarmap" || nv < 0) throw Error(errc::bad_format, "expected 'planarmap <count>' header");

  MapFile mf;
  mf.rot.assign(nv, {});
  std::vector<char> seen(nv, 0);
  std::size_t li = 1;
  for (; li < lines.size(); ++li) {
    std::istringstream ls(lines[li]);
    std::string tok;
    ls >> tok;
    if (tok == "outer:") break;
    if (tok.empty() || tok.back() != ':') throw Error(errc::bad_format, "expected '<v>:' line");
    int v = -1;
    try {
      v = std::stoi(tok.substr(0, tok.size() - 1));
    } catch (...) {
      throw Error(errc::bad_format, "bad vertex label '" + tok + "'");
    }
    if (v < 0 || v >= nv) throw Error(errc::bad_format, "vertex id out of range");
    if (seen[v]) throw Error(errc::bad_format, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    int u;
    while (ls >> u) mf.rot[v].push_back(u);
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) throw Error(errc::bad_format, "vertex " + std::to_string(v) + " missing");
  if (li >= lines.size()) throw Error(errc::bad_format, "missing 'outer:' line");
  {
    std::istringstream ls(lines[li]);
    std::string tok;
    ls >> tok;
    if (!(ls >> mf.outer[0] >> mf.outer[1] >> mf.outer[2] >> mf.outer[3]))
      throw Error(errc::bad_format, "outer line needs four vertex ids");
    ++li;
  }
  // optional structure section
  for (; li < lines.size(); ++li) {
    std::istringstream ls(lines[li]);
    MapFile::EdgeLine el{};
    std::string color;
    if (!(ls >> el.u >> el.v >> color >> el.head))
      throw Error(errc::bad_format, "bad structure line '" + lines[li] + "'");
    if (color == "red")
      el.red = true;
    else if (color == "blue")
      el.red = false;
    else
      throw Error(errc::bad_format, "bad color '" + color + "'");
    mf.edges.push_back(el);
  }
  return mf;
}

MapFile parse_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::bad_format, "cannot open " + path);
  return parse_map_file(in);
}

void write_map_lines(std::ostream& out, const PlanarMap& m, const std::array<int, 4>& outer) {
  out << "planarmap " << m.nv << "\n";
  for (int v = 0; v < m.nv; ++v) {
    out << v << ":";
    for (int d : m.darts_at(v)) out << " " << m.head(d);
    out << "\n";
  }
  out << "outer: " << outer[0] << " " << outer[1] << " " << outer[2] << " " << outer[3] << "\n";
}

} // namespace trx
