// Command-line front end: generation, closure/opening, drawing, exact
// counting, and the grid-size experiment harness.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trx/bijection.hpp"
#include "trx/drawing.hpp"
#include "trx/planar_map.hpp"
#include "trx/rng.hpp"
#include "trx/series.hpp"
#include "trx/ternary_tree.hpp"
#include "trx/transversal.hpp"
#include "trx/triangulation.hpp"

namespace {

using namespace trx;

void ensure(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

// "-" means stdout
struct OutFile {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit OutFile(const std::string& path) {
    if (path != "-") {
      file.open(path);
      ensure((bool)file, "cannot write " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  ensure((bool)f, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// first line that is neither blank nor a comment, whitespace stripped
std::string first_word(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::string w;
    for (char c : line)
      if (!std::isspace((unsigned char)c)) w += c;
    if (!w.empty()) return w;
  }
  throw Error(errc::bad_format, "no tree word found in " + where);
}

struct Bundle {
  Triangulation t;
  std::optional<TransversalStructure> s;
};

Bundle load_bundle(const std::string& path) {
  std::istringstream in(read_text(path));
  MapFile mf = parse_map_file(in);
  Bundle b{make_triangulation(mf), {}};
  if (mf.edges.empty()) return b;

  const PlanarMap& m = b.t.map;
  int inner = 0;
  for (int e = 0; e < m.edge_count(); ++e)
    if (!b.t.is_outer_edge(m.edge_dart[e])) ++inner;
  if ((int)mf.edges.size() != inner)
    throw Error(errc::bad_format, "expected " + std::to_string(inner) + " structure lines, got " +
                                      std::to_string(mf.edges.size()));
  EdgePartition red(m.edge_count(), false);
  std::vector<char> seen(m.edge_count(), 0);
  for (const auto& el : mf.edges) {
    std::string name = std::to_string(el.u) + "-" + std::to_string(el.v);
    int d = (el.u >= 0 && el.u < m.nv) ? m.dart_between(el.u, el.v) : -1;
    if (d < 0) throw Error(errc::bad_format, "structure line names absent edge " + name);
    if (b.t.is_outer_edge(d)) throw Error(errc::bad_format, "outer edge " + name + " in structure section");
    int e = m.edge_of[d];
    if (seen[e]) throw Error(errc::bad_format, "edge " + name + " listed twice");
    seen[e] = 1;
    red[e] = el.red;
    if (el.head != el.u && el.head != el.v)
      throw Error(errc::bad_format, "head of edge " + name + " is not an endpoint");
  }
  TransversalStructure s = orient_partition(b.t, red);
  // directions are implied by the colors; recorded heads must agree
  for (const auto& el : mf.edges) {
    int d = m.dart_between(el.u, el.v);
    int head = s.outgoing[d] ? m.head(d) : m.vert[d];
    if (head != el.head)
      throw Error(errc::bad_format, "edge " + std::to_string(el.u) + "-" + std::to_string(el.v) +
                                        " is directed toward " + std::to_string(head) +
                                        ", file says " + std::to_string(el.head));
  }
  b.s = std::move(s);
  return b;
}

void write_bundle(std::ostream& out, const Triangulation& t, const TransversalStructure& s,
                  const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  write_map_lines(out, t.map, t.outer);
  const PlanarMap& m = t.map;
  for (int e = 0; e < m.edge_count(); ++e) {
    int d = m.edge_dart[e];
    if (t.is_outer_edge(d)) continue;
    int u = m.vert[d], v = m.head(d);
    out << u << " " << v << " " << (s.red[e] ? "red" : "blue") << " " << (s.outgoing[d] ? v : u)
        << "\n";
  }
}

// ---- generate ----

void cmd_generate(int n, std::uint64_t seed, const std::string& out) {
  Rng rng(seed);
  TernaryTree tree = random_tree(n, rng);
  bool red_root = rng.coin(), far_pole = rng.coin();
  ClosureResult res = closure(bicolor(tree, red_root), far_pole);
  TransversalStructure s = orient_partition(res.t, res.red);
  OutFile of(out);
  of.out() << "# uniform random irreducible triangulation, n=" << n << " seed=" << seed << "\n";
  write_bundle(of.out(), res.t, s, "");
}

// ---- close ----

void cmd_close(const std::string& treefile, bool blue_root, bool far_pole, const std::string& out) {
  TernaryTree tree = tree_from_word(first_word(read_text(treefile), treefile));
  ClosureResult res = closure(bicolor(tree, !blue_root), far_pole);
  TransversalStructure s = orient_partition(res.t, res.red);
  int d = res.t.map.edge_dart[res.root_edge];
  OutFile of(out);
  of.out() << "# closure of " << tree.node_count() << "-node tree; root stem became edge "
           << res.t.map.vert[d] << "-" << res.t.map.head(d) << "\n";
  write_bundle(of.out(), res.t, s, "");
}

// ---- open ----

void cmd_open(const std::string& mapfile, const std::string& out) {
  Bundle b = load_bundle(mapfile);
  OpeningResult op;
  if (b.s) {
    EdgePartition red = minimalize(b.t, b.s->red);
    op = opening(b.t, red);
  } else {
    op = opening(b.t);
  }
  OutFile of(out);
  of.out() << tree_to_word(op.tree.tree) << "\n";
}

// ---- draw ----

void cmd_draw(const std::string& mapfile, bool compacted, const std::string& svg, int unit,
              bool no_minimalize, const std::string& out) {
  Bundle b = load_bundle(mapfile);
  TransversalStructure s;
  if (!b.s)
    s = minimal_structure(b.t);
  else if (no_minimalize)
    s = *b.s;
  else
    s = orient_partition(b.t, minimalize(b.t, b.s->red));

  GridDrawing d = fast_coordinates(b.t, s);
  DrawingReport rep = verify_drawing(b.t, s, d);
  ensure(rep.ok, "drawing verification failed: " + rep.reason);
  if (compacted) {
    d = compact(d);
    rep = verify_drawing(b.t, s, d);
    ensure(rep.ok, "compacted drawing verification failed: " + rep.reason);
  }
  OutFile of(out);
  of.out() << write_drawing(d);
  if (!svg.empty()) {
    std::ofstream sf(svg);
    ensure((bool)sf, "cannot write " + svg);
    sf << emit_svg(b.t, s, d, unit);
  }
}

// ---- count ----

void cmd_count(const std::string& mode, long n) {
  mpz_class v;
  if (mode == "rooted")
    v = rooted_irreducible_count(n);
  else if (mode == "unrooted")
    v = unrooted_irreducible_count(n);
  else
    v = tutte_4connected(n);
  std::cout << v.get_str() << "\n";
}

// ---- series ----

void cmd_series(const std::string& which, int order) {
  std::ostream& o = std::cout;
  if (which == "A" || which == "C") {
    Series s = which == "A" ? series_A(order) : series_C(order);
    o << "#n\t" << (which == "A" ? "ternary_trees" : "rooted_4connected") << "\n";
    for (int k = 0; k <= order; ++k) o << k << "\t" << s.c[k].get_str() << "\n";
    return;
  }
  BivariateSeries bs = which == "RB" ? bivariate_red_edges(order) : bivariate_internal_red(order);
  o << "#n\tk\t" << (which == "RB" ? "trees_with_k_red_edges" : "trees_with_k_internal_red")
    << "\n";
  for (int n = 0; n < (int)bs.zu.size(); ++n)
    for (int k = 0; k < (int)bs.zu[n].size(); ++k)
      if (bs.zu[n][k] != 0) o << n << "\t" << k << "\t" << bs.zu[n][k].get_str() << "\n";
}

// ---- stats ----

struct ExperimentConfig {
  std::vector<int> sizes{2000};
  int samples = 100;
  std::uint64_t seed = 1;
  bool compact = false; // additionally verify the compacted drawing per sample
};

struct Sample {
  int w, h, wc, hc, red_edges;
};

Sample one_sample(int n, Rng& rng, bool verify_compacted) {
  TernaryTree tree = random_tree(n, rng);
  bool red_root = rng.coin(), far_pole = rng.coin();
  BicoloredTree b = bicolor(tree, red_root);
  ClosureResult res = closure(b, far_pole);
  TransversalStructure s = orient_partition(res.t, res.red);
  GridDrawing d = fast_coordinates(res.t, s);

  // per-sample identities, checked on every run
  int fr = red_map(res.t, s).map.face_count() - 1;
  int fb = blue_map(res.t, s).map.face_count() - 1;
  ensure(d.width == fr, "width != inner face count of the red map");
  ensure(d.height == fb, "height != inner face count of the blue map");
  ensure(d.width + d.height == res.t.map.nv - 1, "W+H != |V|-1");
  int er = count_red_edges(b);
  ensure(d.width == er - n + 1, "W != red tree edges - n + 1");
  DrawingReport rep = verify_drawing(res.t, s, d);
  ensure(rep.ok, rep.reason);

  GridDrawing dc = compact(d);
  ensure(dc.width == d.width - ccw_internal_edges(res.t, res.red, true),
         "compacted width != W - ccw-internal red");
  ensure(dc.height == d.height - ccw_internal_edges(res.t, res.red, false),
         "compacted height != H - ccw-internal blue");
  if (verify_compacted) {
    rep = verify_drawing(res.t, s, dc);
    ensure(rep.ok, "compacted: " + rep.reason);
  }
  return {d.width, d.height, dc.width, dc.height, er};
}

struct Acc {
  double sum = 0, sq = 0;
  long n = 0;
  void add(double x) {
    sum += x;
    sq += x * x;
    ++n;
  }
  double mean() const { return sum / (double)n; }
  double sd() const {
    return n > 1 ? std::sqrt((sq - sum * sum / (double)n) / (double)(n - 1)) : 0.0;
  }
};

void cmd_stats(const ExperimentConfig& cfg, const std::string& out) {
  OutFile of(out);
  std::ostream& o = of.out();
  o << "# grid-size statistics; seed=" << cfg.seed << " samples_per_size=" << cfg.samples
    << (cfg.compact ? " (compacted drawings re-verified)" : "") << "\n";
  o << "#n\tsamples\tmean_W\tsd_W\tmean_H\tsd_H\tmean_Wc\tsd_Wc\tmean_Hc\tsd_Hc"
       "\tW_over_n\tH_over_n\tWc_over_n\tHc_over_n\tmean_red_edges\n";
  Rng master(cfg.seed);
  for (int n : cfg.sizes) {
    Acc w, h, wc, hc, er;
    for (int k = 0; k < cfg.samples; ++k) {
      // per-sample stream fixed by (seed, n, k): order-independent
      Rng rng = master.split(((std::uint64_t)n << 32) | (std::uint64_t)k);
      Sample s = one_sample(n, rng, cfg.compact);
      w.add(s.w);
      h.add(s.h);
      wc.add(s.wc);
      hc.add(s.hc);
      er.add(s.red_edges);
    }
    o << n << "\t" << cfg.samples << std::fixed << std::setprecision(3);
    for (const Acc* a : {&w, &h, &wc, &hc}) o << "\t" << a->mean() << "\t" << a->sd();
    o << std::setprecision(6);
    for (const Acc* a : {&w, &h, &wc, &hc}) o << "\t" << a->mean() / n;
    o << std::setprecision(3) << "\t" << er.mean() << "\n";
  }
}

// ---- verify ----

bool report(std::ostream& o, const std::string& path, const std::string& check, bool ok,
            const std::string& detail) {
  o << path << "\t" << check << "\t" << (ok ? "pass" : "FAIL") << "\t" << detail << "\n";
  return ok;
}

bool cmd_verify(const std::vector<std::string>& files) {
  std::ostream& o = std::cout;
  o << "#file\tcheck\tresult\tdetail\n";
  bool all_ok = true;
  std::optional<Bundle> ctx; // most recent map, context for drawing files
  for (const auto& path : files) {
    std::string text;
    try {
      text = read_text(path);
    } catch (const std::exception& e) {
      all_ok &= report(o, path, "read", false, e.what());
      continue;
    }
    std::istringstream probe(text);
    std::string head;
    probe >> head;
    while (head == "#") { // skip comment lines for sniffing
      std::string rest;
      std::getline(probe, rest);
      probe >> head;
    }
    if (head == "planarmap") {
      try {
        Bundle b = load_bundle(path);
        std::string what = std::to_string(b.t.n_inner) + " inner vertices";
        all_ok &= report(o, path, "map", true, what);
        if (b.s) {
          bool min = is_minimal(b.t, b.s->red);
          all_ok &= report(o, path, "structure", true, min ? "minimal" : "valid, not minimal");
        }
        ctx = std::move(b);
      } catch (const std::exception& e) {
        all_ok &= report(o, path, "map", false, e.what());
      }
    } else if (head == "grid") {
      if (!ctx) {
        all_ok &= report(o, path, "drawing", false, "no map file given before this drawing");
        continue;
      }
      try {
        GridDrawing d = parse_drawing(text);
        TransversalStructure s = ctx->s ? *ctx->s : minimal_structure(ctx->t);
        DrawingReport rep = verify_drawing(ctx->t, s, d);
        bool ok = rep.ok;
        std::string detail = rep.reason;
        if (ok) {
          rep = verify_drawing_brute(ctx->t, d);
          ok = rep.ok;
          detail = ok ? std::to_string(d.width) + "x" + std::to_string(d.height) : rep.reason;
        }
        all_ok &= report(o, path, "drawing", ok, detail);
      } catch (const std::exception& e) {
        all_ok &= report(o, path, "drawing", false, e.what());
      }
    } else {
      try {
        TernaryTree t = tree_from_word(first_word(text, path));
        all_ok &= report(o, path, "tree", true, std::to_string(t.node_count()) + " nodes");
      } catch (const std::exception& e) {
        all_ok &= report(o, path, "tree", false, e.what());
      }
    }
  }
  return all_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"transversal structures on irreducible triangulations"};
  app.require_subcommand(1);

  // generate
  int gen_n = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("generate", "uniform random triangulation with its minimal structure");
  gen->add_option("n", gen_n, "number of inner vertices")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("-o,--output", gen_out, "output file, - for stdout");

  // close
  std::string close_tree, close_out = "-";
  bool close_blue = false, close_far = false;
  auto* close_cmd = app.add_subcommand("close", "close a ternary tree into a triangulation");
  close_cmd->add_option("treefile", close_tree, "tree word file, - for stdin")->required();
  close_cmd->add_flag("--blue-root", close_blue, "color the root stem blue instead of red");
  close_cmd->add_flag("--far-pole", close_far, "plug the root interval into N (red) / E (blue)");
  close_cmd->add_option("-o,--output", close_out, "output file, - for stdout");

  // open
  std::string open_map, open_out = "-";
  auto* open_cmd = app.add_subcommand("open", "open a triangulation into its ternary tree");
  open_cmd->add_option("mapfile", open_map, "map file, - for stdin")->required();
  open_cmd->add_option("-o,--output", open_out, "output file, - for stdout");

  // draw
  std::string draw_map, draw_svg, draw_out = "-";
  bool draw_compact = false, draw_nomin = false;
  int draw_unit = 40;
  auto* draw_cmd = app.add_subcommand("draw", "straight-line grid drawing by face counting");
  draw_cmd->add_option("mapfile", draw_map, "map file, - for stdin")->required();
  draw_cmd->add_flag("--compact", draw_compact, "delete unused grid lines");
  draw_cmd->add_option("--svg", draw_svg, "also write an SVG rendering to this path");
  draw_cmd->add_option("--unit", draw_unit, "SVG pixels per grid unit")->check(CLI::PositiveNumber);
  draw_cmd->add_flag("--no-minimalize", draw_nomin,
                     "draw the structure from the file as is (default: minimalize first)");
  draw_cmd->add_option("-o,--output", draw_out, "output file, - for stdout");

  // count
  long count_n = 1;
  auto* count_cmd = app.add_subcommand("count", "exact counts of triangulation families");
  auto* count_mode = count_cmd->add_option_group("family", "what to count");
  bool cm_rooted = false, cm_unrooted = false, cm_4c = false;
  count_mode->add_flag("--rooted", cm_rooted, "rooted irreducible triangulations, n inner vertices");
  count_mode->add_flag("--unrooted", cm_unrooted, "unrooted irreducible triangulations");
  count_mode->add_flag("--4connected", cm_4c, "rooted 4-connected triangulations, n+2 vertices");
  count_mode->require_option(1);
  count_cmd->add_option("n", count_n, "size parameter")
      ->required()
      ->check(CLI::Range((long)1, std::numeric_limits<long>::max()));

  // series
  std::string ser_which;
  int ser_order = 10;
  auto* ser_cmd = app.add_subcommand("series", "exact generating-series coefficients");
  ser_cmd->add_option("--which", ser_which, "A: ternary trees, C: rooted 4-connected, "
                                            "RB: trees by red edges, FG: trees by internal red")
      ->required()
      ->check(CLI::IsMember({"A", "C", "RB", "FG"}));
  ser_cmd->add_option("--order", ser_order, "truncation order")->check(CLI::PositiveNumber);

  // stats
  ExperimentConfig cfg;
  std::string stats_out = "-";
  auto* stats_cmd = app.add_subcommand("stats", "grid-size statistics over random instances");
  stats_cmd->add_option("--sizes", cfg.sizes, "inner vertex counts, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  stats_cmd->add_option("--samples", cfg.samples, "samples per size")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--seed", cfg.seed, "master seed; per-sample seeds are split from it");
  stats_cmd->add_flag("--compact", cfg.compact, "re-verify the compacted drawing of every sample");
  stats_cmd->add_option("-o,--output", stats_out, "output file, - for stdout");

  // verify
  std::vector<std::string> ver_files;
  auto* ver_cmd = app.add_subcommand("verify", "validate map, structure, tree and drawing files");
  ver_cmd->add_option("files", ver_files,
                      "files to check; a drawing is checked against the last map before it")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen)
      cmd_generate(gen_n, gen_seed, gen_out);
    else if (*close_cmd)
      cmd_close(close_tree, close_blue, close_far, close_out);
    else if (*open_cmd)
      cmd_open(open_map, open_out);
    else if (*draw_cmd)
      cmd_draw(draw_map, draw_compact, draw_svg, draw_unit, draw_nomin, draw_out);
    else if (*count_cmd) {
      if (cm_4c && count_n < 2)
        throw std::runtime_error("--4connected needs n >= 2");
      cmd_count(cm_rooted ? "rooted" : cm_unrooted ? "unrooted" : "4connected", count_n);
    } else if (*ser_cmd)
      cmd_series(ser_which, ser_order);
    else if (*stats_cmd)
      cmd_stats(cfg, stats_out);
    else if (*ver_cmd)
      return cmd_verify(ver_files) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
