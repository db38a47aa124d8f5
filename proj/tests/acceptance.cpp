// Acceptance harness: one line of output per criterion, exit 0 iff all pass.
// Tolerances and case counts are pinned here on purpose; loosening them is a
// behavior change, not a test fix.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "trx/bijection.hpp"
#include "trx/drawing.hpp"
#include "trx/series.hpp"
#include "trx/ternary_tree.hpp"
#include "trx/transversal.hpp"

using namespace trx;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool(std::string&)> body;
};

// ---- shared helpers ----

std::vector<ClosureResult> distinct_objects(int n) {
  std::set<std::string> seen;
  std::vector<ClosureResult> out;
  for (const TernaryTree& t : enumerate_trees(n))
    for (bool root_red : {true, false}) {
      ClosureResult c = closure(bicolor(t, root_red));
      if (seen.insert(map_signature(c.t)).second) out.push_back(std::move(c));
    }
  return out;
}

ClosureResult random_instance(int n, Rng& rng) {
  return closure(bicolor(random_tree(n, rng), rng.coin()), rng.coin());
}

// ---- criterion 1: bijection round trips ----

bool run_bijection(std::string& detail) {
  const long tree_counts[] = {1, 3, 12, 55, 273, 1428};
  long cases = 0;
  for (int n = 1; n <= 6; ++n) {
    long here = 0;
    for (const TernaryTree& t : enumerate_trees(n)) {
      ++here;
      std::string word = tree_to_word(t);
      for (bool root_red : {true, false}) {
        BicoloredTree b = bicolor(t, root_red);
        ClosureResult c = closure(b);
        // tree -> map -> tree
        OpeningResult op = opening(c.t, c.red, c.root_edge);
        if (tree_to_word(op.tree.tree) != word || op.tree.parent_red != b.parent_red) {
          detail = "opening(closure(T)) != T at n=" + std::to_string(n);
          return false;
        }
        // map -> tree -> map, from the canonical root
        OpeningResult can = opening(c.t, c.red);
        ClosureResult back = closure(can.tree);
        if (map_signature(back.t, &back.red) != map_signature(c.t, &c.red)) {
          detail = "closure(opening(T)) != T at n=" + std::to_string(n);
          return false;
        }
      }
    }
    if (here != tree_counts[n - 1]) {
      detail = "tree enumeration miscount at n=" + std::to_string(n);
      return false;
    }
    cases += here;
  }

  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> images;
    for (const TernaryTree& t : enumerate_trees(n)) {
      ClosureResult c = closure(bicolor(t, true));
      images.insert(map_signature(c.t, &c.red, c.root_edge));
    }
    if ((long)images.size() != count_ternary(n).get_si()) {
      detail = "closure images at n=" + std::to_string(n) + ": " +
               std::to_string(images.size()) + " distinct, want " + count_ternary(n).get_str();
      return false;
    }
  }
  detail = std::to_string(cases) + " trees round-tripped, image counts exact";
  return true;
}

// ---- criterion 2: counting ----

bool run_counting(std::string& detail) {
  const long small[] = {1, 2, 6, 22};
  for (long n = 1; n <= 4; ++n)
    if (rooted_irreducible_count(n) != small[n - 1]) {
      detail = "rooted count wrong at n=" + std::to_string(n);
      return false;
    }
  for (long n = 1; n <= 50; ++n) {
    mpq_class q(4 * count_ternary(n), 2 * n + 2);
    q.canonicalize();
    if (q.get_den() != 1 || rooted_irreducible_count(n) != q.get_num()) {
      detail = "rooted count != 4 A_n / (2n+2) at n=" + std::to_string(n);
      return false;
    }
  }
  Series c = series_C(13);
  const long ref[] = {1, 0, 1, 3, 12, 52, 241};
  for (int k = 1; k <= 7; ++k)
    if (c.c[k] != ref[k - 1]) {
      detail = "series coefficient z^" + std::to_string(k) + " off";
      return false;
    }
  for (long n = 2; n <= 13; ++n)
    if (c.c[n - 1] != mpq_class(tutte_4connected(n))) {
      detail = "alternating-sum formula disagrees at n=" + std::to_string(n);
      return false;
    }
  detail = "rooted counts to n=50, series through z^7, cross-formula through z^12";
  return true;
}

// ---- criterion 3: structure correspondence ----

std::vector<EdgePartition> all_partitions(const Triangulation& t) {
  const PlanarMap& m = t.map;
  std::vector<int> inner;
  for (int e = 0; e < m.edge_count(); ++e)
    if (!t.is_outer_edge(m.edge_dart[e])) inner.push_back(e);
  std::vector<EdgePartition> out;
  for (long mask = 0; mask < (1L << inner.size()); ++mask) {
    EdgePartition red(m.edge_count(), false);
    for (size_t i = 0; i < inner.size(); ++i) red[inner[i]] = (mask >> i) & 1;
    if (verify_partition(t, red).ok) out.push_back(std::move(red));
  }
  return out;
}

long count_alpha0(const Triangulation& t, const AngularMap& q) {
  std::vector<int> want = alpha0_degrees(t, q);
  const PlanarMap& m = q.map;
  int ne = m.edge_count();
  std::vector<int> out_black(m.nv, 0), left(m.nv, 0);
  for (int d = 0; d < m.dart_count(); ++d) left[m.vert[d]]++;
  long found = 0;
  std::function<void(int)> rec = [&](int e) {
    if (e == ne) {
      ++found;
      return;
    }
    int d = m.edge_dart[e];
    int black = q.is_black(m.vert[d]) ? m.vert[d] : m.head(d);
    int white = q.is_black(m.vert[d]) ? m.head(d) : m.vert[d];
    for (int choice = 0; choice < 2; ++choice) {
      bool ob = choice == 0;
      int gb = ob ? 1 : 0, gw = ob ? 0 : 1;
      if (out_black[black] + gb > want[black] || out_black[white] + gw > want[white]) continue;
      if (out_black[black] + gb + left[black] - 1 < want[black] ||
          out_black[white] + gw + left[white] - 1 < want[white])
        continue;
      out_black[black] += gb, out_black[white] += gw;
      left[black]--, left[white]--;
      rec(e + 1);
      out_black[black] -= gb, out_black[white] -= gw;
      left[black]++, left[white]++;
    }
  };
  rec(0);
  return found;
}

bool run_correspondence(std::string& detail) {
  long objects = 0, structures = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const ClosureResult& inst : distinct_objects(n)) {
      ++objects;
      const Triangulation& t = inst.t;
      auto parts = all_partitions(t);
      AngularMap q = make_angular_map(t);
      long orientations = count_alpha0(t, q);
      // pairs = valid structures; directions are determined by the colors
      long pairs = 0;
      std::set<Alpha0Orientation> images;
      for (const EdgePartition& red : parts) {
        TransversalStructure s = orient_partition(t, red);
        if (!verify_structure(t, s).ok) {
          detail = "orient_partition built an invalid structure";
          return false;
        }
        ++pairs;
        images.insert(psi(t, q, red));
      }
      if ((long)parts.size() != pairs || pairs != orientations ||
          (long)images.size() != orientations) {
        detail = "counts differ on an object with n=" + std::to_string(n) + ": " +
                 std::to_string(parts.size()) + " partitions, " + std::to_string(pairs) +
                 " pairs, " + std::to_string(orientations) + " alpha0";
        return false;
      }
      structures += pairs;
      // sweep_preimage then psi is the identity on alpha0-orientations
      for (const Alpha0Orientation& o : images) {
        TransversalStructure s = sweep_preimage(t, q, o);
        if (psi(t, q, phi(s)) != o) {
          detail = "psi(sweep_preimage(o)) != o";
          return false;
        }
      }
    }
  }
  detail = std::to_string(objects) + " objects, " + std::to_string(structures) +
           " structures; all three counts agree, sweep inverts";
  return true;
}

// ---- criterion 4: lattice ----

bool run_lattice(std::string& detail) {
  Rng rng(0xACCE5501);
  long flips_done = 0;
  while (flips_done < 10000) {
    int n = 5 + (int)rng.below(46);
    ClosureResult inst = random_instance(n, rng);
    EdgePartition red = inst.red;
    // climb a random distance, exercising flop, then flip back down
    for (int step = 0; step < 25 && flips_done < 10000; ++step) {
      auto cyc = alternating_four_cycles(inst.t, red);
      std::vector<const AltFourCycle*> lefts;
      for (const auto& c : cyc)
        if (!c.right && !c.interior_edges.empty()) lefts.push_back(&c);
      if (lefts.empty()) break;
      const AltFourCycle& up = *lefts[rng.below(lefts.size())];
      EdgePartition high = flop(inst.t, red, up);
      auto cyc2 = alternating_four_cycles(inst.t, high);
      const AltFourCycle* down = nullptr;
      for (const auto& c : cyc2)
        if (c.verts == up.verts && c.right) down = &c;
      if (!down) {
        detail = "flopped cycle did not turn right";
        return false;
      }
      if (flip(inst.t, high, *down) != red) {
        detail = "flip(flop(x)) != x";
        return false;
      }
      ++flips_done;
      red = high;
    }
  }

  Rng rng2(0xACCE5502);
  for (int rep = 0; rep < 500; ++rep) {
    int n = 1 + (int)rng2.below(50);
    ClosureResult inst = random_instance(n, rng2);
    // wander up, then descend twice: canonical order vs random order
    EdgePartition red = inst.red;
    for (int step = 0; step < 12; ++step) {
      auto cyc = alternating_four_cycles(inst.t, red);
      std::vector<const AltFourCycle*> lefts;
      for (const auto& c : cyc)
        if (!c.right && !c.interior_edges.empty()) lefts.push_back(&c);
      if (lefts.empty()) break;
      red = flop(inst.t, red, *lefts[rng2.below(lefts.size())]);
    }
    EdgePartition canon = minimalize(inst.t, red);
    EdgePartition other = red;
    for (;;) {
      auto cyc = alternating_four_cycles(inst.t, other);
      std::vector<const AltFourCycle*> rights;
      for (const auto& c : cyc)
        if (c.right) rights.push_back(&c);
      if (rights.empty()) break;
      other = flip(inst.t, other, *rights[rng2.below(rights.size())]);
    }
    if (canon != other || canon != inst.red) {
      detail = "two flip orders reached different minima at n=" + std::to_string(n);
      return false;
    }
    // closure output is already at the bottom of the lattice
    for (const auto& c : alternating_four_cycles(inst.t, inst.red))
      if (c.right) {
        detail = "closure output has a right alternating 4-cycle";
        return false;
      }
  }
  detail = "10000 flip/flop pairs, 500 two-order descents, closure minimal throughout";
  return true;
}

// ---- criterion 5: drawing identities ----

bool run_drawing(std::string& detail) {
  Rng rng(0xACCE5503);
  for (int rep = 0; rep < 1000; ++rep) {
    int n = 1 + (int)rng.below(2000);
    ClosureResult inst = random_instance(n, rng);
    TransversalStructure s = orient_partition(inst.t, inst.red);
    GridDrawing fast = fast_coordinates(inst.t, s);
    GridDrawing ref = transversal_draw(inst.t, s);
    if (fast.xy != ref.xy || fast.width != ref.width || fast.height != ref.height) {
      detail = "fast and reference coordinates differ at n=" + std::to_string(n);
      return false;
    }
    if (fast.width + fast.height != inst.t.map.nv - 1) {
      detail = "W+H != |V|-1 at n=" + std::to_string(n);
      return false;
    }
    DrawingReport rep1 = verify_drawing(inst.t, s, fast);
    if (!rep1.ok) {
      detail = "planarity/orientation: " + rep1.reason;
      return false;
    }
    GridDrawing small = compact(fast);
    if (small.width != fast.width - ccw_internal_edges(inst.t, inst.red, true) ||
        small.height != fast.height - ccw_internal_edges(inst.t, inst.red, false)) {
      detail = "compaction count lemma failed at n=" + std::to_string(n);
      return false;
    }
    DrawingReport rep2 = verify_drawing(inst.t, s, small);
    if (!rep2.ok) {
      detail = "compacted drawing: " + rep2.reason;
      return false;
    }
  }
  detail = "1000 instances, n uniform in [1,2000], all identities exact";
  return true;
}

// ---- criterion 6: grid statistics ----

bool run_statistics(std::string& detail) {
  const int n = 2000, samples = 100;
  const double lo = 0.47, hi = 0.53, lo_c = 0.38, hi_c = 0.44;
  Rng master(1);
  double sw = 0, sh = 0, swc = 0, shc = 0;
  for (int k = 0; k < samples; ++k) {
    Rng rng = master.split(((std::uint64_t)n << 32) | (std::uint64_t)k);
    ClosureResult inst = random_instance(n, rng);
    TransversalStructure s = orient_partition(inst.t, inst.red);
    GridDrawing d = fast_coordinates(inst.t, s);
    GridDrawing c = compact(d);
    sw += d.width, sh += d.height, swc += c.width, shc += c.height;
  }
  double wn = sw / samples / n, hn = sh / samples / n;
  double wcn = swc / samples / n, hcn = shc / samples / n;
  char buf[160];
  std::snprintf(buf, sizeof buf, "W/n=%.4f H/n=%.4f (want %.2f..%.2f)  Wc/n=%.4f Hc/n=%.4f (want %.2f..%.2f)",
                wn, hn, lo, hi, wcn, hcn, lo_c, hi_c);
  detail = buf;
  return wn >= lo && wn <= hi && hn >= lo && hn <= hi && wcn >= lo_c && wcn <= hi_c &&
         hcn >= lo_c && hcn <= hi_c;
}

// ---- criterion 7: parameter means ----

bool run_means(std::string& detail) {
  std::vector<mpq_class> mr = mean_red_edges(200);
  std::vector<mpq_class> mi = mean_internal_red(200);
  double red_ratio = mpq_class(mr[200] / 200).get_d();
  double int_ratio = mpq_class(mi[200] / 200).get_d();
  const double red_target = 1.5, int_target = 5.0 / 54.0;
  bool red_ok = std::abs(red_ratio - red_target) <= 0.02 * red_target;
  bool int_ok = std::abs(int_ratio - int_target) <= 0.05 * int_target;

  // exhaustive averages at n <= 6 must agree with the series exactly
  BivariateSeries internal = bivariate_internal_red(6);
  for (int n = 1; n <= 6; ++n) {
    mpz_class wsum = 0, total = 0;
    long direct = 0;
    for (const TernaryTree& t : enumerate_trees(n))
      for (bool root_red : {true, false}) direct += count_internal_red_edges(bicolor(t, root_red));
    for (size_t k = 0; k < internal.zu[n].size(); ++k) {
      wsum += (long)k * internal.zu[n][k];
      total += internal.zu[n][k];
    }
    mpq_class series_mean(wsum, total);
    series_mean.canonicalize();
    mpq_class tree_mean(direct, 2 * count_ternary(n));
    tree_mean.canonicalize();
    if (series_mean != mi[n] || tree_mean != mi[n]) {
      detail = "exhaustive and series means differ at n=" + std::to_string(n);
      return false;
    }
    mpq_class red_mean(3 * n + 1, 2);
    red_mean.canonicalize();
    if (mr[n] != red_mean) {
      detail = "red edge mean is not (3n+1)/2 at n=" + std::to_string(n);
      return false;
    }
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "red/n=%.5f (target 1.5 +-2%%), internal/n=%.5f (target %.5f +-5%%); "
                "mean/n at 50,100,200: %.5f %.5f %.5f",
                red_ratio, int_ratio, int_target, mpq_class(mi[50] / 50).get_d(),
                mpq_class(mi[100] / 100).get_d(), mpq_class(mi[200] / 200).get_d());
  detail = buf;
  bool monotone = mi[50] * 100 < mi[100] * 50 && mi[100] * 200 < mi[200] * 100;
  return red_ok && int_ok && monotone;
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "bijection round trips", run_bijection},
      {2, "exact counting", run_counting},
      {3, "structure correspondence", run_correspondence},
      {4, "flip lattice", run_lattice},
      {5, "drawing identities", run_drawing},
      {6, "grid-size statistics", run_statistics},
      {7, "parameter means", run_means},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = clock_type::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d (%s): %s  [%.1fs]  %s\n", c.id, c.title, ok ? "PASS" : "FAIL",
                seconds_since(t0), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
