#include <map>
#include <set>
#include <string>

#include "doctest.h"

#include "helpers.hpp"
#include "trx/ternary_tree.hpp"

using namespace trx;

TEST_SUITE("ternary_tree") {

TEST_CASE("word round trip and validation") {
  CHECK(is_valid_word("NLLL"));
  CHECK(is_valid_word("NNLLLLL"));
  CHECK(is_valid_word("L")); // the 0-node tree
  CHECK_FALSE(is_valid_word(""));
  CHECK_FALSE(is_valid_word("N"));
  CHECK_FALSE(is_valid_word("NLL"));
  CHECK_FALSE(is_valid_word("NLLLL"));
  CHECK_FALSE(is_valid_word("NLXL"));
  CHECK_FALSE(is_valid_word("LNLLL"));
  CHECK_THROWS_AS(tree_from_word("NLL"), Error);

  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) {
      std::string w = tree_to_word(t);
      CHECK((int)w.size() == 3 * n + 1);
      CHECK(is_valid_word(w));
      CHECK(tree_to_word(tree_from_word(w)) == w);
    }
  Rng rng(5);
  TernaryTree big = random_tree(300, rng);
  CHECK(tree_to_word(tree_from_word(tree_to_word(big))) == tree_to_word(big));
}

TEST_CASE("enumeration matches the closed-form count") {
  // (3n)!/((2n+1)! n!) = 1, 3, 12, 55, 273, 1428
  long expect[] = {1, 1, 3, 12, 55, 273, 1428};
  for (int n = 1; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    CHECK((long)trees.size() == expect[n]);
    CHECK(count_ternary(n) == expect[n]);
    std::set<std::string> words;
    for (const auto& t : trees) words.insert(tree_to_word(t));
    CHECK((int)words.size() == (int)trees.size()); // no duplicates
    // lexicographic order
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
  CHECK_THROWS_AS(enumerate_trees(9, 8), Error);
  CHECK(count_ternary(0) == 1);
  CHECK(count_ternary(20) == mpz_class("102240109897695")); // (60)!/(41! 20!)
}

TEST_CASE("uniform sampler chi-square") {
  int n = 4;
  auto trees = enumerate_trees(n);
  std::map<std::string, int> freq;
  for (const auto& t : trees) freq[tree_to_word(t)] = 0;
  Rng rng(987654321);
  int per = 1000, total = per * (int)trees.size();
  for (int i = 0; i < total; ++i) {
    auto it = freq.find(tree_to_word(random_tree(n, rng)));
    REQUIRE(it != freq.end());
    it->second++;
  }
  double chi2 = 0;
  for (const auto& [w, c] : freq) chi2 += (c - per) * double(c - per) / per;
  // 54 degrees of freedom; 110 is far in the tail (p < 1e-5)
  CHECK(chi2 < 110.0);
  CHECK(chi2 > 20.0); // and not suspiciously flat
}

TEST_CASE("sampler is deterministic per seed") {
  Rng a(77), b(77), c(78);
  CHECK(tree_to_word(random_tree(50, a)) == tree_to_word(random_tree(50, b)));
  CHECK(tree_to_word(random_tree(50, a)) != tree_to_word(random_tree(50, c)));
}

TEST_CASE("bicoloring alternates around every node") {
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    TernaryTree t = random_tree(30, rng);
    for (bool rr : {true, false}) {
      BicoloredTree b = bicolor(t, rr);
      CHECK(b.parent_red[t.root] == rr);
      for (int v = 0; v < t.node_count(); ++v) {
        bool c = b.parent_red[v];
        CHECK(b.slot_red(v, 0) == !c);
        CHECK(b.slot_red(v, 1) == c);
        CHECK(b.slot_red(v, 2) == !c);
        for (int s = 0; s < 3; ++s)
          if (t.child[v][s] >= 0) CHECK(b.parent_red[t.child[v][s]] == b.slot_red(v, s));
      }
    }
  }
}

TEST_CASE("red edge counters on small trees") {
  // single node, red root stem: stem colors (root, l, m, r) = (r, b, r, b)
  TernaryTree one = tree_from_word("NLLL");
  CHECK(count_red_edges(bicolor(one, true)) == 2);
  CHECK(count_red_edges(bicolor(one, false)) == 2);
  CHECK(count_internal_red_edges(bicolor(one, true)) == 0);

  // root with a middle child: the middle edge is red and the child's ccw
  // successor slots are stems, so it is not internal
  // 7 edge/stem slots total; red root gives root stem, middle edge, child
  // middle stem
  TernaryTree mid = tree_from_word("NLNLLLL");
  CHECK(count_red_edges(bicolor(mid, true)) == 3);
  CHECK(count_red_edges(bicolor(mid, false)) == 4);
  CHECK(count_internal_red_edges(bicolor(mid, true)) == 0);

  // total red over both colors is symmetric: 3n+1 per shape pair
  Rng rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    TernaryTree t = random_tree(25, rng);
    CHECK(count_red_edges(bicolor(t, true)) + count_red_edges(bicolor(t, false)) == 3 * 25 + 1);
  }
}

} // TEST_SUITE
