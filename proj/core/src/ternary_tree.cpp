#include "trx/ternary_tree.hpp"

#include <algorithm>

#include "trx/errors.hpp"

namespace trx {

std::string tree_to_word(const TernaryTree& t) {
  std::string w;
  w.reserve(3 * t.node_count() + 1);
  std::vector<int> stack{t.root}; // -1 entries stand for leaves
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < 0) {
      w.push_back('L');
      continue;
    }
    w.push_back('N');
    for (int s = 2; s >= 0; --s) stack.push_back(t.child[v][s]);
  }
  return w;
}

bool is_valid_word(const std::string& word) {
  long need = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'N')
      need += 2;
    else if (word[i] == 'L')
      --need;
    else
      return false;
    if (need <= 0 && i + 1 < word.size()) return false;
  }
  return need == 0;
}

TernaryTree tree_from_word(const std::string& word) {
  if (!is_valid_word(word)) throw Error(errc::invalid_tree, "not a ternary tree prefix word");
  TernaryTree t;
  t.child.reserve(word.size() / 3 + 1);
  // slots waiting to be filled, deepest node's slots on top
  std::vector<std::pair<int, int>> open; // (node, slot)
  for (char c : word) {
    int v = -1;
    if (c == 'N') {
      v = (int)t.child.size();
      t.child.push_back({-1, -1, -1});
    }
    if (open.empty()) {
      if (c == 'L') return t; // single-leaf word "L": n = 0
    } else {
      auto [p, s] = open.back();
      open.pop_back();
      t.child[p][s] = v;
    }
    if (c == 'N')
      for (int s = 2; s >= 0; --s) open.emplace_back(v, s);
  }
  return t;
}

mpz_class count_ternary(long n) {
  if (n < 0) return 0;
  mpz_class a, b, c;
  mpz_fac_ui(a.get_mpz_t(), 3 * n);
  mpz_fac_ui(b.get_mpz_t(), 2 * n + 1);
  mpz_fac_ui(c.get_mpz_t(), n);
  return a / (b * c);
}

namespace {

void words_rec(int nodes_left, long need, std::string& w, std::vector<TernaryTree>& out) {
  if (need == 0) {
    if (nodes_left == 0) out.push_back(tree_from_word(w));
    return;
  }
  if (nodes_left > 0) {
    w.push_back('N');
    words_rec(nodes_left - 1, need + 2, w, out);
    w.pop_back();
  }
  // placing a leaf must keep the word completable: need-1 leaves still to
  // close 3*nodes_left slots
  if (need - 1 + 2 * nodes_left >= 0) {
    w.push_back('L');
    words_rec(nodes_left, need - 1, w, out);
    w.pop_back();
  }
}

} // namespace

std::vector<TernaryTree> enumerate_trees(int n, int cap) {
  if (n > cap)
    throw Error(errc::cap_exceeded, "enumerate_trees(" + std::to_string(n) + ") above cap " +
                                        std::to_string(cap));
  std::vector<TernaryTree> out;
  std::string w;
  words_rec(n, 1, w, out);
  return out;
}

TernaryTree random_tree(int n, Rng& rng) {
  std::string w(3 * n + 1, 'L');
  for (int i = 0; i < n; ++i) w[i] = 'N';
  rng.shuffle(w);

  // cycle lemma: exactly one rotation of the word is a valid prefix word;
  // it starts right after the first position where the prefix sum (N=+2,
  // L=-1) attains its minimum
  long sum = 0, best = 1;
  std::size_t cut = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i] == 'N' ? 2 : -1;
    if (sum < best) {
      best = sum;
      cut = i + 1;
    }
  }
  std::rotate(w.begin(), w.begin() + cut, w.end());
  return tree_from_word(w);
}

BicoloredTree bicolor(const TernaryTree& t, bool root_red) {
  BicoloredTree b;
  b.tree = t;
  b.parent_red.assign(std::max(1, t.node_count()), false);
  if (t.node_count() == 0) return b;
  b.parent_red[t.root] = root_red;
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 3; ++s) {
      int c = t.child[v][s];
      if (c < 0) continue;
      b.parent_red[c] = b.slot_red(v, s);
      stack.push_back(c);
    }
  }
  return b;
}

int count_red_edges(const BicoloredTree& b) {
  int total = b.parent_red[b.tree.root] ? 1 : 0; // root stem
  for (int v = 0; v < b.tree.node_count(); ++v)
    for (int s = 0; s < 3; ++s)
      if (b.slot_red(v, s)) ++total;
  return total;
}

int count_internal_red_edges(const BicoloredTree& b) {
  const TernaryTree& t = b.tree;
  int total = 0;
  for (int v = 0; v < t.node_count(); ++v)
    for (int s = 0; s < 3; ++s) {
      int c = t.child[v][s];
      if (c < 0 || !b.slot_red(v, s)) continue;
      // cw order around a node is (parent, right, middle, left); the edge
      // after (v,c) at c is c's right child edge, the one at v depends on s
      if (t.child[c][2] < 0) continue;
      bool closed_at_v = s == 0 ? v != t.root : t.child[v][s - 1] >= 0;
      if (closed_at_v) ++total;
    }
  return total;
}

} // namespace trx
