#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trx/rng.hpp"

namespace trx {

// Rooted ternary tree: every internal node has exactly three ordered children
// (left, middle, right).  Nodes are the internal vertices; leaves are implicit
// (-1 slots).  The root hangs from one more implicit leaf, so a tree with n
// nodes has n-1 closed edges and 2n+2 leaves in total.
struct TernaryTree {
  // child[v] = {left, middle, right}, -1 for a leaf slot
  std::vector<std::array<int, 3>> child;
  int root = 0;

  int node_count() const { return (int)child.size(); }
  int leaf_count() const { return 2 * node_count() + 2; }
};

// Prefix word over {N, L}: root first, then each node's subtrees in order
// left, middle, right.  N = internal node, L = leaf.  The root's own stem is
// not part of the word, so a word for an n-node tree has length 3n+1.
std::string tree_to_word(const TernaryTree& t);
TernaryTree tree_from_word(const std::string& word); // throws invalid_tree
bool is_valid_word(const std::string& word);

// Exact count of ternary trees with n nodes: (3n)! / ((2n+1)! n!).
mpz_class count_ternary(long n);

// All ternary trees with n nodes in lexicographic word order (N < L).
// Throws cap_exceeded above the cap (the count grows like 6.75^n).
std::vector<TernaryTree> enumerate_trees(int n, int cap = 8);

// Uniform random ternary tree with n nodes via the cycle lemma: shuffle the
// multiset of n N's and 2n+1 L's, then rotate to start just after the first
// prefix-sum minimum.
TernaryTree random_tree(int n, Rng& rng);

// Edge/stem bicoloring determined by the root stem being red: walking ccw
// around a node the four incident slots (parent, left, middle, right) get
// colors (c, !c, c, !c) where c is the parent edge color.
struct BicoloredTree {
  TernaryTree tree;
  std::vector<bool> parent_red; // per node: color of its parent edge/stem
  // color of the edge or stem occupying child slot s of node v
  bool slot_red(int v, int s) const { return (s == 1) == (bool)parent_red[v]; }
};

BicoloredTree bicolor(const TernaryTree& t, bool root_red = true);

// Number of red edges counting both real edges and leaf stems.
int count_red_edges(const BicoloredTree& b);

// Red closed edges e such that at both endpoints the edge following e in
// clockwise order is again a closed edge (not a stem).
int count_internal_red_edges(const BicoloredTree& b);

} // namespace trx
