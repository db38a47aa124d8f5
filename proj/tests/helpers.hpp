#pragma once

// Shared fixtures: exhaustive instance enumeration through the tree closure
// and seeded random instances.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trx/bijection.hpp"
#include "trx/rng.hpp"
#include "trx/ternary_tree.hpp"

namespace testutil {

// every irreducible triangulation with n inner vertices, once, with its
// minimal partition (the closure image set is the whole class)
inline std::vector<trx::ClosureResult> all_triangulations(int n) {
  std::vector<trx::ClosureResult> out;
  std::set<std::string> seen;
  for (const auto& t : trx::enumerate_trees(n))
    for (bool rr : {true, false}) {
      auto res = trx::closure(trx::bicolor(t, rr));
      if (seen.insert(trx::map_signature(res.t)).second) out.push_back(std::move(res));
    }
  return out;
}

inline trx::ClosureResult random_instance(int n, trx::Rng& rng) {
  return trx::closure(trx::bicolor(trx::random_tree(n, rng), rng.coin()), rng.coin());
}

// the unique instance with one inner vertex: a 4-wheel, center 0
inline trx::Triangulation wheel() {
  return trx::make_triangulation({{3, 2, 1, 4}, {4, 0, 2}, {1, 0, 3}, {2, 0, 4}, {3, 0, 1}},
                                 {1, 2, 3, 4});
}

} // namespace testutil
