#pragma once

#include "mdim/resolve.hpp"

namespace mdim {

// Minimum resolving set of a tree, linear. Every vertex of degree >= 3 with
// k >= 2 pendant paths ("legs") contributes landmarks at the ends of its k-1
// smallest-ended legs; a bare path takes its smaller endpoint. The verify pass
// is a partition-refinement resolving check and can be disabled for timing.
inline std::vector<int> tree_mdim(const Graph& g, bool verify = true) {
  require(g.n >= 2, ErrorKind::InvalidInput, "tree solver needs at least two vertices");
  require(g.m() == g.n - 1 && is_connected(g), ErrorKind::NotATree, "input is not a tree");
  bool isPath = true;
  for (int v = 0; v < g.n && isPath; ++v) isPath = g.degree(v) <= 2;
  std::vector<int> L;
  if (isPath) {
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) == 1) {
        L.push_back(v);
        break;
      }
  } else {
    std::map<int, std::vector<int>> legs;  // major vertex -> leg endpoints, ascending
    for (int leaf = 0; leaf < g.n; ++leaf) {
      if (g.degree(leaf) != 1) continue;
      int prev = leaf, cur = g.adj[leaf][0];
      while (g.degree(cur) == 2) {
        int nxt = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
        prev = cur;
        cur = nxt;
      }
      legs[cur].push_back(leaf);  // cur has degree >= 3: a two-ended chain would be a path
    }
    for (auto& [major, ends] : legs)
      for (size_t i = 0; i + 1 < ends.size(); ++i) L.push_back(ends[i]);
  }
  std::sort(L.begin(), L.end());
  if (verify)
    require(is_resolving(g, L).resolving, ErrorKind::InternalInconsistency,
            "tree landmark set failed verification");
  return L;
}

}  // namespace mdim
