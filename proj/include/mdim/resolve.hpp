#pragma once

#include <optional>

#include "mdim/embed.hpp"

namespace mdim {

inline std::vector<int> normalize_landmarks(const Graph& g, std::vector<int> L) {
  for (int z : L)
    require(0 <= z && z < g.n, ErrorKind::InvalidInput,
            "landmark " + std::to_string(z) + " out of range");
  std::sort(L.begin(), L.end());
  L.erase(std::unique(L.begin(), L.end()), L.end());
  return L;
}

struct ResolveReport {
  bool resolving = false;
  std::optional<std::pair<int, int>> witness;  // lexicographically smallest unresolved pair
};

// Partition refinement: one BFS per landmark, split groups by distance.
// Unreachable counts as one shared distance value, so two vertices that no
// landmark can reach stay unresolved.
inline ResolveReport is_resolving(const Graph& g, const std::vector<int>& L0) {
  auto L = normalize_landmarks(g, L0);
  std::vector<std::vector<int>> groups;
  {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    groups.push_back(std::move(all));
  }
  for (int z : L) {
    auto d = bfs_hops(g, z);
    std::vector<std::vector<int>> next;
    for (auto& grp : groups) {
      if (grp.size() <= 1) continue;
      std::map<int, std::vector<int>> by;
      for (int v : grp) by[d[v]].push_back(v);
      for (auto& [dist, sub] : by)
        if (sub.size() >= 2) next.push_back(std::move(sub));
    }
    groups = std::move(next);
    if (groups.empty()) break;
  }
  ResolveReport rep;
  std::pair<int, int> best{-1, -1};
  for (auto& grp : groups) {
    if (grp.size() < 2) continue;
    std::pair<int, int> cand{grp[0], grp[1]};  // groups stay sorted: splits preserve order
    if (best.first == -1 || cand < best) best = cand;
  }
  if (best.first == -1) {
    rep.resolving = true;
  } else {
    rep.resolving = false;
    rep.witness = best;
  }
  return rep;
}

// g(v, L): neighbors of v that every landmark sees exactly one step past v.
inline std::vector<int> g_set(const Metric& m, int v, const std::vector<int>& L) {
  const Graph& g = m.graph();
  require(0 <= v && v < g.n, ErrorKind::InvalidInput, "vertex out of range");
  std::vector<int> out;
  for (int w : g.adj[v]) {
    bool ok = true;
    for (int z : L) {
      int dzv = m.hops(z, v), dzw = m.hops(z, w);
      if (!reachable(dzv) || dzw != dzv + 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

struct Req1Report {
  bool holds = true;
  int witness = -1;  // smallest vertex with |g(v,L)| >= 2
};

inline Req1Report requirement1(const Metric& m, const std::vector<int>& L0) {
  auto L = normalize_landmarks(m.graph(), L0);
  for (int v = 0; v < m.graph().n; ++v)
    if (g_set(m, v, L).size() >= 2) return {false, v};
  return {true, -1};
}

inline Req1Report requirement1(const Graph& g, const std::vector<int>& L) {
  Metric m(g);
  return requirement1(m, L);
}

// Farthest vertex from z that lies on shortest paths from z to both x and y.
inline int bifurcation_point(const Metric& m, int z, int x, int y) {
  const Graph& g = m.graph();
  require(reachable(m.hops(z, x)) && reachable(m.hops(z, y)), ErrorKind::InvalidInput,
          "bifurcation point needs connected endpoints");
  int best = -1;
  bool tie = false;
  for (int v = 0; v < g.n; ++v) {
    if (m.hops(z, v) + m.hops(v, x) != m.hops(z, x)) continue;
    if (m.hops(z, v) + m.hops(v, y) != m.hops(z, y)) continue;
    if (best == -1 || m.hops(z, v) > m.hops(z, best)) {
      best = v;
      tie = false;
    } else if (m.hops(z, v) == m.hops(z, best)) {
      tie = true;
    }
  }
  require(best != -1, ErrorKind::InternalInconsistency, "no common shortest-path vertex");
  require(!tie, ErrorKind::NotOuterplanar, "bifurcation point is not unique");
  return best;
}

// Does some shortest a->x path share a vertex with some shortest c->y path?
inline bool paths_intersect(const Metric& m, int a, int x, int c, int y) {
  for (int v = 0; v < m.graph().n; ++v)
    if (m.hops(a, v) + m.hops(v, x) == m.hops(a, x) &&
        m.hops(c, v) + m.hops(v, y) == m.hops(c, y))
      return true;
  return false;
}

// Closest point of the cycle or edge C as seen from z: a unique closest vertex,
// or the middle of the edge between the two adjacent closest ones.
inline Point representative(const Metric& m, const Point& z, const std::vector<int>& C) {
  const Graph& g = m.graph();
  require(C.size() >= 2, ErrorKind::InvalidInput, "representative target needs >= 2 vertices");
  check_point(g, z);
  int k = static_cast<int>(C.size());
  std::vector<int> d(k);
  int best = kUnreachable + 1;
  for (int i = 0; i < k; ++i) {
    d[i] = m.halves(z, Point::vertex(C[i]));
    best = std::min(best, d[i]);
  }
  require(reachable(best), ErrorKind::InvalidInput, "point cannot reach the cycle");
  std::vector<int> arg;
  for (int i = 0; i < k; ++i)
    if (d[i] == best) arg.push_back(i);
  if (arg.size() == 1) return Point::vertex(C[arg[0]]);
  if (arg.size() == 2) {
    int i = arg[0], j = arg[1];
    bool adjacentInC = (k == 2) || (j - i == 1) || (i == 0 && j == k - 1);
    if (adjacentInC && g.has_edge(C[i], C[j])) return Point::midpoint(C[i], C[j]);
  }
  fail(ErrorKind::AmbiguousRepresentative,
       "no unique closest vertex or adjacent closest pair on the cycle");
}

// Pairs within W that the point z tells apart.
inline std::vector<std::pair<int, int>> resolved_pairs(const Metric& m, const Point& z,
                                                       const std::vector<int>& W0) {
  auto W = normalize_landmarks(m.graph(), W0);
  check_point(m.graph(), z);
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < W.size(); ++i)
    for (size_t j = i + 1; j < W.size(); ++j)
      if (m.halves(z, Point::vertex(W[i])) != m.halves(z, Point::vertex(W[j])))
        out.emplace_back(W[i], W[j]);
  return out;
}

// ---- Requirement 2 ----------------------------------------------------------
//
// For a face carrying exactly two landmark classes zh1, zh2 the first/f and
// last/l class members on the outer walk must settle every vertex pair that
//  - neither first landmark resolves,
//  - admits disjoint shortest paths (z1f to one element, z2f to the other), and
//  - whose four bifurcation points span a cycle with this face strictly inside.

namespace detail {

struct FaceClasses {
  bool exactlyTwo = false;
  Point zh1, zh2;  // zh1 < zh2
  int z1f = -1, z1l = -1, z2f = -1, z2l = -1;
};

inline FaceClasses face_classes(const OuterEmbedding& emb, const Metric& m, int faceId,
                                const std::vector<int>& L) {
  const EmbFace& f = emb.faces[faceId];
  std::map<Point, std::vector<int>> byRep;
  for (int z : L) byRep[representative(m, Point::vertex(z), f.verts)].push_back(z);
  FaceClasses fc;
  if (byRep.size() != 2) return fc;
  fc.exactlyTwo = true;
  auto it = byRep.begin();
  fc.zh1 = it->first;
  const auto& class1 = it->second;
  ++it;
  fc.zh2 = it->first;
  const auto& class2 = it->second;
  auto extremes = [&](const std::vector<int>& cls, const Point& start, int& first, int& last) {
    int s = walk_start_pos(emb, f.comp, start);
    std::pair<int, int> lo{-1, -1}, hi{-1, -1};
    for (int z : cls) {
      auto key = walk_key(emb, f.comp, s, z);
      if (lo.first == -1 || key < lo) {
        lo = key;
        first = z;
      }
      if (hi.first == -1 || key > hi) {
        hi = key;
        last = z;
      }
    }
  };
  extremes(class1, fc.zh2, fc.z1f, fc.z1l);
  extremes(class2, fc.zh1, fc.z2f, fc.z2l);
  return fc;
}

// The pure obligation check given the face's named landmarks. Independent of
// the rest of the landmark set, so callers may reuse it under hypotheses.
inline std::optional<std::pair<int, int>> req2_face_violation(const OuterEmbedding& emb,
                                                              const Metric& m, int faceId,
                                                              int z1f, int z1l, int z2f, int z2l) {
  const Graph& g = m.graph();
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y) {
      if (m.hops(z1f, x) != m.hops(z1f, y)) continue;
      if (m.hops(z2f, x) != m.hops(z2f, y)) continue;
      bool disjoint = !paths_intersect(m, z1f, x, z2f, y) || !paths_intersect(m, z1f, y, z2f, x);
      if (!disjoint) continue;
      int v = bifurcation_point(m, z1f, x, y);
      int u = bifurcation_point(m, x, z1f, z2f);
      int t = bifurcation_point(m, z2f, x, y);
      int s = bifurcation_point(m, y, z1f, z2f);
      if (!face_strictly_inside(emb, m, faceId, {v, u, t, s})) continue;
      if (m.hops(z1l, x) != m.hops(z1l, y)) continue;
      if (m.hops(z2l, x) != m.hops(z2l, y)) continue;
      return std::make_pair(x, y);
    }
  return std::nullopt;
}

}  // namespace detail

struct Req2Report {
  bool holds = true;
  int witnessFace = -1;
  std::pair<int, int> witnessPair{-1, -1};
};

inline Req2Report requirement2(const OuterEmbedding& emb, const Metric& m,
                               const std::vector<int>& L0) {
  auto L = normalize_landmarks(m.graph(), L0);
  for (const EmbFace& f : emb.faces) {
    auto fc = detail::face_classes(emb, m, f.id, L);
    if (!fc.exactlyTwo) continue;
    auto bad = detail::req2_face_violation(emb, m, f.id, fc.z1f, fc.z1l, fc.z2f, fc.z2l);
    if (bad) return {false, f.id, *bad};
  }
  return {true, -1, {-1, -1}};
}

inline Req2Report requirement2(const Graph& g, const std::vector<int>& L) {
  OuterEmbedding emb = outerplanar_embed(g);
  Metric m(g);
  return requirement2(emb, m, L);
}

// ---- Oracles ----------------------------------------------------------------

struct BruteResult {
  int k = 0;
  std::vector<int> landmarks;
};

// Exhaustive minimum: sizes ascending, subsets in lexicographic vertex order,
// first resolving subset wins. Works on disconnected graphs too.
inline BruteResult brute_force_mdim(const Graph& g) {
  require(g.n <= 24, ErrorKind::TooLarge, "exhaustive search capped at 24 vertices");
  Metric m(g);
  auto resolving = [&](const std::vector<int>& L) {
    for (int x = 0; x < g.n; ++x)
      for (int y = x + 1; y < g.n; ++y) {
        bool ok = false;
        for (int z : L)
          if (m.hops(z, x) != m.hops(z, y)) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
    return true;
  };
  for (int k = 0; k <= g.n; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (resolving(idx)) return {k, idx};
      int i = k - 1;
      while (i >= 0 && idx[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  fail(ErrorKind::InternalInconsistency, "the full vertex set must resolve");
}

// Greedy cover: repeatedly add the vertex that minimizes the number of still
// unresolved pairs, smallest id on ties. Always terminates with a resolving
// set because a vertex inside an unresolved pair splits it.
inline std::vector<int> greedy_mdim(const Graph& g) {
  Metric m(g);
  std::vector<std::vector<int>> groups;
  {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    groups.push_back(std::move(all));
  }
  auto unresolvedAfter = [&](const std::vector<std::vector<int>>& gs) {
    long long c = 0;
    for (auto& grp : gs) c += static_cast<long long>(grp.size()) * (grp.size() - 1) / 2;
    return c;
  };
  std::vector<int> L;
  while (unresolvedAfter(groups) > 0) {
    int bestZ = -1;
    long long bestCount = -1;
    for (int z = 0; z < g.n; ++z) {
      long long cnt = 0;
      for (auto& grp : groups) {
        if (grp.size() <= 1) continue;
        std::map<int, int> sizes;
        for (int v : grp) ++sizes[m.hops(z, v)];
        for (auto& [d, s] : sizes) cnt += static_cast<long long>(s) * (s - 1) / 2;
      }
      if (bestZ == -1 || cnt < bestCount) {
        bestZ = z;
        bestCount = cnt;
      }
    }
    L.push_back(bestZ);
    std::vector<std::vector<int>> next;
    for (auto& grp : groups) {
      if (grp.size() <= 1) continue;
      std::map<int, std::vector<int>> by;
      for (int v : grp) by[m.hops(bestZ, v)].push_back(v);
      for (auto& [d, sub] : by)
        if (sub.size() >= 2) next.push_back(std::move(sub));
    }
    groups = std::move(next);
  }
  std::sort(L.begin(), L.end());
  return L;
}

}  // namespace mdim
