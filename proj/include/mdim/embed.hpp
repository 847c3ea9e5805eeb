#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mdim/graph.hpp"

namespace mdim {

// Biconnected decomposition. Components are canonically ordered by their sorted
// vertex lists so ids are stable across runs.
struct Biconnectivity {
  std::vector<char> isCut;
  std::vector<std::vector<int>> compVerts;                  // sorted, per component
  std::vector<std::vector<std::pair<int, int>>> compEdges;  // normalized u<v, sorted
  std::vector<std::vector<int>> compsOfVertex;              // sorted comp ids
};

inline Biconnectivity biconnected_components(const Graph& g) {
  require(is_connected(g), ErrorKind::DisconnectedInput, "biconnectivity needs a connected graph");
  Biconnectivity out;
  out.isCut.assign(g.n, 0);
  std::vector<std::vector<std::pair<int, int>>> rawComps;
  if (g.n == 1) {
    rawComps.push_back({});  // trivial component carries the lone vertex below
  } else {
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> edgeStack;
    // frame: vertex, parent, next adjacency index
    std::vector<std::array<int, 3>> frames;
    int timer = 0;
    disc[0] = low[0] = timer++;
    frames.push_back({0, -1, 0});
    int rootChildren = 0;
    while (!frames.empty()) {
      int v = frames.back()[0];
      int parent = frames.back()[1];
      if (frames.back()[2] < static_cast<int>(g.adj[v].size())) {
        int w = g.adj[v][frames.back()[2]++];
        if (w == parent) continue;
        if (disc[w] == -1) {
          edgeStack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, v, 0});
        } else if (disc[w] < disc[v]) {
          edgeStack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        frames.pop_back();
        if (frames.empty()) break;
        int p = frames.back()[0];
        low[p] = std::min(low[p], low[v]);
        if (p == 0 && frames.back()[1] == -1) ++rootChildren;
        if (low[v] >= disc[p]) {
          if (frames.back()[1] != -1) out.isCut[p] = 1;
          std::vector<std::pair<int, int>> comp;
          while (true) {
            auto e = edgeStack.back();
            edgeStack.pop_back();
            comp.push_back(e);
            if (e == std::make_pair(p, v)) break;
          }
          rawComps.push_back(std::move(comp));
        }
      }
    }
    if (rootChildren >= 2) out.isCut[0] = 1;
  }
  // Canonical order: sorted vertex list, lexicographic.
  std::vector<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> keyed;
  for (auto& ce : rawComps) {
    std::set<int> vs;
    for (auto& [u, v] : ce) {
      vs.insert(u);
      vs.insert(v);
      if (u > v) std::swap(u, v);
    }
    if (vs.empty()) vs.insert(0);  // n == 1
    std::sort(ce.begin(), ce.end());
    keyed.emplace_back(std::vector<int>(vs.begin(), vs.end()), ce);
  }
  std::sort(keyed.begin(), keyed.end());
  out.compsOfVertex.assign(g.n, {});
  for (int id = 0; id < static_cast<int>(keyed.size()); ++id) {
    out.compVerts.push_back(keyed[id].first);
    out.compEdges.push_back(keyed[id].second);
    for (int v : keyed[id].first) out.compsOfVertex[v].push_back(id);
  }
  return out;
}

struct EmbFace {
  int id = -1;
  int comp = -1;
  std::vector<int> verts;  // cyclic order; consecutive entries (and last-first) are edges
};

struct EmbComponent {
  int id = -1;
  bool isCycleComp = false;  // >= 3 vertices; otherwise a bridge or the n==1 stub
  std::vector<int> verts;
  std::vector<std::pair<int, int>> edges;
  // Cycle-component data. The outer cycle is canonical: starts at the smallest
  // vertex, runs toward its smaller cycle neighbor. "Clockwise" everywhere in
  // this codebase means this stored direction.
  std::vector<int> cycle;
  std::unordered_map<int, int> posOf;
  std::vector<std::pair<int, int>> chordPos;    // (i,j), i<j, sorted by (i asc, j desc)
  std::vector<std::pair<int, int>> chordVerts;  // aligned with chordPos
  std::vector<int> chordFace;                   // global face id of the chord's inner region
  std::vector<int> chordOuterFace;              // global face id of the enclosing region
  int rootFace = -1;                            // global id of the outermost bounded region
  std::vector<int> faceIds;                     // root face first, then chords in order
};

struct OuterEmbedding {
  Graph g;
  Biconnectivity bicon;
  std::vector<EmbComponent> comps;
  std::vector<EmbFace> faces;
  std::vector<int> compOfEdge;   // per g.edges index
  std::vector<char> edgeInner;   // chords; outer-cycle edges and bridges are 0
  // For each cycle component: anchor[v] = the component vertex through which v
  // attaches (v itself inside the component). Empty for other components.
  std::vector<std::vector<int>> anchorOf;

  int comp_position(int compId, int v) const {
    const auto& c = comps[compId];
    return c.posOf.at(anchorOf[compId][v]);
  }
};

namespace detail {

// Builds the outer Hamiltonian cycle of one biconnected component by repeatedly
// removing a degree-2 vertex (joining its neighbors) and reinserting in reverse.
// Failure at any step certifies a K4 or K_{2,3} subdivision.
inline std::vector<int> strip_and_rebuild(const std::vector<int>& verts,
                                          const std::vector<std::pair<int, int>>& edges) {
  int c = static_cast<int>(verts.size());
  require(static_cast<int>(edges.size()) <= 2 * c - 3, ErrorKind::NotOuterplanar,
          "too many edges for an outerplanar block");
  std::map<int, std::set<int>> adj;
  for (int v : verts) adj[v];
  for (auto [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::array<int, 3>> removed;  // v, u, w
  while (static_cast<int>(adj.size()) > 3) {
    int pick = -1;
    for (auto& [v, nb] : adj)
      if (nb.size() == 2) {
        pick = v;
        break;
      }
    require(pick != -1, ErrorKind::NotOuterplanar, "no degree-2 vertex left while reducing");
    auto it = adj[pick].begin();
    int u = *it++, w = *it;
    adj.erase(pick);
    adj[u].erase(pick);
    adj[w].erase(pick);
    adj[u].insert(w);
    adj[w].insert(u);
    removed.push_back({pick, u, w});
  }
  std::vector<int> base;
  for (auto& [v, nb] : adj) base.push_back(v);
  require(base.size() == 3, ErrorKind::NotOuterplanar, "reduction did not reach a triangle");
  for (int a : base)
    for (int b : base)
      require(a == b || adj[a].count(b), ErrorKind::NotOuterplanar, "reduced core is not a triangle");
  std::vector<int> cyc(base.begin(), base.end());
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    auto [v, u, w] = *it;
    int k = static_cast<int>(cyc.size());
    int at = -1;
    for (int i = 0; i < k; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % k];
      if ((a == u && b == w) || (a == w && b == u)) {
        at = i + 1;
        break;
      }
    }
    require(at != -1, ErrorKind::NotOuterplanar,
            "vertex " + std::to_string(v) + " cannot be returned to the outer cycle");
    cyc.insert(cyc.begin() + at, v);
  }
  // Canonical rotation and direction.
  int mi = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::rotate(cyc.begin(), cyc.begin() + mi, cyc.end());
  if (cyc[cyc.size() - 1] < cyc[1]) {
    std::reverse(cyc.begin() + 1, cyc.end());
  }
  return cyc;
}

}  // namespace detail

inline OuterEmbedding outerplanar_embed(const Graph& g) {
  OuterEmbedding emb;
  emb.g = g;
  emb.bicon = biconnected_components(g);
  int nComps = static_cast<int>(emb.bicon.compVerts.size());
  emb.comps.resize(nComps);
  emb.compOfEdge.assign(g.edges.size(), -1);
  emb.edgeInner.assign(g.edges.size(), 0);
  emb.anchorOf.assign(nComps, {});

  auto edgeIndex = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
    require(it != g.edges.end() && *it == std::make_pair(u, v), ErrorKind::InternalInconsistency,
            "edge lookup failed");
    return static_cast<int>(it - g.edges.begin());
  };

  int nextFace = 0;
  for (int ci = 0; ci < nComps; ++ci) {
    EmbComponent& comp = emb.comps[ci];
    comp.id = ci;
    comp.verts = emb.bicon.compVerts[ci];
    comp.edges = emb.bicon.compEdges[ci];
    for (auto [u, v] : comp.edges) emb.compOfEdge[edgeIndex(u, v)] = ci;
    if (comp.verts.size() < 3) continue;

    comp.isCycleComp = true;
    comp.cycle = detail::strip_and_rebuild(comp.verts, comp.edges);
    int c = static_cast<int>(comp.cycle.size());
    require(c == static_cast<int>(comp.verts.size()), ErrorKind::InternalInconsistency,
            "outer cycle misses vertices");
    for (int i = 0; i < c; ++i) comp.posOf[comp.cycle[i]] = i;

    // Classify edges: consecutive positions are outer, the rest are chords.
    for (auto [u, v] : comp.edges) {
      int pu = comp.posOf[u], pv = comp.posOf[v];
      int lo = std::min(pu, pv), hi = std::max(pu, pv);
      bool outer = (hi - lo == 1) || (lo == 0 && hi == c - 1);
      if (!outer) {
        comp.chordPos.emplace_back(lo, hi);
        emb.edgeInner[edgeIndex(u, v)] = 1;
      }
    }
    std::sort(comp.chordPos.begin(), comp.chordPos.end(),
              [](auto& a, auto& b) { return a.first != b.first ? a.first < b.first : a.second > b.second; });
    for (auto [i, j] : comp.chordPos) comp.chordVerts.emplace_back(comp.cycle[i], comp.cycle[j]);

    // Non-crossing validation; a crossing pair certifies non-outerplanarity.
    int nc = static_cast<int>(comp.chordPos.size());
    for (int a = 0; a < nc; ++a)
      for (int b = a + 1; b < nc; ++b) {
        auto [i1, j1] = comp.chordPos[a];
        auto [i2, j2] = comp.chordPos[b];
        bool cross = (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1);
        require(!cross, ErrorKind::NotOuterplanar, "crossing chords in a block");
      }

    // Laminar nesting of chords; shared endpoints count as containment.
    std::vector<int> parentChord(nc, -1);
    std::vector<std::vector<int>> kids(nc);
    std::vector<int> top;
    {
      std::vector<int> stk;
      for (int k = 0; k < nc; ++k) {
        auto inside = [&](int outer, int inner) {
          return comp.chordPos[outer].first <= comp.chordPos[inner].first &&
                 comp.chordPos[inner].second <= comp.chordPos[outer].second;
        };
        while (!stk.empty() && !inside(stk.back(), k)) stk.pop_back();
        parentChord[k] = stk.empty() ? -1 : stk.back();
        (parentChord[k] == -1 ? top : kids[parentChord[k]]).push_back(k);
        stk.push_back(k);
      }
    }

    auto regionFace = [&](int i, int j, const std::vector<int>& children) {
      // Walk from position i to j, shortcutting over child chords.
      std::vector<int> fv{comp.cycle[i]};
      int cur = i;
      size_t ki = 0;
      while (cur < j) {
        if (ki < children.size() && comp.chordPos[children[ki]].first == cur)
          cur = comp.chordPos[children[ki++]].second;
        else
          ++cur;
        fv.push_back(comp.cycle[cur]);
      }
      return fv;
    };

    // Root region: the whole cycle with top-level chords as shortcuts.
    {
      std::vector<int> fv{comp.cycle[0]};
      int cur = 0;
      size_t ki = 0;
      while (true) {
        if (ki < top.size() && comp.chordPos[top[ki]].first == cur)
          cur = comp.chordPos[top[ki++]].second;
        else
          ++cur;
        if (cur >= c) break;
        fv.push_back(comp.cycle[cur]);
      }
      comp.rootFace = nextFace;
      emb.faces.push_back(EmbFace{nextFace++, ci, std::move(fv)});
    }
    comp.chordFace.assign(nc, -1);
    comp.chordOuterFace.assign(nc, -1);
    for (int k = 0; k < nc; ++k) {
      comp.chordFace[k] = nextFace;
      emb.faces.push_back(
          EmbFace{nextFace++, ci, regionFace(comp.chordPos[k].first, comp.chordPos[k].second, kids[k])});
    }
    for (int k = 0; k < nc; ++k)
      comp.chordOuterFace[k] = parentChord[k] == -1 ? comp.rootFace : comp.chordFace[parentChord[k]];
    comp.faceIds.push_back(comp.rootFace);
    for (int k = 0; k < nc; ++k) comp.faceIds.push_back(comp.chordFace[k]);
    require(static_cast<int>(comp.faceIds.size()) == nc + 1, ErrorKind::InternalInconsistency,
            "face count must be chords + 1");

    // Entry anchors: multi-source BFS from the component; each outside vertex
    // inherits the anchor of its BFS parent, which is the cut vertex it hangs from.
    auto& anchor = emb.anchorOf[ci];
    anchor.assign(g.n, -1);
    std::queue<int> q;
    for (int v : comp.verts) {
      anchor[v] = v;
      q.push(v);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v])
        if (anchor[w] == -1) {
          anchor[w] = anchor[v];
          q.push(w);
        }
    }
  }
  return emb;
}

// ---- Outer-walk positions -------------------------------------------------
//
// All Requirement-2 and boundary-condition orderings happen on the outer walk
// of one cycle component. A landmark outside the component sits at the position
// of its entry cut vertex. The walk start for a point of the component:
//   vertex            -> its position
//   outer-edge middle -> the position entered when traversing the edge clockwise
//   chord middle      -> the larger of the endpoint positions
// Ties between landmarks at one position break by vertex id.

inline int walk_start_pos(const OuterEmbedding& emb, int compId, const Point& zhat) {
  const auto& comp = emb.comps[compId];
  int c = static_cast<int>(comp.cycle.size());
  if (zhat.is_vertex()) return comp.posOf.at(zhat.a);
  int pa = comp.posOf.at(zhat.a), pb = comp.posOf.at(zhat.b);
  int lo = std::min(pa, pb), hi = std::max(pa, pb);
  if (hi - lo == 1) return hi;
  if (lo == 0 && hi == c - 1) return 0;
  return hi;  // chord
}

inline std::pair<int, int> walk_key(const OuterEmbedding& emb, int compId, int startPos, int z) {
  const auto& comp = emb.comps[compId];
  int c = static_cast<int>(comp.cycle.size());
  int p = emb.comp_position(compId, z);
  return {((p - startPos) % c + c) % c, z};
}

// ---- Canonical geometry ---------------------------------------------------
//
// Cycle position k is realized at (k, k*k): convex position, no three collinear,
// so chords cross exactly when their position intervals interleave, matching
// the combinatorial embedding.

inline std::pair<long long, long long> canonical_coord(const OuterEmbedding& emb, int compId, int v) {
  long long p = emb.comps[compId].posOf.at(v);
  return {p, p * p};
}

// Deterministic shortest path: repeatedly step to the smallest-id neighbor
// closer to the target.
inline std::vector<int> canonical_shortest_path(const Metric& m, int from, int to) {
  std::vector<int> path{from};
  int cur = from;
  require(reachable(m.hops(from, to)), ErrorKind::InvalidInput, "path endpoints disconnected");
  while (cur != to) {
    int next = -1;
    for (int w : m.graph().adj[cur])
      if (m.hops(w, to) == m.hops(cur, to) - 1) {
        next = w;
        break;
      }
    require(next != -1, ErrorKind::InternalInconsistency, "BFS descent failed");
    path.push_back(next);
    cur = next;
  }
  return path;
}

namespace detail {

using Big = __int128;

inline Big cross3(std::pair<long long, long long> o, std::pair<long long, long long> a,
                  std::pair<long long, long long> b) {
  return Big(a.first - o.first) * Big(b.second - o.second) -
         Big(a.second - o.second) * Big(b.first - o.first);
}

// Strict interior test by winding number; boundary points report false.
inline bool point_strictly_inside(std::pair<long long, long long> p,
                                  const std::vector<std::pair<long long, long long>>& poly) {
  int wn = 0;
  int k = static_cast<int>(poly.size());
  for (int i = 0; i < k; ++i) {
    auto a = poly[i], b = poly[(i + 1) % k];
    if (a == b) continue;
    Big cr = cross3(a, b, p);
    if (cr == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
        std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second))
      return false;  // on boundary
    if (a.second <= p.second) {
      if (b.second > p.second && cr > 0) ++wn;
    } else {
      if (b.second <= p.second && cr < 0) --wn;
    }
  }
  return wn != 0;
}

}  // namespace detail

// Does face `faceId` lie strictly inside the closed curve through `cycleVerts`
// (consecutive vertices joined by canonical shortest paths)? Curves that leave
// the face's component cannot wind around it.
inline bool face_strictly_inside(const OuterEmbedding& emb, const Metric& m, int faceId,
                                 const std::vector<int>& cycleVerts) {
  const EmbFace& f = emb.faces[faceId];
  const auto& comp = emb.comps[f.comp];
  for (int v : cycleVerts)
    if (!comp.posOf.count(v)) return false;
  std::vector<std::pair<long long, long long>> poly;
  int k = static_cast<int>(cycleVerts.size());
  for (int i = 0; i < k; ++i) {
    auto path = canonical_shortest_path(m, cycleVerts[i], cycleVerts[(i + 1) % k]);
    // The segment's final vertex opens the next segment, so skip it here.
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      require(comp.posOf.count(path[j]) > 0, ErrorKind::InternalInconsistency,
              "in-component shortest path left the component");
      poly.push_back(canonical_coord(emb, f.comp, path[j]));
    }
  }
  if (poly.size() < 3) return false;
  // Compare the face centroid against the polygon, scaled to stay integral.
  long long fs = static_cast<long long>(f.verts.size());
  std::pair<long long, long long> centroid{0, 0};
  for (int v : f.verts) {
    auto c = canonical_coord(emb, f.comp, v);
    centroid.first += c.first;
    centroid.second += c.second;
  }
  for (auto& pt : poly) {
    pt.first *= fs;
    pt.second *= fs;
  }
  return detail::point_strictly_inside(centroid, poly);
}

}  // namespace mdim
