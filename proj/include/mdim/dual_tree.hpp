#pragma once

#include "mdim/resolve.hpp"

namespace mdim {

// Generalized dual tree: one node per bounded face, plus one node per cut or
// degree-one vertex. Edges: faces sharing a chord, bridges between vertex
// nodes, and each vertex node linked to its lowest-id incident face per cycle
// component. Face nodes take ids 0..F-1 (face ids), vertex nodes follow in
// ascending vertex order.

enum class SepKind { FaceFace, CutLink, Bridge };

struct DualNode {
  bool isFace = false;
  int face = -1;    // when isFace
  int vertex = -1;  // when !isFace
  std::vector<int> s;
  std::vector<int> nbrs;
};

struct DualEdge {
  int a = -1, b = -1;  // node ids, a < b
  SepKind kind = SepKind::FaceFace;
  std::vector<int> sep;  // separator vertices, sorted (2 for FaceFace/Bridge, 1 for CutLink)
  int comp = -1;         // cycle component carrying the separator (FaceFace/CutLink)
  // Rooted data, filled by build:
  int parentNode = -1, childNode = -1;
  int arcStart = -1;  // FaceFace: cycle position whose +1 step enters the strictly-below arc
};

struct DualTree {
  std::vector<DualNode> nodes;
  std::vector<DualEdge> edges;
  std::map<std::pair<int, int>, int> edgeIdx;  // (min,max) node ids -> edge index
  int root = -1;
  std::vector<int> parent, parentEdge;          // per node; -1 at root
  std::vector<std::vector<int>> children;       // boundary-walk order for faces
  std::vector<int> postorder;                   // children before parents
  std::vector<std::vector<int>> lowerWithSep;   // union of s over the subtree
  std::vector<std::vector<int>> lowerStrict;    // lowerWithSep minus the upper side
  std::vector<std::vector<int>> owned;          // lowerStrict minus children's lowerStrict
  std::vector<std::vector<std::pair<int, int>>> finalizedPairs;  // settled at this node

  int edge_between(int x, int y) const {
    auto it = edgeIdx.find({std::min(x, y), std::max(x, y)});
    require(it != edgeIdx.end(), ErrorKind::InvalidInput, "no dual-tree edge between nodes");
    return it->second;
  }
};

namespace detail {

inline std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline std::vector<int> sorted_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

inline DualTree build_dual_tree(const Graph& g, const OuterEmbedding& emb) {
  DualTree T;
  int F = static_cast<int>(emb.faces.size());
  for (const EmbFace& f : emb.faces) {
    DualNode nd;
    nd.isFace = true;
    nd.face = f.id;
    nd.s = f.verts;
    std::sort(nd.s.begin(), nd.s.end());
    T.nodes.push_back(std::move(nd));
  }
  std::vector<int> vertNodeOf(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    bool take = emb.bicon.isCut[v] || g.degree(v) <= 1;
    if (!take) continue;
    DualNode nd;
    nd.isFace = false;
    nd.vertex = v;
    nd.s = {v};
    vertNodeOf[v] = static_cast<int>(T.nodes.size());
    T.nodes.push_back(std::move(nd));
  }

  auto addEdge = [&](int x, int y, SepKind kind, std::vector<int> sep, int comp) {
    DualEdge e;
    e.a = std::min(x, y);
    e.b = std::max(x, y);
    e.kind = kind;
    std::sort(sep.begin(), sep.end());
    e.sep = std::move(sep);
    e.comp = comp;
    int idx = static_cast<int>(T.edges.size());
    require(!T.edgeIdx.count({e.a, e.b}), ErrorKind::InternalInconsistency, "duplicate dual edge");
    T.edgeIdx[{e.a, e.b}] = idx;
    T.nodes[e.a].nbrs.push_back(e.b);
    T.nodes[e.b].nbrs.push_back(e.a);
    T.edges.push_back(std::move(e));
  };

  for (const EmbComponent& comp : emb.comps) {
    if (comp.isCycleComp) {
      for (size_t k = 0; k < comp.chordPos.size(); ++k)
        addEdge(comp.chordFace[k], comp.chordOuterFace[k], SepKind::FaceFace,
                {comp.chordVerts[k].first, comp.chordVerts[k].second}, comp.id);
      // Lowest-id incident face per vertex node in this component.
      for (int v : comp.verts) {
        if (vertNodeOf[v] == -1) continue;
        int bestFace = -1;
        for (int fid : comp.faceIds) {
          const auto& fv = emb.faces[fid].verts;
          if (std::find(fv.begin(), fv.end(), v) != fv.end()) {
            bestFace = fid;
            break;  // faceIds ascend
          }
        }
        require(bestFace != -1, ErrorKind::InternalInconsistency, "vertex missing from its component's faces");
        addEdge(bestFace, vertNodeOf[v], SepKind::CutLink, {v}, comp.id);
      }
    } else if (comp.verts.size() == 2) {
      int u = comp.verts[0], v = comp.verts[1];
      require(vertNodeOf[u] != -1 && vertNodeOf[v] != -1, ErrorKind::InternalInconsistency,
              "bridge endpoint lacks a vertex node");
      addEdge(vertNodeOf[u], vertNodeOf[v], SepKind::Bridge, {u, v}, comp.id);
    }
  }
  for (auto& nd : T.nodes) std::sort(nd.nbrs.begin(), nd.nbrs.end());

  int N = static_cast<int>(T.nodes.size());
  require(static_cast<int>(T.edges.size()) == N - 1, ErrorKind::InternalInconsistency,
          "dual structure is not a tree");

  // Root: lowest-id leaf.
  T.root = -1;
  for (int i = 0; i < N; ++i)
    if (T.nodes[i].nbrs.size() <= 1) {
      T.root = i;
      break;
    }
  require(T.root != -1, ErrorKind::InternalInconsistency, "tree without a leaf");

  T.parent.assign(N, -1);
  T.parentEdge.assign(N, -1);
  T.children.assign(N, {});
  {
    std::vector<int> order{T.root};
    std::vector<char> seen(N, 0);
    seen[T.root] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      // Raw children first; ordered below.
      for (int w : T.nodes[v].nbrs)
        if (!seen[w]) {
          seen[w] = 1;
          T.parent[w] = v;
          T.parentEdge[w] = T.edge_between(v, w);
          T.children[v].push_back(w);
          order.push_back(w);
        }
    }
    require(static_cast<int>(order.size()) == N, ErrorKind::InternalInconsistency,
            "dual tree is disconnected");
  }

  // Order each face node's children along its boundary walk, starting just
  // past the parent attachment. Vertex nodes keep ascending node-id order.
  for (int v = 0; v < N; ++v) {
    if (!T.nodes[v].isFace || T.children[v].empty()) continue;
    const EmbFace& f = emb.faces[T.nodes[v].face];
    int k = static_cast<int>(f.verts.size());
    std::map<int, int> vertSlot;    // boundary index -> child node (cut link at f.verts[i])
    std::map<int, int> chordSlot;   // boundary index i -> child across edge (verts[i], verts[i+1])
    auto boundaryEdgeIndex = [&](int x, int y) {
      for (int i = 0; i < k; ++i) {
        int a = f.verts[i], b = f.verts[(i + 1) % k];
        if ((a == x && b == y) || (a == y && b == x)) return i;
      }
      fail(ErrorKind::InternalInconsistency, "separator edge is not on the face boundary");
    };
    for (int w : T.children[v]) {
      const DualEdge& e = T.edges[T.edge_between(v, w)];
      if (e.kind == SepKind::CutLink) {
        int idx = -1;
        for (int i = 0; i < k; ++i)
          if (f.verts[i] == e.sep[0]) idx = i;
        vertSlot[idx] = w;
      } else {
        chordSlot[boundaryEdgeIndex(e.sep[0], e.sep[1])] = w;
      }
    }
    int startIdx = 0;
    bool startWithChord = false;
    if (T.parent[v] != -1) {
      const DualEdge& pe = T.edges[T.parentEdge[v]];
      if (pe.kind == SepKind::FaceFace) {
        startIdx = (boundaryEdgeIndex(pe.sep[0], pe.sep[1]) + 1) % k;
      } else {
        for (int i = 0; i < k; ++i)
          if (f.verts[i] == pe.sep[0]) startIdx = i;
        startWithChord = true;  // the attachment vertex itself comes first
      }
    }
    std::vector<int> ordered;
    for (int step = 0; step < k; ++step) {
      int i = (startIdx + step) % k;
      if (!(step == 0 && startWithChord))
        if (auto it = vertSlot.find(i); it != vertSlot.end()) ordered.push_back(it->second);
      if (auto it = chordSlot.find(i); it != chordSlot.end()) ordered.push_back(it->second);
    }
    require(ordered.size() == T.children[v].size(), ErrorKind::InternalInconsistency,
            "face child ordering lost a child");
    T.children[v] = std::move(ordered);
  }

  // Postorder.
  {
    std::vector<std::pair<int, int>> stack{{T.root, 0}};
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < static_cast<int>(T.children[v].size())) {
        stack.push_back({T.children[v][idx++], 0});
      } else {
        T.postorder.push_back(v);
        stack.pop_back();
      }
    }
  }

  // Scopes.
  T.lowerWithSep.assign(N, {});
  for (int v : T.postorder) {
    std::vector<int> u = T.nodes[v].s;
    for (int w : T.children[v]) u = detail::sorted_union(std::move(u), T.lowerWithSep[w]);
    T.lowerWithSep[v] = std::move(u);
  }
  std::vector<std::vector<int>> upper(N);
  {
    std::vector<int> pre(T.postorder.rbegin(), T.postorder.rend());
    for (int v : pre) {
      if (v == T.root) {
        upper[v] = {};
      }
      for (int w : T.children[v]) {
        std::vector<int> u = detail::sorted_union(upper[v], T.nodes[v].s);
        for (int w2 : T.children[v])
          if (w2 != w) u = detail::sorted_union(std::move(u), T.lowerWithSep[w2]);
        upper[w] = std::move(u);
      }
    }
  }
  T.lowerStrict.assign(N, {});
  T.owned.assign(N, {});
  for (int v = 0; v < N; ++v) T.lowerStrict[v] = detail::sorted_minus(T.lowerWithSep[v], upper[v]);
  for (int v = 0; v < N; ++v) {
    std::vector<int> own = T.lowerStrict[v];
    for (int w : T.children[v]) own = detail::sorted_minus(own, T.lowerStrict[w]);
    T.owned[v] = std::move(own);
  }

  // Rooted edge data: orientation plus the strictly-below arc for chords.
  for (int v = 0; v < N; ++v) {
    if (T.parent[v] == -1) continue;
    DualEdge& e = T.edges[T.parentEdge[v]];
    e.childNode = v;
    e.parentNode = T.parent[v];
    if (e.kind == SepKind::FaceFace) {
      const EmbComponent& comp = emb.comps[e.comp];
      int p1 = comp.posOf.at(e.sep[0]), p2 = comp.posOf.at(e.sep[1]);
      if (p1 > p2) std::swap(p1, p2);
      // Inner side of the chord is the chord's own region face.
      int chordIdx = -1;
      for (size_t ci = 0; ci < comp.chordPos.size(); ++ci)
        if (comp.chordPos[ci] == std::make_pair(p1, p2)) chordIdx = static_cast<int>(ci);
      require(chordIdx != -1, ErrorKind::InternalInconsistency, "separator chord not found");
      bool childIsInner = T.nodes[v].isFace && T.nodes[v].face == comp.chordFace[chordIdx];
      e.arcStart = childIsInner ? p1 : p2;
    }
  }

  // Pairs settled at each node: both ends in scope, not both inside one child.
  T.finalizedPairs.assign(N, {});
  for (int v = 0; v < N; ++v) {
    const auto& scope = T.lowerWithSep[v];
    auto inChild = [&](int x, int y) {
      for (int w : T.children[v]) {
        const auto& cs = T.lowerWithSep[w];
        if (std::binary_search(cs.begin(), cs.end(), x) &&
            std::binary_search(cs.begin(), cs.end(), y))
          return true;
      }
      return false;
    };
    for (size_t i = 0; i < scope.size(); ++i)
      for (size_t j = i + 1; j < scope.size(); ++j)
        if (!inChild(scope[i], scope[j])) T.finalizedPairs[v].emplace_back(scope[i], scope[j]);
  }
  return T;
}

// The two vertex sides of a dual-tree edge: subtree unions of the endpoints
// once the edge is removed.
inline std::pair<std::vector<int>, std::vector<int>> split(const Graph& g, const DualTree& T,
                                                           int nodeA, int nodeB) {
  int ei = T.edge_between(nodeA, nodeB);
  const DualEdge& e = T.edges[ei];
  int child = e.childNode, parent = e.parentNode;
  require(child != -1, ErrorKind::InternalInconsistency, "edge missing rooted orientation");
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  // Restrict to vertices mentioned by any node: every vertex appears in some s.
  const auto& lower = T.lowerWithSep[child];
  std::vector<int> upperSide = detail::sorted_minus(all, T.lowerStrict[child]);
  // sideA corresponds to nodeA.
  if (nodeA == child) return {lower, upperSide};
  return {upperSide, lower};
}

}  // namespace mdim
