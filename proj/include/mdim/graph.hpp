#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

enum class ErrorKind {
  InvalidInput,
  DisconnectedInput,
  NotOuterplanar,
  NotATree,
  AmbiguousRepresentative,
  TooLarge,
  IllDefined,
  InternalInconsistency,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DisconnectedInput: return "disconnected-input";
    case ErrorKind::NotOuterplanar: return "not-outerplanar";
    case ErrorKind::NotATree: return "not-a-tree";
    case ErrorKind::AmbiguousRepresentative: return "ambiguous-representative";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::IllDefined: return "ill-defined";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

// Distances are stored in half-units so that edge midpoints stay integral.
// kUnreachable compares above every finite distance and survives +2 without overflow.
constexpr int kUnreachable = 1 << 29;

inline bool reachable(int halves) { return halves < kUnreachable; }

// Simple undirected graph on vertices 0..n-1. Edges are deduplicated, loops rejected,
// and adjacency lists kept sorted so every traversal is deterministic.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;       // each stored with first < second
  std::vector<std::vector<int>> adj;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> raw) {
    require(n >= 1, ErrorKind::InvalidInput, "graph needs at least one vertex");
    Graph g;
    g.n = n;
    for (auto& [u, v] : raw) {
      require(0 <= u && u < n && 0 <= v && v < n, ErrorKind::InvalidInput,
              "edge endpoint out of range");
      require(u != v, ErrorKind::InvalidInput, "self-loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    g.edges = std::move(raw);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
  }

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }
};

// A point of the metric space: a vertex, or the midpoint of an edge.
struct Point {
  int a = -1;
  int b = -1;  // -1 for vertices; otherwise a < b and {a,b} is an edge

  static Point vertex(int v) { return Point{v, -1}; }
  static Point midpoint(int u, int v) {
    if (u > v) std::swap(u, v);
    return Point{u, v};
  }

  bool is_vertex() const { return b < 0; }
  auto operator<=>(const Point&) const = default;
};

inline std::string to_string(const Point& p) {
  if (p.is_vertex()) return std::to_string(p.a);
  return "mid(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

inline void check_point(const Graph& g, const Point& p) {
  if (p.is_vertex()) {
    require(0 <= p.a && p.a < g.n, ErrorKind::InvalidInput, "point vertex out of range");
  } else {
    require(0 <= p.a && p.b < g.n && g.has_edge(p.a, p.b), ErrorKind::InvalidInput,
            "midpoint of a non-edge");
  }
}

// Hop counts (whole edges) from src; kUnreachable for separated vertices.
inline std::vector<int> bfs_hops(const Graph& g, int src) {
  std::vector<int> d(g.n, kUnreachable);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (d[w] == kUnreachable) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

// Half-unit distances from a point to every vertex.
// From a midpoint the distance is one half plus hops from the nearer endpoint.
inline std::vector<int> bfs_halves(const Graph& g, Point src) {
  check_point(g, src);
  std::vector<int> d(g.n, kUnreachable);
  std::queue<int> q;
  auto seed = [&](int v, int dist) {
    d[v] = dist;
    q.push(v);
  };
  if (src.is_vertex()) {
    seed(src.a, 0);
  } else {
    seed(src.a, 1);
    seed(src.b, 1);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (d[w] == kUnreachable) {
        d[w] = d[v] + 2;
        q.push(w);
      }
  }
  return d;
}

// All-pairs oracle for desk-scale graphs: hop matrix plus point-to-point half-units.
struct Metric {
  explicit Metric(const Graph& g) : g_(&g) {
    hop_.reserve(g.n);
    for (int v = 0; v < g.n; ++v) hop_.push_back(bfs_hops(g, v));
  }

  int hops(int u, int v) const { return hop_[u][v]; }

  int halves(int u, int v) const {
    int h = hop_[u][v];
    return reachable(h) ? 2 * h : kUnreachable;
  }

  int halves(const Point& p, const Point& q) const {
    if (p == q) return 0;
    if (p.is_vertex() && q.is_vertex()) return halves(p.a, q.a);
    if (p.is_vertex()) return mid_to_vertex(q, p.a);
    if (q.is_vertex()) return mid_to_vertex(p, q.a);
    int best = kUnreachable;
    for (int x : {p.a, p.b})
      for (int y : {q.a, q.b}) best = std::min(best, hop_[x][y]);
    return reachable(best) ? 2 + 2 * best : kUnreachable;
  }

  const Graph& graph() const { return *g_; }

 private:
  int mid_to_vertex(const Point& m, int v) const {
    int best = std::min(hop_[m.a][v], hop_[m.b][v]);
    return reachable(best) ? 1 + 2 * best : kUnreachable;
  }

  const Graph* g_;
  std::vector<std::vector<int>> hop_;
};

inline bool is_connected(const Graph& g) {
  auto d = bfs_hops(g, 0);
  return std::all_of(d.begin(), d.end(), [](int h) { return reachable(h); });
}

// Text format: optional '#' comment lines, then "n m", then m lines "u v".
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string head;
  require(next_data_line(head), ErrorKind::InvalidInput, "empty edge list");
  std::istringstream hs(head);
  long long n = -1, m = -1;
  std::string junk;
  require(static_cast<bool>(hs >> n >> m) && !(hs >> junk), ErrorKind::InvalidInput,
          "header must be 'n m' (line " + std::to_string(lineno) + ")");
  require(n >= 1 && m >= 0 && n <= 10'000'000 && m <= 20'000'000, ErrorKind::InvalidInput,
          "header out of range");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string row;
    require(next_data_line(row), ErrorKind::InvalidInput,
            "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream rs(row);
    long long u = -1, v = -1;
    require(static_cast<bool>(rs >> u >> v) && !(rs >> junk), ErrorKind::InvalidInput,
            "edge line must be 'u v' (line " + std::to_string(lineno) + ")");
    require(0 <= u && u < n && 0 <= v && v < n, ErrorKind::InvalidInput,
            "edge endpoint out of range (line " + std::to_string(lineno) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  require(!next_data_line(extra), ErrorKind::InvalidInput, "trailing content after edges");
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace mdim
