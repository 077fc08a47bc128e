#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shallow/error.hpp"

namespace shallow {

using VertexId = std::string;
using Edge = std::pair<int, int>;

/// Simple undirected graph over string ids. Vertices keep their insertion
/// index; adjacency lists stay sorted by index.
class Graph {
 public:
  Graph() = default;

  int add_vertex(const VertexId& id) {
    auto [it, fresh] = index_.emplace(id, static_cast<int>(ids_.size()));
    if (!fresh) throw InputError("duplicate vertex id '" + id + "'");
    ids_.push_back(id);
    adj_.emplace_back();
    return it->second;
  }

  /// Returns the index of `id`, adding it when absent.
  int ensure_vertex(const VertexId& id) {
    auto it = index_.find(id);
    return it != index_.end() ? it->second : add_vertex(id);
  }

  /// Returns false when the edge already exists.
  bool add_edge(int u, int v) {
    check_index(u);
    check_index(v);
    if (u == v) throw InputError("self-loop at '" + ids_[u] + "'");
    auto& au = adj_[u];
    auto pos = std::lower_bound(au.begin(), au.end(), v);
    if (pos != au.end() && *pos == v) return false;
    au.insert(pos, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
  }

  bool add_edge(const VertexId& u, const VertexId& v) { return add_edge(index(u), index(v)); }

  int index(const VertexId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown vertex id '" + id + "'");
    return it->second;
  }

  std::optional<int> find(const VertexId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const VertexId& id) const { return index_.count(id) != 0; }

  const VertexId& id(int v) const { return ids_[v]; }
  const std::vector<VertexId>& ids() const { return ids_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }
  bool adjacent(const VertexId& u, const VertexId& v) const { return adjacent(index(u), index(v)); }

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  /// Edges as (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Same vertex ids and the same edge set, regardless of insertion order.
  bool same_as(const Graph& o) const {
    if (vertex_count() != o.vertex_count() || edge_count() != o.edge_count()) return false;
    for (const auto& id : ids_)
      if (!o.contains(id)) return false;
    for (auto [u, v] : edges())
      if (!o.adjacent(o.index(ids_[u]), o.index(ids_[v]))) return false;
    return true;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || v >= vertex_count()) throw InputError("vertex index out of range");
  }

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, int> index_;
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

inline constexpr int kUnreachable = -1;

struct DistanceTable {
  int source = 0;
  std::vector<int> dist;  // kUnreachable when no path
};

/// BFS restricted to vertices with allowed[v] != 0 (all vertices when empty).
inline std::vector<int> bfs_indexed(const Graph& g, int source, const std::vector<char>& allowed = {}) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  if (!allowed.empty() && !allowed[source]) return dist;
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(u)) {
      if (dist[w] != kUnreachable || (!allowed.empty() && !allowed[w])) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

inline DistanceTable bfs_distances(const Graph& g, const VertexId& source) {
  int s = g.index(source);
  return {s, bfs_indexed(g, s)};
}

/// Eccentricity of v, or nullopt when some vertex is unreachable.
inline std::optional<int> eccentricity(const Graph& g, int v) {
  int ecc = 0;
  for (int d : bfs_indexed(g, v)) {
    if (d == kUnreachable) return std::nullopt;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

/// nullopt encodes an infinite radius (disconnected graph). K_0 has radius 0.
inline std::optional<int> radius(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  std::optional<int> best;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) return std::nullopt;
    if (!best || *e < *best) best = e;
  }
  return best;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  for (int d : bfs_indexed(g, 0))
    if (d == kUnreachable) return false;
  return true;
}

/// Same vertices, no edges.
inline Graph vertex_copy(const Graph& g) {
  Graph out;
  for (const auto& id : g.ids()) out.add_vertex(id);
  return out;
}

/// k = 0 yields the edgeless graph on V(g).
inline Graph power_or_edgeless(const Graph& g, int k) {
  Graph out = vertex_copy(g);
  if (k <= 0) return out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_indexed(g, u);
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (dist[v] != kUnreachable && dist[v] <= k) out.add_edge(u, v);
  }
  return out;
}

inline Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw InputError("graph_power needs k >= 1");
  return power_or_edgeless(g, k);
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// Repeatedly removes a minimum-degree vertex; returns the largest degree seen.
inline int degeneracy(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (int w : g.neighbours(pick))
      if (!gone[w]) --deg[w];
  }
  return best;
}

/// Subgraph induced by `keep` (indices into g), preserving ids and order of `keep`.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Graph out;
  std::vector<int> local(g.vertex_count(), -1);
  for (int v : keep) local[v] = out.add_vertex(g.id(v));
  for (int v : keep)
    for (int w : g.neighbours(v))
      if (local[w] >= 0 && v < w) out.add_edge(local[v], local[w]);
  return out;
}

/// Builds a graph from id lists; endpoints must be listed vertices.
inline Graph make_graph(const std::vector<VertexId>& vertices,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace shallow
