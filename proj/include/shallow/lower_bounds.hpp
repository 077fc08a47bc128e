#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/minors.hpp"
#include "shallow/planarise.hpp"

namespace shallow {

/// Levelled grid on [0, n^(k+1)]^2 and its 1-gap subdivision.
struct GridHierarchy {
  int n = 0;
  int k = 0;
  long long side = 0;  // n^(k+1)
  EmbeddedGraph embedded;
  GapCharging charging;  // capacity k, lower level pays
  std::map<EdgeKey, int> level;
  EmbeddedGraph subdivided;
  std::map<EdgeKey, HostPath> subdivisions;  // original edge -> path in `subdivided`
};

inline VertexId grid_id(long long x, long long y) { return std::to_string(x) + "," + std::to_string(y); }

inline constexpr long long kGridVertexBudget = 10000;

namespace detail {

inline long long ipow(long long b, int e) {
  long long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

/// A levelled edge with its geometric start (smaller coordinate).
struct GridEdge {
  long long x, y;
  bool horizontal;
  int level;
  EdgeKey key;
};

}  // namespace detail

/// Vertical level-l edges at x = X cross the level-j horizontal edges
/// (j < l) that start at (X, Y) with Y strictly inside their span, and
/// symmetrically. Each crossing is charged to the lower level. Edges charged
/// c > 1 times become paths on c + 1 vertices, cut between consecutive
/// charged crossings.
inline GridHierarchy build_grid_hierarchy(int n, int k, long long budget = kGridVertexBudget) {
  if (k < 1) throw InputError("build_grid_hierarchy: k must be at least 1");
  if (n < 2) throw InputError("build_grid_hierarchy: n must be at least 2 (n = 1 collapses every level)");
  long long side = 1;
  for (int i = 0; i <= k; ++i) {
    side *= n;
    if ((side + 1) * (side + 1) > budget)
      throw ResourceError("build_grid_hierarchy: grid exceeds the vertex budget of " + std::to_string(budget));
  }
  GridHierarchy h;
  h.n = n;
  h.k = k;
  h.side = side;
  Graph& g = h.embedded.graph;
  for (long long x = 0; x <= side; ++x)
    for (long long y = 0; y <= side; ++y) g.add_vertex(grid_id(x, y));
  std::vector<detail::GridEdge> edges;
  std::map<std::tuple<long long, long long, bool, int>, int> at;  // (x, y, horizontal, level) -> edge
  for (int l = 0; l <= k; ++l) {
    long long step = detail::ipow(n, l);
    for (long long x = 0; x <= side; x += step)
      for (long long y = 0; y <= side; y += step)
        for (bool horizontal : {true, false}) {
          long long x2 = horizontal ? x + step : x, y2 = horizontal ? y : y + step;
          if (x2 > side || y2 > side) continue;
          EdgeKey key = edge_key(grid_id(x, y), grid_id(x2, y2));
          g.add_edge(key.first, key.second);
          at[{x, y, horizontal, l}] = static_cast<int>(edges.size());
          edges.push_back({x, y, horizontal, l, key});
          h.level[key] = l;
        }
  }
  // Crossings along each edge, ordered geometrically: (offset, level).
  std::vector<std::vector<std::tuple<long long, int, int>>> along(edges.size());
  std::vector<std::pair<int, int>> pairs;  // (high, low)
  for (int hi = 0; hi < static_cast<int>(edges.size()); ++hi) {
    const auto& e = edges[hi];
    if (e.level == 0) continue;
    long long span = detail::ipow(n, e.level);
    long long line = e.horizontal ? e.y : e.x;  // the strip starts at this line
    long long from = e.horizontal ? e.x : e.y;
    for (int j = 0; j < e.level; ++j) {
      long long step = detail::ipow(n, j);
      for (long long t = from + step; t < from + span; t += step) {
        // a crossed edge of the other orientation starts at the strip line
        auto key = e.horizontal ? std::make_tuple(t, line, false, j) : std::make_tuple(line, t, true, j);
        auto it = at.find(key);
        if (it == at.end()) continue;
        int lo = it->second;
        int c = static_cast<int>(pairs.size());
        pairs.emplace_back(hi, lo);
        along[hi].emplace_back(t - from, j, c);
        along[lo].emplace_back(0, e.level, c);
      }
    }
  }
  std::vector<int> pos_hi(pairs.size()), pos_lo(pairs.size());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto& seq = along[e];
    std::sort(seq.begin(), seq.end());
    // positions count from key.first; flip when that is the geometric end
    bool reversed = edges[e].key.first != grid_id(edges[e].x, edges[e].y);
    int m = static_cast<int>(seq.size());
    for (int i = 0; i < m; ++i) {
      int c = std::get<2>(seq[i]);
      int p = reversed ? m - 1 - i : i;
      (pairs[c].first == e ? pos_hi : pos_lo)[c] = p;
    }
  }
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto &hi = edges[pairs[c].first], &lo = edges[pairs[c].second];
    h.embedded.crossings.push_back({hi.key, lo.key, pos_hi[c], pos_lo[c], 0});
    h.charging.charged.push_back(lo.key);
  }
  h.charging.k = k;
  if (auto v = verify_gap_charging(h.embedded, h.charging); !v)
    throw ConstructionError("grid-charging", v.clause + ": " + v.detail);

  // Subdivision: cut each edge with c > 1 charges between charged crossings.
  auto seqs = crossing_sequences(h.embedded);
  Graph& sg = h.subdivided.graph;
  sg = vertex_copy(g);
  std::vector<std::pair<EdgeKey, int>> seg_a(pairs.size()), seg_b(pairs.size());
  for (auto [u, v] : g.edges()) {
    EdgeKey key = edge_key(g.id(u), g.id(v));
    std::vector<int> seq;
    if (auto it = seqs.find(key); it != seqs.end()) seq = it->second;
    int charges = 0;
    for (int c : seq) charges += h.charging.charged[c] == key;
    HostPath path{key.first};
    std::vector<std::vector<int>> on_segment(1);
    bool seen_charge = false;
    for (int c : seq) {
      bool charged = h.charging.charged[c] == key;
      if (charges > 1 && charged && seen_charge) {
        path.push_back("@s:" + key.first + "/" + key.second + ":" + std::to_string(on_segment.size()));
        on_segment.emplace_back();
      }
      seen_charge = seen_charge || charged;
      on_segment.back().push_back(c);
    }
    path.push_back(key.second);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      sg.ensure_vertex(path[i]);
      sg.ensure_vertex(path[i + 1]);
      sg.add_edge(path[i], path[i + 1]);
      EdgeKey seg = edge_key(path[i], path[i + 1]);
      const auto& list = on_segment[i];
      int m = static_cast<int>(list.size());
      for (int j = 0; j < m; ++j) {
        int c = list[j];
        auto& slot = h.embedded.crossings[c].a == key ? seg_a[c] : seg_b[c];
        slot = {seg, seg.first == path[i] ? j : m - 1 - j};
      }
    }
    h.subdivisions[key] = std::move(path);
  }
  for (std::size_t c = 0; c < pairs.size(); ++c)
    h.subdivided.crossings.push_back({seg_a[c].first, seg_b[c].first, seg_a[c].second, seg_b[c].second, 0});
  return h;
}

struct HierarchyReport {
  bool gridContained = false;
  bool radiusBound = false;
  int radius = -1;
  long long radiusLimit = 0;  // (2k+1)n + ceil(k/2) + 1
  bool gapFeasible = false;
  bool chargingValid = false;  // the recorded k-charging of `embedded`
  long long twLower = 0;
  bool ok() const { return gridContained && radiusBound && gapFeasible && chargingValid; }
};

inline HierarchyReport check_hierarchy(const GridHierarchy& h) {
  HierarchyReport rep;
  rep.twLower = h.side + 1;
  rep.radiusLimit = static_cast<long long>(2 * h.k + 1) * h.n + (h.k + 1) / 2 + 1;
  const Graph& sg = h.subdivided.graph;
  rep.gridContained = true;
  for (long long x = 0; x <= h.side && rep.gridContained; ++x)
    for (long long y = 0; y <= h.side && rep.gridContained; ++y)
      for (auto [dx, dy] : {std::pair<int, int>{1, 0}, {0, 1}}) {
        if (x + dx > h.side || y + dy > h.side) continue;
        EdgeKey key = edge_key(grid_id(x, y), grid_id(x + dx, y + dy));
        auto it = h.subdivisions.find(key);
        bool present = it != h.subdivisions.end();
        for (std::size_t i = 0; present && i + 1 < it->second.size(); ++i)
          present = sg.contains(it->second[i]) && sg.contains(it->second[i + 1]) &&
                    sg.adjacent(it->second[i], it->second[i + 1]);
        if (!present) rep.gridContained = false;
      }
  if (auto r = radius(sg)) rep.radius = *r;
  rep.radiusBound = rep.radius >= 0 && rep.radius <= rep.radiusLimit;
  rep.chargingValid = static_cast<bool>(verify_gap_charging(h.embedded, h.charging));
  rep.gapFeasible = gap_charging(h.subdivided, 1).has_value();
  return rep;
}

/// Contracts every subdivision path back to its edge.
inline Graph contract_subdivisions(const GridHierarchy& h) {
  Graph out;
  for (const auto& v : h.subdivided.graph.ids())
    if (v.rfind("@s:", 0) != 0) out.add_vertex(v);
  for (const auto& [key, path] : h.subdivisions) {
    for (const auto& x : path)
      if (!h.subdivided.graph.contains(x)) throw InputError("subdivision path leaves the graph");
    out.add_edge(key.first, key.second);
  }
  return out;
}

}  // namespace shallow
