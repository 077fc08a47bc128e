#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/layouts.hpp"
#include "shallow/minors.hpp"

namespace shallow {

enum class ColMode { strong, weak };

inline const char* to_string(ColMode m) { return m == ColMode::strong ? "strong" : "weak"; }

inline ColMode parse_col_mode(const std::string& s) {
  if (s == "strong") return ColMode::strong;
  if (s == "weak") return ColMode::weak;
  throw InputError("colouring mode must be 'strong' or 'weak', got '" + s + "'");
}

namespace detail {

/// Distances from `source` where only vertices with `pass` may be interior.
/// Vertices without `pass` are reached but not expanded.
inline std::vector<int> gated_bfs(const Graph& g, int source, const std::vector<char>& pass, int depth) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (dist[x] == depth || (x != source && !pass[x])) continue;
    for (int y : g.neighbours(x))
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

/// Vertex positions from an order; throws unless the order covers V once.
inline std::vector<int> rank_of(const Graph& g, const std::vector<VertexId>& order) {
  auto pos = positions(g, order, "vertex order");
  std::vector<int> rank(g.vertex_count());
  for (const auto& [id, p] : pos) rank[g.index(id)] = p;
  return rank;
}

inline std::vector<int> reach_indexed(const Graph& g, const std::vector<int>& rank, int v, int s, ColMode mode) {
  std::vector<int> out{v};
  int n = g.vertex_count();
  if (mode == ColMode::strong) {
    std::vector<char> pass(n);
    for (int x = 0; x < n; ++x) pass[x] = rank[x] > rank[v];
    auto dist = gated_bfs(g, v, pass, s);
    for (int w = 0; w < n; ++w)
      if (w != v && dist[w] != kUnreachable && rank[w] < rank[v]) out.push_back(w);
  } else {
    for (int w = 0; w < n; ++w) {
      if (rank[w] >= rank[v]) continue;
      std::vector<char> pass(n);
      for (int x = 0; x < n; ++x) pass[x] = rank[x] > rank[w];
      if (gated_bfs(g, v, pass, s)[w] != kUnreachable) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// R(v) for strong (interior after v) or Q(v) for weak (interior after the
/// far end): vertices w <= v joined to v by a path of length <= s.
inline std::vector<VertexId> reach_set(const Graph& g, const std::vector<VertexId>& order, const VertexId& v, int s,
                                       ColMode mode) {
  if (s < 1) throw InputError("reach_set: s must be at least 1");
  auto rank = detail::rank_of(g, order);
  std::vector<VertexId> out;
  for (int w : detail::reach_indexed(g, rank, g.index(v), s, mode)) out.push_back(g.id(w));
  std::sort(out.begin(), out.end());
  return out;
}

inline int col_of_order(const Graph& g, const std::vector<VertexId>& order, int s, ColMode mode) {
  if (s < 1) throw InputError("col_of_order: s must be at least 1");
  auto rank = detail::rank_of(g, order);
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, static_cast<int>(detail::reach_indexed(g, rank, v, s, mode).size()));
  return best;
}

inline constexpr int kColOracleLimit = 8;

struct ColResult {
  int value = 0;
  std::vector<VertexId> order;
};

/// Exact strong/weak colouring number. Strong uses a DP over suffix sets
/// (R(v) depends only on the set after v); weak searches orders left to
/// right, where Q(v) is fixed once v is placed.
inline ColResult exact_col(const Graph& g, int s, ColMode mode, int limit = kColOracleLimit) {
  int n = g.vertex_count();
  if (s < 1) throw InputError("exact_col: s must be at least 1");
  if (n > limit)
    throw ResourceError("exact_col: " + std::to_string(n) + " vertices exceed the limit of " + std::to_string(limit));
  if (n == 0) return {0, {}};
  std::vector<int> best_order;
  int best = std::numeric_limits<int>::max();
  if (mode == ColMode::strong) {
    int full = (1 << n) - 1;
    std::vector<int> f(full + 1, std::numeric_limits<int>::max()), pick(full + 1, -1);
    f[0] = 0;
    for (int set = 1; set <= full; ++set)
      for (int v = 0; v < n; ++v) {
        if (!(set >> v & 1)) continue;
        int after = set & ~(1 << v);
        std::vector<char> pass(n);
        for (int x = 0; x < n; ++x) pass[x] = after >> x & 1;
        auto dist = detail::gated_bfs(g, v, pass, s);
        int size = 1;
        for (int w = 0; w < n; ++w)
          if (!(set >> w & 1) && dist[w] != kUnreachable) ++size;
        int value = std::max(f[after], size);
        if (value < f[set]) {
          f[set] = value;
          pick[set] = v;
        }
      }
    best = f[full];
    for (int set = full; set; set &= ~(1 << pick[set])) best_order.push_back(pick[set]);
  } else {
    std::vector<int> order, rank(n, n);
    auto dfs = [&](auto&& self, int current) -> void {
      if (current >= best) return;
      int p = static_cast<int>(order.size());
      if (p == n) {
        best = current;
        best_order = order;
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (rank[v] < n) continue;
        rank[v] = p;
        int size = 1;
        for (int w : order) {
          std::vector<char> pass(n);
          for (int x = 0; x < n; ++x) pass[x] = rank[x] > rank[w];
          if (detail::gated_bfs(g, v, pass, s)[w] != kUnreachable) ++size;
        }
        order.push_back(v);
        self(self, std::max(current, size));
        order.pop_back();
        rank[v] = n;
      }
    };
    dfs(dfs, 0);
  }
  ColResult out{best, {}};
  for (int v : best_order) out.order.push_back(g.id(v));
  if (col_of_order(g, out.order, s, mode) != best) throw ConstructionError("exact_col", "witness order disagrees");
  return out;
}

struct ColTransfer {
  std::vector<VertexId> order;
  int sPrime = 0;     // 2rs + 2r + s
  int guestCol = 0;
  int hostCol = 0;
  bool holds() const { return guestCol <= hostCol; }
};

/// Guest order by the host position of each branch set's leftmost vertex,
/// with both sides of the transfer inequality measured.
inline ColTransfer col_shallow_order(const MinorModel& m, const std::vector<VertexId>& host_order, int s, ColMode mode) {
  if (s < 1) throw InputError("col_shallow_order: s must be at least 1");
  if (auto rep = verify_model(m); !rep.verdict)
    throw PreconditionError("col_shallow_order: model rejected (" + rep.verdict.clause + ")");
  int r = depth_radius(m.depth2x);
  auto rank = detail::rank_of(m.host, host_order);
  std::vector<std::pair<int, VertexId>> leftmost;
  for (const auto& v : m.guest.ids()) {
    int best = std::numeric_limits<int>::max();
    for (const auto& x : m.branch.at(v)) best = std::min(best, rank[m.host.index(x)]);
    leftmost.emplace_back(best, v);
  }
  std::sort(leftmost.begin(), leftmost.end());
  ColTransfer out;
  for (const auto& [p, v] : leftmost) out.order.push_back(v);
  out.sPrime = 2 * r * s + 2 * r + s;
  out.guestCol = m.guest.vertex_count() ? col_of_order(m.guest, out.order, s, mode) : 0;
  out.hostCol = m.host.vertex_count() ? col_of_order(m.host, host_order, out.sPrime, mode) : 0;
  return out;
}

// ---------------------------------------------------------------------------
// Colouring verifiers

using Colouring = std::map<VertexId, std::string>;

struct ColouringReport {
  Verdict verdict;
  std::vector<VertexId> witness;  // offending path or vertex set
};

namespace detail {

inline std::vector<std::string> colour_vector(const Graph& g, const Colouring& c) {
  std::vector<std::string> out;
  for (const auto& v : g.ids()) {
    auto it = c.find(v);
    if (it == c.end()) throw InputError("colouring misses vertex '" + v + "'");
    out.push_back(it->second);
  }
  return out;
}

inline constexpr long long kPathBudget = 5000000;
inline constexpr int kCentredLimit = 16;

}  // namespace detail

/// No path on 2h vertices (h <= max_half) whose colour sequence repeats.
inline ColouringReport verify_nonrepetitive(const Graph& g, const Colouring& c, int max_half) {
  if (max_half < 1) throw InputError("verify_nonrepetitive: half length must be positive");
  auto col = detail::colour_vector(g, c);
  int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on(n, 0);
  long long visits = 0;
  std::vector<int> bad;
  auto dfs = [&](auto&& self, int x) -> bool {
    if (++visits > detail::kPathBudget) throw ResourceError("verify_nonrepetitive: path budget exceeded");
    int len = static_cast<int>(path.size());
    if (len % 2 == 0) {
      int h = len / 2;
      bool repeat = true;
      for (int i = 0; i < h && repeat; ++i) repeat = col[path[i]] == col[path[i + h]];
      if (repeat) {
        bad = path;
        return true;
      }
    }
    if (len == 2 * max_half) return false;
    for (int y : g.neighbours(x)) {
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      if (self(self, y)) return true;
      path.pop_back();
      on[y] = 0;
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    path = {v};
    on.assign(n, 0);
    on[v] = 1;
    // A single vertex is trivially fine; start checking from two vertices on.
    for (int y : g.neighbours(v)) {
      on[y] = 1;
      path.push_back(y);
      if (dfs(dfs, y)) {
        ColouringReport rep{Verdict::reject("repetition", "path of " + std::to_string(bad.size()) + " vertices"), {}};
        for (int x : bad) rep.witness.push_back(g.id(x));
        return rep;
      }
      path.pop_back();
      on[y] = 0;
    }
  }
  return {Verdict::accept(), {}};
}

/// Every connected vertex set sees more than p colours or has a colour that
/// appears exactly once in it.
inline ColouringReport verify_p_centred(const Graph& g, const Colouring& c, int p) {
  int n = g.vertex_count();
  if (p < 1) throw InputError("verify_p_centred: p must be positive");
  if (n > detail::kCentredLimit)
    throw ResourceError("verify_p_centred: " + std::to_string(n) + " vertices exceed the limit of " +
                        std::to_string(detail::kCentredLimit));
  auto col = detail::colour_vector(g, c);
  std::vector<int> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbours(v)) nbr[v] |= 1 << u;
  for (int set = 1; set < (1 << n); ++set) {
    int start = __builtin_ctz(set), seen = 1 << start, frontier = seen;
    while (frontier) {
      int next = 0;
      for (int x = 0; x < n; ++x)
        if (frontier >> x & 1) next |= nbr[x];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != set) continue;
    std::map<std::string, int> count;
    for (int x = 0; x < n; ++x)
      if (set >> x & 1) ++count[col[x]];
    if (static_cast<int>(count.size()) > p) continue;
    bool unique = std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
    if (!unique) {
      ColouringReport rep{Verdict::reject("centred", "connected set without a unique colour"), {}};
      for (int x = 0; x < n; ++x)
        if (set >> x & 1) rep.witness.push_back(g.id(x));
      return rep;
    }
  }
  return {Verdict::accept(), {}};
}

}  // namespace shallow
