#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/minors.hpp"
#include "shallow/products.hpp"

namespace shallow {

struct QueueLayout {
  std::vector<VertexId> order;
  std::map<EdgeKey, int> queue;
  bool strict = false;
};

struct LayoutReport {
  Verdict verdict;
  int queues = 0;  // distinct queue indices in use
};

namespace detail {

inline std::map<VertexId, int> positions(const Graph& g, const std::vector<VertexId>& order, const char* what) {
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.contains(order[i])) throw InputError(std::string(what) + ": order holds unknown vertex '" + order[i] + "'");
    if (!pos.emplace(order[i], static_cast<int>(i)).second)
      throw InputError(std::string(what) + ": order repeats '" + order[i] + "'");
  }
  if (static_cast<int>(pos.size()) != g.vertex_count())
    throw InputError(std::string(what) + ": order does not cover every vertex");
  return pos;
}

/// Edge spans as (left, right) positions.
struct Span {
  int left;
  int right;
};

inline bool nests(Span e, Span f) {
  return (e.left < f.left && f.right < e.right) || (f.left < e.left && e.right < f.right);
}

inline bool overlaps(Span e, Span f) { return e.left == f.left || e.right == f.right; }

}  // namespace detail

inline LayoutReport verify_layout(const Graph& g, const QueueLayout& q) {
  std::map<VertexId, int> pos;
  try {
    pos = detail::positions(g, q.order, "verify_layout");
  } catch (const InputError& e) {
    return {Verdict::reject("order", e.what())};
  }
  std::vector<std::pair<detail::Span, int>> spans;
  std::vector<EdgeKey> keys;
  std::set<int> used;
  for (auto [u, v] : g.edges()) {
    EdgeKey key = edge_key(g.id(u), g.id(v));
    auto it = q.queue.find(key);
    if (it == q.queue.end()) return {Verdict::reject("queue", "edge " + key.first + "-" + key.second + " has no queue")};
    int a = pos[key.first], b = pos[key.second];
    spans.push_back({{std::min(a, b), std::max(a, b)}, it->second});
    keys.push_back(key);
    used.insert(it->second);
  }
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (spans[i].second != spans[j].second) continue;
      auto describe = [&] { return keys[i].first + "-" + keys[i].second + " and " + keys[j].first + "-" + keys[j].second; };
      if (detail::nests(spans[i].first, spans[j].first)) return {Verdict::reject("nest", describe())};
      if (q.strict && detail::overlaps(spans[i].first, spans[j].first)) return {Verdict::reject("overlap", describe())};
    }
  return {Verdict::accept(), static_cast<int>(used.size())};
}

/// K_ell in order 0..ell-1 with queue(ij) = |i - j|.
inline QueueLayout complete_strict_layout(int ell) {
  if (ell < 1) throw InputError("complete_strict_layout: ell must be positive");
  QueueLayout q;
  q.strict = true;
  for (int i = 0; i < ell; ++i) q.order.push_back(std::to_string(i));
  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j) q.queue[edge_key(std::to_string(i), std::to_string(j))] = j - i;
  if (auto r = verify_layout(complete_graph(ell), q); !r.verdict)
    throw ConstructionError("complete_strict_layout", r.verdict.detail);
  return q;
}

/// Fewest queues for a fixed order: each edge sits one above the highest
/// edge nested inside it, so the count equals the largest rainbow.
inline QueueLayout layout_for_order(const Graph& g, const std::vector<VertexId>& order) {
  auto pos = detail::positions(g, order, "layout_for_order");
  struct Item {
    detail::Span span;
    EdgeKey key;
  };
  std::vector<Item> items;
  for (auto [u, v] : g.edges()) {
    EdgeKey key = edge_key(g.id(u), g.id(v));
    int a = pos[key.first], b = pos[key.second];
    items.push_back({{std::min(a, b), std::max(a, b)}, key});
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return std::make_pair(x.span.right - x.span.left, x.span.left) < std::make_pair(y.span.right - y.span.left, y.span.left);
  });
  QueueLayout q{order, {}, false};
  std::vector<int> level(items.size(), 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (items[i].span.left < items[j].span.left && items[j].span.right < items[i].span.right)
        level[i] = std::max(level[i], level[j] + 1);
    q.queue[items[i].key] = level[i];
  }
  return q;
}

inline int queue_count(const QueueLayout& q) {
  std::set<int> used;
  for (const auto& [e, i] : q.queue) used.insert(i);
  return static_cast<int>(used.size());
}

inline constexpr int kQueueOracleLimit = 9;

struct QueueNumberResult {
  int queues = 0;
  QueueLayout layout;
};

/// Exact queue number by search over vertex orders. An edge's level is fixed
/// once its right end is placed, so partial orders prune on the running max.
inline QueueNumberResult exact_queue_number(const Graph& g, int limit = kQueueOracleLimit) {
  int n = g.vertex_count();
  if (n > limit) throw ResourceError("exact_queue_number: " + std::to_string(n) + " vertices exceed the limit of " +
                                     std::to_string(limit));
  if (g.edge_count() == 0) {
    QueueLayout q{g.ids(), {}, false};
    return {0, q};
  }
  std::vector<int> order, pos(n, -1), best_order;
  int best = std::numeric_limits<int>::max();
  struct Placed {
    int left, right, level;
  };
  std::vector<Placed> placed;
  auto dfs = [&](auto&& self, int current) -> void {
    if (current >= best) return;
    int p = static_cast<int>(order.size());
    if (p == n) {
      best = current;
      best_order = order;
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (pos[x] >= 0) continue;
      pos[x] = p;
      order.push_back(x);
      std::size_t mark = placed.size();
      int worst = current;
      std::vector<int> lefts;
      for (int y : g.neighbours(x))
        if (pos[y] >= 0 && y != x) lefts.push_back(pos[y]);
      std::sort(lefts.rbegin(), lefts.rend());  // shorter edges first
      for (int left : lefts) {
        int level = 0;
        for (const auto& f : placed)
          if (left < f.left && f.right < p) level = std::max(level, f.level + 1);
        placed.push_back({left, p, level});
        worst = std::max(worst, level + 1);
      }
      self(self, worst);
      placed.resize(mark);
      order.pop_back();
      pos[x] = -1;
    }
  };
  dfs(dfs, 0);
  std::vector<VertexId> ids;
  for (int v : best_order) ids.push_back(g.id(v));
  QueueLayout q = layout_for_order(g, ids);
  if (queue_count(q) != best) throw ConstructionError("exact_queue_number", "witness layout disagrees with search");
  return {best, q};
}

// ---------------------------------------------------------------------------
// Queue layouts of shallow minors

/// Per-edge key: path length, host queue per step, forward steps.
using QueueKey = std::tuple<int, std::vector<int>, std::vector<int>>;

struct QueueShallowResult {
  QueueLayout layout;
  int keys = 0;
  int hostQueues = 0;
  int radius = 0;
};

namespace detail {

inline constexpr long long kQueuePathBudget = 200000;

/// Simple paths from `from` to `to` inside `allowed` with at most `max_len` edges.
inline std::vector<std::vector<int>> bounded_paths(const Graph& g, int from, int to, const std::vector<char>& allowed,
                                                   int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack{from};
  std::vector<char> on(g.vertex_count(), 0);
  on[from] = 1;
  long long visits = 0;
  auto dfs = [&](auto&& self, int x) -> void {
    if (++visits > kQueuePathBudget) throw ResourceError("queue_shallow: path enumeration budget exceeded");
    if (x == to) {
      out.push_back(stack);
      return;
    }
    if (static_cast<int>(stack.size()) - 1 == max_len) return;
    for (int y : g.neighbours(x)) {
      if (!allowed[y] || on[y]) continue;
      on[y] = 1;
      stack.push_back(y);
      self(self, y);
      stack.pop_back();
      on[y] = 0;
    }
  };
  dfs(dfs, from);
  return out;
}

}  // namespace detail

/// Guest layout from a host layout. Guest vertices take their centres'
/// positions. Each guest edge routes a centre-to-centre path through the two
/// branch sets; among candidate paths an already used key is preferred,
/// otherwise the least key among shortest paths. Keys become queues in
/// first-use order.
inline QueueShallowResult queue_shallow(const MinorModel& m, const QueueLayout& host_layout) {
  int r = depth_radius(m.depth2x);
  if (auto rep = verify_model(m, r); !rep.verdict)
    throw PreconditionError("queue_shallow: model rejected (" + rep.verdict.clause + ": " + rep.verdict.detail + ")");
  auto hl = verify_layout(m.host, host_layout);
  if (!hl.verdict) throw PreconditionError("queue_shallow: host layout rejected (" + hl.verdict.detail + ")");
  const Graph& h = m.host;
  auto hpos = detail::positions(h, host_layout.order, "queue_shallow");
  std::vector<int> pos(h.vertex_count());
  for (const auto& [id, p] : hpos) pos[h.index(id)] = p;

  std::vector<std::pair<int, VertexId>> placed;
  for (const auto& v : m.guest.ids()) placed.emplace_back(hpos.at(m.centre.at(v)), v);
  std::sort(placed.begin(), placed.end());
  QueueShallowResult out;
  out.radius = r;
  out.hostQueues = hl.queues;
  std::map<VertexId, int> gpos;
  for (const auto& [p, v] : placed) {
    out.layout.order.push_back(v);
    gpos[v] = static_cast<int>(gpos.size());
  }

  std::vector<std::tuple<int, int, VertexId, VertexId>> edges;
  for (auto [a, b] : m.guest.edges()) {
    VertexId u = m.guest.id(a), v = m.guest.id(b);
    if (gpos[v] < gpos[u]) std::swap(u, v);
    edges.emplace_back(gpos[u], gpos[v], u, v);
  }
  std::sort(edges.begin(), edges.end());

  std::map<QueueKey, int> key_index;
  for (const auto& [pu, pv, u, v] : edges) {
    std::vector<char> allowed(h.vertex_count(), 0);
    for (const auto* b : {&m.branch.at(u), &m.branch.at(v)})
      for (const auto& x : *b) allowed[h.index(x)] = 1;
    auto paths = detail::bounded_paths(h, h.index(m.centre.at(u)), h.index(m.centre.at(v)), allowed, 2 * r + 1);
    if (paths.empty()) throw ConstructionError("queue_shallow", "no short path for " + u + "-" + v);
    std::optional<QueueKey> reuse, fresh;
    for (const auto& p : paths) {
      QueueKey key{static_cast<int>(p.size()) - 1, {}, {}};
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        std::get<1>(key).push_back(host_layout.queue.at(edge_key(h.id(p[i]), h.id(p[i + 1]))));
        if (pos[p[i]] < pos[p[i + 1]]) std::get<2>(key).push_back(static_cast<int>(i));
      }
      if (key_index.count(key)) {
        if (!reuse || key < *reuse) reuse = key;
      } else if (!fresh || key < *fresh) {
        fresh = key;  // tuple order puts shortest first
      }
    }
    const QueueKey& chosen = reuse ? *reuse : *fresh;
    auto [it, added] = key_index.emplace(chosen, static_cast<int>(key_index.size()));
    out.layout.queue[edge_key(u, v)] = it->second;
  }
  out.keys = static_cast<int>(key_index.size());
  if (auto rep = verify_layout(m.guest, out.layout); !rep.verdict)
    throw ConstructionError("queue_shallow", rep.verdict.clause + ": " + rep.verdict.detail);
  return out;
}

}  // namespace shallow
