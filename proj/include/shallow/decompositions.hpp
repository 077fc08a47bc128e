#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/products.hpp"

namespace shallow {

using Bag = std::vector<VertexId>;  // sorted, unique

struct TreeDecomposition {
  Graph tree;
  VertexId root;
  std::map<VertexId, Bag> bags;
};

/// Tree rooted at a node, with parent links and Euler intervals.
struct RootedTree {
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<int> preorder;
  std::vector<int> tin, tout;

  bool is_ancestor(int a, int b) const { return tin[a] <= tin[b] && tout[b] <= tout[a]; }
  bool related(int a, int b) const { return is_ancestor(a, b) || is_ancestor(b, a); }
};

/// Throws InputError unless `tree` is a nonempty tree containing `root`.
inline RootedTree root_tree(const Graph& tree, const VertexId& root) {
  int n = tree.vertex_count();
  if (n == 0) throw InputError("decomposition tree is empty");
  if (tree.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(tree))
    throw InputError("decomposition tree is not a tree");
  int r = tree.index(root);
  RootedTree rt{std::vector<int>(n, -1), std::vector<int>(n, 0), {}, std::vector<int>(n), std::vector<int>(n)};
  std::vector<std::pair<int, std::size_t>> stack{{r, 0}};
  int clock = 0;
  rt.tin[r] = clock++;
  rt.preorder.push_back(r);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto& nb = tree.neighbours(u);
    if (next == nb.size()) {
      rt.tout[u] = clock++;
      stack.pop_back();
      continue;
    }
    int w = nb[next++];
    if (w == rt.parent[u]) continue;
    rt.parent[w] = u;
    rt.depth[w] = rt.depth[u] + 1;
    rt.tin[w] = clock++;
    rt.preorder.push_back(w);
    stack.emplace_back(w, 0);
  }
  return rt;
}

struct TDReport {
  Verdict verdict;
  int width = -1;
};

inline TDReport verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const Graph& t = td.tree;
  try {
    root_tree(t, td.root);
  } catch (const InputError& e) {
    return {Verdict::reject("tree", e.what())};
  }
  for (const auto& [node, bag] : td.bags)
    if (!t.contains(node)) return {Verdict::reject("tree", "bag for unknown node '" + node + "'")};

  int width = -1;
  std::vector<std::vector<int>> holders(g.vertex_count());
  for (int x = 0; x < t.vertex_count(); ++x) {
    auto it = td.bags.find(t.id(x));
    if (it == td.bags.end()) continue;
    width = std::max(width, static_cast<int>(it->second.size()) - 1);
    for (const auto& v : it->second) {
      auto vi = g.find(v);
      if (!vi) return {Verdict::reject("vertices", "bag '" + t.id(x) + "' holds unknown vertex '" + v + "'")};
      if (!holders[*vi].empty() && holders[*vi].back() == x)
        return {Verdict::reject("vertices", "bag '" + t.id(x) + "' repeats '" + v + "'")};
      holders[*vi].push_back(x);
    }
  }
  std::vector<char> in(t.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (holders[v].empty()) return {Verdict::reject("vertex-cover", "vertex '" + g.id(v) + "' is in no bag"), width};
    for (int x : holders[v]) in[x] = 1;
    auto dist = bfs_indexed(t, holders[v].front(), in);
    for (int x : holders[v]) in[x] = 0;
    for (int x : holders[v])
      if (dist[x] == kUnreachable)
        return {Verdict::reject("connected", "bags holding '" + g.id(v) + "' are not connected"), width};
  }
  for (auto [u, v] : g.edges()) {
    const auto& hu = holders[u];
    const auto& hv = holders[v];
    bool shared = std::any_of(hu.begin(), hu.end(),
                              [&](int x) { return std::find(hv.begin(), hv.end(), x) != hv.end(); });
    if (!shared) return {Verdict::reject("edge-cover", "edge " + g.id(u) + "-" + g.id(v) + " is in no bag"), width};
  }
  return {Verdict::accept(), width};
}

struct TreewidthResult {
  int width;
  TreeDecomposition td;
};

namespace detail {

inline std::uint32_t neighbourhood(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  std::uint32_t out = 0;
  for (std::uint32_t s = set; s; s &= s - 1) out |= adj[__builtin_ctz(s)];
  return out;
}

/// Vertices outside S ∪ {v} reachable from v through S.
inline std::uint32_t q_set(const std::vector<std::uint32_t>& adj, std::uint32_t s, int v) {
  std::uint32_t reach = 1u << v;
  for (;;) {
    std::uint32_t grown = reach | (neighbourhood(adj, reach) & s);
    if (grown == reach) break;
    reach = grown;
  }
  return neighbourhood(adj, reach) & ~(s | (1u << v));
}

}  // namespace detail

inline constexpr int kTreewidthLimit = 14;

/// Subset dynamic programme over elimination orders; exact, exponential.
inline TreewidthResult exact_treewidth(const Graph& g, int limit = kTreewidthLimit) {
  int n = g.vertex_count();
  if (n > limit) throw ResourceError("exact_treewidth: " + std::to_string(n) + " vertices exceeds limit " + std::to_string(limit));
  if (n > 24) throw ResourceError("exact_treewidth: hard limit is 24 vertices");
  if (n == 0) {
    TreeDecomposition td;
    td.tree.add_vertex("@root");
    td.root = "@root";
    td.bags["@root"] = {};
    return {-1, td};
  }

  // Work in sorted-id order so ties break by id.
  std::vector<int> by_id(n);
  for (int i = 0; i < n; ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return g.id(a) < g.id(b); });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[by_id[i]] = i;
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[pos[u]] |= 1u << pos[v];
    adj[pos[v]] |= 1u << pos[u];
  }

  std::uint32_t full = (1u << n) - 1;
  std::vector<int> tw(std::size_t(full) + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(std::size_t(full) + 1, -1);
  tw[0] = std::numeric_limits<int>::min();
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      std::uint32_t before = s & ~(1u << v);
      int cost = std::max(tw[before], __builtin_popcount(detail::q_set(adj, before, v)));
      if (cost < tw[s]) {
        tw[s] = cost;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }

  // Reconstruct the elimination order; node x gets bag {x} ∪ Q(eliminated-before-x, x).
  std::vector<int> order;
  for (std::uint32_t s = full; s; s &= ~(1u << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  TreeDecomposition td;
  for (int i = 0; i < n; ++i) td.tree.add_vertex(g.id(by_id[i]));
  td.root = g.id(by_id[order.back()]);
  std::uint32_t done = 0;
  for (int v : order) {
    std::uint32_t q = detail::q_set(adj, done, v);
    Bag bag{g.id(by_id[v])};
    int parent = -1;
    for (std::uint32_t b = q; b; b &= b - 1) {
      int w = __builtin_ctz(b);
      bag.push_back(g.id(by_id[w]));
      if (parent < 0 || rank[w] < rank[parent]) parent = w;
    }
    if (parent < 0 && v != order.back()) parent = order.back();
    if (parent >= 0) td.tree.add_edge(v, parent);
    std::sort(bag.begin(), bag.end());
    td.bags[g.id(by_id[v])] = std::move(bag);
    done |= 1u << v;
  }
  return {tw[full], std::move(td)};
}

/// T1: node set is V(h), x ∈ W_x and x ∉ W_parent(x). T2: edges are ancestor-related.
/// Assumes `td` already passes verify_tree_decomposition.
inline Verdict check_normalised(const Graph& h, const TreeDecomposition& td) {
  const Graph& t = td.tree;
  if (t.vertex_count() != h.vertex_count())
    return Verdict::reject("T1", "node set differs from vertex set");
  for (const auto& id : h.ids())
    if (!t.contains(id)) return Verdict::reject("T1", "no node for vertex '" + id + "'");
  RootedTree rt = root_tree(t, td.root);
  auto holds = [&](int node, const VertexId& v) {
    auto it = td.bags.find(t.id(node));
    return it != td.bags.end() && std::find(it->second.begin(), it->second.end(), v) != it->second.end();
  };
  for (int x = 0; x < t.vertex_count(); ++x) {
    if (!holds(x, t.id(x))) return Verdict::reject("T1", "'" + t.id(x) + "' missing from its own bag");
    if (rt.parent[x] >= 0 && holds(rt.parent[x], t.id(x)))
      return Verdict::reject("T1", "subtree of '" + t.id(x) + "' not rooted at its node");
  }
  for (auto [u, v] : h.edges()) {
    if (!rt.related(t.index(h.id(u)), t.index(h.id(v))))
      return Verdict::reject("T2", "edge " + h.id(u) + "-" + h.id(v) + " is not ancestor-related");
  }
  return Verdict::accept();
}

/// Turns a valid decomposition of h into one whose nodes are the vertices of h,
/// satisfying T1 and T2, without increasing the width.
inline TreeDecomposition normalise(const TreeDecomposition& td, const Graph& h) {
  auto report = verify_tree_decomposition(h, td);
  if (!report.verdict) throw PreconditionError("normalise: invalid decomposition (" + report.verdict.clause + ": " + report.verdict.detail + ")");
  const Graph& t = td.tree;
  RootedTree rt = root_tree(t, td.root);

  // tops[x]: vertices whose bag-subtree is rooted at x.
  std::vector<std::vector<VertexId>> tops(t.vertex_count());
  std::vector<int> top_of(h.vertex_count(), -1);
  for (int x : rt.preorder) {
    auto it = td.bags.find(t.id(x));
    if (it == td.bags.end()) continue;
    for (const auto& v : it->second) {
      int vi = h.index(v);
      if (top_of[vi] < 0) {
        top_of[vi] = x;
        tops[x].push_back(v);
      }
    }
  }

  TreeDecomposition out;
  for (const auto& id : h.ids()) out.tree.add_vertex(id);
  // chain_end[x]: last chain vertex standing in for x or its nearest ancestor with tops.
  std::vector<std::optional<VertexId>> chain_end(t.vertex_count());
  std::optional<VertexId> first_root;
  for (int x : rt.preorder) {
    std::optional<VertexId> above = rt.parent[x] >= 0 ? chain_end[rt.parent[x]] : std::nullopt;
    if (tops[x].empty()) {
      chain_end[x] = above;
      continue;
    }
    std::sort(tops[x].begin(), tops[x].end());
    Bag bag = td.bags.at(t.id(x));
    std::sort(bag.begin(), bag.end());
    Bag carried;
    std::set_difference(bag.begin(), bag.end(), tops[x].begin(), tops[x].end(), std::back_inserter(carried));
    std::optional<VertexId> prev = above;
    Bag acc = carried;
    for (const auto& v : tops[x]) {
      acc.insert(std::lower_bound(acc.begin(), acc.end(), v), v);
      out.bags[v] = acc;
      if (prev) {
        out.tree.add_edge(*prev, v);
      } else if (first_root) {
        // Components under an empty root: hang them off the first root.
        out.tree.add_edge(*first_root, v);
      } else {
        first_root = v;
      }
      prev = v;
    }
    chain_end[x] = prev;
  }
  out.root = *first_root;

  auto again = verify_tree_decomposition(h, out);
  if (!again.verdict || again.width > report.width)
    throw ConstructionError("normalise", "output failed re-verification");
  if (auto v = check_normalised(h, out); !v) throw ConstructionError("normalise", v.clause + ": " + v.detail);
  return out;
}

/// Bags {(v,i)} over the same tree; a decomposition of g ⊠ K_n.
inline TreeDecomposition product_tree_decomposition(const TreeDecomposition& td, int n) {
  if (n < 1) throw InputError("product_tree_decomposition needs n >= 1");
  TreeDecomposition out{td.tree, td.root, {}};
  for (const auto& [node, bag] : td.bags) {
    Bag lifted;
    for (const auto& v : bag)
      for (int i = 0; i < n; ++i) lifted.push_back(product_id(v, std::to_string(i)));
    std::sort(lifted.begin(), lifted.end());
    out.bags[node] = std::move(lifted);
  }
  return out;
}

struct HLPartition {
  Graph quotientH;
  Graph quotientL;
  std::map<VertexId, std::vector<VertexId>> partY;  // H-node -> vertices
  std::map<VertexId, std::vector<VertexId>> partZ;  // L-node -> vertices
  int width = 0;
};

struct PartitionReport {
  Verdict verdict;
  int width = 0;  // measured
};

namespace detail {

inline std::optional<std::string> assign_parts(const Graph& g, const Graph& q,
                                               const std::map<VertexId, std::vector<VertexId>>& parts,
                                               std::vector<int>& owner) {
  owner.assign(g.vertex_count(), -1);
  for (const auto& [node, members] : parts) {
    auto qi = q.find(node);
    if (!qi) return "part for unknown quotient node '" + node + "'";
    for (const auto& v : members) {
      auto vi = g.find(v);
      if (!vi) return "part '" + node + "' holds unknown vertex '" + v + "'";
      if (owner[*vi] >= 0) return "vertex '" + v + "' lies in two parts";
      owner[*vi] = *qi;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (owner[v] < 0) return "vertex '" + g.id(v) + "' lies in no part";
  return std::nullopt;
}

}  // namespace detail

/// Checks both partitions and edge compatibility; reports measured width.
/// The declared width must be at least the measured one.
inline PartitionReport verify_hl_partition(const Graph& g, const HLPartition& p) {
  std::vector<int> y, z;
  if (auto err = detail::assign_parts(g, p.quotientH, p.partY, y)) return {Verdict::reject("partY", *err)};
  if (auto err = detail::assign_parts(g, p.quotientL, p.partZ, z)) return {Verdict::reject("partZ", *err)};
  for (auto [u, v] : g.edges()) {
    if (y[u] != y[v] && !p.quotientH.adjacent(y[u], y[v]))
      return {Verdict::reject("H-edge", "edge " + g.id(u) + "-" + g.id(v) + " joins non-adjacent H-parts")};
    if (z[u] != z[v] && !p.quotientL.adjacent(z[u], z[v]))
      return {Verdict::reject("L-edge", "edge " + g.id(u) + "-" + g.id(v) + " joins non-adjacent L-parts")};
  }
  std::map<std::pair<int, int>, int> cell;
  int width = 0;
  for (int v = 0; v < g.vertex_count(); ++v) width = std::max(width, ++cell[{y[v], z[v]}]);
  if (width > p.width)
    return {Verdict::reject("width", "measured width " + std::to_string(width) + " exceeds declared " + std::to_string(p.width)), width};
  return {Verdict::accept(), width};
}

/// Reads the (H, L) columns off an embedding into H ⊠ L ⊠ K_ell.
inline HLPartition partition_from_embedding(const Graph& guest, const EmbeddingWitness& w, const Graph& h,
                                            const Graph& l, int ell) {
  if (auto v = verify_embedding(guest, w); !v) throw PreconditionError("partition_from_embedding: " + v.detail);
  if (!w.host.same_as(strong_product(strong_product(h, l), complete_graph(ell))))
    throw PreconditionError("partition_from_embedding: host is not H ⊠ L ⊠ K_ell");
  HLPartition p{h, l, {}, {}, ell};
  for (const auto& v : guest.ids()) {
    auto [hl, i] = split_product_id(w.injection.at(v));
    auto [hy, lz] = split_product_id(hl);
    p.partY[hy].push_back(v);
    p.partZ[lz].push_back(v);
  }
  for (auto* parts : {&p.partY, &p.partZ})
    for (auto& [node, members] : *parts) std::sort(members.begin(), members.end());
  if (auto r = verify_hl_partition(guest, p); !r.verdict)
    throw ConstructionError("partition_from_embedding", r.verdict.detail);
  return p;
}

/// Places the vertices of each cell Y_y ∩ Z_z on distinct K_width coordinates (sorted id order).
inline EmbeddingWitness embedding_from_partition(const Graph& g, const HLPartition& p) {
  if (auto r = verify_hl_partition(g, p); !r.verdict) throw PreconditionError("embedding_from_partition: " + r.verdict.detail);
  std::map<VertexId, VertexId> zpart;
  for (const auto& [node, members] : p.partZ)
    for (const auto& v : members) zpart[v] = node;
  EmbeddingWitness w{strong_product(strong_product(p.quotientH, p.quotientL), complete_graph(p.width)), {}};
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> cells;
  for (const auto& [node, members] : p.partY)
    for (const auto& v : members) cells[{node, zpart.at(v)}].push_back(v);
  for (auto& [key, members] : cells) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      w.injection[members[i]] = product_id(product_id(key.first, key.second), std::to_string(i));
  }
  if (auto v = verify_embedding(g, w); !v) throw ConstructionError("embedding_from_partition", v.detail);
  return w;
}

struct LayeredTreeDecomposition {
  std::vector<std::vector<VertexId>> layering;
  TreeDecomposition td;
};

inline TDReport verify_layered_td(const Graph& g, const LayeredTreeDecomposition& ltd) {
  std::vector<int> layer(g.vertex_count(), -1);
  for (std::size_t i = 0; i < ltd.layering.size(); ++i) {
    for (const auto& v : ltd.layering[i]) {
      auto vi = g.find(v);
      if (!vi) return {Verdict::reject("layering", "unknown vertex '" + v + "'")};
      if (layer[*vi] >= 0) return {Verdict::reject("layering", "vertex '" + v + "' in two layers")};
      layer[*vi] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (layer[v] < 0) return {Verdict::reject("layering", "vertex '" + g.id(v) + "' in no layer")};
  for (auto [u, v] : g.edges())
    if (std::abs(layer[u] - layer[v]) > 1)
      return {Verdict::reject("layering", "edge " + g.id(u) + "-" + g.id(v) + " skips a layer")};
  auto td = verify_tree_decomposition(g, ltd.td);
  if (!td.verdict) return td;
  int width = 0;
  for (const auto& [node, bag] : ltd.td.bags) {
    std::map<int, int> count;
    for (const auto& v : bag) width = std::max(width, ++count[layer[g.index(v)]]);
  }
  return {Verdict::accept(), width};
}

}  // namespace shallow
