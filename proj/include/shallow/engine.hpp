#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shallow/decompositions.hpp"
#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/minors.hpp"
#include "shallow/products.hpp"

namespace shallow {

/// C(n, k) for the small arguments the engine meets.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

/// (H, L)-partition of g, a normalised decomposition of H, and an r-shallow
/// model of gPrime whose host is g. Guest vertices sit at their centres.
struct EngineInput {
  Graph g;
  HLPartition partition;
  TreeDecomposition hTD;
  MinorModel model;
  int r = 0;
};

struct EngineOutput {
  Graph J;
  std::map<VertexId, std::vector<VertexId>> sPartition;  // tree node -> guest vertices
  std::map<VertexId, VertexId> anchors;                  // guest vertex -> a(u)
  TreeDecomposition jTD;
  HLPartition lPrimePartition;  // over (J, L^(2r+1)); declared width ℓ(k+1)
  int ell = 0, t = 0, k = 0, r = 0;
  int measured_width = 0;
  int max_bag = 0;
  std::uint64_t bag_bound = 0;  // C(2r+1+t, t)
};

/// Checks every input component; returns the decomposition width t and ℓ.
inline std::pair<int, int> verify_engine_input(const EngineInput& in) {
  auto part = verify_hl_partition(in.g, in.partition);
  if (!part.verdict) throw PreconditionError("engine: partition: " + part.verdict.detail);
  auto td = verify_tree_decomposition(in.partition.quotientH, in.hTD);
  if (!td.verdict) throw PreconditionError("engine: hTD: " + td.verdict.detail);
  if (auto n = check_normalised(in.partition.quotientH, in.hTD); !n)
    throw PreconditionError("engine: hTD not normalised: " + n.clause + ": " + n.detail);
  if (!in.model.host.same_as(in.g)) throw PreconditionError("engine: model host differs from g");
  if (in.r < 0) throw InputError("engine: r must be nonnegative");
  auto mod = verify_model(in.model, in.r);
  if (!mod.verdict) throw PreconditionError("engine: model: " + mod.verdict.clause + ": " + mod.verdict.detail);
  return {std::max(td.width, 0), in.partition.width};
}

namespace detail {

struct EngineContext {
  RootedTree rt;
  std::vector<int> y_of;  // g vertex -> tree node index
};

inline EngineContext engine_context(const EngineInput& in) {
  const Graph& tree = in.hTD.tree;
  EngineContext ctx{root_tree(tree, in.hTD.root), std::vector<int>(in.g.vertex_count(), -1)};
  for (const auto& [node, members] : in.partition.partY)
    for (const auto& v : members) ctx.y_of[in.g.index(v)] = tree.index(node);
  return ctx;
}

inline int anchor_index(const EngineInput& in, const EngineContext& ctx, const VertexId& u) {
  std::set<int> xs;
  for (const auto& x : in.model.branch.at(u)) xs.insert(ctx.y_of[in.g.index(x)]);
  int best = *xs.begin();
  for (int x : xs)
    if (ctx.rt.depth[x] < ctx.rt.depth[best]) best = x;
  for (int x : xs)
    if (!ctx.rt.is_ancestor(best, x))
      throw ConstructionError("claim-1", "no node of X_" + u + " is an ancestor of all of X_" + u);
  return best;
}

}  // namespace detail

/// a(u): the node of X_u that is a tree-ancestor of all of X_u.
inline VertexId anchor(const EngineInput& in, const VertexId& u) {
  verify_engine_input(in);
  auto ctx = detail::engine_context(in);
  return in.hTD.tree.id(detail::anchor_index(in, ctx, u));
}

/// Re-checks an engine output against its input without rebuilding it.
inline Verdict verify_engine_output(const EngineInput& in, const EngineOutput& out) {
  const Graph& gp = in.model.guest;
  // J must be the quotient of gPrime by S.
  Graph quotient;
  std::map<VertexId, VertexId> part_of;
  for (const auto& [x, members] : out.sPartition) {
    if (members.empty()) return Verdict::reject("S", "empty part '" + x + "' kept in J");
    quotient.add_vertex(x);
    for (const auto& u : members) part_of[u] = x;
  }
  for (auto [u, v] : gp.edges()) {
    auto a = part_of.find(gp.id(u)), b = part_of.find(gp.id(v));
    if (a == part_of.end() || b == part_of.end()) return Verdict::reject("S", "S is not a partition of the guest");
    if (a->second != b->second) quotient.add_edge(a->second, b->second);
  }
  if (!quotient.same_as(out.J)) return Verdict::reject("J", "J is not the quotient of the guest by S");
  RootedTree rt = root_tree(out.jTD.tree, out.jTD.root);
  for (auto [x, y] : out.J.edges()) {
    int a = out.jTD.tree.index(out.J.id(x)), b = out.jTD.tree.index(out.J.id(y));
    if (!rt.related(a, b)) return Verdict::reject("claim-3", "J edge " + out.J.id(x) + "-" + out.J.id(y) + " not ancestor-related");
  }
  auto td = verify_tree_decomposition(out.J, out.jTD);
  if (!td.verdict) return td.verdict;
  if (static_cast<std::uint64_t>(td.width + 1) > out.bag_bound)
    return Verdict::reject("claim-4", "bag of size " + std::to_string(td.width + 1) + " exceeds " + std::to_string(out.bag_bound));
  if (out.lPrimePartition.partY != out.sPartition) return Verdict::reject("partition", "J-partition differs from S");
  auto part = verify_hl_partition(gp, out.lPrimePartition);
  if (!part.verdict) return part.verdict;
  if (part.width > out.ell * (out.k + 1))
    return Verdict::reject("claim-2", "width " + std::to_string(part.width) + " exceeds ℓ(k+1)");
  return Verdict::accept();
}

inline EngineOutput quotient_engine(const EngineInput& in) {
  auto [t, ell] = verify_engine_input(in);
  auto ctx = detail::engine_context(in);
  const Graph& tree = in.hTD.tree;
  const Graph& gp = in.model.guest;

  EngineOutput out;
  out.ell = ell;
  out.t = t;
  out.r = in.r;
  out.k = max_degree(power_or_edgeless(in.partition.quotientL, in.r));
  out.bag_bound = binomial(2 * in.r + 1 + t, t);

  std::vector<int> a(gp.vertex_count());
  for (int u = 0; u < gp.vertex_count(); ++u) {
    a[u] = detail::anchor_index(in, ctx, gp.id(u));
    out.anchors[gp.id(u)] = tree.id(a[u]);
    out.sPartition[tree.id(a[u])].push_back(gp.id(u));
  }
  for (const auto& [x, members] : out.sPartition) out.J.add_vertex(x);
  for (auto [u, v] : gp.edges())
    if (a[u] != a[v]) out.J.add_edge(tree.id(a[u]), tree.id(a[v]));

  // Claim 3 and the bags C_x.
  std::vector<std::set<VertexId>> bags(tree.vertex_count());
  for (const auto& [x, members] : out.sPartition) bags[tree.index(x)].insert(x);
  for (auto [x, y] : out.J.edges()) {
    int ix = tree.index(out.J.id(x)), iy = tree.index(out.J.id(y));
    if (!ctx.rt.related(ix, iy))
      throw ConstructionError("claim-3", "J edge " + out.J.id(x) + "-" + out.J.id(y) + " is not ancestor-related");
    int top = ctx.rt.is_ancestor(ix, iy) ? ix : iy;
    for (int z = top == ix ? iy : ix; z != top; z = ctx.rt.parent[z]) bags[z].insert(tree.id(top));
  }
  out.jTD.tree = tree;
  out.jTD.root = in.hTD.root;
  for (int x = 0; x < tree.vertex_count(); ++x) {
    out.jTD.bags[tree.id(x)] = Bag(bags[x].begin(), bags[x].end());
    out.max_bag = std::max(out.max_bag, static_cast<int>(bags[x].size()));
  }
  if (static_cast<std::uint64_t>(out.max_bag) > out.bag_bound)
    throw ConstructionError("claim-4", "bag of size " + std::to_string(out.max_bag) + " exceeds C(2r+1+t,t) = " + std::to_string(out.bag_bound));

  // Z'_z: guest vertices whose centre lies in Z_z, indexed by L^(2r+1).
  std::map<VertexId, VertexId> z_of;
  for (const auto& [z, members] : in.partition.partZ)
    for (const auto& v : members) z_of[v] = z;
  HLPartition& lp = out.lPrimePartition;
  lp.quotientH = out.J;
  lp.quotientL = graph_power(in.partition.quotientL, 2 * in.r + 1);
  lp.partY = out.sPartition;
  for (const auto& u : gp.ids()) lp.partZ[z_of.at(in.model.centre.at(u))].push_back(u);
  for (auto& [z, members] : lp.partZ) std::sort(members.begin(), members.end());
  for (auto& [x, members] : out.sPartition) std::sort(members.begin(), members.end());
  lp.partY = out.sPartition;
  lp.width = ell * (out.k + 1);
  auto rep = verify_hl_partition(gp, lp);
  if (!rep.verdict) throw ConstructionError("claim-2", rep.verdict.clause + ": " + rep.verdict.detail);
  out.measured_width = rep.width;

  if (auto v = verify_engine_output(in, out); !v) throw ConstructionError(v.clause, v.detail);
  return out;
}

struct GpstResult {
  EngineOutput engine;
  EmbeddingWitness witness;  // gPrime into J ⊠ P' ⊠ K_{ℓ(2r+1)^2}
  TreeDecomposition hostTD;  // of J ⊠ K_{ℓ(2r+1)^2}
  Graph pathPrime;
  int clique = 0;
  std::uint64_t rtw_bound = 0;  // ℓ(2r+1)^2 C(2r+1+t,t) - 1
};

/// Position of each node along a path graph, walking from its smaller-id end.
inline std::map<VertexId, int> path_positions(const Graph& p) {
  int n = p.vertex_count();
  if (n == 0) throw PreconditionError("path factor is empty");
  if (p.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(p) || max_degree(p) > 2)
    throw PreconditionError("path factor is not a path");
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (p.degree(v) <= 1 && (start < 0 || p.id(v) < p.id(start))) start = v;
  std::map<VertexId, int> pos;
  int prev = -1, cur = start;
  for (int i = 0; i < n; ++i) {
    pos[p.id(cur)] = i;
    int next = -1;
    for (int w : p.neighbours(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }
  return pos;
}

/// Product structure for an r-shallow minor of H ⊠ P ⊠ K_ℓ: the model's host
/// must be that product and hTD a normalised decomposition of H.
inline GpstResult gpst_shallow(const MinorModel& model, const Graph& h, const Graph& p, int ell,
                               const TreeDecomposition& hTD, int r) {
  auto pos = path_positions(p);
  Graph host = strong_product(strong_product(h, p), complete_graph(ell));
  if (!model.host.same_as(host)) throw PreconditionError("gpst: model host is not H ⊠ P ⊠ K_ℓ");
  EmbeddingWitness identity{host, {}};
  for (const auto& v : host.ids()) identity.injection[v] = v;
  EngineInput in{host, partition_from_embedding(host, identity, h, p, ell), hTD, model, r};

  GpstResult res;
  res.engine = quotient_engine(in);
  const EngineOutput& eo = res.engine;
  int width = 2 * r + 1;
  int m = p.vertex_count();
  res.pathPrime = path((m + width - 1) / width);
  res.clique = ell * width * width;
  res.witness.host = strong_product(strong_product(eo.J, res.pathPrime), complete_graph(res.clique));

  // Cells of the (J, P^(2r+1))-partition, numbered in sorted id order.
  std::map<VertexId, VertexId> z_of;
  for (const auto& [z, members] : eo.lPrimePartition.partZ)
    for (const auto& u : members) z_of[u] = z;
  for (const auto& [x, members] : eo.sPartition) {
    std::map<VertexId, int> used;
    for (const auto& u : members) {
      int i = used[z_of.at(u)]++;
      int pp = pos.at(z_of.at(u));
      int kidx = i * width + pp % width;
      res.witness.injection[u] = product_id(product_id(x, std::to_string(pp / width)), std::to_string(kidx));
    }
  }
  if (auto v = verify_embedding(model.guest, res.witness); !v) throw ConstructionError("gpst-embedding", v.detail);
  res.hostTD = product_tree_decomposition(eo.jTD, res.clique);
  res.rtw_bound = static_cast<std::uint64_t>(res.clique) * eo.bag_bound - 1;
  auto tdr = verify_tree_decomposition(strong_product(eo.J, complete_graph(res.clique)), res.hostTD);
  if (!tdr.verdict || static_cast<std::uint64_t>(tdr.width) > res.rtw_bound)
    throw ConstructionError("gpst-treewidth", "host decomposition exceeds the row treewidth bound");
  return res;
}

}  // namespace shallow
