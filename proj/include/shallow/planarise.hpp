#pragma once

#include <algorithm>
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

/// One crossing between edges a and b. pos* index the crossing along each
/// edge, counted from the smaller endpoint id. side = +1 when b, directed
/// first->second, passes a from left to right; 0 when unknown.
struct Crossing {
  EdgeKey a;
  EdgeKey b;
  int posA = 0;
  int posB = 0;
  int side = 0;
};

struct EmbeddedGraph {
  Graph graph;
  std::vector<Crossing> crossings;
};

/// Orients every record so that a < b and sorts the list. Swapping the two
/// edges reverses the side flag.
inline EmbeddedGraph canonicalise(EmbeddedGraph e) {
  for (auto& c : e.crossings)
    if (c.b < c.a) {
      std::swap(c.a, c.b);
      std::swap(c.posA, c.posB);
      c.side = -c.side;
    }
  std::sort(e.crossings.begin(), e.crossings.end(), [](const Crossing& x, const Crossing& y) {
    return std::tie(x.a, x.b, x.posA, x.posB) < std::tie(y.a, y.b, y.posA, y.posB);
  });
  return e;
}

/// Crossing indices along each crossed edge, in position order.
/// Throws InputError on unknown edges, self-crossings or repeated positions.
inline std::map<EdgeKey, std::vector<int>> crossing_sequences(const EmbeddedGraph& e) {
  std::map<EdgeKey, std::vector<std::pair<int, int>>> raw;
  for (int i = 0; i < static_cast<int>(e.crossings.size()); ++i) {
    const Crossing& c = e.crossings[i];
    for (const EdgeKey* k : {&c.a, &c.b})
      if (!e.graph.contains(k->first) || !e.graph.contains(k->second) || !e.graph.adjacent(k->first, k->second))
        throw InputError("crossing references non-edge " + k->first + "-" + k->second);
    if (c.a == c.b) throw InputError("edge " + c.a.first + "-" + c.a.second + " crosses itself");
    if (c.side < -1 || c.side > 1) throw InputError("side flag must be -1, 0 or +1");
    raw[c.a].emplace_back(c.posA, i);
    raw[c.b].emplace_back(c.posB, i);
  }
  std::map<EdgeKey, std::vector<int>> out;
  for (auto& [key, seq] : raw) {
    std::sort(seq.begin(), seq.end());
    for (std::size_t j = 1; j < seq.size(); ++j)
      if (seq[j].first == seq[j - 1].first)
        throw InputError("two crossings share position " + std::to_string(seq[j].first) + " on " + key.first + "-" +
                         key.second);
    for (auto [pos, idx] : seq) out[key].push_back(idx);
  }
  return out;
}

inline int max_crossings_per_edge(const EmbeddedGraph& e) {
  int best = 0;
  for (const auto& [key, seq] : crossing_sequences(e)) best = std::max(best, static_cast<int>(seq.size()));
  return best;
}

/// Simple drawing: two edges cross at most once, adjacent edges never.
inline Verdict verify_simple(const EmbeddedGraph& e) {
  crossing_sequences(e);
  std::set<std::pair<EdgeKey, EdgeKey>> seen;
  for (const auto& c : e.crossings) {
    auto pair = std::minmax(c.a, c.b);
    if (!seen.insert(pair).second)
      return Verdict::reject("simple", "edges " + c.a.first + "-" + c.a.second + " and " + c.b.first + "-" +
                                           c.b.second + " cross twice");
    if (c.a.first == c.b.first || c.a.first == c.b.second || c.a.second == c.b.first || c.a.second == c.b.second)
      return Verdict::reject("simple", "adjacent edges " + c.a.first + "-" + c.a.second + " and " + c.b.first +
                                           "-" + c.b.second + " cross");
  }
  return Verdict::accept();
}

// ---------------------------------------------------------------------------
// Planarisation

inline constexpr char kDummyPrefix = '@';

struct Planarization {
  Graph plane;
  std::vector<VertexId> dummy;          // one per crossing, same index
  std::map<EdgeKey, HostPath> paths;    // from key.first to key.second
};

/// Replaces every crossing by a degree-4 dummy "@x<i>".
inline Planarization planarize(const EmbeddedGraph& e) {
  auto seqs = crossing_sequences(e);
  for (const auto& id : e.graph.ids())
    if (!id.empty() && id[0] == kDummyPrefix)
      throw InputError("vertex id '" + id + "' uses the reserved dummy prefix");
  Planarization p;
  p.plane = vertex_copy(e.graph);
  for (std::size_t i = 0; i < e.crossings.size(); ++i) {
    p.dummy.push_back(std::string(1, kDummyPrefix) + "x" + std::to_string(i));
    p.plane.add_vertex(p.dummy.back());
  }
  for (auto [u, v] : e.graph.edges()) {
    EdgeKey key = edge_key(e.graph.id(u), e.graph.id(v));
    HostPath path{key.first};
    if (auto it = seqs.find(key); it != seqs.end())
      for (int idx : it->second) path.push_back(p.dummy[idx]);
    path.push_back(key.second);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) p.plane.add_edge(path[j], path[j + 1]);
    p.paths[key] = std::move(path);
  }
  return p;
}

namespace detail {

/// Row of a crossing dummy on the path of `edge`: the smaller edge takes "0".
inline VertexId crossing_row(const Crossing& c, const EdgeKey& edge) {
  return edge == std::min(c.a, c.b) ? "0" : "1";
}

}  // namespace detail

/// k-planar drawing -> topological model of the graph in plane ∘ edgeless(2)
/// at depth k/2. Vertices sit in row "0"; each dummy is lifted injectively
/// to one row per edge through it.
inline MinorModel kplanar_model(const EmbeddedGraph& e, int k) {
  if (k < 0) throw InputError("kplanar_model: k must be non-negative");
  auto seqs = crossing_sequences(e);
  for (const auto& [key, seq] : seqs)
    if (static_cast<int>(seq.size()) > k)
      throw PreconditionError("kplanar_model: edge " + key.first + "-" + key.second + " has " +
                              std::to_string(seq.size()) + " crossings, more than k");
  Planarization pl = planarize(e);
  Graph host = lex_product(pl.plane, edgeless(2));
  std::map<VertexId, VertexId> image;
  for (const auto& v : e.graph.ids()) image[v] = product_id(v, "0");
  std::map<EdgeKey, HostPath> lifted;
  for (const auto& [key, path] : pl.paths) {
    HostPath q{image[key.first]};
    if (auto it = seqs.find(key); it != seqs.end())
      for (int idx : it->second) q.push_back(product_id(pl.dummy[idx], detail::crossing_row(e.crossings[idx], key)));
    q.push_back(image[key.second]);
    lifted[key] = std::move(q);
  }
  return subdivision_model(e.graph, host, image, lifted, k);
}

// ---------------------------------------------------------------------------
// String graphs

/// Curves keyed by id; each lists its intersection events in order along it.
/// Every event lies on exactly two distinct curves.
struct StringCurves {
  std::map<VertexId, std::vector<std::string>> curves;
};

struct StringPlane {
  Graph plane;
  std::map<VertexId, std::vector<VertexId>> chain;  // plane vertices along each curve
  std::map<std::string, std::pair<VertexId, VertexId>> owners;  // event -> (smaller, larger) curve
};

inline StringPlane string_plane(const StringCurves& s) {
  StringPlane out;
  std::map<std::string, std::vector<VertexId>> on;
  for (const auto& [v, events] : s.curves) {
    if (v.find(kProductSep) != VertexId::npos) throw InputError("curve id '" + v + "' contains the separator");
    std::set<std::string> local;
    for (const auto& ev : events) {
      if (!local.insert(ev).second) throw PreconditionError("curve '" + v + "' meets itself at event '" + ev + "'");
      on[ev].push_back(v);
    }
  }
  for (const auto& [ev, cs] : on) {
    if (cs.size() != 2)
      throw PreconditionError("event '" + ev + "' lies on " + std::to_string(cs.size()) + " curves, expected 2");
    out.owners[ev] = {std::min(cs[0], cs[1]), std::max(cs[0], cs[1])};
    out.plane.add_vertex("@e:" + ev);
  }
  for (const auto& [v, events] : s.curves) {
    auto& ch = out.chain[v];
    for (const auto& ev : events) ch.push_back("@e:" + ev);
    if (events.size() <= 1) {
      ch.push_back("@c:" + v);
      out.plane.add_vertex(ch.back());
    }
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) out.plane.add_edge(ch[i], ch[i + 1]);
  }
  return out;
}

/// Curves sharing an event are adjacent.
inline Graph intersection_graph(const StringCurves& s) {
  Graph g;
  for (const auto& [v, events] : s.curves) g.add_vertex(v);
  std::map<std::string, std::vector<VertexId>> on;
  for (const auto& [v, events] : s.curves)
    for (const auto& ev : events) on[ev].push_back(v);
  for (const auto& [ev, cs] : on)
    if (cs.size() == 2 && cs[0] != cs[1]) g.add_edge(cs[0], cs[1]);
  return g;
}

/// Intersection graph as a floor(delta/2)-shallow minor of plane ∘ edgeless(2).
/// Needs delta >= 2: a curve with one event carries two chain vertices.
inline MinorModel string_model(const StringCurves& s, int delta) {
  if (delta < 2) throw PreconditionError("string_model: delta must be at least 2");
  for (const auto& [v, events] : s.curves)
    if (static_cast<int>(events.size()) > delta)
      throw PreconditionError("string_model: curve '" + v + "' has more than delta events");
  StringPlane sp = string_plane(s);
  MinorModel m{intersection_graph(s), lex_product(sp.plane, edgeless(2)), {}, {}, 2 * (delta / 2), false, {}, {}};
  for (const auto& [v, ch] : sp.chain) {
    std::vector<VertexId> lifted;
    for (const auto& x : ch) {
      VertexId row = "0";
      if (x.rfind("@e:", 0) == 0 && sp.owners.at(x.substr(3)).second == v) row = "1";
      lifted.push_back(product_id(x, row));
    }
    m.centre[v] = lifted[(lifted.size() - 1) / 2];
    std::sort(lifted.begin(), lifted.end());
    m.branch[v] = std::move(lifted);
  }
  if (auto verdict = verify_model_at_depth(m); !verdict)
    throw ConstructionError("string_model", verdict.clause + ": " + verdict.detail);
  return m;
}

// ---------------------------------------------------------------------------
// Cluster planar graphs

struct ClusterStructure {
  Graph g;
  std::map<VertexId, std::vector<VertexId>> clusters;
  Graph clusterAdjacency;
  int k = 1;
};

/// Witness of g inside clusterAdjacency ⊠ K_k: v -> (cluster, rank in cluster).
inline EmbeddingWitness cluster_embed(const ClusterStructure& c) {
  if (c.k < 1) throw InputError("cluster_embed: k must be positive");
  std::map<VertexId, VertexId> cluster_of;
  EmbeddingWitness w{strong_product(c.clusterAdjacency, complete_graph(c.k)), {}};
  for (const auto& [cid, members] : c.clusters) {
    if (!c.clusterAdjacency.contains(cid)) throw InputError("cluster '" + cid + "' missing from clusterAdjacency");
    if (static_cast<int>(members.size()) > c.k)
      throw PreconditionError("cluster_embed: cluster '" + cid + "' has more than k vertices");
    std::vector<VertexId> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (!c.g.contains(sorted[i])) throw InputError("cluster member '" + sorted[i] + "' is not a vertex");
      if (!cluster_of.emplace(sorted[i], cid).second)
        throw PreconditionError("cluster_embed: '" + sorted[i] + "' lies in two clusters");
      w.injection[sorted[i]] = product_id(cid, std::to_string(i));
    }
  }
  for (const auto& v : c.g.ids())
    if (!cluster_of.count(v)) throw PreconditionError("cluster_embed: '" + v + "' lies in no cluster");
  for (auto [u, v] : c.g.edges()) {
    const auto &cu = cluster_of[c.g.id(u)], &cv = cluster_of[c.g.id(v)];
    if (cu != cv && !c.clusterAdjacency.adjacent(cu, cv))
      throw PreconditionError("cluster_embed: edge " + c.g.id(u) + "-" + c.g.id(v) + " joins non-adjacent clusters");
  }
  if (auto verdict = verify_embedding(c.g, w); !verdict)
    throw ConstructionError("cluster_embed", verdict.clause + ": " + verdict.detail);
  return w;
}

// ---------------------------------------------------------------------------
// Fan-bundle planar graphs

struct FanBundle {
  VertexId origin;
  std::vector<EdgeKey> edges;
};

/// Crossing between two bundles; positions count from each bundle's origin.
struct BundleCrossing {
  std::string a;
  std::string b;
  int posA = 0;
  int posB = 0;
};

/// Every edge end (edge, endpoint) belongs to exactly one bundle anchored at
/// that endpoint. Only bundles cross; edge middles are crossing-free.
struct BundleStructure {
  Graph graph;
  std::map<std::string, FanBundle> bundles;
  std::vector<BundleCrossing> crossings;
};

struct BundlePlane {
  Graph plane;
  std::map<std::string, VertexId> terminal;
  std::vector<VertexId> dummy;
  std::map<std::string, std::vector<int>> along;  // crossing indices from the origin
};

inline BundlePlane bundle_plane(const BundleStructure& b) {
  std::map<std::pair<EdgeKey, VertexId>, std::string> end_of;
  for (const auto& [bid, fb] : b.bundles) {
    if (!b.graph.contains(fb.origin)) throw InputError("bundle '" + bid + "' has unknown origin");
    if (fb.edges.empty()) throw InputError("bundle '" + bid + "' is empty");
    for (const auto& e : fb.edges) {
      if (!b.graph.contains(e.first) || !b.graph.contains(e.second) || !b.graph.adjacent(e.first, e.second))
        throw InputError("bundle '" + bid + "' holds non-edge " + e.first + "-" + e.second);
      if (e.first != fb.origin && e.second != fb.origin)
        throw PreconditionError("bundle '" + bid + "' holds an edge not incident to its origin");
      if (!end_of.emplace(std::make_pair(edge_key(e.first, e.second), fb.origin), bid).second)
        throw PreconditionError("edge end " + e.first + "-" + e.second + " at " + fb.origin + " lies in two bundles");
    }
  }
  for (const auto& id : b.graph.ids())
    if (!id.empty() && id[0] == kDummyPrefix)
      throw InputError("vertex id '" + id + "' uses the reserved dummy prefix");
  BundlePlane out;
  out.plane = vertex_copy(b.graph);
  std::map<std::string, std::vector<std::pair<int, int>>> raw;
  for (int i = 0; i < static_cast<int>(b.crossings.size()); ++i) {
    const auto& c = b.crossings[i];
    if (!b.bundles.count(c.a) || !b.bundles.count(c.b)) throw InputError("crossing references an unknown bundle");
    if (c.a == c.b) throw InputError("bundle '" + c.a + "' crosses itself");
    out.dummy.push_back(std::string(1, kDummyPrefix) + "d" + std::to_string(i));
    out.plane.add_vertex(out.dummy.back());
    raw[c.a].emplace_back(c.posA, i);
    raw[c.b].emplace_back(c.posB, i);
  }
  for (const auto& [bid, fb] : b.bundles) {
    out.terminal[bid] = "@t:" + bid;
    out.plane.add_vertex(out.terminal[bid]);
    auto seq = raw[bid];
    std::sort(seq.begin(), seq.end());
    VertexId prev = fb.origin;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (j > 0 && seq[j].first == seq[j - 1].first)
        throw InputError("two crossings share a position on bundle '" + bid + "'");
      out.along[bid].push_back(seq[j].second);
      out.plane.add_edge(prev, out.dummy[seq[j].second]);
      prev = out.dummy[seq[j].second];
    }
    out.plane.add_edge(prev, out.terminal[bid]);
  }
  for (auto [u, v] : b.graph.edges()) {
    EdgeKey key = edge_key(b.graph.id(u), b.graph.id(v));
    auto su = end_of.find({key, key.first});
    auto sv = end_of.find({key, key.second});
    if (su == end_of.end() || sv == end_of.end())
      throw PreconditionError("edge " + key.first + "-" + key.second + " is not bundled at both ends");
    out.plane.add_edge(out.terminal[su->second], out.terminal[sv->second]);
  }
  return out;
}

/// Bundled graph as a (k+1)-shallow minor of plane ∘ edgeless(2). Each branch
/// set is the vertex plus its bundle paths; a crossing dummy is lifted to row
/// "0" for the smaller origin and "1" for the larger.
inline MinorModel fanbundle_model(const BundleStructure& b, int k) {
  if (k < 0) throw InputError("fanbundle_model: k must be non-negative");
  BundlePlane bp = bundle_plane(b);
  for (const auto& [bid, seq] : bp.along)
    if (static_cast<int>(seq.size()) > k)
      throw PreconditionError("fanbundle_model: bundle '" + bid + "' crossed more than k times");
  MinorModel m{b.graph, lex_product(bp.plane, edgeless(2)), {}, {}, 2 * (k + 1), false, {}, {}};
  std::map<VertexId, std::set<VertexId>> branch;
  for (const auto& v : b.graph.ids()) {
    m.centre[v] = product_id(v, "0");
    branch[v].insert(m.centre[v]);
  }
  for (const auto& [bid, fb] : b.bundles) {
    branch[fb.origin].insert(product_id(bp.terminal[bid], "0"));
    for (int idx : bp.along[bid]) {
      const auto& c = b.crossings[idx];
      const VertexId& oa = b.bundles.at(c.a).origin;
      const VertexId& ob = b.bundles.at(c.b).origin;
      VertexId row = (oa == ob || fb.origin == std::min(oa, ob)) ? "0" : "1";
      branch[fb.origin].insert(product_id(bp.dummy[idx], row));
    }
  }
  for (auto& [v, s] : branch) m.branch[v].assign(s.begin(), s.end());
  if (auto verdict = verify_model_at_depth(m); !verdict)
    throw ConstructionError("fanbundle_model", verdict.clause + ": " + verdict.detail);
  return m;
}

// ---------------------------------------------------------------------------
// Gap charging

/// charged[i] is the edge that pays for crossing i.
struct GapCharging {
  std::vector<EdgeKey> charged;
  int k = 0;
};

inline Verdict verify_gap_charging(const EmbeddedGraph& e, const GapCharging& ch) {
  if (ch.charged.size() != e.crossings.size())
    return Verdict::reject("total", "charging covers " + std::to_string(ch.charged.size()) + " of " +
                                        std::to_string(e.crossings.size()) + " crossings");
  std::map<EdgeKey, int> load;
  for (std::size_t i = 0; i < e.crossings.size(); ++i) {
    const auto& c = e.crossings[i];
    if (ch.charged[i] != c.a && ch.charged[i] != c.b)
      return Verdict::reject("incident", "crossing " + std::to_string(i) + " charged to a non-participant");
    if (++load[ch.charged[i]] > ch.k)
      return Verdict::reject("capacity", "edge " + ch.charged[i].first + "-" + ch.charged[i].second +
                                             " charged more than " + std::to_string(ch.k) + " times");
  }
  return Verdict::accept();
}

namespace detail {

/// Augmenting-path b-matching of crossings to edges with capacity k.
class GapFlow {
 public:
  GapFlow(const EmbeddedGraph& e, int k) : e_(e), k_(k) {
    for (const auto& c : e.crossings)
      for (const EdgeKey* key : {&c.a, &c.b})
        if (!index_.count(*key)) {
          index_.emplace(*key, static_cast<int>(keys_.size()));
          keys_.push_back(*key);
        }
    owners_.resize(keys_.size());
    choice_.assign(e.crossings.size(), -1);
  }

  bool run() {
    for (int c = 0; c < static_cast<int>(e_.crossings.size()); ++c) {
      visited_.assign(keys_.size(), 0);
      if (!place(c, -1)) return false;
    }
    return true;
  }

  GapCharging charging() const {
    GapCharging ch{{}, k_};
    for (int edge : choice_) ch.charged.push_back(keys_[edge]);
    return ch;
  }

 private:
  std::vector<int> options(int c) const {
    return {index_.at(e_.crossings[c].a), index_.at(e_.crossings[c].b)};
  }

  bool place(int c, int forbidden) {
    for (int edge : options(c)) {
      if (edge == forbidden || visited_[edge]) continue;
      visited_[edge] = 1;
      if (static_cast<int>(owners_[edge].size()) < k_) {
        assign(c, edge);
        return true;
      }
      for (std::size_t j = 0; j < owners_[edge].size(); ++j) {
        int other = owners_[edge][j];
        if (place(other, edge)) {
          owners_[edge].erase(owners_[edge].begin() + j);
          assign(c, edge);
          return true;
        }
      }
    }
    return false;
  }

  void assign(int c, int edge) {
    choice_[c] = edge;
    owners_[edge].push_back(c);
  }

  const EmbeddedGraph& e_;
  int k_;
  std::map<EdgeKey, int> index_;
  std::vector<EdgeKey> keys_;
  std::vector<std::vector<int>> owners_;
  std::vector<int> choice_;
  std::vector<char> visited_;
};

}  // namespace detail

/// Exact k-gap feasibility via integral flow; nullopt when infeasible.
/// Crossings are placed in list order, each trying edge a before b.
inline std::optional<GapCharging> gap_charging(const EmbeddedGraph& e, int k) {
  if (k < 0) throw InputError("gap_charging: k must be non-negative");
  crossing_sequences(e);
  detail::GapFlow flow(e, k);
  if (!flow.run()) return std::nullopt;
  GapCharging ch = flow.charging();
  if (auto v = verify_gap_charging(e, ch); !v) throw ConstructionError("gap_charging", v.clause + ": " + v.detail);
  return ch;
}

struct ShortcutGap {
  EmbeddedGraph drawing;  // G^P with every crossing a ball B_w could host
  GapCharging charging;
  long long bound = 0;
};

/// Conservative crossing incidence of G^P and the charging rule: crossings
/// with a base edge are charged to it; two new edges meeting at w are charged
/// to the one whose shortcut does not pass through w internally, the larger
/// edge when both do.
inline ShortcutGap shortcut_gap_charging(const ShortcutSystem& s) {
  Graph gp = apply_shortcuts(s);
  std::map<EdgeKey, HostPath> fresh;
  for (const auto& p : detail::sorted_shortcuts(s.paths)) {
    EdgeKey key = edge_key(p.front(), p.back());
    if (!s.base.adjacent(p.front(), p.back())) fresh.emplace(key, p);
  }
  auto internal = [](const HostPath& p, const VertexId& w) {
    return std::find(p.begin() + 1, p.end() - 1, w) != p.end() - 1;
  };
  ShortcutGap out;
  out.drawing.graph = gp;
  out.bound = static_cast<long long>(s.d - 1) * (s.k - 1) + 2LL * s.d;
  std::map<EdgeKey, int> next_pos;
  auto add = [&](const EdgeKey& a, const EdgeKey& b, const EdgeKey& payer) {
    out.drawing.crossings.push_back({a, b, next_pos[a]++, next_pos[b]++, 0});
    out.charging.charged.push_back(payer);
  };
  for (auto [u, v] : s.base.edges()) {
    EdgeKey base = edge_key(s.base.id(u), s.base.id(v));
    for (const auto& [key, p] : fresh)
      for (const VertexId* w : {&base.first, &base.second})
        if (internal(p, *w)) add(base, key, base);
  }
  for (auto i = fresh.begin(); i != fresh.end(); ++i)
    for (auto j = std::next(i); j != fresh.end(); ++j) {
      const HostPath &p1 = i->second, &p2 = j->second;
      std::set<VertexId> on2(p2.begin(), p2.end());
      for (const auto& w : p1) {
        if (!on2.count(w)) continue;
        bool in1 = internal(p1, w), in2 = internal(p2, w);
        if (!in1 && !in2) continue;
        add(i->first, j->first, in1 ? j->first : i->first);
      }
    }
  out.charging.k = static_cast<int>(out.bound);
  if (auto v = verify_gap_charging(out.drawing, out.charging); !v)
    throw ConstructionError("shortcut-gap", v.clause + ": " + v.detail);
  return out;
}

// ---------------------------------------------------------------------------
// Fan-planar friend assignment

struct FriendAssignment {
  std::map<EdgeKey, VertexId> friend_of;  // per crossed edge
  std::map<EdgeKey, int> split;           // crossings on the edge nearer its first endpoint
};

/// Well-behaved: along every crossed edge uv, the edges crossing it have
/// friend u for the first split[uv] crossings and friend v afterwards, and
/// every friend is a common endpoint of the edges crossing its edge.
inline Verdict verify_friend_assignment(const EmbeddedGraph& e, const FriendAssignment& f) {
  auto seqs = crossing_sequences(e);
  for (const auto& [key, seq] : seqs) {
    auto fit = f.friend_of.find(key);
    if (fit == f.friend_of.end()) return Verdict::reject("total", "crossed edge " + key.first + "-" + key.second);
    for (int idx : seq) {
      const auto& c = e.crossings[idx];
      const EdgeKey& other = c.a == key ? c.b : c.a;
      if (fit->second != other.first && fit->second != other.second)
        return Verdict::reject("common-endpoint", "friend of " + key.first + "-" + key.second + " misses " +
                                                      other.first + "-" + other.second);
    }
    auto sit = f.split.find(key);
    if (sit == f.split.end() || sit->second < 0 || sit->second > static_cast<int>(seq.size()))
      return Verdict::reject("split", "edge " + key.first + "-" + key.second + " has no valid split point");
    for (int j = 0; j < static_cast<int>(seq.size()); ++j) {
      const auto& c = e.crossings[seq[j]];
      const EdgeKey& other = c.a == key ? c.b : c.a;
      const VertexId& want = j < sit->second ? key.first : key.second;
      auto oit = f.friend_of.find(other);
      if (oit == f.friend_of.end() || oit->second != want)
        return Verdict::reject("well-behaved", "edge " + key.first + "-" + key.second + " at crossing " +
                                                   std::to_string(j));
    }
  }
  return Verdict::accept();
}

/// Friend assignment for a simple fan-planar drawing. An edge crossed at least
/// twice has its unique friend; an edge crossed once takes the friend decided
/// by the scan of the edge it crosses.
inline FriendAssignment friend_assignment(const EmbeddedGraph& e) {
  if (auto v = verify_simple(e); !v) throw PreconditionError("friend_assignment: " + v.detail);
  auto seqs = crossing_sequences(e);
  auto other_of = [&](int idx, const EdgeKey& key) -> const EdgeKey& {
    const auto& c = e.crossings[idx];
    return c.a == key ? c.b : c.a;
  };
  std::map<EdgeKey, std::vector<VertexId>> common;
  for (const auto& [key, seq] : seqs) {
    std::set<VertexId> shared{other_of(seq[0], key).first, other_of(seq[0], key).second};
    for (int idx : seq) {
      const EdgeKey& o = other_of(idx, key);
      std::set<VertexId> next;
      for (const auto& x : {o.first, o.second})
        if (shared.count(x)) next.insert(x);
      shared = std::move(next);
    }
    if (shared.empty())
      throw PreconditionError("friend_assignment: edges crossing " + key.first + "-" + key.second +
                              " share no endpoint");
    if (seq.size() >= 2) {
      const VertexId& w = *shared.begin();
      int expected = 0;
      for (int idx : seq) {
        const auto& c = e.crossings[idx];
        if (c.side == 0)
          throw PreconditionError("friend_assignment: missing side flag on " + key.first + "-" + key.second);
        const EdgeKey& o = other_of(idx, key);
        int s = c.a == key ? c.side : -c.side;
        if (w == o.second) s = -s;
        if (expected == 0) expected = s;
        if (s != expected)
          throw PreconditionError("friend_assignment: fan at " + w + " crosses " + key.first + "-" + key.second +
                                  " from both sides");
      }
    }
    common[key].assign(shared.begin(), shared.end());
  }
  FriendAssignment f;
  for (const auto& [key, seq] : seqs)
    if (seq.size() >= 2) f.friend_of[key] = common[key].front();
  for (const auto& [key, seq] : seqs) {
    const VertexId& v = key.second;
    int m = static_cast<int>(seq.size()), i = m;
    for (int j = 0; j < m && i == m; ++j) {
      const EdgeKey& ej = other_of(seq[j], key);
      for (int idx : seqs.at(ej)) {
        const EdgeKey& z = other_of(idx, ej);
        if (z != key && (z.first == v || z.second == v)) {
          i = j;
          break;
        }
      }
    }
    f.split[key] = i;
    for (int j = 0; j < m; ++j) {
      const EdgeKey& ej = other_of(seq[j], key);
      if (seqs.at(ej).size() == 1) f.friend_of[ej] = j < i ? key.first : key.second;
    }
  }
  if (auto v = verify_friend_assignment(e, f); !v) throw ConstructionError("friend-assignment", v.clause + ": " + v.detail);
  return f;
}

}  // namespace shallow
