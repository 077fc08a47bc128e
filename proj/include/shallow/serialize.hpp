#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shallow/bounds.hpp"
#include "shallow/colourings.hpp"
#include "shallow/decompositions.hpp"
#include "shallow/engine.hpp"
#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/layouts.hpp"
#include "shallow/lower_bounds.hpp"
#include "shallow/minors.hpp"
#include "shallow/planarise.hpp"

// JSON forms of every payload. Objects are keyed maps, so dumps are
// canonical; loaders validate shape and throw InputError.

namespace shallow::json {

using Json = nlohmann::json;

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + name + "': " + e.what());
  }
}

template <typename T>
T get_or(const Json& j, const char* name, T fallback) {
  if (!j.is_object() || !j.contains(name)) return fallback;
  return get<T>(j, name);
}

inline Json edge_json(const EdgeKey& e) { return Json::array({e.first, e.second}); }

inline EdgeKey edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw InputError("an edge must be a pair of vertex ids");
  return edge_key(j[0].get<std::string>(), j[1].get<std::string>());
}

// -- graphs -----------------------------------------------------------------

inline Json to_json(const Graph& g) {
  std::vector<EdgeKey> edges;
  for (auto [u, v] : g.edges()) edges.push_back(edge_key(g.id(u), g.id(v)));
  std::sort(edges.begin(), edges.end());
  Json e = Json::array();
  for (const auto& k : edges) e.push_back(edge_json(k));
  return {{"vertices", g.ids()}, {"edges", e}};
}

inline Graph graph_from(const Json& j) {
  Graph g;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw InputError("'vertices' must be an array");
  for (const auto& v : vs) {
    if (!v.is_string()) throw InputError("vertex ids must be strings");
    g.add_vertex(v.get<std::string>());
  }
  const Json& es = field(j, "edges");
  if (!es.is_array()) throw InputError("'edges' must be an array");
  for (const auto& e : es) {
    EdgeKey k = edge_from(e);
    g.add_edge(k.first, k.second);
  }
  return g;
}

using PartMap = std::map<VertexId, std::vector<VertexId>>;

inline Json to_json(const PartMap& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

inline PartMap parts_from(const Json& j) {
  if (!j.is_object()) throw InputError("expected an object of vertex lists");
  PartMap out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    try {
      out[it.key()] = it.value().get<std::vector<VertexId>>();
    } catch (const nlohmann::json::exception&) {
      throw InputError("entry '" + it.key() + "' must be a list of vertex ids");
    }
  }
  return out;
}

// -- decompositions ---------------------------------------------------------

inline Json to_json(const TreeDecomposition& td) {
  return {{"tree", to_json(td.tree)}, {"root", td.root}, {"bags", to_json(PartMap(td.bags.begin(), td.bags.end()))}};
}

inline TreeDecomposition td_from(const Json& j) {
  TreeDecomposition td{graph_from(field(j, "tree")), get<std::string>(j, "root"), {}};
  for (auto& [node, bag] : parts_from(field(j, "bags"))) {
    std::sort(bag.begin(), bag.end());
    td.bags[node] = bag;
  }
  return td;
}

inline Json to_json(const HLPartition& p) {
  return {{"quotientH", to_json(p.quotientH)}, {"quotientL", to_json(p.quotientL)},
          {"partY", to_json(p.partY)},         {"partZ", to_json(p.partZ)},
          {"width", p.width}};
}

inline HLPartition partition_from(const Json& j) {
  return {graph_from(field(j, "quotientH")), graph_from(field(j, "quotientL")), parts_from(field(j, "partY")),
          parts_from(field(j, "partZ")), get<int>(j, "width")};
}

inline Json to_json(const EmbeddingWitness& w) {
  return {{"host", to_json(w.host)}, {"injection", w.injection}};
}

inline EmbeddingWitness witness_from(const Json& j) {
  return {graph_from(field(j, "host")), get<std::map<VertexId, VertexId>>(j, "injection")};
}

// -- minors -----------------------------------------------------------------

inline Json to_json(const MinorModel& m) {
  Json paths = Json::array();
  for (const auto& [k, p] : m.paths) paths.push_back({{"edge", edge_json(k)}, {"path", p}});
  return {{"guest", to_json(m.guest)}, {"host", to_json(m.host)},   {"branch", to_json(m.branch)},
          {"centre", m.centre},        {"depth2x", m.depth2x},      {"topological", m.topological},
          {"paths", paths},            {"notes", m.notes}};
}

inline MinorModel model_from(const Json& j) {
  MinorModel m{graph_from(field(j, "guest")),
               graph_from(field(j, "host")),
               parts_from(field(j, "branch")),
               get<std::map<VertexId, VertexId>>(j, "centre"),
               get<int>(j, "depth2x"),
               get_or<bool>(j, "topological", false),
               {},
               get_or<std::vector<std::string>>(j, "notes", {})};
  for (auto& [v, b] : m.branch) std::sort(b.begin(), b.end());
  if (j.contains("paths"))
    for (const auto& p : field(j, "paths")) m.paths[edge_from(field(p, "edge"))] = get<HostPath>(p, "path");
  return m;
}

inline Json to_json(const ShortcutSystem& s) {
  return {{"base", to_json(s.base)}, {"paths", s.paths}, {"k", s.k}, {"d", s.d}};
}

inline ShortcutSystem shortcut_from(const Json& j) {
  return {graph_from(field(j, "base")), get<std::vector<HostPath>>(j, "paths"), get<int>(j, "k"), get<int>(j, "d")};
}

inline Json to_json(const CliqueLiftSpec& c) { return {{"base", to_json(c.base)}, {"M", to_json(c.M)}, {"d", c.d}}; }

inline CliqueLiftSpec clique_lift_from(const Json& j) {
  return {graph_from(field(j, "base")), parts_from(field(j, "M")), get<int>(j, "d")};
}

// -- engine -----------------------------------------------------------------

inline Json to_json(const EngineInput& in) {
  return {{"g", to_json(in.g)},
          {"partition", to_json(in.partition)},
          {"hTD", to_json(in.hTD)},
          {"model", to_json(in.model)},
          {"r", in.r}};
}

inline EngineInput engine_input_from(const Json& j) {
  return {graph_from(field(j, "g")), partition_from(field(j, "partition")), td_from(field(j, "hTD")),
          model_from(field(j, "model")), get<int>(j, "r")};
}

inline Json to_json(const EngineOutput& o) {
  return {{"J", to_json(o.J)},
          {"sPartition", to_json(o.sPartition)},
          {"anchors", o.anchors},
          {"jTD", to_json(o.jTD)},
          {"lPrimePartition", to_json(o.lPrimePartition)},
          {"ell", o.ell},
          {"t", o.t},
          {"k", o.k},
          {"r", o.r},
          {"measuredWidth", o.measured_width},
          {"maxBag", o.max_bag},
          {"bagBound", o.bag_bound},
          {"asserted_bounds",
           {{"width", {{"measured", o.measured_width}, {"bound", o.ell * (o.k + 1)}, {"formula", "l(k+1)"}}},
            {"bag", {{"measured", o.max_bag}, {"bound", o.bag_bound}, {"formula", "C(2r+1+t,t)"}}}}}};
}

inline EngineOutput engine_output_from(const Json& j) {
  EngineOutput o;
  o.J = graph_from(field(j, "J"));
  o.sPartition = parts_from(field(j, "sPartition"));
  o.anchors = get<std::map<VertexId, VertexId>>(j, "anchors");
  o.jTD = td_from(field(j, "jTD"));
  o.lPrimePartition = partition_from(field(j, "lPrimePartition"));
  o.ell = get<int>(j, "ell");
  o.t = get<int>(j, "t");
  o.k = get<int>(j, "k");
  o.r = get<int>(j, "r");
  o.measured_width = get<int>(j, "measuredWidth");
  o.max_bag = get<int>(j, "maxBag");
  o.bag_bound = get<std::uint64_t>(j, "bagBound");
  return o;
}

// -- planarise --------------------------------------------------------------

inline Json to_json(const Crossing& c) {
  Json out = {{"a", edge_json(c.a)}, {"b", edge_json(c.b)}, {"posA", c.posA}, {"posB", c.posB}};
  if (c.side != 0) out["side"] = c.side;
  return out;
}

/// Records may name an edge in either direction; positions are read as
/// counted from the smaller endpoint, and each reversed edge flips the side.
inline Crossing crossing_from(const Json& j) {
  auto directed = [](const Json& e) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("a crossing edge must be a pair of vertex ids");
    return e[0].get<std::string>() > e[1].get<std::string>();
  };
  Crossing c{edge_from(field(j, "a")), edge_from(field(j, "b")), get<int>(j, "posA"), get<int>(j, "posB"),
             get_or<int>(j, "side", 0)};
  if (directed(field(j, "a")) != directed(field(j, "b"))) c.side = -c.side;
  return c;
}

inline Json to_json(const EmbeddedGraph& e) {
  Json cs = Json::array();
  for (const auto& c : e.crossings) cs.push_back(to_json(c));
  return {{"graph", to_json(e.graph)}, {"crossings", cs}};
}

inline EmbeddedGraph embedded_from(const Json& j) {
  EmbeddedGraph e{graph_from(field(j, "graph")), {}};
  if (j.contains("crossings"))
    for (const auto& c : field(j, "crossings")) e.crossings.push_back(crossing_from(c));
  return canonicalise(std::move(e));
}

inline Json to_json(const StringCurves& s) { return {{"curves", s.curves}}; }

inline StringCurves curves_from(const Json& j) {
  return {get<std::map<VertexId, std::vector<std::string>>>(j, "curves")};
}

inline Json to_json(const ClusterStructure& c) {
  return {{"graph", to_json(c.g)}, {"clusters", to_json(c.clusters)}, {"clusterAdjacency", to_json(c.clusterAdjacency)},
          {"k", c.k}};
}

inline ClusterStructure clusters_from(const Json& j) {
  return {graph_from(field(j, "graph")), parts_from(field(j, "clusters")), graph_from(field(j, "clusterAdjacency")),
          get<int>(j, "k")};
}

inline Json to_json(const BundleStructure& b) {
  Json bundles = Json::object();
  for (const auto& [id, fb] : b.bundles) {
    Json es = Json::array();
    for (const auto& e : fb.edges) es.push_back(edge_json(e));
    bundles[id] = {{"origin", fb.origin}, {"edges", es}};
  }
  Json cs = Json::array();
  for (const auto& c : b.crossings) cs.push_back({{"a", c.a}, {"b", c.b}, {"posA", c.posA}, {"posB", c.posB}});
  return {{"graph", to_json(b.graph)}, {"bundles", bundles}, {"crossings", cs}};
}

inline BundleStructure bundles_from(const Json& j) {
  BundleStructure b{graph_from(field(j, "graph")), {}, {}};
  const Json& bs = field(j, "bundles");
  if (!bs.is_object()) throw InputError("'bundles' must be an object");
  for (auto it = bs.begin(); it != bs.end(); ++it) {
    FanBundle fb{get<std::string>(it.value(), "origin"), {}};
    for (const auto& e : field(it.value(), "edges")) fb.edges.push_back(edge_from(e));
    b.bundles[it.key()] = fb;
  }
  if (j.contains("crossings"))
    for (const auto& c : field(j, "crossings"))
      b.crossings.push_back({get<std::string>(c, "a"), get<std::string>(c, "b"), get<int>(c, "posA"), get<int>(c, "posB")});
  return b;
}

inline Json to_json(const GapCharging& ch) {
  Json cs = Json::array();
  for (const auto& e : ch.charged) cs.push_back(edge_json(e));
  return {{"k", ch.k}, {"charged", cs}};
}

inline GapCharging charging_from(const Json& j) {
  GapCharging ch{{}, get<int>(j, "k")};
  for (const auto& e : field(j, "charged")) ch.charged.push_back(edge_from(e));
  return ch;
}

inline Json to_json(const FriendAssignment& f) {
  Json fr = Json::array(), sp = Json::array();
  for (const auto& [e, v] : f.friend_of) fr.push_back({{"edge", edge_json(e)}, {"friend", v}});
  for (const auto& [e, i] : f.split) sp.push_back({{"edge", edge_json(e)}, {"at", i}});
  return {{"friend", fr}, {"split", sp}};
}

inline FriendAssignment friends_from(const Json& j) {
  FriendAssignment f;
  for (const auto& x : field(j, "friend")) f.friend_of[edge_from(field(x, "edge"))] = get<std::string>(x, "friend");
  for (const auto& x : field(j, "split")) f.split[edge_from(field(x, "edge"))] = get<int>(x, "at");
  return f;
}

// -- layouts and colourings -------------------------------------------------

inline Json to_json(const QueueLayout& q) {
  Json qs = Json::array();
  for (const auto& [e, i] : q.queue) qs.push_back({{"edge", edge_json(e)}, {"queue", i}});
  return {{"order", q.order}, {"queue", qs}, {"strict", q.strict}};
}

inline QueueLayout layout_from(const Json& j) {
  QueueLayout q{get<std::vector<VertexId>>(j, "order"), {}, get_or<bool>(j, "strict", false)};
  for (const auto& x : field(j, "queue")) q.queue[edge_from(field(x, "edge"))] = get<int>(x, "queue");
  return q;
}

inline Json order_json(const std::vector<VertexId>& order) { return {{"order", order}}; }

inline std::vector<VertexId> order_from(const Json& j) { return get<std::vector<VertexId>>(j, "order"); }

inline Json to_json(const Colouring& c) { return {{"colour", c}}; }

inline Colouring colouring_from(const Json& j) {
  const Json& cs = field(j, "colour");
  if (!cs.is_object()) throw InputError("'colour' must be an object");
  Colouring c;
  for (auto it = cs.begin(); it != cs.end(); ++it) {
    if (it.value().is_string()) c[it.key()] = it.value().get<std::string>();
    else if (it.value().is_number_integer()) c[it.key()] = std::to_string(it.value().get<long long>());
    else throw InputError("colour of '" + it.key() + "' must be a string or integer");
  }
  return c;
}

// -- lower bounds and bounds -------------------------------------------------

inline Json to_json(const HierarchyReport& r) {
  return {{"gridContained", r.gridContained}, {"radiusBound", r.radiusBound}, {"radius", r.radius},
          {"radiusLimit", r.radiusLimit},     {"gapFeasible", r.gapFeasible}, {"chargingValid", r.chargingValid},
          {"twLower", r.twLower}};
}

/// Integers that fit in 64 bits stay numbers; larger ones become strings.
inline Json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
  return v.str();
}

inline Json to_json(const BoundTable& t) {
  Json out = Json::object();
  for (const auto& [name, value] : t) out[name] = big_json(value);
  return out;
}

}  // namespace shallow::json
