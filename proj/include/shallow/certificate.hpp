#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "shallow/serialize.hpp"

namespace shallow {

/// A named inequality measured <= bound, recomputed from the payload.
struct Claim {
  std::string name;
  long long measured = 0;
  long long bound = 0;
  bool holds() const { return measured <= bound; }
};

struct CertificateReport {
  Verdict verdict;
  std::vector<Claim> claims;
};

inline const std::vector<std::string>& certificate_kinds() {
  static const std::vector<std::string> kinds{"embedding",   "engine-bundle", "friend-assignment", "gap-charging",
                                              "hierarchy-report", "hl-partition", "model", "queue-layout",
                                              "tree-decomposition", "vertex-order"};
  return kinds;
}

namespace detail {

using json::Json;

/// Checks a payload of one kind and derives its claims. Rejections carry
/// the failing clause; claims are only meaningful on acceptance.
using PayloadCheck = std::function<CertificateReport(const Json&)>;

inline CertificateReport rejected(const Verdict& v) { return {v, {}}; }

inline CertificateReport check_model(const Json& p) {
  MinorModel m = json::model_from(json::field(p, "model"));
  auto rep = verify_model(m, depth_radius(m.depth2x));
  if (!rep.verdict) return rejected(rep.verdict);
  if (m.topological)
    if (auto v = verify_topological(m); !v) return rejected(v);
  CertificateReport out{Verdict::accept(), {{"radius", rep.radius, depth_radius(m.depth2x)}}};
  if (p.contains("guest")) {
    Graph want = json::graph_from(json::field(p, "guest"));
    if (!want.same_as(m.guest)) return rejected(Verdict::reject("guest", "model guest differs from the intended graph"));
  }
  return out;
}

inline CertificateReport check_embedding(const Json& p) {
  Graph guest = json::graph_from(json::field(p, "guest"));
  auto w = json::witness_from(json::field(p, "witness"));
  if (auto v = verify_embedding(guest, w); !v) return rejected(v);
  if (p.contains("host")) {
    Graph host = json::graph_from(json::field(p, "host"));
    if (!host.same_as(w.host)) return rejected(Verdict::reject("host", "witness host differs from the declared host"));
  }
  return {Verdict::accept(), {}};
}

inline CertificateReport check_td(const Json& p) {
  Graph g = json::graph_from(json::field(p, "graph"));
  auto td = json::td_from(json::field(p, "td"));
  auto rep = verify_tree_decomposition(g, td);
  if (!rep.verdict) return rejected(rep.verdict);
  CertificateReport out{Verdict::accept(), {}};
  if (p.contains("bound")) out.claims.push_back({"width", rep.width, json::get<long long>(p, "bound")});
  else out.claims.push_back({"width", rep.width, rep.width});
  if (json::get_or<bool>(p, "normalised", false))
    if (auto v = check_normalised(g, td); !v) return rejected(v);
  return out;
}

inline CertificateReport check_partition(const Json& p) {
  Graph g = json::graph_from(json::field(p, "graph"));
  auto part = json::partition_from(json::field(p, "partition"));
  auto rep = verify_hl_partition(g, part);
  if (!rep.verdict) return rejected(rep.verdict);
  return {Verdict::accept(), {{"width", rep.width, part.width}}};
}

/// Plain layouts claim their queue count against an optional bound. With a
/// model and host layout, the bound is 2r(2q)^(2r) from the host layout.
inline CertificateReport check_layout(const Json& p) {
  Graph g = json::graph_from(json::field(p, "graph"));
  auto q = json::layout_from(json::field(p, "layout"));
  auto rep = verify_layout(g, q);
  if (!rep.verdict) return rejected(rep.verdict);
  CertificateReport out{Verdict::accept(), {}};
  if (p.contains("model")) {
    MinorModel m = json::model_from(json::field(p, "model"));
    if (auto v = verify_model(m, depth_radius(m.depth2x)); !v.verdict) return rejected(v.verdict);
    if (!m.guest.same_as(g)) return rejected(Verdict::reject("guest", "layout graph is not the model guest"));
    auto hl = verify_layout(m.host, json::layout_from(json::field(p, "hostLayout")));
    if (!hl.verdict) return rejected(hl.verdict);
    int r = depth_radius(m.depth2x);
    BigInt bound = bounds::queue_shallow(r, hl.queues);
    if (r >= 1) out.claims.push_back({"queues", rep.queues, bound.convert_to<long long>()});
    else out.claims.push_back({"queues", rep.queues, hl.queues});
  } else if (p.contains("bound")) {
    out.claims.push_back({"queues", rep.queues, json::get<long long>(p, "bound")});
  } else {
    out.claims.push_back({"queues", rep.queues, rep.queues});
  }
  return out;
}

/// Colouring number of an order; with a model and host order, bounded by
/// the host value at s' = 2rs + 2r + s.
inline CertificateReport check_order(const Json& p) {
  Graph g = json::graph_from(json::field(p, "graph"));
  auto order = json::order_from(p);
  int s = json::get<int>(p, "s");
  ColMode mode = parse_col_mode(json::get<std::string>(p, "mode"));
  try {
    detail::positions(g, order, "vertex-order");
  } catch (const InputError& e) {
    return rejected(Verdict::reject("order", e.what()));
  }
  long long col = g.vertex_count() ? col_of_order(g, order, s, mode) : 0;
  CertificateReport out{Verdict::accept(), {}};
  if (p.contains("model")) {
    MinorModel m = json::model_from(json::field(p, "model"));
    if (!m.guest.same_as(g)) return rejected(Verdict::reject("guest", "order graph is not the model guest"));
    auto host_order = json::get<std::vector<VertexId>>(p, "hostOrder");
    auto t = col_shallow_order(m, host_order, s, mode);
    if (t.order != order) return rejected(Verdict::reject("order", "order is not the leftmost-vertex order"));
    out.claims.push_back({"col", col, t.hostCol});
  } else if (p.contains("bound")) {
    out.claims.push_back({"col", col, json::get<long long>(p, "bound")});
  } else {
    out.claims.push_back({"col", col, col});
  }
  return out;
}

/// Crossings in their listed order, which charging entries follow.
inline EmbeddedGraph listed_embedding(const Json& j) {
  EmbeddedGraph e{json::graph_from(json::field(j, "graph")), {}};
  if (j.contains("crossings"))
    for (const auto& c : json::field(j, "crossings")) e.crossings.push_back(json::crossing_from(c));
  return e;
}

inline CertificateReport check_gap(const Json& p) {
  auto e = listed_embedding(json::field(p, "embedded"));
  auto ch = json::charging_from(json::field(p, "charging"));
  crossing_sequences(e);
  auto v = verify_gap_charging(e, ch);
  if (!v) return rejected(v);
  std::map<EdgeKey, int> load;
  long long most = 0;
  for (const auto& k : ch.charged) most = std::max<long long>(most, ++load[k]);
  return {Verdict::accept(), {{"charges", most, ch.k}}};
}

inline CertificateReport check_friends(const Json& p) {
  auto e = json::embedded_from(json::field(p, "embedded"));
  auto f = json::friends_from(json::field(p, "assignment"));
  if (auto v = verify_simple(e); !v) return rejected(v);
  return {verify_friend_assignment(e, f), {}};
}

inline CertificateReport check_engine(const Json& p) {
  EngineInput in = json::engine_input_from(json::field(p, "input"));
  EngineOutput out = json::engine_output_from(json::field(p, "output"));
  std::pair<int, int> tl;
  try {
    tl = verify_engine_input(in);
  } catch (const PreconditionError& e) {
    return rejected(Verdict::reject("input", e.what()));
  }
  auto [t, ell] = tl;
  int k = max_degree(power_or_edgeless(in.partition.quotientL, in.r));
  if (out.t != t || out.ell != ell || out.k != k || out.r != in.r)
    return rejected(Verdict::reject("parameters", "recorded t, ell, k or r disagree with the input"));
  if (out.bag_bound != binomial(2 * in.r + 1 + t, t)) return rejected(Verdict::reject("parameters", "bag bound"));
  if (auto v = verify_engine_output(in, out); !v) return rejected(v);
  auto td = verify_tree_decomposition(out.J, out.jTD);
  auto part = verify_hl_partition(in.model.guest, out.lPrimePartition);
  CertificateReport rep{Verdict::accept(),
                        {{"bag", td.width + 1, static_cast<long long>(out.bag_bound)},
                         {"width", part.width, static_cast<long long>(ell) * (k + 1)}}};
  if (p.contains("gpst")) {
    const Json& gp = json::field(p, "gpst");
    int clique = json::get<int>(gp, "clique");
    if (clique != ell * (2 * in.r + 1) * (2 * in.r + 1))
      return rejected(Verdict::reject("gpst", "clique size is not ℓ(2r+1)^2"));
    auto w = json::witness_from(json::field(gp, "witness"));
    Graph pp = json::graph_from(json::field(gp, "pathPrime"));
    if (!w.host.same_as(strong_product(strong_product(out.J, pp), complete_graph(clique))))
      return rejected(Verdict::reject("gpst", "witness host is not J ⊠ P' ⊠ K"));
    if (auto v = verify_embedding(in.model.guest, w); !v) return rejected(v);
    auto host_td = json::td_from(json::field(gp, "hostTD"));
    auto tdr = verify_tree_decomposition(strong_product(out.J, complete_graph(clique)), host_td);
    if (!tdr.verdict) return rejected(tdr.verdict);
    rep.claims.push_back({"rtw", tdr.width, static_cast<long long>(clique) * static_cast<long long>(out.bag_bound) - 1});
  }
  return rep;
}

inline CertificateReport check_hierarchy_payload(const Json& p) {
  int n = json::get<int>(p, "n"), k = json::get<int>(p, "k");
  auto sub = listed_embedding(json::field(p, "subdivided"));
  auto ch = json::charging_from(json::field(p, "charging"));
  if (ch.k != 1) return rejected(Verdict::reject("charging", "subdivided charging must have capacity 1"));
  crossing_sequences(sub);
  if (auto v = verify_gap_charging(sub, ch); !v) return rejected(v);
  long long side = 1;
  for (int i = 0; i <= k; ++i) side *= n;
  for (long long x = 0; x <= side; ++x)
    for (long long y = 0; y <= side; ++y)
      if (!sub.graph.contains(grid_id(x, y))) return rejected(Verdict::reject("grid", "missing grid vertex"));
  std::map<EdgeKey, HostPath> paths;
  for (const auto& e : json::field(p, "subdivisions")) paths[json::edge_from(json::field(e, "edge"))] = json::get<HostPath>(e, "path");
  for (long long x = 0; x <= side; ++x)
    for (long long y = 0; y <= side; ++y)
      for (auto [dx, dy] : {std::pair<int, int>{1, 0}, {0, 1}}) {
        if (x + dx > side || y + dy > side) continue;
        EdgeKey key = edge_key(grid_id(x, y), grid_id(x + dx, y + dy));
        auto it = paths.find(key);
        if (it == paths.end() || it->second.front() != key.first || it->second.back() != key.second)
          return rejected(Verdict::reject("grid", "grid edge " + key.first + "-" + key.second + " has no path"));
        for (std::size_t i = 0; i + 1 < it->second.size(); ++i) {
          if (i > 0 && it->second[i].rfind("@s:", 0) != 0)
            return rejected(Verdict::reject("grid", "subdivision path passes a grid vertex"));
          if (!sub.graph.contains(it->second[i]) || !sub.graph.contains(it->second[i + 1]) ||
              !sub.graph.adjacent(it->second[i], it->second[i + 1]))
            return rejected(Verdict::reject("grid", "grid edge " + key.first + "-" + key.second + " is broken"));
        }
      }
  auto rad = radius(sub.graph);
  long long limit = static_cast<long long>(2 * k + 1) * n + (k + 1) / 2 + 1;
  return {Verdict::accept(), {{"radius", rad ? *rad : limit + 1, limit}}};
}

inline const std::map<std::string, PayloadCheck>& payload_checks() {
  static const std::map<std::string, PayloadCheck> checks{
      {"embedding", check_embedding},       {"engine-bundle", check_engine},
      {"friend-assignment", check_friends}, {"gap-charging", check_gap},
      {"hierarchy-report", check_hierarchy_payload}, {"hl-partition", check_partition},
      {"model", check_model},               {"queue-layout", check_layout},
      {"tree-decomposition", check_td},     {"vertex-order", check_order}};
  return checks;
}

inline Json claims_json(const std::vector<Claim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) out.push_back({{"name", c.name}, {"measured", c.measured}, {"bound", c.bound}});
  return out;
}

inline CertificateReport run_check(const std::string& kind, const Json& payload) {
  auto it = payload_checks().find(kind);
  if (it == payload_checks().end()) throw InputError("unknown certificate kind '" + kind + "'");
  try {
    return it->second(payload);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed payload: ") + e.what());
  }
}

}  // namespace detail

/// Wraps a payload, recording the claims its verifier derives. Throws
/// ConstructionError if the payload does not verify.
inline json::Json make_certificate(const std::string& kind, const json::Json& payload) {
  auto rep = detail::run_check(kind, payload);
  if (!rep.verdict) throw ConstructionError(kind, rep.verdict.clause + ": " + rep.verdict.detail);
  for (const auto& c : rep.claims)
    if (!c.holds()) throw ConstructionError(kind, "claim '" + c.name + "' fails");
  return {{"schema", "v1"}, {"kind", kind}, {"payload", payload}, {"claims", detail::claims_json(rep.claims)}};
}

/// Re-checks a certificate from its payload alone: the payload must verify
/// and the recorded claims must equal the recomputed ones and hold.
inline CertificateReport verify_certificate(const json::Json& cert) {
  if (json::get<std::string>(cert, "schema") != "v1") throw InputError("unsupported certificate schema");
  std::string kind = json::get<std::string>(cert, "kind");
  auto rep = detail::run_check(kind, json::field(cert, "payload"));
  if (!rep.verdict) return rep;
  if (json::field(cert, "claims") != detail::claims_json(rep.claims)) {
    rep.verdict = Verdict::reject("claims", "recorded claims differ from the recomputed ones");
    return rep;
  }
  for (const auto& c : rep.claims)
    if (!c.holds()) {
      rep.verdict = Verdict::reject("claim", c.name + " = " + std::to_string(c.measured) + " exceeds " + std::to_string(c.bound));
      return rep;
    }
  return rep;
}

}  // namespace shallow
