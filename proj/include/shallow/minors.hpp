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
#include "shallow/products.hpp"

namespace shallow {

using EdgeKey = std::pair<VertexId, VertexId>;  // first < second
using HostPath = std::vector<VertexId>;

inline EdgeKey edge_key(const VertexId& a, const VertexId& b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

/// Branch sets of a guest inside a host. Topological models also carry one
/// host path per guest edge, running between the centres of its ends.
struct MinorModel {
  Graph guest;
  Graph host;
  std::map<VertexId, std::vector<VertexId>> branch;
  std::map<VertexId, VertexId> centre;
  int depth2x = 0;
  bool topological = false;
  std::map<EdgeKey, HostPath> paths;
  std::vector<std::string> notes;
};

struct ModelReport {
  Verdict verdict;
  int radius = 0;  // largest branch radius measured from the centre
};

/// Checks the model invariants; with `r`, also every branch radius <= r.
inline ModelReport verify_model(const MinorModel& m, std::optional<int> r = std::nullopt) {
  const Graph& h = m.host;
  std::vector<int> owner(h.vertex_count(), -1);
  int radius = 0;
  for (int u = 0; u < m.guest.vertex_count(); ++u) {
    const VertexId& uid = m.guest.id(u);
    auto bit = m.branch.find(uid);
    if (bit == m.branch.end() || bit->second.empty())
      return {Verdict::reject("nonempty", "guest vertex '" + uid + "' has no branch set")};
    std::vector<int> members;
    for (const auto& x : bit->second) {
      auto xi = h.find(x);
      if (!xi) return {Verdict::reject("host-vertex", "branch of '" + uid + "' holds unknown '" + x + "'")};
      if (owner[*xi] >= 0)
        return {Verdict::reject("disjointness", "'" + x + "' lies in branch sets of '" + m.guest.id(owner[*xi]) + "' and '" + uid + "'")};
      owner[*xi] = u;
      members.push_back(*xi);
    }
    auto cit = m.centre.find(uid);
    if (cit == m.centre.end()) return {Verdict::reject("centre", "guest vertex '" + uid + "' has no centre")};
    auto ci = h.find(cit->second);
    if (!ci || owner[*ci] != u)
      return {Verdict::reject("centre", "centre of '" + uid + "' is outside its branch set")};
    std::vector<char> allowed(h.vertex_count(), 0);
    for (int x : members) allowed[x] = 1;
    auto dist = bfs_indexed(h, *ci, allowed);
    int ecc = 0;
    for (int x : members) {
      if (dist[x] == kUnreachable)
        return {Verdict::reject("connected", "branch set of '" + uid + "' is disconnected")};
      ecc = std::max(ecc, dist[x]);
    }
    if (r && ecc > *r)
      return {Verdict::reject("radius", "branch set of '" + uid + "' has radius " + std::to_string(ecc) + " > " + std::to_string(*r)), ecc};
    radius = std::max(radius, ecc);
  }
  for (auto [u, v] : m.guest.edges()) {
    bool touched = false;
    for (const auto& x : m.branch.at(m.guest.id(u))) {
      for (int y : h.neighbours(h.index(x)))
        if (owner[y] == v) {
          touched = true;
          break;
        }
      if (touched) break;
    }
    if (!touched)
      return {Verdict::reject("edge", "guest edge " + m.guest.id(u) + "-" + m.guest.id(v) + " has no host edge between branch sets"), radius};
  }
  return {Verdict::accept(), radius};
}

/// Subdivision paths: one per guest edge, joining the two centres, length
/// <= depth2x + 1, internally disjoint and avoiding every centre.
inline Verdict verify_topological(const MinorModel& m) {
  const Graph& h = m.host;
  std::set<VertexId> centres;
  for (const auto& [v, c] : m.centre) centres.insert(c);
  std::set<VertexId> used;
  for (auto [u, v] : m.guest.edges()) {
    EdgeKey key = edge_key(m.guest.id(u), m.guest.id(v));
    auto it = m.paths.find(key);
    std::string name = key.first + "-" + key.second;
    if (it == m.paths.end()) return Verdict::reject("path", "no subdivision path for " + name);
    const HostPath& p = it->second;
    if (p.size() < 2) return Verdict::reject("path", "path for " + name + " is too short");
    const VertexId& ca = m.centre.at(key.first);
    const VertexId& cb = m.centre.at(key.second);
    if (!((p.front() == ca && p.back() == cb) || (p.front() == cb && p.back() == ca)))
      return Verdict::reject("path", "path for " + name + " does not join the centres");
    if (static_cast<int>(p.size()) - 1 > m.depth2x + 1)
      return Verdict::reject("length", "path for " + name + " has length " + std::to_string(p.size() - 1));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!h.contains(p[i]) || !h.contains(p[i + 1]) || !h.adjacent(p[i], p[i + 1]))
        return Verdict::reject("path", "path for " + name + " uses a non-edge");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (centres.count(p[i])) return Verdict::reject("internally-disjoint", "path for " + name + " passes a centre");
      if (!used.insert(p[i]).second)
        return Verdict::reject("internally-disjoint", "'" + p[i] + "' is internal to two paths");
    }
  }
  return Verdict::accept();
}

inline int depth_radius(int depth2x) { return (depth2x + 1) / 2; }

/// Full check used by certificates: minor axioms at radius ceil(depth), plus
/// path conditions for topological models.
inline Verdict verify_model_at_depth(const MinorModel& m) {
  auto rep = verify_model(m, depth_radius(m.depth2x));
  if (!rep.verdict) return rep.verdict;
  if (m.topological) return verify_topological(m);
  return Verdict::accept();
}

/// Branch sets from subdivision paths: each guest vertex keeps its image plus
/// the nearer half of the interior of every incident path; an odd middle
/// vertex goes to the smaller endpoint id.
inline MinorModel subdivision_model(const Graph& guest, const Graph& host, const std::map<VertexId, VertexId>& image,
                                    const std::map<EdgeKey, HostPath>& paths, int depth2x) {
  MinorModel m{guest, host, {}, {}, depth2x, true, {}, {}};
  std::set<VertexId> images;
  for (const auto& v : guest.ids()) {
    const VertexId& x = image.at(v);
    if (!images.insert(x).second) throw PreconditionError("subdivision_model: image '" + x + "' used twice");
    m.centre[v] = x;
    m.branch[v] = {x};
  }
  std::set<VertexId> interior;
  for (auto [u, v] : guest.edges()) {
    EdgeKey key = edge_key(guest.id(u), guest.id(v));
    auto it = paths.find(key);
    if (it == paths.end()) throw PreconditionError("subdivision_model: no path for " + key.first + "-" + key.second);
    HostPath p = it->second;
    if (p.empty()) throw PreconditionError("subdivision_model: empty path");
    if (p.front() != image.at(key.first)) std::reverse(p.begin(), p.end());
    if (p.front() != image.at(key.first) || p.back() != image.at(key.second))
      throw PreconditionError("subdivision_model: path endpoints do not match " + key.first + "-" + key.second);
    int inner = static_cast<int>(p.size()) - 2;
    int first_half = (inner + 1) / 2;
    for (int i = 1; i <= inner; ++i) {
      if (images.count(p[i]) || !interior.insert(p[i]).second)
        throw PreconditionError("subdivision_model: paths share internal vertex '" + p[i] + "'");
      m.branch[i <= first_half ? key.first : key.second].push_back(p[i]);
    }
    m.paths[key] = p;
  }
  for (auto& [v, b] : m.branch) std::sort(b.begin(), b.end());
  if (auto v = verify_model_at_depth(m); !v) throw ConstructionError("subdivision_model", v.clause + ": " + v.detail);
  return m;
}

struct ShortcutSystem {
  Graph base;
  std::vector<HostPath> paths;
  int k = 1;
  int d = 0;
};

inline Verdict verify_shortcut_system(const ShortcutSystem& s) {
  std::map<VertexId, int> load;
  for (const auto& p : s.paths) {
    if (p.size() < 2) return Verdict::reject("path", "shortcut with fewer than two vertices");
    if (static_cast<int>(p.size()) - 1 > s.k)
      return Verdict::reject("length", "shortcut " + p.front() + ".." + p.back() + " longer than k");
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!s.base.contains(p[i])) return Verdict::reject("path", "unknown vertex '" + p[i] + "'");
      if (!seen.insert(p[i]).second) return Verdict::reject("path", "shortcut repeats '" + p[i] + "'");
      if (i + 1 < p.size() && !s.base.adjacent(p[i], p[i + 1]))
        return Verdict::reject("path", "shortcut uses non-edge " + p[i] + "-" + p[i + 1]);
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (++load[p[i]] > s.d) return Verdict::reject("load", "'" + p[i] + "' internal to more than d shortcuts");
  }
  return Verdict::accept();
}

inline Graph apply_shortcuts(const ShortcutSystem& s) {
  if (auto v = verify_shortcut_system(s); !v) throw PreconditionError("apply_shortcuts: " + v.detail);
  Graph g = s.base;
  for (const auto& p : s.paths) g.add_edge(p.front(), p.back());
  return g;
}

namespace detail {

/// Shortcuts sorted by (endpoint pair, sequence), each oriented from its smaller end.
inline std::vector<HostPath> sorted_shortcuts(const std::vector<HostPath>& paths) {
  std::vector<HostPath> out = paths;
  for (auto& p : out)
    if (p.back() < p.front()) std::reverse(p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const HostPath& a, const HostPath& b) {
    return std::tie(a.front(), a.back(), a) < std::tie(b.front(), b.back(), b);
  });
  return out;
}

}  // namespace detail

/// G^P as a topological minor of base ∘ edgeless(d+1) at depth (k-1)/2.
/// Row "0" holds the branch vertices; internal vertices of the shortcuts are
/// lifted to rows 1..d, injectively per vertex.
inline MinorModel shortcut_to_model(const ShortcutSystem& s) {
  Graph guest = apply_shortcuts(s);
  Graph host = lex_product(s.base, edgeless(s.d + 1));
  auto sorted = detail::sorted_shortcuts(s.paths);
  std::map<VertexId, int> next_row;
  std::map<EdgeKey, HostPath> lifted;
  for (const auto& p : sorted) {
    HostPath q{product_id(p.front(), "0")};
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      int row = ++next_row[p[i]];
      if (row > s.d) throw PreconditionError("shortcut_to_model: '" + p[i] + "' internal to more than d shortcuts");
      q.push_back(product_id(p[i], std::to_string(row)));
    }
    q.push_back(product_id(p.back(), "0"));
    lifted.emplace(edge_key(p.front(), p.back()), std::move(q));  // first shortcut per pair wins
  }
  std::map<VertexId, VertexId> image;
  for (const auto& v : guest.ids()) image[v] = product_id(v, "0");
  for (auto [u, v] : s.base.edges()) {
    const VertexId &a = s.base.id(u), &b = s.base.id(v);
    lifted[edge_key(a, b)] = {image[std::min(a, b)], image[std::max(a, b)]};
  }
  MinorModel m = subdivision_model(guest, host, image, lifted, s.k - 1);
  m.notes.push_back("unit paths added for every base edge");
  return m;
}

struct CliqueLiftSpec {
  Graph base;
  std::map<VertexId, std::vector<VertexId>> M;
  int d = 0;
};

inline Verdict verify_clique_lift(const CliqueLiftSpec& c) {
  for (const auto& [v, members] : c.M) {
    if (!c.base.contains(v)) return Verdict::reject("M", "unknown vertex '" + v + "'");
    if (static_cast<int>(members.size()) > c.d) return Verdict::reject("size", "|M_" + v + "| exceeds d");
    std::set<VertexId> seen;
    for (const auto& u : members) {
      if (!c.base.contains(u) || !c.base.adjacent(u, v))
        return Verdict::reject("neighbourhood", "'" + u + "' is not a neighbour of '" + v + "'");
      if (!seen.insert(u).second) return Verdict::reject("M", "M_" + v + " repeats '" + u + "'");
    }
  }
  return Verdict::accept();
}

inline Graph apply_clique_lift(const CliqueLiftSpec& c) {
  if (auto v = verify_clique_lift(c); !v) throw PreconditionError("apply_clique_lift: " + v.detail);
  Graph g = c.base;
  for (const auto& [v, members] : c.M)
    for (const auto& u : members)
      for (int w : c.base.neighbours(c.base.index(v)))
        if (c.base.id(w) != u) g.add_edge(u, c.base.id(w));
  return g;
}

/// G^M as a 1-shallow minor of base ∘ edgeless(d+1): branch(u) is (u,0) plus
/// (v, phi_v(u)) for each v with u ∈ M_v; phi_v numbers sorted M_v from 1.
inline MinorModel clique_lift_model(const CliqueLiftSpec& c) {
  Graph guest = apply_clique_lift(c);
  MinorModel m{guest, lex_product(c.base, edgeless(c.d + 1)), {}, {}, 2, false, {}, {}};
  for (const auto& u : guest.ids()) {
    m.centre[u] = product_id(u, "0");
    m.branch[u] = {m.centre[u]};
  }
  for (const auto& [v, members] : c.M) {
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) m.branch[sorted[i]].push_back(product_id(v, std::to_string(i + 1)));
  }
  for (auto& [v, b] : m.branch) std::sort(b.begin(), b.end());
  if (auto v = verify_model_at_depth(m); !v) throw ConstructionError("clique_lift_model", v.clause + ": " + v.detail);
  return m;
}

/// G^k as a floor(k/2)-shallow minor of g ∘ edgeless(d+1), d = Δ(G^floor(k/2)).
/// With N_w sorted by id, (w, i) belongs to the branch set of the i-th member of N_w.
inline MinorModel power_model(const Graph& g, int k) {
  if (k < 1) throw InputError("power_model needs k >= 1");
  int half = k / 2;
  Graph ball_graph = power_or_edgeless(g, half);
  int d = max_degree(ball_graph);
  MinorModel m{graph_power(g, k), lex_product(g, edgeless(d + 1)), {}, {}, 2 * half, false, {}, {}};
  for (int w = 0; w < g.vertex_count(); ++w) {
    std::vector<VertexId> ball{g.id(w)};
    for (int x : ball_graph.neighbours(w)) ball.push_back(g.id(x));
    std::sort(ball.begin(), ball.end());
    for (std::size_t i = 0; i < ball.size(); ++i) {
      VertexId cell = product_id(g.id(w), std::to_string(i));
      m.branch[ball[i]].push_back(cell);
      if (ball[i] == g.id(w)) m.centre[ball[i]] = cell;
    }
  }
  for (auto& [v, b] : m.branch) std::sort(b.begin(), b.end());
  if (auto v = verify_model_at_depth(m); !v) throw ConstructionError("power_model", v.clause + ": " + v.detail);
  return m;
}

/// Identity model of g in itself.
inline MinorModel identity_model(const Graph& g) {
  MinorModel m{g, g, {}, {}, 0, false, {}, {}};
  for (const auto& v : g.ids()) {
    m.branch[v] = {v};
    m.centre[v] = v;
  }
  return m;
}

}  // namespace shallow
