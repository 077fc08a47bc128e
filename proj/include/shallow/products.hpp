#pragma once

#include <map>
#include <string>
#include <unordered_set>
#include <utility>

#include "shallow/error.hpp"
#include "shallow/graph.hpp"

namespace shallow {

inline constexpr char kProductSep = '|';

inline VertexId product_id(const VertexId& left, const VertexId& right) {
  return left + kProductSep + right;
}

/// Splits at the last separator: only the right factor is barred from
/// containing it, so nested products stay unambiguous on the left.
inline std::pair<VertexId, VertexId> split_product_id(const VertexId& id) {
  auto cut = id.rfind(kProductSep);
  if (cut == VertexId::npos) throw InputError("'" + id + "' is not a product vertex id");
  return {id.substr(0, cut), id.substr(cut + 1)};
}

namespace detail {

inline void check_right_factor(const Graph& g) {
  for (const auto& id : g.ids())
    if (id.find(kProductSep) != VertexId::npos)
      throw InputError("right product factor id '" + id + "' contains the separator");
}

inline Graph product_vertices(const Graph& g1, const Graph& g2) {
  check_right_factor(g2);
  Graph out;
  for (int a = 0; a < g1.vertex_count(); ++a)
    for (int v = 0; v < g2.vertex_count(); ++v) out.add_vertex(product_id(g1.id(a), g2.id(v)));
  return out;
}

}  // namespace detail

/// Vertex (a, v) has index a * |V(g2)| + v.
inline Graph strong_product(const Graph& g1, const Graph& g2) {
  Graph out = detail::product_vertices(g1, g2);
  int n2 = g2.vertex_count();
  for (int a = 0; a < g1.vertex_count(); ++a) {
    for (int v = 0; v < n2; ++v) {
      for (int u : g2.neighbours(v))
        if (u > v) out.add_edge(a * n2 + v, a * n2 + u);
      for (int b : g1.neighbours(a)) {
        if (b < a) continue;
        out.add_edge(a * n2 + v, b * n2 + v);
        for (int u : g2.neighbours(v)) out.add_edge(a * n2 + v, b * n2 + u);
      }
    }
  }
  return out;
}

inline Graph lex_product(const Graph& g1, const Graph& g2) {
  Graph out = detail::product_vertices(g1, g2);
  int n2 = g2.vertex_count();
  for (int a = 0; a < g1.vertex_count(); ++a) {
    for (int v = 0; v < n2; ++v) {
      for (int u : g2.neighbours(v))
        if (u > v) out.add_edge(a * n2 + v, a * n2 + u);
      for (int b : g1.neighbours(a))
        if (b > a)
          for (int u = 0; u < n2; ++u) out.add_edge(a * n2 + v, b * n2 + u);
    }
  }
  return out;
}

inline Graph edgeless(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  return g;
}

inline Graph complete_graph(int n) {
  Graph g = edgeless(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Path on n vertices 0..n-1.
inline Graph path(int n) {
  Graph g = edgeless(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

struct EmbeddingWitness {
  Graph host;
  std::map<VertexId, VertexId> injection;
};

inline Verdict verify_embedding(const Graph& guest, const EmbeddingWitness& w) {
  std::unordered_set<VertexId> images;
  for (const auto& v : guest.ids()) {
    auto it = w.injection.find(v);
    if (it == w.injection.end()) return Verdict::reject("total", "guest vertex '" + v + "' has no image");
    if (!w.host.contains(it->second))
      return Verdict::reject("total", "image '" + it->second + "' is not a host vertex");
    if (!images.insert(it->second).second)
      return Verdict::reject("injective", "duplicate image '" + it->second + "'");
  }
  for (auto [u, v] : guest.edges()) {
    const auto& a = w.injection.at(guest.id(u));
    const auto& b = w.injection.at(guest.id(v));
    if (!w.host.adjacent(a, b))
      return Verdict::reject("edge", guest.id(u) + "-" + guest.id(v) + " maps to non-edge " + a + "-" + b);
  }
  return Verdict::accept();
}

/// Witness for path(m)^(2r+1) into path(ceil(m/(2r+1))) ⊠ K_{2r+1} via blocks.
inline EmbeddingWitness path_power_embedding(int m, int r) {
  if (m < 1 || r < 0) throw InputError("path_power_embedding needs m >= 1 and r >= 0");
  int width = 2 * r + 1;
  EmbeddingWitness w{strong_product(path((m + width - 1) / width), complete_graph(width)), {}};
  for (int i = 0; i < m; ++i)
    w.injection[std::to_string(i)] = product_id(std::to_string(i / width), std::to_string(i % width));
  return w;
}

}  // namespace shallow
