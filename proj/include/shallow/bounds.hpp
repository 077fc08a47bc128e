#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shallow/error.hpp"

namespace shallow {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline BigInt big_pow(BigInt base, long long e) {
  BigInt out = 1;
  for (; e > 0; --e) out *= base;
  return out;
}

using BoundParams = std::map<std::string, long long>;
using BoundTable = std::vector<std::pair<std::string, BigInt>>;  // ordered by emission

namespace bounds {

inline BigInt queue_product(BigInt ell, long long t) { return 3 * ell * big_pow(2, t) + (3 * ell) / 2; }
inline BigInt nonrepetitive(BigInt ell, long long t) { return ell * big_pow(4, t + 1); }
inline BigInt p_centred(BigInt ell, long long p, long long t) { return ell * (p + 1) * big_binomial(p + t, t); }
inline BigInt scol_genus(BigInt ell, long long g, long long r, long long s) {
  return ell * ((4 * g + 5) * (2 * r * s + 2 * r + s) + 2 * g + 1);
}
inline BigInt wcol_genus(BigInt ell, long long g, long long r, long long s) {
  return ell * (2 * g + big_binomial((2 * r + 1) * s + 2 * r + 2, 2)) * ((4 * r + 2) * s + 4 * r + 1);
}
inline BigInt ltw_shallow(BigInt ell, long long r, BigInt ltw) { return ell * (4 * r + 1) * ltw; }
inline BigInt boxicity(BigInt ltw) { return 6 * ltw + 3; }
inline BigInt shortcut_gap(long long k, long long d) { return BigInt(d - 1) * (k - 1) + 2 * d; }
inline BigInt queue_shallow(long long r, BigInt q) { return 2 * r * big_pow(2 * q, 2 * r); }
inline BigInt queue_strong_clique(long long ell, BigInt q) { return (2 * ell - 1) * q + ell - 1; }
inline BigInt strict_clique_layout(long long ell) { return ell - 1; }
inline BigInt product_treewidth(long long t, long long n) { return BigInt(t + 1) * n - 1; }
inline BigInt engine_bag(long long r, long long t) { return big_binomial(2 * r + 1 + t, t); }

}  // namespace bounds

namespace detail {

inline long long param(const BoundParams& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InputError("bounds: missing parameter '" + name + "'");
  return it->second;
}

inline long long param_or(const BoundParams& p, const std::string& name, long long fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

/// Product-structure entries for an r-shallow minor of a genus-g host ⊠ K_lift.
/// The host is contained in H ⊠ P ⊠ K_max(2g,3) with tw(H) <= 3.
inline void add_product_structure(BoundTable& out, BigInt ell, long long two_r_plus_one, long long tw_arg) {
  BigInt clique = ell * two_r_plus_one * two_r_plus_one;
  BigInt bag = big_binomial(tw_arg, 3);
  out.emplace_back("K", clique);
  out.emplace_back("tw", bag - 1);
  out.emplace_back("rtw", clique * bag - 1);
}

inline void add_colouring(BoundTable& out, const BoundParams& p, BigInt ell, long long g, long long r) {
  if (!p.count("s")) return;
  long long s = param(p, "s");
  out.emplace_back("scol", bounds::scol_genus(ell, g, r, s));
  out.emplace_back("wcol", bounds::wcol_genus(ell, g, r, s));
}

}  // namespace detail

inline const std::vector<std::string>& bound_classes() {
  static const std::vector<std::string> names{
      "boxicity", "clique-lift", "col-genus", "engine", "fan-planar", "gk-planar", "gpst-shallow",
      "k-fan-bundle", "ltw-shallow", "nonrepetitive", "p-centred", "power", "product-treewidth",
      "queue-product", "queue-shallow", "queue-strong-clique", "shortcut-gap",
      "strict-clique-layout", "string"
  };
  return names;
}

/// Named bound table for a parameterised class. Values are exact.
inline BoundTable bound_catalog(const std::string& cls, const BoundParams& p = {}) {
  using detail::param;
  BoundTable out;
  if (cls == "fan-planar") {
    // 1-shallow minor of H ∘ K_3 with H planar; planar graphs lie in T ⊠ P ⊠ K_3, tw(T) <= 3.
    BigInt ell = 9;
    detail::add_product_structure(out, ell, 3, 6);
    BigInt ltw = bounds::ltw_shallow(3, 1, 3);
    out.emplace_back("ltw", ltw);
    out.emplace_back("boxicity", bounds::boxicity(ltw));
    out.emplace_back("qn_product", bounds::queue_product(81, 19));
    out.emplace_back("qn_shallow", bounds::queue_shallow(1, bounds::queue_strong_clique(3, 42)));
    out.emplace_back("nonrepetitive", bounds::nonrepetitive(81, 19));
    if (p.count("p")) out.emplace_back("p_centred", bounds::p_centred(81, param(p, "p"), 19));
    detail::add_colouring(out, p, 3, 0, 1);
  } else if (cls == "gk-planar") {
    long long g = param(p, "g"), k = param(p, "k");
    // k/2-shallow topological minor of H ∘ K_2, H of Euler genus g.
    detail::add_product_structure(out, 2 * std::max(2 * g, 3LL), k + 1, k + 4);
  } else if (cls == "string") {
    long long g = param(p, "g"), delta = param(p, "delta");
    detail::add_product_structure(out, 2 * std::max(2 * g, 3LL), delta + 1, 2 * (delta / 2) + 4);
  } else if (cls == "k-fan-bundle") {
    long long k = param(p, "k");
    detail::add_product_structure(out, 6, 2 * k + 3, 2 * k + 6);
    BigInt ltw = bounds::ltw_shallow(2, k + 1, 3);
    out.emplace_back("ltw", ltw);
    out.emplace_back("boxicity", bounds::boxicity(ltw));
    out.emplace_back("qn_shallow", bounds::queue_shallow(k + 1, bounds::queue_strong_clique(2, 42)));
    detail::add_colouring(out, p, 2, 0, k + 1);
  } else if (cls == "clique-lift") {
    long long d = param(p, "d");
    detail::add_product_structure(out, 3 * (d + 1), 3, 6);
  } else if (cls == "power") {
    long long k = param(p, "k"), d = param(p, "d");
    detail::add_product_structure(out, 3 * (d + 1), 2 * (k / 2) + 1, 2 * (k / 2) + 4);
  } else if (cls == "engine") {
    long long r = param(p, "r"), t = param(p, "t"), ell = param(p, "ell");
    long long kdeg = param(p, "kdeg");
    BigInt bag = bounds::engine_bag(r, t);
    out.emplace_back("bag", bag);
    out.emplace_back("tw", bag - 1);
    out.emplace_back("width", BigInt(ell) * (kdeg + 1));
  } else if (cls == "gpst-shallow") {
    long long r = param(p, "r"), t = param(p, "t"), ell = param(p, "ell");
    BigInt bag = bounds::engine_bag(r, t);
    BigInt clique = BigInt(ell) * (2 * r + 1) * (2 * r + 1);
    out.emplace_back("K", clique);
    out.emplace_back("tw", bag - 1);
    out.emplace_back("rtw", clique * bag - 1);
  } else if (cls == "queue-product") {
    out.emplace_back("qn", bounds::queue_product(param(p, "ell"), param(p, "t")));
  } else if (cls == "nonrepetitive") {
    out.emplace_back("pi", bounds::nonrepetitive(param(p, "ell"), param(p, "t")));
  } else if (cls == "p-centred") {
    out.emplace_back("chi_p", bounds::p_centred(param(p, "ell"), param(p, "p"), param(p, "t")));
  } else if (cls == "col-genus") {
    long long ell = param(p, "ell"), g = param(p, "g"), r = param(p, "r"), s = param(p, "s");
    out.emplace_back("scol", bounds::scol_genus(ell, g, r, s));
    out.emplace_back("wcol", bounds::wcol_genus(ell, g, r, s));
  } else if (cls == "ltw-shallow") {
    out.emplace_back("ltw", bounds::ltw_shallow(param(p, "ell"), param(p, "r"), param(p, "ltw")));
  } else if (cls == "boxicity") {
    out.emplace_back("boxicity", bounds::boxicity(param(p, "ltw")));
  } else if (cls == "shortcut-gap") {
    out.emplace_back("gap", bounds::shortcut_gap(param(p, "k"), param(p, "d")));
  } else if (cls == "queue-shallow") {
    out.emplace_back("qn", bounds::queue_shallow(param(p, "r"), param(p, "q")));
  } else if (cls == "queue-strong-clique") {
    out.emplace_back("qn", bounds::queue_strong_clique(param(p, "ell"), param(p, "q")));
  } else if (cls == "strict-clique-layout") {
    out.emplace_back("sqn", bounds::strict_clique_layout(param(p, "ell")));
  } else if (cls == "product-treewidth") {
    out.emplace_back("tw", bounds::product_treewidth(param(p, "t"), param(p, "n")));
  } else {
    throw InputError("bounds: unknown class '" + cls + "'");
  }
  return out;
}

}  // namespace shallow
