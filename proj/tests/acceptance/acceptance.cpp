// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every construction is re-checked by the brute-force oracles in
// support/oracles.hpp, not only by the library's own verifiers.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shallow/shallow.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace fs = std::filesystem;
using namespace shallow;
using json::Json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failures for one criterion; the first few are printed.
struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

bool report(int id, const std::string& title, const Tally& t, double secs, double limit, const std::string& extra = "") {
  bool pass = t.failures == 0 && t.checks > 0 && secs < limit;
  std::printf("criterion %d %s: %s (%lld checks, %lld failures, %.2fs of %.0fs)%s%s\n", id, title.c_str(),
              pass ? "PASS" : "FAIL", t.checks, t.failures, secs, limit, extra.empty() ? "" : " ", extra.c_str());
  for (const auto& n : t.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return pass;
}

template <typename F>
void guarded(Tally& t, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    t.expect(false, label + ": " + e.what());
  }
}

Json load_sample(const std::string& name) {
  std::ifstream in(std::string(SHALLOW_SAMPLES_DIR) + "/" + name);
  return Json::parse(in);
}

// --- criteria 1 and 2 -------------------------------------------------------

std::vector<EngineOutput> g_engine_outputs;

bool criterion_engine() {
  Tally t;
  auto start = Clock::now();
  gen::Rng rng(20241);
  int runs = 0;
  for (; runs < 520; ++runs) {
    guarded(t, "engine input " + std::to_string(runs), [&] {
      EngineInput in = gen::random_engine_input(rng, 20, 2);
      EngineOutput out = quotient_engine(in);
      const Graph& gp = in.model.guest;
      // Recompute ℓ, t, k and the bag bound from scratch.
      int ell = 0;
      {
        std::map<std::pair<VertexId, VertexId>, int> cell;
        std::map<VertexId, VertexId> z;
        for (const auto& [part, members] : in.partition.partZ)
          for (const auto& v : members) z[v] = part;
        for (const auto& [part, members] : in.partition.partY)
          for (const auto& v : members) ell = std::max(ell, ++cell[{part, z[v]}]);
      }
      int tw = oracle::td_width(in.partition.quotientH, in.hTD);
      int k = 0;
      Graph lr = in.r == 0 ? vertex_copy(in.partition.quotientL) : oracle::power(in.partition.quotientL, in.r);
      for (int v = 0; v < lr.vertex_count(); ++v) k = std::max(k, lr.degree(v));
      long long bag_bound = static_cast<long long>(bounds::engine_bag(in.r, tw));
      t.expect(tw >= 0 && tw <= 2 && ell <= 2 && in.r <= 2 && in.g.vertex_count() <= 20, "input outside the family");
      t.expect(out.k == k && out.t == tw && static_cast<long long>(out.bag_bound) == bag_bound, "engine constants differ");

      // jTD decomposes J, and J is the quotient of the guest by the anchors.
      int jw = oracle::td_width(out.J, out.jTD);
      t.expect(jw >= 0 && jw + 1 <= bag_bound, "bag exceeds C(2r+1+t,t)");
      Graph lprime = oracle::power(in.partition.quotientL, 2 * in.r + 1);
      int width = oracle::partition_width(gp, out.lPrimePartition.partY, out.lPrimePartition.partZ, out.J, lprime);
      t.expect(width >= 0 && width <= ell * (k + 1), "partition width " + std::to_string(width) + " exceeds l(k+1)");
      t.expect(static_cast<bool>(verify_engine_output(in, out)), "verify_engine_output rejects");
      g_engine_outputs.push_back(std::move(out));
    });
  }
  double secs = seconds_since(start);
  return report(1, "engine soundness", t, secs, 60, std::to_string(runs) + " inputs");
}

bool criterion_engine_tightness() {
  Tally t;
  auto start = Clock::now();
  int exact = 0;
  for (const auto& out : g_engine_outputs) {
    if (out.J.vertex_count() > kTreewidthLimit) continue;
    guarded(t, "treewidth of J", [&] {
      int tw = exact_treewidth(out.J).width;
      t.expect(static_cast<std::uint64_t>(tw + 1) <= out.bag_bound, "tw(J) = " + std::to_string(tw) + " too large");
      if (out.J.vertex_count() <= 7) t.expect(oracle::treewidth(out.J) == tw, "exact_treewidth disagrees with oracle");
      ++exact;
    });
  }
  return report(2, "engine tightness", t, seconds_since(start), 60, std::to_string(exact) + " quotients");
}

// --- criterion 3 -------------------------------------------------------------

bool criterion_queue() {
  Tally t;
  auto start = Clock::now();
  gen::Rng rng(20243);
  for (int i = 0; i < 200; ++i) {
    guarded(t, "queue model " + std::to_string(i), [&] {
      Graph host = gen::random_graph(gen::pick(rng, 2, 9), 0.4, rng);
      int r = gen::pick(rng, 0, 2);
      MinorModel m = gen::random_model(host, r, rng);
      QueueLayout hl = exact_queue_number(host).layout;
      int hq = oracle::layout_queues(host, hl);
      QueueShallowResult res = queue_shallow(m, hl);
      int q = oracle::layout_queues(m.guest, res.layout);
      t.expect(q >= 0, "guest layout nests within a queue");
      t.expect(static_cast<bool>(verify_layout(m.guest, res.layout).verdict), "verify_layout rejects");
      if (r >= 1)
        t.expect(BigInt(q) <= bounds::queue_shallow(r, hq), "queue count above 2r(2q)^(2r)");
      else
        t.expect(q <= hq, "r = 0 layout uses more queues than the host");
    });
  }

  long long witnessed = 0, exact = 0;
  for (const Graph& g : oracle::atlas()) {
    guarded(t, "atlas graph", [&] {
      auto base = exact_queue_number(g);
      if (g.vertex_count() <= 6) t.expect(base.queues == oracle::queue_number(g), "qn disagrees with oracle");
      for (int ell = 1; ell <= 3; ++ell) {
        Graph prod = strong_product(g, complete_graph(ell));
        long long bound = (2LL * ell - 1) * base.queues + ell - 1;
        if (prod.vertex_count() <= 9) {
          int q = exact_queue_number(prod).queues;
          t.expect(q <= bound, "qn(G x K_l) above (2l-1)qn(G)+l-1");
          ++exact;
        } else {
          std::vector<VertexId> order;
          for (const auto& v : base.layout.order)
            for (int i = 0; i < ell; ++i) order.push_back(product_id(v, std::to_string(i)));
          int q = oracle::layout_queues(prod, layout_for_order(prod, order));
          t.expect(q >= 0 && q <= bound, "witness layout of G x K_l above (2l-1)qn(G)+l-1");
          ++witnessed;
        }
      }
    });
  }
  guarded(t, "complete graphs", [&] {
    t.expect(exact_queue_number(complete_graph(4)).queues == 2, "qn(K4) != 2");
    t.expect(exact_queue_number(complete_graph(6)).queues == 3, "qn(K6) != 3");
  });
  return report(3, "queue transfer", t, seconds_since(start), 300,
                std::to_string(exact) + " exact products, " + std::to_string(witnessed) + " witnessed");
}

// --- criterion 4 -------------------------------------------------------------

bool criterion_colouring() {
  Tally t;
  auto start = Clock::now();
  gen::Rng rng(20244);
  for (int i = 0; i < 200; ++i) {
    guarded(t, "col transfer " + std::to_string(i), [&] {
      Graph host = gen::random_graph(gen::pick(rng, 2, 8), 0.35, rng);
      int r = gen::pick(rng, 0, 2);
      MinorModel m = gen::random_model(host, r, rng);
      std::vector<VertexId> order = host.ids();
      gen::shuffle(order, rng);
      int s = gen::pick(rng, 1, 2);
      int s_prime = 2 * r * s + 2 * r + s;
      for (bool strong : {true, false}) {
        ColTransfer tr = col_shallow_order(m, order, s, strong ? ColMode::strong : ColMode::weak);
        int guest = m.guest.vertex_count() ? oracle::col_of_order(m.guest, oracle::indices(m.guest, tr.order), s, strong) : 0;
        int hostc = oracle::col_of_order(host, oracle::indices(host, order), s_prime, strong);
        t.expect(tr.sPrime == s_prime && tr.guestCol == guest && tr.hostCol == hostc, "reported values differ from oracle");
        t.expect(guest <= hostc, std::string(strong ? "strong" : "weak") + " transfer violated");
      }
    });
  }
  for (const Graph& g : oracle::atlas()) {
    guarded(t, "scol_1", [&] {
      t.expect(exact_col(g, 1, ColMode::strong).value == oracle::degeneracy(g) + 1, "scol_1 != degeneracy + 1");
    });
  }
  return report(4, "colouring transfer", t, seconds_since(start), 300);
}

// --- criterion 5 -------------------------------------------------------------

void check_model(Tally& t, const std::string& label, const MinorModel& m, const Graph& intended, int depth2x) {
  t.expect(m.guest.same_as(intended), label + ": guest differs from the intended graph");
  t.expect(m.depth2x == depth2x, label + ": declared depth differs");
  t.expect(static_cast<bool>(verify_model_at_depth(m)), label + ": verifier rejects at the declared depth");
  t.expect(oracle::edges_realised(m), label + ": a guest edge has no host edge");
  t.expect(oracle::branch_radius(m) <= depth_radius(depth2x), label + ": branch radius too large");
}

void check_cluster(Tally& t, const std::string& label, const ClusterStructure& c) {
  EmbeddingWitness w = cluster_embed(c);
  t.expect(static_cast<bool>(verify_embedding(c.g, w)), label + ": verify_embedding rejects");
  std::map<VertexId, VertexId> cluster_of;
  for (const auto& [cid, members] : c.clusters)
    for (const auto& v : members) cluster_of[v] = cid;
  std::set<VertexId> images;
  bool ok = true;
  for (const auto& v : c.g.ids()) {
    auto [cid, slot] = split_product_id(w.injection.at(v));
    ok = ok && cid == cluster_of.at(v) && std::stoi(slot) < c.k && images.insert(w.injection.at(v)).second;
  }
  for (auto [a, b] : c.g.edges()) {
    const auto &x = cluster_of.at(c.g.id(a)), &y = cluster_of.at(c.g.id(b));
    ok = ok && (x == y || c.clusterAdjacency.adjacent(x, y));
  }
  t.expect(ok, label + ": witness is not a cluster-respecting injection");
}

Graph with_shortcuts(const ShortcutSystem& s) {
  Graph g = s.base;
  for (const auto& p : s.paths) g.add_edge(p.front(), p.back());
  return g;
}

bool criterion_gadgets() {
  Tally t;
  auto start = Clock::now();
  gen::Rng rng(20245);
  std::map<std::string, int> per;
  auto run = [&](const std::string& gadget, auto&& body) {
    guarded(t, gadget, body);
    ++per[gadget];
  };

  // Fixtures.
  run("kplanar", [&] {
    EmbeddedGraph e = json::embedded_from(load_sample("k4_oneplanar.json"));
    check_model(t, "kplanar K4", kplanar_model(e, 1), e.graph, 1);
  });
  run("kplanar", [&] {
    EmbeddedGraph e{complete_graph(5), {{{"0", "2"}, {"1", "3"}, 0, 0, 1}}};
    check_model(t, "kplanar K5", kplanar_model(e, 1), complete_graph(5), 1);
  });
  run("kplanar", [&] { check_model(t, "kplanar plane", kplanar_model({cycle(5), {}}, 0), cycle(5), 0); });
  run("string", [&] {
    StringCurves s = json::curves_from(load_sample("strings.json"));
    check_model(t, "string sample", string_model(s, 3), gen::curve_intersections(s), 2);
  });
  run("string", [&] {
    StringCurves s{{{"a", {"x", "y"}}, {"b", {"x", "z"}}, {"c", {"y", "z"}}}};
    Graph triangle;
    for (const char* v : {"a", "b", "c"}) triangle.add_vertex(v);
    triangle.add_edge("a", "b");
    triangle.add_edge("a", "c");
    triangle.add_edge("b", "c");
    check_model(t, "string triangle", string_model(s, 2), triangle, 2);
  });
  run("string", [&] {
    StringCurves s{{{"a", {}}, {"b", {}}}};
    check_model(t, "string disjoint", string_model(s, 2), gen::curve_intersections(s), 2);
  });
  run("cluster", [&] { check_cluster(t, "cluster sample", json::clusters_from(load_sample("clusters.json"))); });
  run("cluster", [&] {
    ClusterStructure c{path(4), {{"A", {"0", "1"}}, {"B", {"2", "3"}}}, {}, 2};
    c.clusterAdjacency.add_vertex("A");
    c.clusterAdjacency.add_vertex("B");
    c.clusterAdjacency.add_edge("A", "B");
    check_cluster(t, "cluster pair", c);
  });
  run("fanbundle", [&] {
    BundleStructure b = json::bundles_from(load_sample("fanbundle.json"));
    check_model(t, "fanbundle sample", fanbundle_model(b, 1), b.graph, 4);
  });
  run("cliquelift", [&] {
    CliqueLiftSpec c = json::clique_lift_from(load_sample("cliquelift.json"));
    check_model(t, "cliquelift sample", clique_lift_model(c), gen::clique_lift_oracle(c), 2);
  });
  run("cliquelift", [&] {
    Graph star;
    for (int i = 0; i < 4; ++i) star.add_vertex(std::to_string(i));
    for (int i = 1; i < 4; ++i) star.add_edge(0, i);
    CliqueLiftSpec c{star, {{"0", {"1", "2", "3"}}}, 3};
    check_model(t, "cliquelift star", clique_lift_model(c), complete_graph(4), 2);
  });
  run("power", [&] { check_model(t, "power C6", power_model(cycle(6), 2), oracle::power(cycle(6), 2), 2); });
  run("power", [&] { check_model(t, "power P5", power_model(path(5), 4), complete_graph(5), 4); });
  run("shortcut", [&] {
    ShortcutSystem s = json::shortcut_from(load_sample("shortcut.json"));
    check_model(t, "shortcut sample", shortcut_to_model(s), with_shortcuts(s), s.k - 1);
  });
  run("shortcut", [&] {
    ShortcutSystem s{path(3), {{"0", "1", "2"}}, 2, 1};
    check_model(t, "shortcut P3", shortcut_to_model(s), cycle(3), 1);
  });

  // Randomised instances.
  for (int i = 0; i < 100; ++i) {
    std::string tag = " #" + std::to_string(i);
    run("kplanar", [&] {
      int k = gen::pick(rng, 0, 3);
      Graph g = gen::random_graph(gen::pick(rng, 2, 10), 0.4, rng);
      EmbeddedGraph e = gen::random_drawing(g, k == 0 ? 0 : gen::pick(rng, 0, 10), std::max(k, 1), true, rng);
      check_model(t, "kplanar" + tag, kplanar_model(e, k), g, k);
    });
    run("string", [&] {
      int delta = gen::pick(rng, 2, 5);
      StringCurves s = gen::random_curves(gen::pick(rng, 1, 8), delta, rng);
      check_model(t, "string" + tag, string_model(s, delta), gen::curve_intersections(s), 2 * (delta / 2));
    });
    run("cluster", [&] { check_cluster(t, "cluster" + tag, gen::random_clusters(gen::pick(rng, 1, 10), gen::pick(rng, 1, 4), rng)); });
    run("fanbundle", [&] {
      int k = gen::pick(rng, 0, 3);
      BundleStructure b = gen::random_bundles(gen::pick(rng, 2, 8), k, rng);
      check_model(t, "fanbundle" + tag, fanbundle_model(b, k), b.graph, 2 * (k + 1));
    });
    run("cliquelift", [&] {
      CliqueLiftSpec c = gen::random_clique_lift(gen::pick(rng, 1, 10), gen::pick(rng, 0, 3), rng);
      check_model(t, "cliquelift" + tag, clique_lift_model(c), gen::clique_lift_oracle(c), 2);
    });
    run("power", [&] {
      Graph g = gen::random_graph(gen::pick(rng, 1, 9), 0.35, rng);
      int k = gen::pick(rng, 1, 5);
      check_model(t, "power" + tag, power_model(g, k), oracle::power(g, k), 2 * (k / 2));
    });
    run("shortcut", [&] {
      ShortcutSystem s = gen::random_shortcuts(gen::pick(rng, 2, 10), gen::pick(rng, 2, 5), gen::pick(rng, 1, 3), rng);
      check_model(t, "shortcut" + tag, shortcut_to_model(s), with_shortcuts(s), s.k - 1);
    });
  }
  std::string counts;
  for (const auto& [name, n] : per) counts += (counts.empty() ? "" : ", ") + name + " " + std::to_string(n);
  return report(5, "gadget fidelity", t, seconds_since(start), 300, counts);
}

// --- criterion 6 -------------------------------------------------------------

bool criterion_gap() {
  Tally t;
  auto start = Clock::now();
  gen::Rng rng(20246);
  auto compare = [&](const EmbeddedGraph& e, int k, const std::string& label) {
    guarded(t, label, [&] {
      auto ch = gap_charging(e, k);
      bool brute = oracle::gap_feasible(e, k);
      t.expect(ch.has_value() == brute, label + ": feasibility differs from exhaustive search");
      if (!ch) return;
      std::map<EdgeKey, int> load;
      bool ok = ch->charged.size() == e.crossings.size();
      for (std::size_t i = 0; ok && i < e.crossings.size(); ++i) {
        const auto& c = e.crossings[i];
        ok = (ch->charged[i] == c.a || ch->charged[i] == c.b) && ++load[ch->charged[i]] <= k;
      }
      t.expect(ok, label + ": returned charging is invalid");
    });
  };
  // Four edges crossing pairwise: six crossings, four payers of capacity one.
  EmbeddedGraph six;
  for (int i = 0; i < 8; ++i) six.graph.add_vertex(std::to_string(i));
  std::vector<EdgeKey> keys;
  for (int i = 0; i < 4; ++i) {
    six.graph.add_edge(2 * i, 2 * i + 1);
    keys.push_back(edge_key(std::to_string(2 * i), std::to_string(2 * i + 1)));
  }
  std::vector<int> next(4, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) six.crossings.push_back({keys[i], keys[j], next[i]++, next[j]++, 0});
  compare(six, 1, "six crossings");
  t.expect(!gap_charging(six, 1).has_value(), "six crossings on four edges must be infeasible");
  compare(json::embedded_from(load_sample("three_crossing.json")), 1, "three crossings");
  t.expect(gap_charging(json::embedded_from(load_sample("three_crossing.json")), 1).has_value(), "cyclic charging missed");

  int runs = 0;
  for (int c = 0; c <= 16; ++c)
    for (int i = 0; i < 20; ++i, ++runs) {
      Graph g = gen::random_graph(gen::pick(rng, 4, 9), 0.5, rng);
      EmbeddedGraph e = gen::random_drawing(g, c, gen::pick(rng, 2, 6), gen::coin(rng, 0.5), rng);
      compare(e, gen::pick(rng, 0, 3), "random c=" + std::to_string(e.crossings.size()));
    }
  return report(6, "gap charging vs exhaustive", t, seconds_since(start), 300, std::to_string(runs) + " random drawings");
}

// --- criterion 7 -------------------------------------------------------------

bool criterion_lower_bound() {
  Tally t;
  auto start = Clock::now();
  std::string extra;
  for (auto [n, limit] : {std::pair<int, int>{2, 8}, {3, 11}}) {
    guarded(t, "hierarchy n=" + std::to_string(n), [&] {
      GridHierarchy h = build_grid_hierarchy(n, 1);
      HierarchyReport rep = check_hierarchy(h);
      long long side = static_cast<long long>(n) * n;
      t.expect(rep.ok(), "check_hierarchy reports a failed clause");
      t.expect(rep.radiusLimit == limit && rep.radius <= limit, "radius above " + std::to_string(limit));
      t.expect(rep.twLower == side + 1, "grid side differs");
      // Independent: the full grid is present in the subdivided graph.
      bool grid = true;
      for (long long x = 0; x <= side; ++x)
        for (long long y = 0; y <= side; ++y) {
          if (x < side) grid = grid && h.subdivisions.count(edge_key(grid_id(x, y), grid_id(x + 1, y)));
          if (y < side) grid = grid && h.subdivisions.count(edge_key(grid_id(x, y), grid_id(x, y + 1)));
        }
      for (const auto& [key, p] : h.subdivisions)
        for (std::size_t i = 0; grid && i + 1 < p.size(); ++i) grid = h.subdivided.graph.adjacent(p[i], p[i + 1]);
      t.expect(grid, "grid not contained");
      // Independent radius by Floyd-Warshall.
      auto d = oracle::distances(h.subdivided.graph);
      int best = 1 << 20;
      for (const auto& row : d) {
        int ecc = 0;
        for (int x : row) ecc = x < 0 ? 1 << 20 : std::max(ecc, x);
        best = std::min(best, ecc);
      }
      t.expect(best == rep.radius && best <= limit, "oracle radius " + std::to_string(best));
      // Independent check of a capacity-1 charging of the subdivided drawing.
      auto unit = gap_charging(h.subdivided, 1);
      std::map<EdgeKey, int> load;
      bool ok = unit.has_value();
      for (std::size_t i = 0; ok && i < h.subdivided.crossings.size(); ++i) {
        const auto& c = h.subdivided.crossings[i];
        ok = (unit->charged[i] == c.a || unit->charged[i] == c.b) && ++load[unit->charged[i]] <= 1;
      }
      t.expect(ok, "capacity-1 charging missing or invalid");
      extra += (extra.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " radius " + std::to_string(rep.radius);
    });
  }
  return report(7, "lower-bound family", t, seconds_since(start), 30, extra);
}

// --- criterion 8 -------------------------------------------------------------

std::string table_value(const BoundTable& table, const std::string& name) {
  Json j = json::to_json(table);
  if (!j.contains(name)) return "missing";
  return j[name].is_string() ? j[name].get<std::string>() : j[name].dump();
}

/// Runs the CLI; returns its exit status and fills `out` with stdout.
int run_cli(const std::string& args, std::string& out, const fs::path& dir, const std::string& tag) {
  fs::path file = dir / (tag + ".json");
  std::string cmd = std::string("\"") + SHALLOW_CLI + "\" " + args + " > \"" + file.string() + "\" 2> \"" +
                    (dir / (tag + ".err")).string() + "\"";
  int status = std::system(cmd.c_str());
  std::ifstream in(file, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_bounds(const fs::path& dir) {
  Tally t;
  auto start = Clock::now();
  BoundTable fan = bound_catalog("fan-planar");
  t.expect(table_value(fan, "rtw") == "1619", "fan-planar rtw");
  t.expect(table_value(fan, "ltw") == "45", "fan-planar ltw");
  BoundTable engine = bound_catalog("engine", {{"r", 1}, {"t", 3}, {"ell", 1}, {"kdeg", 0}});
  t.expect(table_value(engine, "bag") == "20", "engine bag C(6,3)");
  t.expect(table_value(engine, "tw") == "19", "engine treewidth 19");
  for (int ell = 1; ell <= 8; ++ell) {
    t.expect(table_value(bound_catalog("strict-clique-layout", {{"ell", ell}}), "sqn") == std::to_string(ell - 1),
             "strict layout of K_" + std::to_string(ell));
    QueueLayout q = complete_strict_layout(ell);
    t.expect(oracle::layout_queues(complete_graph(ell), q) == ell - 1 && verify_layout(complete_graph(ell), q).verdict,
             "complete_strict_layout(" + std::to_string(ell) + ")");
  }
  std::string out;
  int code = run_cli("bounds --class fan-planar", out, dir, "bounds");
  guarded(t, "cli bounds", [&] {
    Json j = Json::parse(out);
    t.expect(code == 0 && j["rtw"].dump() == "1619" && j["ltw"].dump() == "45", "CLI table differs");
  });
  code = run_cli("bounds --class engine --param r=1 --param t=3 --param ell=1 --param kdeg=0", out, dir, "bounds_engine");
  guarded(t, "cli engine bounds", [&] {
    Json j = Json::parse(out);
    t.expect(code == 0 && j["tw"].dump() == "19" && j["bag"].dump() == "20", "CLI engine table differs");
  });
  return report(8, "bound catalogue", t, seconds_since(start), 60);
}

// --- criterion 9 -------------------------------------------------------------

bool criterion_certificates(const fs::path& dir) {
  Tally t;
  auto start = Clock::now();
  const std::string s = std::string(SHALLOW_SAMPLES_DIR) + "/";
  {
    std::ofstream(dir / "k4_graph.json") << Json{{"graph", load_sample("k4.json")}}.dump();
    Json m = json::to_json(power_model(cycle(6), 2));
    std::ofstream(dir / "c6_model.json") << Json{{"model", m}}.dump();
  }
  const std::vector<std::pair<std::string, std::string>> commands{
      {"power", "power --k 2 --input \"" + s + "k4.json\""},
      {"treewidth", "treewidth --input \"" + s + "k4.json\""},
      {"decompose", "decompose --normalise --input \"" + (dir / "k4_graph.json").string() + "\""},
      {"model", "model --input \"" + (dir / "c6_model.json").string() + "\""},
      {"qn", "qn --input \"" + s + "k4.json\""},
      {"colnum", "colnum --s 2 --mode weak --input \"" + s + "k4.json\""},
      {"layout_complete", "layout --complete 5"},
      {"layout_shallow", "layout --shallow --input \"" + s + "columns_layout.json\""},
      {"colorder_strong", "colorder --s 1 --mode strong --input \"" + s + "columns_order.json\""},
      {"colorder_weak", "colorder --s 2 --mode weak --input \"" + s + "columns_order.json\""},
      {"engine", "engine run --input \"" + s + "p4xp3_engine.json\""},
      {"gpst", "gpst --input \"" + s + "gpst_columns.json\""},
      {"kplanar", "planarise --gadget kplanar --k 1 --input \"" + s + "k4_oneplanar.json\""},
      {"string", "planarise --gadget string --delta 3 --input \"" + s + "strings.json\""},
      {"cluster", "planarise --gadget cluster --input \"" + s + "clusters.json\""},
      {"fanbundle", "planarise --gadget fanbundle --k 1 --input \"" + s + "fanbundle.json\""},
      {"shortcut", "shortcut --input \"" + s + "shortcut.json\""},
      {"shortcut_gap", "shortcut --gap --input \"" + s + "shortcut.json\""},
      {"cliquelift", "cliquelift --input \"" + s + "cliquelift.json\""},
      {"gap", "gap --k 1 --input \"" + s + "three_crossing.json\""},
      {"friend", "friend --input \"" + s + "k132_fanplanar.json\""},
      {"lowerbound", "lowerbound build --n 2 --k 1 --check"},
  };
  int certs = 0;
  for (const auto& [tag, args] : commands) {
    std::string first, second, verdict;
    int code1 = run_cli("--seed 7 " + args, first, dir, tag + "_a");
    int code2 = run_cli("--seed 7 " + args, second, dir, tag + "_b");
    t.expect(code1 == 0 && code2 == 0, tag + ": exit codes " + std::to_string(code1) + "/" + std::to_string(code2));
    t.expect(!first.empty() && first == second, tag + ": re-run output differs");
    guarded(t, tag, [&] {
      Json cert = Json::parse(first);
      t.expect(cert.contains("kind") && cert.contains("claims"), tag + ": output is not a certificate");
      int code = run_cli("verify \"" + (dir / (tag + "_a.json")).string() + "\"", verdict, dir, tag + "_verify");
      Json v = Json::parse(verdict);
      t.expect(code == 0 && v["verdict"]["accepted"] == true, tag + ": fresh-process verification failed");
      ++certs;
    });
  }
  // A tampered certificate must not re-verify.
  guarded(t, "tamper", [&] {
    std::ifstream in(dir / "power_a.json");
    Json cert = Json::parse(in);
    cert["payload"]["model"]["guest"]["edges"].push_back({"0", "0|0"});
    std::ofstream(dir / "tampered.json") << cert.dump();
    std::string out;
    int code = run_cli("verify \"" + (dir / "tampered.json").string() + "\"", out, dir, "tampered_verify");
    t.expect(code != 0, "tampered certificate accepted");
  });
  return report(9, "certificate round-trip", t, seconds_since(start), 300,
                std::to_string(certs) + "/" + std::to_string(commands.size()) + " certificates");
}

}  // namespace

int main() {
  fs::path dir = fs::temp_directory_path() / ("shallow_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool ok = true;
  ok &= criterion_engine();
  ok &= criterion_engine_tightness();
  ok &= criterion_queue();
  ok &= criterion_colouring();
  ok &= criterion_gadgets();
  ok &= criterion_gap();
  ok &= criterion_lower_bound();
  ok &= criterion_bounds(dir);
  ok &= criterion_certificates(dir);
  fs::remove_all(dir);
  std::printf("acceptance: %s\n", ok ? "all criteria PASS" : "some criteria FAIL");
  return ok ? 0 : 1;
}
