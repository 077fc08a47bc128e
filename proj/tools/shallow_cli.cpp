// shallow: command-line front end. Every command reads one JSON document
// (--input, or standard input), writes JSON to standard output (or
// --output), and exits 0 accept, 1 reject/infeasible, 2 input error,
// 3 resource error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shallow/shallow.hpp"

namespace {

using shallow::json::Json;
namespace sj = shallow::json;

enum Exit { kAccept = 0, kReject = 1, kInput = 2, kResource = 3 };

struct Global {
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  long long budget = 0;  // 0 keeps each oracle's default
  int jobs = 1;
};

Json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw shallow::InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw shallow::InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json(const Global& g, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw shallow::InputError("cannot write '" + g.output + "'");
  out << text;
}

int verdict_exit(const shallow::Verdict& v) { return v ? kAccept : kReject; }

Json verdict_json(const shallow::Verdict& v) {
  Json out = {{"accepted", v.accepted}};
  if (!v) {
    out["clause"] = v.clause;
    out["detail"] = v.detail;
  }
  return out;
}

int oracle_limit(const Global& g, int fallback) { return g.budget > 0 ? static_cast<int>(g.budget) : fallback; }

/// Builds a certificate and prints it.
int certify(const Global& g, const std::string& kind, const Json& payload) {
  write_json(g, shallow::make_certificate(kind, payload));
  return kAccept;
}

shallow::BoundParams parse_params(const std::vector<std::string>& raw) {
  shallow::BoundParams out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw shallow::InputError("--param expects name=value, got '" + p + "'");
    try {
      std::size_t used = 0;
      long long v = std::stoll(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
      out[p.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw shallow::InputError("--param value must be an integer, got '" + p + "'");
    }
  }
  return out;
}

// -- commands ---------------------------------------------------------------

int cmd_product(const Global& g, const std::string& kind) {
  Json in = read_json(g.input);
  auto left = sj::graph_from(sj::field(in, "left")), right = sj::graph_from(sj::field(in, "right"));
  if (kind != "strong" && kind != "lex") throw shallow::InputError("--kind must be 'strong' or 'lex'");
  auto prod = kind == "strong" ? shallow::strong_product(left, right) : shallow::lex_product(left, right);
  write_json(g, {{"schema", "v1"}, {"graph", sj::to_json(prod)}});
  return kAccept;
}

int cmd_power(const Global& g, int k) {
  auto graph = sj::graph_from(read_json(g.input));
  auto m = shallow::power_model(graph, k);
  return certify(g, "model", {{"model", sj::to_json(m)}, {"guest", sj::to_json(shallow::graph_power(graph, k))}});
}

int cmd_decompose(const Global& g, bool normalise) {
  Json in = read_json(g.input);
  auto graph = sj::graph_from(sj::field(in, "graph"));
  shallow::TreeDecomposition td;
  if (in.contains("td")) {
    td = sj::td_from(sj::field(in, "td"));
    auto rep = shallow::verify_tree_decomposition(graph, td);
    if (!rep.verdict) {
      write_json(g, {{"verdict", verdict_json(rep.verdict)}});
      return kReject;
    }
  } else {
    td = shallow::exact_treewidth(graph, oracle_limit(g, shallow::kTreewidthLimit)).td;
  }
  if (normalise) td = shallow::normalise(td, graph);
  Json payload = {{"graph", sj::to_json(graph)}, {"td", sj::to_json(td)}};
  if (normalise) payload["normalised"] = true;
  if (in.contains("bound")) payload["bound"] = in["bound"];
  return certify(g, "tree-decomposition", payload);
}

int cmd_treewidth(const Global& g) {
  Json in = read_json(g.input);
  auto graph = sj::graph_from(in.contains("graph") ? sj::field(in, "graph") : in);
  auto res = shallow::exact_treewidth(graph, oracle_limit(g, shallow::kTreewidthLimit));
  return certify(g, "tree-decomposition", {{"graph", sj::to_json(graph)}, {"td", sj::to_json(res.td)}, {"bound", res.width}});
}

int cmd_model(const Global& g) {
  Json in = read_json(g.input);
  Json payload = in.contains("model") ? in : Json{{"model", in}};
  auto rep = shallow::detail::run_check("model", payload);
  if (!rep.verdict) {
    write_json(g, {{"verdict", verdict_json(rep.verdict)}});
    return kReject;
  }
  return certify(g, "model", payload);
}

int cmd_shortcut(const Global& g, bool gap) {
  auto s = sj::shortcut_from(read_json(g.input));
  if (gap) {
    auto sg = shallow::shortcut_gap_charging(s);
    return certify(g, "gap-charging", {{"embedded", sj::to_json(sg.drawing)}, {"charging", sj::to_json(sg.charging)}});
  }
  auto m = shallow::shortcut_to_model(s);
  return certify(g, "model", {{"model", sj::to_json(m)}, {"guest", sj::to_json(shallow::apply_shortcuts(s))}});
}

int cmd_cliquelift(const Global& g) {
  auto c = sj::clique_lift_from(read_json(g.input));
  auto m = shallow::clique_lift_model(c);
  return certify(g, "model", {{"model", sj::to_json(m)}, {"guest", sj::to_json(shallow::apply_clique_lift(c))}});
}

int cmd_engine(const Global& g, std::optional<int> r) {
  Json in = read_json(g.input);
  auto input = sj::engine_input_from(in);
  if (r) input.r = *r;
  auto out = shallow::quotient_engine(input);
  return certify(g, "engine-bundle", {{"input", sj::to_json(input)}, {"output", sj::to_json(out)}});
}

int cmd_gpst(const Global& g) {
  Json in = read_json(g.input);
  auto model = sj::model_from(sj::field(in, "model"));
  auto h = sj::graph_from(sj::field(in, "h")), p = sj::graph_from(sj::field(in, "p"));
  int ell = sj::get<int>(in, "ell"), r = sj::get<int>(in, "r");
  auto htd = sj::td_from(sj::field(in, "hTD"));
  auto res = shallow::gpst_shallow(model, h, p, ell, htd, r);
  shallow::EmbeddingWitness identity{model.host, {}};
  for (const auto& v : model.host.ids()) identity.injection[v] = v;
  shallow::EngineInput input{model.host, shallow::partition_from_embedding(model.host, identity, h, p, ell), htd, model, r};
  Json gp = {{"clique", res.clique},
             {"pathPrime", sj::to_json(res.pathPrime)},
             {"witness", sj::to_json(res.witness)},
             {"hostTD", sj::to_json(res.hostTD)}};
  return certify(g, "engine-bundle", {{"input", sj::to_json(input)}, {"output", sj::to_json(res.engine)}, {"gpst", gp}});
}

int cmd_planarise(const Global& g, const std::string& gadget, int k, int delta) {
  Json in = read_json(g.input);
  if (gadget == "plain") {
    auto e = sj::embedded_from(in);
    auto p = shallow::planarize(e);
    Json paths = Json::array();
    for (const auto& [key, path] : p.paths) paths.push_back({{"edge", sj::edge_json(key)}, {"path", path}});
    write_json(g, {{"schema", "v1"}, {"plane", sj::to_json(p.plane)}, {"dummy", p.dummy}, {"paths", paths}});
    return kAccept;
  }
  if (gadget == "kplanar") {
    auto e = sj::embedded_from(in);
    return certify(g, "model", {{"model", sj::to_json(shallow::kplanar_model(e, k))}, {"guest", sj::to_json(e.graph)}});
  }
  if (gadget == "string") {
    auto s = sj::curves_from(in);
    return certify(g, "model", {{"model", sj::to_json(shallow::string_model(s, delta))},
                                {"guest", sj::to_json(shallow::intersection_graph(s))}});
  }
  if (gadget == "cluster") {
    auto c = sj::clusters_from(in);
    auto w = shallow::cluster_embed(c);
    return certify(g, "embedding", {{"guest", sj::to_json(c.g)}, {"witness", sj::to_json(w)}});
  }
  if (gadget == "fanbundle") {
    auto b = sj::bundles_from(in);
    return certify(g, "model", {{"model", sj::to_json(shallow::fanbundle_model(b, k))}, {"guest", sj::to_json(b.graph)}});
  }
  throw shallow::InputError("--gadget must be one of kplanar, string, cluster, fanbundle, plain");
}

int cmd_gap(const Global& g, int k) {
  auto e = sj::embedded_from(read_json(g.input));
  auto ch = shallow::gap_charging(e, k);
  if (!ch) {
    write_json(g, {{"feasible", false}, {"k", k}, {"crossings", e.crossings.size()}});
    return kReject;
  }
  return certify(g, "gap-charging", {{"embedded", sj::to_json(e)}, {"charging", sj::to_json(*ch)}});
}

int cmd_friend(const Global& g) {
  auto e = sj::embedded_from(read_json(g.input));
  auto f = shallow::friend_assignment(e);
  return certify(g, "friend-assignment", {{"embedded", sj::to_json(e)}, {"assignment", sj::to_json(f)}});
}

int cmd_layout(const Global& g, std::optional<int> complete, bool shallow_mode) {
  if (complete) {
    auto q = shallow::complete_strict_layout(*complete);
    return certify(g, "queue-layout", {{"graph", sj::to_json(shallow::complete_graph(*complete))},
                                       {"layout", sj::to_json(q)},
                                       {"bound", std::max(*complete - 1, 0)}});
  }
  Json in = read_json(g.input);
  if (shallow_mode) {
    auto m = sj::model_from(sj::field(in, "model"));
    auto host = sj::layout_from(sj::field(in, "hostLayout"));
    auto res = shallow::queue_shallow(m, host);
    return certify(g, "queue-layout", {{"graph", sj::to_json(m.guest)},
                                       {"layout", sj::to_json(res.layout)},
                                       {"model", sj::to_json(m)},
                                       {"hostLayout", sj::to_json(host)}});
  }
  auto graph = sj::graph_from(sj::field(in, "graph"));
  auto q = sj::layout_from(sj::field(in, "layout"));
  auto rep = shallow::verify_layout(graph, q);
  if (!rep.verdict) {
    write_json(g, {{"verdict", verdict_json(rep.verdict)}});
    return kReject;
  }
  Json payload = {{"graph", sj::to_json(graph)}, {"layout", sj::to_json(q)}};
  if (in.contains("bound")) payload["bound"] = in["bound"];
  return certify(g, "queue-layout", payload);
}

int cmd_qn(const Global& g) {
  Json in = read_json(g.input);
  auto graph = sj::graph_from(in.contains("graph") ? sj::field(in, "graph") : in);
  auto res = shallow::exact_queue_number(graph, oracle_limit(g, shallow::kQueueOracleLimit));
  return certify(g, "queue-layout",
                 {{"graph", sj::to_json(graph)}, {"layout", sj::to_json(res.layout)}, {"bound", res.queues}});
}

int cmd_colnum(const Global& g, int s, const std::string& mode) {
  Json in = read_json(g.input);
  auto graph = sj::graph_from(in.contains("graph") ? sj::field(in, "graph") : in);
  auto m = shallow::parse_col_mode(mode);
  auto res = shallow::exact_col(graph, s, m, oracle_limit(g, shallow::kColOracleLimit));
  Json payload = sj::order_json(res.order);
  payload.update({{"graph", sj::to_json(graph)}, {"s", s}, {"mode", mode}, {"bound", res.value}});
  return certify(g, "vertex-order", payload);
}

int cmd_colorder(const Global& g, int s, const std::string& mode) {
  Json in = read_json(g.input);
  auto m = sj::model_from(sj::field(in, "model"));
  auto host_order = sj::get<std::vector<shallow::VertexId>>(in, "hostOrder");
  auto t = shallow::col_shallow_order(m, host_order, s, shallow::parse_col_mode(mode));
  Json payload = sj::order_json(t.order);
  payload.update({{"graph", sj::to_json(m.guest)},
                  {"s", s},
                  {"mode", mode},
                  {"model", sj::to_json(m)},
                  {"hostOrder", host_order}});
  return certify(g, "vertex-order", payload);
}

int colouring_result(const Global& g, const shallow::ColouringReport& rep) {
  Json out = {{"verdict", verdict_json(rep.verdict)}};
  if (!rep.verdict) out["witness"] = rep.witness;
  write_json(g, out);
  return verdict_exit(rep.verdict);
}

int cmd_nonrep(const Global& g, int h) {
  Json in = read_json(g.input);
  auto graph = sj::graph_from(sj::field(in, "graph"));
  return colouring_result(g, shallow::verify_nonrepetitive(graph, sj::colouring_from(in), h));
}

int cmd_centred(const Global& g, int p) {
  Json in = read_json(g.input);
  auto graph = sj::graph_from(sj::field(in, "graph"));
  return colouring_result(g, shallow::verify_p_centred(graph, sj::colouring_from(in), p));
}

int cmd_lowerbound(const Global& g, int n, int k, bool check) {
  auto h = shallow::build_grid_hierarchy(n, k, g.budget > 0 ? g.budget : shallow::kGridVertexBudget);
  if (!check) {
    Json subs = Json::array();
    for (const auto& [key, path] : h.subdivisions) subs.push_back({{"edge", sj::edge_json(key)}, {"path", path}});
    write_json(g, {{"schema", "v1"},
                   {"n", n},
                   {"k", k},
                   {"embedded", sj::to_json(h.embedded)},
                   {"charging", sj::to_json(h.charging)},
                   {"subdivided", sj::to_json(h.subdivided)},
                   {"subdivisions", subs}});
    return kAccept;
  }
  auto rep = shallow::check_hierarchy(h);
  if (!rep.ok()) {
    write_json(g, {{"report", sj::to_json(rep)}});
    return kReject;
  }
  auto unit = shallow::gap_charging(h.subdivided, 1);
  Json subs = Json::array();
  for (const auto& [key, path] : h.subdivisions) subs.push_back({{"edge", sj::edge_json(key)}, {"path", path}});
  return certify(g, "hierarchy-report", {{"n", n},
                                         {"k", k},
                                         {"subdivided", sj::to_json(h.subdivided)},
                                         {"charging", sj::to_json(*unit)},
                                         {"subdivisions", subs},
                                         {"report", sj::to_json(rep)}});
}

int cmd_verify(const Global& g, const std::string& file) {
  auto rep = shallow::verify_certificate(read_json(file.empty() ? g.input : file));
  Json claims = Json::array();
  for (const auto& c : rep.claims) claims.push_back({{"name", c.name}, {"measured", c.measured}, {"bound", c.bound}});
  write_json(g, {{"verdict", verdict_json(rep.verdict)}, {"claims", claims}});
  return verdict_exit(rep.verdict);
}

int cmd_bounds(const Global& g, const std::string& cls, const std::vector<std::string>& params) {
  if (cls.empty()) {
    write_json(g, {{"classes", shallow::bound_classes()}});
    return kAccept;
  }
  write_json(g, sj::to_json(shallow::bound_catalog(cls, parse_params(params))));
  return kAccept;
}

void report_error(const char* kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shallow-minor product structure: constructions and certificates"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--input", g.input, "input JSON file (default: standard input)");
  app.add_option("--output", g.output, "output file (default: standard output)");
  app.add_option("--seed", g.seed, "seed for randomised choices")->capture_default_str();
  app.add_option("--budget", g.budget, "oracle size limit / grid vertex budget");
  app.add_option("--jobs", g.jobs, "oracle parallelism")->check(CLI::PositiveNumber);

  int k = 1, delta = 2, s = 1, n = 2, h = 2, p = 1;
  std::string kind = "strong", mode = "strong", gadget, cls, cert_file;
  std::vector<std::string> params;
  bool normalise = false, gap = false, shallow_mode = false, check = false;
  std::optional<int> complete, engine_r;

  auto sub = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };
  std::function<int()> run;

  auto* product = sub("product", "strong or lexicographic product of {left, right}");
  product->add_option("--kind", kind, "strong | lex")->capture_default_str();
  product->callback([&] { run = [&] { return cmd_product(g, kind); }; });

  auto* power = sub("power", "model of G^k in G ∘ edgeless(d+1)");
  power->add_option("--k", k)->required();
  power->callback([&] { run = [&] { return cmd_power(g, k); }; });

  auto* decompose = sub("decompose", "verify or build a tree decomposition of {graph, td?}");
  decompose->add_flag("--normalise", normalise);
  decompose->callback([&] { run = [&] { return cmd_decompose(g, normalise); }; });

  sub("treewidth", "exact treewidth with witness")->callback([&] { run = [&] { return cmd_treewidth(g); }; });
  sub("model", "verify a minor model")->callback([&] { run = [&] { return cmd_model(g); }; });

  auto* shortcut = sub("shortcut", "model of a shortcut system, or its gap charging");
  shortcut->add_flag("--gap", gap);
  shortcut->callback([&] { run = [&] { return cmd_shortcut(g, gap); }; });

  sub("cliquelift", "model of a d-clique lift")->callback([&] { run = [&] { return cmd_cliquelift(g); }; });

  auto* engine = sub("engine", "quotient engine");
  engine->require_subcommand(1);
  auto* engine_run = engine->add_subcommand("run", "run the engine on an engine input");
  engine_run->fallthrough();
  engine_run->add_option("--r", engine_r, "override the input radius");
  engine_run->callback([&] { run = [&] { return cmd_engine(g, engine_r); }; });

  sub("gpst", "product structure of an r-shallow minor of H ⊠ P ⊠ K_ℓ")->callback([&] {
    run = [&] { return cmd_gpst(g); };
  });

  auto* planarise = sub("planarise", "gadget models of beyond-planar drawings");
  planarise->add_option("--gadget", gadget)->required()->check(
      CLI::IsMember({"kplanar", "string", "cluster", "fanbundle", "plain"}));
  planarise->add_option("--k", k)->capture_default_str();
  planarise->add_option("--delta", delta)->capture_default_str();
  planarise->callback([&] { run = [&] { return cmd_planarise(g, gadget, k, delta); }; });

  auto* gapc = sub("gap", "k-gap charging of a drawing");
  gapc->add_option("--k", k)->required();
  gapc->callback([&] { run = [&] { return cmd_gap(g, k); }; });

  sub("friend", "friend assignment of a fan-planar drawing")->callback([&] { run = [&] { return cmd_friend(g); }; });

  auto* layout = sub("layout", "verify a queue layout, or build one");
  layout->add_option("--complete", complete, "strict layout of K_L");
  layout->add_flag("--shallow", shallow_mode, "transfer a host layout through a model");
  layout->callback([&] { run = [&] { return cmd_layout(g, complete, shallow_mode); }; });

  sub("qn", "exact queue number")->callback([&] { run = [&] { return cmd_qn(g); }; });

  auto* colnum = sub("colnum", "exact strong/weak colouring number");
  colnum->add_option("--s", s)->required();
  colnum->add_option("--mode", mode)->capture_default_str();
  colnum->callback([&] { run = [&] { return cmd_colnum(g, s, mode); }; });

  auto* colorder = sub("colorder", "guest order from a host order through a model");
  colorder->add_option("--s", s)->required();
  colorder->add_option("--mode", mode)->capture_default_str();
  colorder->callback([&] { run = [&] { return cmd_colorder(g, s, mode); }; });

  auto* nonrep = sub("nonrep", "check a colouring is nonrepetitive on short paths");
  nonrep->add_option("--half", h, "largest half length")->capture_default_str();
  nonrep->callback([&] { run = [&] { return cmd_nonrep(g, h); }; });

  auto* centred = sub("centred", "check a colouring is p-centred");
  centred->add_option("--p", p)->required();
  centred->callback([&] { run = [&] { return cmd_centred(g, p); }; });

  auto* lowerbound = sub("lowerbound", "levelled grid family");
  lowerbound->require_subcommand(1);
  auto* build = lowerbound->add_subcommand("build", "build the grid hierarchy");
  build->fallthrough();
  build->add_option("--n", n)->required();
  build->add_option("--k", k)->required();
  build->add_flag("--check", check);
  build->callback([&] { run = [&] { return cmd_lowerbound(g, n, k, check); }; });

  auto* verify = sub("verify", "re-check a certificate");
  verify->add_option("certificate", cert_file, "certificate file (default: --input)");
  verify->callback([&] { run = [&] { return cmd_verify(g, cert_file); }; });

  auto* bounds = sub("bounds", "bound catalogue for a graph class");
  bounds->add_option("--class", cls);
  bounds->add_option("--param", params, "name=value");
  bounds->callback([&] { run = [&] { return cmd_bounds(g, cls, params); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kAccept : kInput;
  }
  try {
    return run();
  } catch (const shallow::ResourceError& e) {
    report_error("resource", e.what());
    return kResource;
  } catch (const shallow::InputError& e) {
    report_error("input", e.what());
    return kInput;
  } catch (const shallow::ConstructionError& e) {
    report_error("construction", e.what());
    return kReject;
  } catch (const nlohmann::json::exception& e) {
    report_error("input", e.what());
    return kInput;
  }
}
