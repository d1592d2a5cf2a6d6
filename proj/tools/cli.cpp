#include "cli.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ksa/dyngraph.hpp"
#include "ksa/errors.hpp"
#include "ksa/json_io.hpp"
#include "ksa/kuhn.hpp"
#include "ksa/oracle.hpp"
#include "ksa/protocol.hpp"
#include "ksa/refuter.hpp"

namespace ksa::cli {

namespace {

constexpr std::uint64_t kTriangulationCap = 1'000'000;

struct Flags {
  std::string graph;
  int k = 1;
  int budget = 0;
  std::string alg;
  int max_rounds = kDefaultMaxRounds;
  int threads = 1;
  bool pretty = false;
  std::uint64_t seed = 1;
  // per-command
  std::string inputs;
  int r = 0;
  bool dot = false;
  bool exhaustive = false;
  int samples = 1000;
  int n = 0;
};

std::string dump(const Json& doc, bool pretty) { return (pretty ? doc.dump(2) : doc.dump()) + "\n"; }

Json bound_payload(const DynamicGraphSpec& spec, int k, int max_rounds) {
  const int r = min_rounds(spec, k, max_rounds);
  const auto hs = closures_up_to(spec, r);
  Json gammas = Json::array();
  for (int t = 1; t <= r; ++t) gammas.push_back(min_dominating_set(hs[static_cast<std::size_t>(t)]).size);
  Json doc;
  doc["r"] = r;
  doc["dominating_set"] = min_dominating_set(hs.back()).members;
  doc["gamma_by_round"] = std::move(gammas);
  return doc;
}

CommandResult cmd_bound(const Flags& f) {
  const auto spec = load_graph_file(f.graph);
  return {0, dump(bound_payload(spec, f.k, f.max_rounds), f.pretty), ""};
}

CommandResult cmd_solve(const Flags& f) {
  const auto spec = load_graph_file(f.graph);
  const auto inputs = InputConfig::parse(f.inputs, f.k);
  const auto solution = flood_solve(spec, f.k, inputs, f.max_rounds);
  Json doc;
  doc["r"] = solution.rounds;
  doc["dominating_set"] = solution.dominators;
  doc["inputs"] = inputs.to_string();
  const Json outcome = to_json(solution.report);
  for (const auto& [key, value] : outcome.items()) doc[key] = value;
  const bool ok = solution.report.valid && solution.report.agreeing;
  return {ok ? 0 : 1, dump(doc, f.pretty), ""};
}

CommandResult cmd_refute(const Flags& f) {
  const auto spec = load_graph_file(f.graph);
  const auto alg = algorithm_by_name(f.alg);
  const Witness w = refute(spec, f.k, alg, f.budget, {f.threads});
  std::string msg = alg.name + " fails at budget " + std::to_string(f.budget) + ": " + to_string(w.kind) +
                    " on " + w.config.to_string() + "\n";
  return {1, dump(to_json(w), f.pretty), msg};
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

std::string triangulation_dot(const std::vector<LatticeVertex>& verts, const std::vector<PrimitiveSimplex>& cells,
                              const std::map<LatticeVertex, std::size_t>& ids, int n,
                              const std::vector<std::optional<Node>>& nodes) {
  std::ostringstream out;
  out << "graph T {\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& x = verts[i].coords;
    out << "  v" << i << " [label=\"" << inp(verts[i], n).to_string();
    if (nodes[i]) out << "\\n" << *nodes[i];
    out << "\", pos=\"" << x[0] << "," << x[1] << "!\"];\n";
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& cell : cells) {
    const auto ys = cell.vertices();
    for (std::size_t a = 0; a < ys.size(); ++a) {
      for (std::size_t b = a + 1; b < ys.size(); ++b) {
        auto ia = ids.at(ys[a]), ib = ids.at(ys[b]);
        edges.emplace(std::min(ia, ib), std::max(ia, ib));
      }
    }
  }
  for (const auto& [a, b] : edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

CommandResult cmd_triangulate(const Flags& f) {
  std::optional<DynamicGraphSpec> spec;
  int n = f.n;
  if (!f.graph.empty()) {
    spec = load_graph_file(f.graph);
    if (n == 0) n = spec->n();
    if (n != spec->n()) throw InvalidArgument("--n differs from the node count of the graph");
  }
  if (n < 1 || f.k < 1) throw InvalidArgument("triangulate needs n >= 1 and k >= 1");
  std::uint64_t cells = 1;
  for (int i = 0; i < f.k && cells <= kTriangulationCap; ++i) cells *= static_cast<std::uint64_t>(n);
  if (cells > kTriangulationCap || binomial(n + f.k, f.k) > kTriangulationCap) {
    throw CapExceeded("triangulation exceeds " + std::to_string(kTriangulationCap) + " cells or vertices");
  }
  if (f.dot && f.k != 2) throw InvalidArgument("--dot export is only available for k = 2");

  const auto verts = vertices(n, f.k);
  const auto simplices = primitive_simplices(n, f.k);
  std::map<LatticeVertex, std::size_t> ids;
  for (std::size_t i = 0; i < verts.size(); ++i) ids.emplace(verts[i], i);

  std::optional<Digraph> h;
  std::optional<AlgorithmColoring> coloring;
  if (spec) {
    h = closure(*spec, f.budget);
    if (!f.alg.empty()) {
      coloring.emplace(*spec, f.k, f.budget, algorithm_by_name(f.alg));
      if (f.threads > 1) coloring->prefill(f.threads);
    }
  }

  std::vector<std::optional<Node>> nodes(verts.size());
  std::vector<std::optional<Value>> colors(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (h) nodes[i] = assign_node(*h, verts[i]);
    if (coloring) colors[i] = (*coloring)(verts[i]);
  }

  if (f.dot) return {0, triangulation_dot(verts, simplices, ids, n, nodes), ""};

  if (f.pretty) {
    std::ostringstream out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto& x = verts[i].coords;
      for (std::size_t j = 0; j < x.size(); ++j) out << (j ? "," : "") << x[j];
      out << '\t' << inp(verts[i], n).to_string();
      out << '\t' << (nodes[i] ? std::to_string(*nodes[i]) : "-");
      out << '\t' << (colors[i] ? std::to_string(*colors[i]) : "-") << '\n';
    }
    for (const auto& s : simplices) {
      const auto ys = s.vertices();
      for (std::size_t j = 0; j < ys.size(); ++j) out << (j ? " " : "") << ids.at(ys[j]);
      out << '\n';
    }
    return {0, out.str(), ""};
  }

  Json doc;
  doc["n"] = n;
  doc["k"] = f.k;
  if (spec) doc["budget"] = f.budget;
  doc["vertex_count"] = verts.size();
  doc["simplex_count"] = simplices.size();
  Json vs = Json::array();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Json v;
    v["id"] = i;
    v["coords"] = verts[i].coords;
    v["inp"] = inp(verts[i], n).to_string();
    if (nodes[i]) v["node"] = *nodes[i];
    if (colors[i]) v["color"] = *colors[i];
    vs.push_back(std::move(v));
  }
  doc["vertices"] = std::move(vs);
  Json ss = Json::array();
  for (const auto& s : simplices) {
    Json cell = to_json(s);
    Json members = Json::array();
    for (const auto& y : s.vertices()) members.push_back(ids.at(y));
    cell["vertices"] = std::move(members);
    ss.push_back(std::move(cell));
  }
  doc["simplices"] = std::move(ss);
  return {0, dump(doc, false), ""};
}

CommandResult cmd_closure(const Flags& f) {
  const auto spec = load_graph_file(f.graph);
  if (f.r < 0) throw InvalidArgument("--r must be non-negative");
  const Digraph h = closure(spec, f.r);
  if (f.dot) return {0, to_dot(h, "H" + std::to_string(f.r)), ""};
  Json doc;
  doc["n"] = h.n();
  doc["r"] = f.r;
  Json arcs = Json::array();
  for (const auto& [u, v] : h.arcs()) arcs.push_back({u, v});
  doc["arc_count"] = h.arc_count();
  doc["arcs"] = std::move(arcs);
  return {0, dump(doc, f.pretty), ""};
}

CommandResult cmd_check(const Flags& f) {
  const auto spec = load_graph_file(f.graph);
  const auto alg = algorithm_by_name(f.alg);
  if (!f.inputs.empty()) {
    const auto config = InputConfig::parse(f.inputs, f.k);
    const OutcomeReport report = run(spec, f.k, alg, config, f.budget);
    Json doc;
    doc["config"] = config.to_string();
    doc["budget"] = f.budget;
    const Json outcome = to_json(report);
    for (const auto& [key, value] : outcome.items()) doc[key] = value;
    return {report.valid && report.agreeing ? 0 : 1, dump(doc, f.pretty), ""};
  }

  const auto report = f.exhaustive ? oracle::exhaustive_check(spec, f.k, alg, f.budget)
                                   : oracle::sampled_check(spec, f.k, alg, f.budget, f.samples, f.seed);
  Json doc;
  doc["exhaustive"] = f.exhaustive;
  doc["total_configs"] = report.total_configs;
  doc["failure_count"] = report.failures.size();
  if (report.failures.empty()) {
    doc["first_failure"] = nullptr;
  } else {
    const auto& [config, outcome] = report.failures.front();
    Json first;
    first["config"] = config.to_string();
    const Json fields = to_json(outcome);
    for (const auto& [key, value] : fields.items()) first[key] = value;
    doc["first_failure"] = std::move(first);
  }
  std::string msg;
  if (!report.failures.empty()) {
    msg = alg.name + " fails on " + std::to_string(report.failures.size()) + " of " +
          std::to_string(report.total_configs) + " configurations\n";
  }
  return {report.failures.empty() ? 0 : 1, dump(doc, f.pretty), msg};
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"k-set agreement round bounds in known dynamic networks", "ksa"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", f.threads, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    cmd->add_flag("--pretty", f.pretty, "Human-readable output");
  };
  auto add_graph = [&](CLI::App* cmd) { cmd->add_option("--graph", f.graph, "Graph sequence JSON file")->required(); };
  auto add_k = [&](CLI::App* cmd) { cmd->add_option("--k", f.k, "Agreement parameter k")->required()->check(CLI::PositiveNumber); };

  auto* bound = app.add_subcommand("bound", "Smallest r with gamma(H_r) <= k");
  add_graph(bound);
  add_k(bound);
  bound->add_option("--max-rounds", f.max_rounds, "Round cap")->check(CLI::PositiveNumber);
  add_common(bound);

  auto* solve = app.add_subcommand("solve", "Run r-round flooding on one input configuration");
  add_graph(solve);
  add_k(solve);
  solve->add_option("--inputs", f.inputs, "Input digits, node 1 first")->required();
  solve->add_option("--max-rounds", f.max_rounds, "Round cap")->check(CLI::PositiveNumber);
  add_common(solve);

  auto* refute_cmd = app.add_subcommand("refute", "Find a verified violation for a budget below the bound");
  add_graph(refute_cmd);
  add_k(refute_cmd);
  refute_cmd->add_option("--alg", f.alg, "Candidate algorithm")->required();
  refute_cmd->add_option("--budget", f.budget, "Rounds executed")->required()->check(CLI::NonNegativeNumber);
  add_common(refute_cmd);

  auto* tri = app.add_subcommand("triangulate", "Kuhn triangulation with input and node assignment");
  tri->add_option("--n", f.n, "Side length (defaults to the graph's node count)")->check(CLI::PositiveNumber);
  add_k(tri);
  tri->add_option("--graph", f.graph, "Graph sequence JSON file (enables node assignment)");
  tri->add_option("--budget", f.budget, "Rounds executed")->check(CLI::NonNegativeNumber);
  tri->add_option("--alg", f.alg, "Color vertices by this algorithm (needs --graph)");
  tri->add_flag("--dot", f.dot, "Graphviz export (k = 2)");
  add_common(tri);

  auto* clo = app.add_subcommand("closure", "Information-flow closure H_r");
  add_graph(clo);
  clo->add_option("--r", f.r, "Rounds")->required()->check(CLI::NonNegativeNumber);
  clo->add_flag("--dot", f.dot, "Graphviz export");
  add_common(clo);

  auto* check = app.add_subcommand("check", "Validity/agreement check of an algorithm at a budget");
  add_graph(check);
  add_k(check);
  check->add_option("--alg", f.alg, "Candidate algorithm")->required();
  check->add_option("--budget", f.budget, "Rounds executed")->required()->check(CLI::NonNegativeNumber);
  check->add_flag("--exhaustive", f.exhaustive, "All (k+1)^n configurations");
  check->add_option("--inputs", f.inputs, "Run a single configuration instead");
  check->add_option("--samples", f.samples, "Sample count without --exhaustive")->check(CLI::PositiveNumber);
  check->add_option("--seed", f.seed, "Sampling seed");
  add_common(check);

  std::vector<const char*> argv{"ksa"};
  for (const auto& a : args) argv.push_back(a.c_str());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  try {
    if (f.threads < 1) f.threads = 1;
    if (*bound) return cmd_bound(f);
    if (*solve) return cmd_solve(f);
    if (*refute_cmd) return cmd_refute(f);
    if (*tri) {
      if (!f.alg.empty() && f.graph.empty()) throw InvalidArgument("--alg needs --graph");
      return cmd_triangulate(f);
    }
    if (*clo) return cmd_closure(f);
    if (*check) return cmd_check(f);
  } catch (const LemmaFalsified& e) {
    return {2, "", std::string("INTERNAL ERROR, indistinguishability check failed: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
  return {2, "", "no command\n"};
}

}  // namespace ksa::cli
