#include "mutvis/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mutvis/directed_decomposition.hpp"
#include "mutvis/errors.hpp"
#include "mutvis/generators.hpp"
#include "mutvis/io.hpp"
#include "mutvis/mu_algorithm.hpp"
#include "mutvis/split_decomposition.hpp"
#include "mutvis/visibility_oracle.hpp"

namespace mutvis {

namespace {

using json = nlohmann::json;

Graph read_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::vector<Vertex> relabel_back(const std::vector<Vertex>& component, const VertexSet& local) {
  std::vector<Vertex> ids;
  for (Vertex v : local) ids.push_back(component[v]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

json vertex_array(std::span<const Vertex> ids) {
  json a = json::array();
  for (Vertex v : ids) a.push_back(v);
  return a;
}

std::vector<Vertex> largest_component(const Graph& g) {
  auto comps = connected_components(g);
  return *std::max_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
}

void warn_disconnected(std::ostream& err, std::size_t components, const std::string& what) {
  err << "warning: graph has " << components << " components; " << what << '\n';
}

// mu over a possibly disconnected graph: the best component wins, ties going
// to the component with the smallest vertex.
struct MuReport {
  MuResult result;  // ids already mapped back to the input graph
  bool connected = true;
  StageTimings timings;
};

MuReport compute_mu(const Graph& g, std::ostream& err) {
  MuReport report;
  if (is_connected(g)) {
    report.result = mu_set_timed(g, report.timings);
    return report;
  }
  auto comps = connected_components(g);
  warn_disconnected(err, comps.size(), "reporting the component with the largest mu");
  report.connected = false;
  bool first = true;
  for (const auto& comp : comps) {
    StageTimings t;
    MuResult local = mu_set_timed(induced_subgraph(g, comp), t);
    report.timings.decompose_ms += t.decompose_ms;
    report.timings.orient_ms += t.orient_ms;
    report.timings.t_arrows_ms += t.t_arrows_ms;
    report.timings.algorithm_ms += t.algorithm_ms;
    if (!first && local.mu <= report.result.mu) continue;
    first = false;
    MuResult mapped = local;
    mapped.set = VertexSet(relabel_back(comp, local.set));
    mapped.removed_sigma = VertexSet(relabel_back(comp, local.removed_sigma));
    for (Removal& r : mapped.removed_extra) r.vertex = comp[r.vertex];
    report.result = std::move(mapped);
  }
  return report;
}

json result_document(const Graph& g, const MuReport& report, bool timings) {
  const MuResult& r = report.result;
  json doc;
  doc["n"] = g.order();
  doc["m"] = g.size();
  doc["connected"] = report.connected;
  doc["is_dh"] = true;
  doc["mu"] = r.mu;
  doc["mu_set"] = vertex_array(r.set.members());
  doc["sigma_vertices"] = vertex_array(r.removed_sigma.members());
  doc["shape"] = to_string(r.shape);
  json extra = json::array();
  for (const Removal& x : r.removed_extra) {
    extra.push_back({{"vertex", x.vertex}, {"reason", to_string(x.reason)}});
  }
  doc["removed_extra"] = extra;
  if (timings) {
    doc["timings"] = {{"decompose_ms", report.timings.decompose_ms},
                      {"orient_ms", report.timings.orient_ms},
                      {"t_arrows_ms", report.timings.t_arrows_ms},
                      {"algorithm_ms", report.timings.algorithm_ms}};
  }
  return doc;
}

void print_ids(std::ostream& out, std::span<const Vertex> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  out << '\n';
}

int cmd_mu(const std::string& path, bool as_json, bool set_only, bool timings, std::ostream& out,
           std::ostream& err) {
  Graph g = read_graph(path);
  if (g.order() == 0) throw InputError("graph has no vertices");
  MuReport report = compute_mu(g, err);
  if (as_json) {
    out << result_document(g, report, timings).dump(2) << '\n';
  } else if (set_only) {
    print_ids(out, report.result.set.members());
  } else {
    out << "mu " << report.result.mu << '\n';
    out << "set ";
    print_ids(out, report.result.set.members());
    out << "shape " << to_string(report.result.shape) << '\n';
    if (timings) {
      const StageTimings& t = report.timings;
      out << std::fixed << std::setprecision(3) << "timings decompose_ms=" << t.decompose_ms
          << " orient_ms=" << t.orient_ms << " t_arrows_ms=" << t.t_arrows_ms
          << " algorithm_ms=" << t.algorithm_ms << '\n';
    }
  }
  return kExitOk;
}

int cmd_decompose(const std::string& path, bool tree, std::ostream& out, std::ostream& err) {
  Graph g = read_graph(path);
  if (g.order() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) {
    auto comp = largest_component(g);
    warn_disconnected(err, connected_components(g).size(),
                      "decomposing the largest component with vertices relabelled 0.." +
                          std::to_string(comp.size() - 1) + " in increasing order");
    g = induced_subgraph(g, comp);
  }
  DirectedDecomposition dd(canonical_decomposition(g));
  if (tree) {
    write_tree_dot(dd, out);
  } else {
    write_decomposition_dot(dd, out);
  }
  return kExitOk;
}

int cmd_check(const std::string& path, const std::vector<std::string>& words, std::ostream& out,
              std::ostream& err) {
  Graph g = read_graph(path);
  std::vector<Vertex> ids;
  for (const std::string& w : words) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size() || v < 0 || v >= g.order()) {
      err << "error: '" << w << "' is not a vertex of a graph on " << g.order() << " vertices\n";
      return kExitUsage;
    }
    ids.push_back(static_cast<Vertex>(v));
  }
  VertexSet x(ids);
  if (x.size() != ids.size()) {
    err << "error: vertex list contains duplicates\n";
    return kExitUsage;
  }
  auto labels = component_labels(g);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Vertex u = x.members()[i], v = x.members()[j];
      if (labels[u] != labels[v] || !pair_visible(g, x, u, v)) {
        out << "not a mutual-visibility set: " << u << " and " << v << " are not visible\n";
        return kExitCheckFailed;
      }
    }
  }
  out << "ok\n";
  return kExitOk;
}

int default_oracle_cap(std::ostream& err) {
  const char* env = std::getenv(kOracleCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultMuCap;
  try {
    std::size_t used = 0;
    int cap = std::stoi(env, &used);
    if (used == std::string(env).size() && cap >= 1) return cap;
  } catch (const std::exception&) {
  }
  err << "warning: ignoring " << kOracleCapEnv << "='" << env << "'\n";
  return kDefaultMuCap;
}

int cmd_oracle(const std::string& path, std::optional<int> cap_flag, int jobs, bool as_json,
               std::ostream& out, std::ostream& err) {
  Graph g = read_graph(path);
  if (g.order() == 0) throw InputError("graph has no vertices");
  const int cap = cap_flag ? *cap_flag : default_oracle_cap(err);
  if (g.order() > cap) {
    throw CapExceededError("graph has " + std::to_string(g.order()) +
                           " vertices, above the oracle cap of " + std::to_string(cap));
  }
  BruteForceResult best;
  auto comps = connected_components(g);
  if (comps.size() > 1) warn_disconnected(err, comps.size(), "reporting the best component");
  bool first = true;
  for (const auto& comp : comps) {
    BruteForceResult local = mu_bruteforce(induced_subgraph(g, comp), cap, jobs);
    if (!first && local.mu <= best.mu) continue;
    first = false;
    best.mu = local.mu;
    best.witness = VertexSet(relabel_back(comp, local.witness));
  }
  if (as_json) {
    json doc;
    doc["n"] = g.order();
    doc["m"] = g.size();
    doc["mu"] = best.mu;
    doc["witness"] = vertex_array(best.witness.members());
    out << doc.dump(2) << '\n';
  } else {
    out << "mu " << best.mu << '\n' << "witness ";
    print_ids(out, best.witness.members());
  }
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InputError("bad " + what + " '" + item + "'");
    values.push_back(v);
  }
  return values;
}

ExpansionWeights parse_weights(const std::string& text) {
  std::vector<double> w;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InputError("bad weight '" + item + "'");
    w.push_back(v);
  }
  if (w.size() != 3) throw InputError("--weights takes pendant,true-twin,false-twin");
  return {w[0], w[1], w[2]};
}

int cmd_gen(const std::vector<std::string>& spec, std::optional<int> n, std::uint64_t seed,
            const std::string& weights, std::ostream& out) {
  if (spec.empty()) throw InputError("gen needs a family name or 'random'");
  if (spec[0] == "random") {
    if (spec.size() > 1) throw InputError("random takes its size through --n");
    if (!n || *n < 1) throw InputError("random needs --n >= 1");
    ExpansionSpec es;
    es.seed = seed;
    es.n = *n;
    if (!weights.empty()) es.weights = parse_weights(weights);
    write_edge_list(random_dh(es), out);
    return kExitOk;
  }
  Family f = parse_family(spec[0]);
  std::vector<int> params;
  for (std::size_t i = 1; i < spec.size(); ++i) {
    auto one = parse_int_list(spec[i], "parameter");
    params.insert(params.end(), one.begin(), one.end());
  }
  write_edge_list(family(f, params), out);
  return kExitOk;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

int cmd_bench(const std::vector<std::string>& size_words, std::uint64_t seed, int runs,
              const std::string& weights, std::ostream& out) {
  if (runs < 1) throw InputError("--runs must be >= 1");
  std::vector<int> sizes;
  for (const std::string& w : size_words) {
    auto more = parse_int_list(w, "size");
    sizes.insert(sizes.end(), more.begin(), more.end());
  }
  ExpansionWeights ew = weights.empty() ? kSparseWeights : parse_weights(weights);
  out << std::left << std::setw(10) << "n" << std::setw(10) << "m" << std::setw(14) << "decompose_ms"
      << std::setw(12) << "orient_ms" << std::setw(13) << "t_arrows_ms" << std::setw(14)
      << "algorithm_ms" << std::setw(12) << "total_ms"
      << "ns_per_edge\n";
  out << std::fixed << std::setprecision(3);
  for (int n : sizes) {
    if (n < 3) throw InputError("bench sizes must be >= 3");
    Graph g = random_dh({seed, n, ew});
    std::vector<double> dec, ori, tar, alg, tot;
    for (int r = 0; r < runs; ++r) {
      StageTimings t;
      mu_set_timed(g, t);
      dec.push_back(t.decompose_ms);
      ori.push_back(t.orient_ms);
      tar.push_back(t.t_arrows_ms);
      alg.push_back(t.algorithm_ms);
      tot.push_back(t.total_ms());
    }
    const double total = median(tot);
    const double per_edge = total * 1e6 / std::max<std::size_t>(1, g.size());
    out << std::setw(10) << n << std::setw(10) << g.size() << std::setw(14) << median(dec)
        << std::setw(12) << median(ori) << std::setw(13) << median(tar) << std::setw(14)
        << median(alg) << std::setw(12) << total << per_edge << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutual-visibility sets of distance-hereditary graphs", "mutvis"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false, set_only = false, timings = false, tree = false, dot = false;
  std::vector<std::string> words;
  std::optional<int> cap;
  std::optional<int> n;
  int jobs = 1;
  int runs = 1;
  std::uint64_t seed = 1;
  std::string weights;

  auto* mu = app.add_subcommand("mu", "Compute mu(G) and a maximum mutual-visibility set");
  mu->add_option("file", path, "Edge-list file, '-' for standard input")->required();
  mu->add_flag("--json", as_json, "Print the full result document");
  mu->add_flag("--set-only", set_only, "Print only the set");
  mu->add_flag("--timings", timings, "Include per-stage wall times");

  auto* dec = app.add_subcommand("decompose", "Print the directed split decomposition as DOT");
  dec->add_option("file", path, "Edge-list file")->required();
  dec->add_flag("--dot", dot, "DOT output (the default)");
  dec->add_flag("--tree", tree, "Print the decomposition tree instead");

  auto* check = app.add_subcommand("check", "Test whether vertices form a mutual-visibility set");
  check->add_option("file", path, "Edge-list file")->required();
  check->add_option("vertices", words, "Vertex ids");

  auto* oracle = app.add_subcommand("oracle", "Brute-force mu(G) on any small graph");
  oracle->add_option("file", path, "Edge-list file")->required();
  oracle->add_option("--cap", cap, std::string("Largest accepted order (default from ") +
                                       kOracleCapEnv + " or " + std::to_string(kDefaultMuCap) + ")");
  oracle->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_flag("--json", as_json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen->add_option("spec", words, "Family and parameters, or 'random'")->required();
  gen->add_option("--n", n, "Order for 'random'");
  gen->add_option("--seed", seed, "Seed for 'random'");
  gen->add_option("--weights", weights, "pendant,true-twin,false-twin step weights");

  auto* bench = app.add_subcommand("bench", "Time the pipeline on random graphs");
  bench->add_option("--sizes", words, "Orders, comma or space separated");
  bench->add_option("--seed", seed, "Generator seed");
  bench->add_option("--runs", runs, "Runs per size; medians are reported");
  bench->add_option("--weights", weights, "pendant,true-twin,false-twin step weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mu) return cmd_mu(path, as_json, set_only, timings, out, err);
    if (*dec) return cmd_decompose(path, tree, out, err);
    if (*check) return cmd_check(path, words, out, err);
    if (*oracle) return cmd_oracle(path, cap, jobs, as_json, out, err);
    if (*gen) return cmd_gen(words, n, seed, weights, out);
    if (*bench) return cmd_bench(words, seed, runs, weights, out);
  } catch (const NotDistanceHereditaryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotDh;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace mutvis
