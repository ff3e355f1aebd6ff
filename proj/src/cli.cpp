#include "kec/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kec/bench.hpp"
#include "kec/extreme.hpp"
#include "kec/generate.hpp"
#include "kec/graph.hpp"
#include "kec/local_cut.hpp"
#include "kec/mincut.hpp"
#include "kec/partition.hpp"
#include "kec/strength.hpp"

namespace kec::cli {

namespace {

using nlohmann::json;

// Bad input file or parameters rejected by the library.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Verification failed; the report has already been written.
struct VerificationFailed {};

enum class Format { json, text };

struct Common {
  std::uint64_t seed = default_seed();
  Format format = Format::json;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--seed", common.seed, "Master seed (default KEC_SEED or 42)");
  sub->add_option("--format", common.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json},
                                                                         {"text", Format::text}}));
}

WeightedGraph read_graph(const std::string& path) {
  try {
    return load_graph_file(path);
  } catch (const GraphFormatError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

json to_json(const VertexSet& s) { return json(s.members()); }

json to_json(const Partition& p) {
  json parts = json::array();
  for (const VertexSet& part : p.parts) parts.push_back(to_json(part));
  return parts;
}

void write_text(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << '\n';
}

json trace_to_json(const PartitionTrace& trace) {
  json events = json::array();
  for (const TraceEvent& e : trace.events)
    events.push_back({{"kind", to_string(e.kind)},
                      {"depth", e.depth},
                      {"vertices", to_json(e.vertices)},
                      {"cut_value", e.cut_value}});
  json runs = json::array();
  for (const KCutRunStats& r : trace.runs) {
    json run{{"variant", r.variant == Variant::volume ? "volume" : "cardinality"},
             {"n", r.input_vertices},
             {"m", r.input_edges},
             {"sigma", r.sigma},
             {"trials", r.trials},
             {"half_threshold", r.half_threshold},
             {"localkcut_calls", r.local_kcut_calls},
             {"mincut_calls", r.mincut_calls},
             {"depth", r.depth},
             {"depth_bound", r.depth_bound()},
             {"within_call_budget", r.within_call_budget()},
             {"within_depth_bound", r.within_depth_bound()}};
    run["nu"] = r.nu ? json(*r.nu) : json(nullptr);
    runs.push_back(std::move(run));
  }
  return {{"events", std::move(events)},
          {"runs", std::move(runs)},
          {"mincut_calls", trace.mincut_calls},
          {"localkcut_calls", trace.local_kcut_calls},
          {"max_depth", trace.max_depth}};
}

Algorithm algorithm_option(const std::string& name) {
  const auto a = parse_algorithm(name);
  if (!a) throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
  return *a;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  for (char c : s) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

// partition

struct PartitionConfig {
  Common common;
  std::string path;
  Weight k = 1;
  std::string algo = "auto";
  double trials_constant = 2.0;
  std::optional<std::uint64_t> trials;
  bool verify = true;
  std::string trace_path;
};

void run_partition(const PartitionConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph(cfg.path);
  const Algorithm algorithm = algorithm_option(cfg.algo);
  PartitionOptions options;
  options.trials_constant = cfg.trials_constant;
  options.trials = cfg.trials;
  PartitionTrace trace;
  const Partition p = compute_partition(g, cfg.k, algorithm, SeedStream(cfg.common.seed), &trace, options);

  std::optional<VerifyReport> report;
  if (cfg.verify) report = verify_partition(g, p, cfg.k);

  if (!cfg.trace_path.empty()) {
    std::ofstream trace_out(cfg.trace_path);
    if (!trace_out) throw InputError("cannot write trace to '" + cfg.trace_path + "'");
    trace_out << trace_to_json(trace).dump(2) << '\n';
  }

  if (cfg.common.format == Format::json) {
    json doc{{"k", cfg.k}, {"algo", to_string(algorithm)}, {"parts", to_json(p)}};
    doc["verified"] = report ? json(report->ok()) : json(nullptr);
    if (report && !report->ok()) doc["verify_error"] = report->detail;
    out << doc.dump() << '\n';
  } else {
    out << "k " << cfg.k << ", algo " << to_string(algorithm) << ", " << p.parts.size() << " parts";
    if (report) out << ", verified " << (report->ok() ? "yes" : "no: " + report->detail);
    out << '\n';
    for (const VertexSet& part : p.parts) write_text(out, part);
  }
  if (report && !report->ok()) throw VerificationFailed{};
}

// strength

struct StrengthConfig {
  Common common;
  std::string path;
  double epsilon = 0.5;
  std::string algo = "auto";
  bool exact = false;
};

void run_strength(const StrengthConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph(cfg.path);
  const StrengthEstimates est =
      approx_strengths(g, cfg.epsilon, SeedStream(cfg.common.seed), algorithm_option(cfg.algo));
  std::vector<Weight> exact;
  if (cfg.exact) exact = exact_strengths(g);

  bool bracketed = true;
  if (cfg.common.format == Format::json) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      json row{{"u", g.edge(e).u},
               {"v", g.edge(e).v},
               {"w", g.edge(e).w},
               {"lower", est.edges[e].lower},
               {"upper", est.edges[e].upper}};
      if (cfg.exact) row["exact"] = exact[e];
      edges.push_back(std::move(row));
    }
    out << json{{"epsilon", cfg.epsilon}, {"edges", std::move(edges)}}.dump() << '\n';
  } else {
    out << "u v w lower upper" << (cfg.exact ? " exact" : "") << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << g.edge(e).w << ' ' << est.edges[e].lower << ' '
          << est.edges[e].upper;
      if (cfg.exact) out << ' ' << exact[e];
      out << '\n';
    }
  }
  if (cfg.exact)
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      bracketed = bracketed && est.edges[e].lower <= exact[e] && exact[e] < est.edges[e].upper;
  if (!bracketed) throw VerificationFailed{};
}

// local-cut

struct LocalCutConfig {
  Common common;
  std::string path;
  Vertex x = 0;
  Weight k = 1;
  std::optional<std::uint64_t> nu;
  std::optional<std::uint64_t> sigma;
  double trials_constant = 2.0;
  std::optional<std::uint64_t> trials;
  bool minimal = false;
};

void run_local_cut(const LocalCutConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph(cfg.path);
  if (cfg.x >= g.num_vertices()) throw InputError("--x is not a vertex of the graph");
  LocalCutQuery q;
  q.x = cfg.x;
  q.k = cfg.k;
  if (cfg.nu) {
    q.nu = *cfg.nu;
    q.sigma = *cfg.nu;
  } else {
    q.sigma = *cfg.sigma;
  }
  const std::uint64_t trials =
      cfg.trials ? *cfg.trials : default_trials(q.sigma, g.num_vertices(), cfg.trials_constant);
  const SeedStream stream(cfg.common.seed);

  std::optional<VertexSet> set;
  Weight cut = 0;
  std::size_t skipped = 0;
  if (cfg.minimal) {
    const MinimalExtremeResult r = minimal_extreme_set(g, q, stream, trials);
    set = r.set;
    skipped = r.skipped_over_cap;
    if (set) cut = cut_value(g, *set);
  } else {
    LocalCutOutcome outcome;
    if (q.nu) {
      outcome = local_kcut_volume(g, q, stream, trials);
    } else {
      std::vector<SortedAdjacency> structures = build_structures(g, stream, trials);
      outcome = local_kcut_cardinality(g, structures, q);
    }
    if (const auto* found = std::get_if<LocalCutFound>(&outcome)) {
      set = found->set;
      cut = found->cut_value;
    }
  }

  if (cfg.common.format == Format::json) {
    json doc{{"x", q.x}, {"k", q.k}, {"sigma", q.sigma}, {"trials", trials}};
    doc["nu"] = q.nu ? json(*q.nu) : json(nullptr);
    if (set) {
      doc["outcome"] = "found";
      doc["set"] = to_json(*set);
      doc["cut_value"] = cut;
    } else {
      doc["outcome"] = "none";
    }
    if (cfg.minimal) doc["skipped_over_cap"] = skipped;
    out << doc.dump() << '\n';
  } else if (set) {
    out << "found, cut " << cut << ":\n";
    write_text(out, *set);
  } else {
    out << "no extreme set\n";
  }
}

// mincut

struct MincutConfig {
  Common common;
  std::string path;
};

void run_mincut(const MincutConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph(cfg.path);
  if (g.num_vertices() < 2) throw InputError("mincut needs at least two vertices");
  const MincutResult r = global_mincut(g);
  if (cfg.common.format == Format::json) {
    out << json{{"value", r.lambda}, {"side", to_json(r.cut.side)}}.dump() << '\n';
  } else {
    out << r.lambda << '\n';
    write_text(out, r.cut.side);
  }
}

// generate

struct GenerateConfig {
  Common common;
  std::string kind;
  std::size_t n = 20;
  std::size_t m = 40;
  Weight max_weight = 10;
  std::size_t background = 20;
  std::size_t planted = 5;
  std::size_t path_length = 60;
  std::size_t clique = 4;
  std::string out_path;
};

void run_generate(const GenerateConfig& cfg, std::ostream& out) {
  GeneratedInstance instance;
  try {
    if (cfg.kind == "random-weighted") {
      instance.graph = random_weighted_graph(cfg.n, cfg.m, cfg.max_weight, cfg.common.seed);
    } else if (cfg.kind == "planted-extreme") {
      instance = planted_extreme(cfg.background, cfg.planted, cfg.common.seed);
    } else if (cfg.kind == "lollipop") {
      instance.graph = lollipop(cfg.path_length, cfg.clique);
    } else if (cfg.kind == "parallel-paths") {
      instance.graph = parallel_paths();
    } else if (cfg.kind == "two-triangles") {
      instance.graph = two_triangles();
    } else if (cfg.kind == "path") {
      instance.graph = path_graph(cfg.n);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::string doc = to_document(instance);
  if (cfg.out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw InputError("cannot write '" + cfg.out_path + "'");
  file << doc;
}

// bench

struct BenchConfig {
  Common common;
  std::string family = "path";
  std::string sizes = "50,100,200";
  Weight k = 2;
  std::string algos = "baseline,local-volume,local-cardinality";
  std::string csv_path;
  bool warmup = true;
};

void run_bench(const BenchConfig& cfg, std::ostream& out) {
  std::vector<std::size_t> sizes;
  for (const std::string& s : split_list(cfg.sizes)) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 2)
      throw CLI::ValidationError("--sizes", "expected a comma-separated list of sizes >= 2");
    sizes.push_back(v);
  }
  std::vector<Algorithm> algorithms;
  for (const std::string& name : split_list(cfg.algos)) algorithms.push_back(algorithm_option(name));

  std::vector<BenchInstance> instances;
  try {
    instances = bench_suite(cfg.family, sizes, cfg.k, cfg.common.seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const BenchReport report = bench(instances, algorithms, SeedStream(cfg.common.seed), cfg.warmup);

  if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path);
    if (!csv) throw InputError("cannot write '" + cfg.csv_path + "'");
    csv << to_csv(report);
  }
  if (cfg.common.format == Format::json) {
    // Wall times are left to the CSV so that this document is reproducible.
    json rows = json::array();
    for (const BenchRow& r : report.rows)
      rows.push_back({{"instance", r.instance},
                      {"n", r.n},
                      {"m", r.m},
                      {"k", r.k},
                      {"algo", to_string(r.algorithm)},
                      {"mincut_calls", r.mincut_calls},
                      {"localkcut_calls", r.local_kcut_calls},
                      {"kcut_runs", r.kcut_runs},
                      {"recursion_depth", r.recursion_depth},
                      {"call_budget_ok", r.call_budget_ok},
                      {"depth_bound_ok", r.depth_bound_ok},
                      {"verified", r.verified},
                      {"matches_baseline", r.matches_baseline},
                      {"parts", r.parts}});
    out << json{{"rows", std::move(rows)}, {"all_ok", report.all_ok()}}.dump() << '\n';
  } else {
    out << to_csv(report);
  }
  if (!report.all_ok()) throw VerificationFailed{};
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("KEC_SEED")) {
    const std::string_view s(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && !s.empty()) return v;
  }
  return kDefaultSeed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Maximal k-edge-connected partitions and edge strengths", "kec");
  app.require_subcommand(1);

  PartitionConfig partition;
  auto* p = app.add_subcommand("partition", "Maximal k-edge-connected partition");
  p->add_option("file", partition.path, "Edge-list file")->required();
  p->add_option("--k", partition.k, "Connectivity threshold")->required()->check(CLI::PositiveNumber);
  p->add_option("--algo", partition.algo, "baseline | local-volume | local-cardinality | auto");
  p->add_option("--trials-constant", partition.trials_constant, "Constant c in the trial count")
      ->check(CLI::PositiveNumber);
  p->add_option("--trials", partition.trials, "Fixed trial count per LocalKCut call")->check(CLI::PositiveNumber);
  p->add_flag("--verify,!--no-verify", partition.verify, "Verify the output (default on)");
  p->add_option("--trace", partition.trace_path, "Write the recursion trace as JSON");
  add_common(p, partition.common);

  StrengthConfig strength;
  auto* s = app.add_subcommand("strength", "Approximate edge strengths");
  s->add_option("file", strength.path, "Edge-list file")->required();
  s->add_option("--eps", strength.epsilon, "Approximation parameter")->required()->check(CLI::PositiveNumber);
  s->add_option("--algo", strength.algo, "Partition algorithm used per grid point");
  s->add_flag("--exact", strength.exact, "Also compute exact strengths and check the bounds");
  add_common(s, strength.common);

  LocalCutConfig local;
  auto* l = app.add_subcommand("local-cut", "Search for a small low-cut set around a vertex");
  l->add_option("file", local.path, "Edge-list file")->required();
  l->add_option("--x", local.x, "Seed vertex")->required();
  l->add_option("--k", local.k, "Cut threshold")->required()->check(CLI::PositiveNumber);
  auto* nu_opt = l->add_option("--nu", local.nu, "Volume bound (volume variant, sigma = nu)")
                     ->check(CLI::PositiveNumber);
  auto* sigma_opt = l->add_option("--sigma", local.sigma, "Vertex-count bound (cardinality variant)")
                        ->check(CLI::PositiveNumber);
  nu_opt->excludes(sigma_opt);
  l->add_option("--trials-constant", local.trials_constant, "Constant c in the trial count")
      ->check(CLI::PositiveNumber);
  l->add_option("--trials", local.trials, "Fixed trial count")->check(CLI::PositiveNumber);
  l->add_flag("--minimal", local.minimal, "Return the minimal extreme set instead");
  add_common(l, local.common);

  MincutConfig mincut;
  auto* mc = app.add_subcommand("mincut", "Global minimum cut");
  mc->add_option("file", mincut.path, "Edge-list file")->required();
  add_common(mc, mincut.common);

  GenerateConfig generate;
  auto* gen = app.add_subcommand("generate", "Write a generated instance as an edge list");
  gen->add_option("kind", generate.kind, "Instance family")
      ->required()
      ->check(CLI::IsMember({"random-weighted", "planted-extreme", "lollipop", "parallel-paths", "two-triangles",
                             "path"}));
  gen->add_option("--n", generate.n, "Vertices (random-weighted, path)");
  gen->add_option("--m", generate.m, "Edges (random-weighted)");
  gen->add_option("--max-weight", generate.max_weight, "Largest edge weight (random-weighted)");
  gen->add_option("--background", generate.background, "Background vertices (planted-extreme)");
  gen->add_option("--planted", generate.planted, "Planted set size (planted-extreme)");
  gen->add_option("--path", generate.path_length, "Path length (lollipop)");
  gen->add_option("--clique", generate.clique, "Clique size (lollipop)");
  gen->add_option("--out", generate.out_path, "Output file (default stdout)");
  add_common(gen, generate.common);

  BenchConfig bench_cfg;
  auto* b = app.add_subcommand("bench", "Compare the algorithms on a generated family");
  b->add_option("--family", bench_cfg.family, "path | random | lollipop | planted");
  b->add_option("--sizes", bench_cfg.sizes, "Comma-separated vertex counts");
  b->add_option("--k", bench_cfg.k, "Connectivity threshold")->check(CLI::PositiveNumber);
  b->add_option("--algos", bench_cfg.algos, "Comma-separated algorithms");
  b->add_option("--csv", bench_cfg.csv_path, "Write rows, with wall times, as CSV");
  b->add_flag("!--no-warmup", bench_cfg.warmup, "Skip the discarded warmup run");
  add_common(b, bench_cfg.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*p) run_partition(partition, out);
    else if (*s) run_strength(strength, out);
    else if (*l) {
      if (!local.nu && !local.sigma) {
        err << "local-cut: one of --nu or --sigma is required\n";
        return kExitUsage;
      }
      run_local_cut(local, out);
    } else if (*mc) run_mincut(mincut, out);
    else if (*gen) run_generate(generate, out);
    else if (*b) run_bench(bench_cfg, out);
  } catch (const VerificationFailed&) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitInput;
  } catch (const std::length_error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace kec::cli
