#include "minpaths/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "minpaths/bounds.hpp"
#include "minpaths/canonical.hpp"
#include "minpaths/error.hpp"
#include "minpaths/generators.hpp"
#include "minpaths/graph_io.hpp"
#include "minpaths/report.hpp"
#include "minpaths/stochastic.hpp"

namespace minpaths {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Output sink that is either the caller's stream ("-") or a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& standard) {
    if (path == "-") {
      stream_ = &standard;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

ColouredEdgeGraph load_graph(const std::string& path, std::istream& standard,
                             const FixedScale& scale) {
  if (path == "-") return read_graph(standard, scale);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open '" + path + "'");
  return read_graph(file, scale);
}

std::vector<Weight> parse_weight_list(const std::string& text,
                                      const FixedScale& scale) {
  std::vector<Weight> weights;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    try {
      weights.emplace_back(static_cast<std::int64_t>(scale.parse(item)));
    } catch (const std::invalid_argument& e) {
      throw DomainError(std::string("weight list: ") + e.what());
    }
  }
  return weights;
}

Weight parse_weight(const std::string& text, const FixedScale& scale) {
  try {
    return Weight(static_cast<std::int64_t>(scale.parse(text)));
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

Wide parse_units(const std::string& text, const FixedScale& scale) {
  try {
    return scale.parse(text);
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

// Graph-consuming commands reject hard model violations; unused colours are
// only reported.
void require_sound(const ColouredEdgeGraph& graph, std::ostream& err) {
  ValidationResult validation = validate(graph);
  for (const Violation& v : validation.violations) {
    if (v.kind == ViolationKind::colour_gap) {
      err << "warning: " << v.message << '\n';
    }
  }
  if (!validation.structurally_sound()) {
    for (const Violation& v : validation.violations) {
      if (v.kind != ViolationKind::colour_gap) {
        throw PreconditionError(v.message);
      }
    }
  }
}

struct DistOptions {
  std::string kind = "uniform";
  double lo = 0.0;
  double hi = 1.0;
  double rate = 1.0;
  double cap = 1.0;

  void attach(CLI::App* app) {
    app->add_option("--dist", kind, "Weight distribution")
        ->check(CLI::IsMember({"uniform", "exponential"}))
        ->capture_default_str();
    app->add_option("--lo", lo, "Uniform lower end (exclusive)")->capture_default_str();
    app->add_option("--hi", hi, "Uniform upper end")->capture_default_str();
    app->add_option("--rate", rate, "Exponential rate")->capture_default_str();
    app->add_option("--cap", cap, "Exponential truncation point")->capture_default_str();
  }

  WeightDistribution build() const {
    if (kind == "uniform") return WeightDistribution::uniform(lo, hi);
    return WeightDistribution::truncated_exponential(rate, cap);
  }
};

FrontierMode parse_mode(const std::string& mode) {
  return mode == "all-minimal" ? FrontierMode::all_minimal : FrontierMode::frontier;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Pareto-minimal paths in weighted coloured-edge graphs"};
  app.require_subcommand(1);

  std::optional<int> scale_digits;
  app.add_option("--scale-digits", scale_digits,
                 "Fractional digits of the fixed-point grid (default: "
                 "$MINPATHS_SCALE_DIGITS or 9)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph in the edge-list format");
  gen->require_subcommand(1);
  std::string gen_out = "-";
  std::uint32_t gen_n = 4;
  std::uint32_t gen_k = 2;

  auto* chain = gen->add_subcommand("chain", "Chain with k parallel edges per stage");
  std::string chain_rule = "doubling";
  std::string chain_value = "1";
  std::string chain_weights;
  chain->add_option("--n", gen_n, "Vertices")->required();
  chain->add_option("--k", gen_k, "Colours")->required();
  chain->add_option("--rule", chain_rule, "Stage weight rule")
      ->check(CLI::IsMember({"doubling", "constant", "explicit"}))
      ->capture_default_str();
  chain->add_option("--value", chain_value, "Weight for --rule constant")
      ->capture_default_str();
  chain->add_option("--weights", chain_weights,
                    "Comma-separated stage weights for --rule explicit");
  chain->add_option("-o,--output", gen_out, "Output path or -")->capture_default_str();

  auto* tight = gen->add_subcommand(
      "theorem2", "Three-colour forward-edge graph where every path is minimal");
  tight->add_option("--n", gen_n, "Vertices")->required();
  tight->add_option("-o,--output", gen_out, "Output path or -")->capture_default_str();

  auto* intro = gen->add_subcommand("intro", "Three- or four-vertex example topology");
  std::string intro_which = "three";
  std::string intro_weights;
  intro->add_option("--which", intro_which, "three or four")
      ->check(CLI::IsMember({"three", "four"}))
      ->capture_default_str();
  intro->add_option("--weights", intro_weights,
                    "Comma-separated weights, all colour-0 edges first")
      ->required();
  intro->add_option("-o,--output", gen_out, "Output path or -")->capture_default_str();

  auto* random = gen->add_subcommand("random", "Bernoulli-filled random graph");
  double random_density = 1.0;
  std::uint64_t random_seed = 0;
  DistOptions random_dist;
  random->add_option("--n", gen_n, "Vertices")->required();
  random->add_option("--k", gen_k, "Colours")->required();
  random->add_option("--density", random_density, "Slot fill probability")
      ->capture_default_str();
  random->add_option("--seed", random_seed, "RNG seed")->capture_default_str();
  random_dist.attach(random);
  random->add_option("-o,--output", gen_out, "Output path or -")->capture_default_str();

  auto* extremal = gen->add_subcommand(
      "extremal", "Search weights of the four-vertex example maximizing the frontier");
  std::uint64_t extremal_attempts = 2000;
  std::uint64_t extremal_seed = 0;
  extremal->add_option("--attempts", extremal_attempts, "Random restarts")
      ->capture_default_str();
  extremal->add_option("--seed", extremal_seed, "RNG seed")->capture_default_str();
  extremal->add_option("-o,--output", gen_out, "Output path or -")->capture_default_str();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Pareto-minimal paths as CSV");
  std::string input = "-";
  VertexId source = 0;
  VertexId dest = 0;
  std::string mode = "frontier";
  std::string method = "search";
  std::string witnesses_path;
  std::string enum_out = "-";
  std::uint64_t path_limit = kDefaultPathLimit;
  enumerate->add_option("input", input, "Graph file or -")->capture_default_str();
  enumerate->add_option("--source", source, "Source vertex")->required();
  enumerate->add_option("--dest", dest, "Destination vertex")->required();
  enumerate->add_option("--mode", mode, "frontier or all-minimal")
      ->check(CLI::IsMember({"frontier", "all-minimal"}))
      ->capture_default_str();
  enumerate->add_option("--method", method, "search or oracle")
      ->check(CLI::IsMember({"search", "oracle"}))
      ->capture_default_str();
  enumerate->add_option("--limit", path_limit, "Oracle simple-path guard")
      ->capture_default_str();
  enumerate->add_option("--witnesses", witnesses_path,
                        "Write witness paths as JSON lines to this path");
  enumerate->add_option("-o,--output", enum_out, "Output path or -")
      ->capture_default_str();

  // canonicalize
  auto* canon = app.add_subcommand("canonicalize", "Canonical completion of a graph");
  std::string canon_out = "-";
  int jobs = 0;
  canon->add_option("input", input, "Graph file or -")->capture_default_str();
  canon->add_option("-o,--output", canon_out, "Output path or -")->capture_default_str();
  canon->add_option("--jobs", jobs, "Worker threads (0: all)")->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, k)");
  std::uint32_t bounds_n = 2;
  std::uint32_t bounds_k = 1;
  std::string format = "text";
  bounds->add_option("--n", bounds_n, "Vertices")->required();
  bounds->add_option("--k", bounds_k, "Colours")->required();
  bounds->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "Compare minimal-path counts to bounds");
  check->add_option("input", input, "Graph file or -")->capture_default_str();
  check->add_option("--source", source, "Source vertex")->required();
  check->add_option("--dest", dest, "Destination vertex")->required();

  // experiment
  auto* experiment = app.add_subcommand(
      "experiment", "Monte Carlo expected-count experiment on bicoloured graphs");
  ExperimentConfig config;
  DistOptions experiment_dist;
  std::string experiment_out = "-";
  std::string summary_path;
  experiment->add_option("--n", config.n, "Vertices")->required();
  experiment->add_option("--trials", config.trials, "Trials")->capture_default_str();
  experiment->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  experiment->add_option("--focus", config.focus, "Focus colour (0 or 1)")
      ->capture_default_str();
  experiment->add_option("--jobs", jobs, "Worker threads (0: all)")
      ->capture_default_str();
  experiment_dist.attach(experiment);
  experiment->add_option("-o,--output", experiment_out, "Per-trial CSV path or -")
      ->capture_default_str();
  experiment->add_option("--summary", summary_path,
                         "JSON summary path (default: stderr)");

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "Gap-function table on an r-grid");
  ColourId focus = 0;
  std::string grid_text;
  std::size_t grid_points = 10;
  delta_cmd->add_option("input", input, "Graph file or -")->capture_default_str();
  delta_cmd->add_option("--source", source, "Source vertex")->required();
  delta_cmd->add_option("--dest", dest, "Destination vertex")->required();
  delta_cmd->add_option("--focus", focus, "Focus colour (0 or 1)")->capture_default_str();
  delta_cmd->add_option("--r-grid", grid_text, "Comma-separated r values");
  delta_cmd->add_option("--points", grid_points,
                        "Uniform grid size over [0, r_tot) when --r-grid is absent")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const FixedScale scale =
        scale_digits ? FixedScale(*scale_digits) : FixedScale::from_environment();

    if (gen->parsed()) {
      std::optional<ColouredEdgeGraph> graph;
      WriteOptions options;
      if (chain->parsed()) {
        ChainSpec spec;
        spec.n = gen_n;
        spec.k = gen_k;
        spec.scale = scale;
        if (chain_rule == "doubling") {
          spec.rule = ChainSpec::Rule::doubling;
        } else if (chain_rule == "constant") {
          spec.rule = ChainSpec::Rule::constant;
          spec.constant = parse_weight(chain_value, scale);
        } else {
          spec.rule = ChainSpec::Rule::explicit_list;
          spec.stage_weights = parse_weight_list(chain_weights, scale);
        }
        graph = gen_chain(spec);
      } else if (tight->parsed()) {
        graph = gen_theorem2_tight(gen_n, scale);
      } else if (intro->parsed()) {
        IntroExample which = intro_which == "three" ? IntroExample::three_vertex
                                                    : IntroExample::four_vertex;
        graph = gen_intro_example(which, parse_weight_list(intro_weights, scale), scale);
      } else if (random->parsed()) {
        graph = gen_random(gen_n, gen_k, random_density, random_dist.build(),
                           random_seed, scale);
      } else {
        ExtremalSearch found =
            search_four_vertex_extremal(extremal_attempts, extremal_seed);
        graph = gen_intro_example(IntroExample::four_vertex, found.best_weights);
        options.comments.push_back("distinct minimal weights 0->3: " +
                                   std::to_string(found.best_distinct) + " after " +
                                   std::to_string(found.attempts) + " attempts");
      }
      Sink sink(gen_out, io.out);
      write_graph(*sink, *graph, options);
      return kExitOk;
    }

    if (enumerate->parsed()) {
      ColouredEdgeGraph graph = load_graph(input, io.in, scale);
      require_sound(graph, io.err);
      ParetoFrontier frontier =
          method == "oracle"
              ? enumerate_oracle(graph, source, dest, parse_mode(mode),
                                 OracleOptions{path_limit})
              : enumerate_search(graph, source, dest, parse_mode(mode));
      Sink sink(enum_out, io.out);
      write_frontier_csv(*sink, graph, frontier);
      if (!witnesses_path.empty()) {
        Sink witnesses(witnesses_path, io.out);
        write_witnesses_jsonl(*witnesses, graph, frontier);
      }
      return kExitOk;
    }

    if (canon->parsed()) {
      ColouredEdgeGraph graph = load_graph(input, io.in, scale);
      CanonicalGraph result = canonicalize(graph, jobs);
      WriteOptions options;
      options.comments.push_back(
          "canonical completion; edges from line " +
          std::to_string(result.original_edge_count + 1) + " on (ids >= " +
          std::to_string(result.original_edge_count) + ") were added");
      Sink sink(canon_out, io.out);
      write_graph(*sink, result.graph, options);
      return kExitOk;
    }

    if (bounds->parsed()) {
      BoundSet b = compute_bounds(bounds_n, bounds_k);
      if (format == "csv") {
        write_bounds_csv(io.out, b);
      } else {
        write_bounds_text(io.out, b);
      }
      return kExitOk;
    }

    if (check->parsed()) {
      ColouredEdgeGraph graph = load_graph(input, io.in, scale);
      ComplianceReport report = check_instance(graph, source, dest);
      write_compliance_text(io.out, report);
      return report.violated() ? kExitBoundViolation : kExitOk;
    }

    if (experiment->parsed()) {
      config.dist = experiment_dist.build();
      config.scale = scale;
      ExperimentReport report = run_experiment(config, jobs);
      Sink sink(experiment_out, io.out);
      write_experiment_csv(*sink, report);
      std::string summary = experiment_summary(report).dump(2);
      if (summary_path.empty()) {
        io.err << summary << '\n';
      } else {
        Sink summary_sink(summary_path, io.out);
        *summary_sink << summary << '\n';
      }
      return report.passed() ? kExitOk : kExitBoundViolation;
    }

    if (delta_cmd->parsed()) {
      ColouredEdgeGraph graph = load_graph(input, io.in, scale);
      require_sound(graph, io.err);
      DeltaAnalyzer analyzer(graph, source, dest, focus);
      if (!analyzer.r_tot()) {
        throw PreconditionError("no pure colour-" + std::to_string(focus) +
                                " path between the endpoints");
      }
      std::vector<Wide> grid;
      if (!grid_text.empty()) {
        std::stringstream items(grid_text);
        std::string item;
        while (std::getline(items, item, ',')) grid.push_back(parse_units(item, scale));
      } else {
        grid = uniform_grid(*analyzer.r_tot(), grid_points);
      }
      write_delta_csv(io.out, graph, analyzer, grid);
      Lemma3Report lemma3 = check_lemma3(graph, source, dest, focus, grid);
      if (!lemma3.holds()) {
        io.err << "grid points without a witness edge: " << lemma3.counterexamples() << '\n';
        return kExitBoundViolation;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace minpaths
