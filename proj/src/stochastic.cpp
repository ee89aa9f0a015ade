#include "minpaths/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "minpaths/error.hpp"
#include "minpaths/generators.hpp"
#include "minpaths/shortest.hpp"

namespace minpaths {

namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(minpaths_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

DeltaAnalyzer::DeltaAnalyzer(const ColouredEdgeGraph& graph, VertexId source,
                             VertexId target, ColourId focus,
                             std::uint64_t path_limit)
    : graph_(&graph), focus_(focus) {
  if (graph.colour_count() != 2) {
    throw PreconditionError("gap functions need a bicoloured graph, got k=" +
                            std::to_string(graph.colour_count()));
  }
  if (focus > 1) throw DomainError("focus colour must be 0 or 1");
  if (source == target) throw DomainError("source and target must differ");
  if (!colour_distances(graph, other(), source).at(target)) {
    throw PreconditionError("no pure colour-" + std::to_string(other()) +
                            " path from " + std::to_string(source) + " to " +
                            std::to_string(target));
  }
  for (const Edge& e : graph.edges()) {
    if (!e.weight.positive()) {
      throw PreconditionError("edge " + std::to_string(e.id) +
                              " has non-positive weight");
    }
    if (e.colour == focus_) focus_edges_.push_back(e.id);
  }

  for_each_simple_path(
      graph, source, target,
      [&](const Path& p) {
        PathWeight w = path_weight(graph, p);
        std::vector<EdgeId> edges = p.edges;
        std::sort(edges.begin(), edges.end());
        rows_.push_back(Row{w[focus_], w[other()], std::move(edges)});
      },
      path_limit);

  for (const Row& row : rows_) {
    if (row.other == 0 && (!r_tot_ || row.focus < *r_tot_)) r_tot_ = row.focus;
  }

  std::vector<std::pair<Wide, Wide>> points;
  points.reserve(rows_.size());
  for (const Row& row : rows_) points.emplace_back(row.focus, row.other);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Sorted by focus then other: a point is minimal iff its other-weight is
  // below every earlier point's.
  for (const auto& point : points) {
    if (frontier_.empty() || point.second < frontier_.back().second) {
      frontier_.push_back(point);
    }
  }
}

std::optional<Wide> DeltaAnalyzer::delta_e(EdgeId edge, Wide r) const {
  if (graph_->edge(edge).colour != focus_) {
    throw DomainError("edge " + std::to_string(edge) +
                      " does not have the focus colour");
  }
  if (r < 0) throw DomainError("r must be non-negative");
  auto contains = [edge](const Row& row) {
    return std::binary_search(row.edges.begin(), row.edges.end(), edge);
  };
  std::optional<Wide> g_r;
  for (const Row& row : rows_) {
    if (!contains(row) && row.focus <= r && (!g_r || row.other < *g_r)) {
      g_r = row.other;
    }
  }
  // The pure other-colour path avoids e and has focus weight 0.
  std::optional<Wide> best;
  for (const Row& row : rows_) {
    if (contains(row) && row.other < *g_r && (!best || row.focus < *best)) {
      best = row.focus;
    }
  }
  return best;
}

Wide DeltaAnalyzer::delta(Wide r) const {
  if (!r_tot_) {
    throw PreconditionError("no pure colour-" + std::to_string(focus_) +
                            " path between the endpoints");
  }
  if (r < 0 || r >= *r_tot_) {
    throw DomainError("delta needs 0 <= r < r_tot");
  }
  for (const auto& [focus_weight, other_weight] : frontier_) {
    if (focus_weight > r) return focus_weight;
  }
  // Unreachable: the pure focus path lies on the frontier with weight r_tot.
  return *r_tot_;
}

std::optional<Wide> delta_e(const DeltaQuery& query) {
  if (!query.edge) throw DomainError("delta_e needs an edge");
  DeltaAnalyzer analyzer(query.graph, query.source, query.target, query.focus);
  return analyzer.delta_e(*query.edge, query.r);
}

Wide delta(const DeltaQuery& query) {
  DeltaAnalyzer analyzer(query.graph, query.source, query.target, query.focus);
  return analyzer.delta(query.r);
}

std::vector<Wide> uniform_grid(Wide r_tot, std::size_t points) {
  std::vector<Wide> grid;
  grid.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid.push_back(r_tot * static_cast<Wide>(i) / static_cast<Wide>(points));
  }
  return grid;
}

std::size_t Lemma3Report::counterexamples() const {
  return static_cast<std::size_t>(std::count_if(
      points.begin(), points.end(),
      [](const Lemma3Point& p) { return !p.witness.has_value(); }));
}

Lemma3Report check_lemma3(const ColouredEdgeGraph& graph, VertexId source,
                          VertexId target, ColourId focus,
                          std::span<const Wide> grid) {
  DeltaAnalyzer analyzer(graph, source, target, focus);
  Lemma3Report report;
  for (Wide r : grid) {
    Lemma3Point point;
    point.r = r;
    point.delta = analyzer.delta(r);
    for (EdgeId e : analyzer.focus_edges()) {
      std::optional<Wide> value = analyzer.delta_e(e, r);
      if (!value) continue;
      if (!point.min_delta_e || *value < *point.min_delta_e) point.min_delta_e = value;
      if (*value == point.delta && !point.witness) point.witness = e;
    }
    report.points.push_back(point);
  }
  return report;
}

namespace {

void check_lemma2_config(const ColouredEdgeGraph& graph, const Lemma2Config& config) {
  if (config.trials == 0) throw DomainError("probability check needs trials >= 1");
  if (config.epsilon <= 0) throw DomainError("epsilon must be positive");
  if (config.r < 0) throw DomainError("r must be non-negative");
  if (graph.edge(config.edge).colour != config.focus) {
    throw DomainError("redrawn edge must have the focus colour");
  }
}

// 1 = event, 0 = finite non-event, -1 = infinite.
int lemma2_trial(const ColouredEdgeGraph& graph, const Lemma2Config& config,
                 std::uint64_t trial) {
  Rng rng = trial_rng(config.seed, trial);
  Wide units = std::max<Wide>(1, graph.scale().quantize(config.dist.sample(rng)));
  ColouredEdgeGraph drawn =
      graph.with_weight(config.edge, Weight(static_cast<std::int64_t>(units)));
  DeltaAnalyzer analyzer(drawn, config.source, config.target, config.focus);
  std::optional<Wide> value = analyzer.delta_e(config.edge, config.r);
  if (!value) return -1;
  return (*value > config.r && *value <= config.r + config.epsilon) ? 1 : 0;
}

Lemma2Report summarize_lemma2(const ColouredEdgeGraph& graph,
                              const Lemma2Config& config,
                              const std::vector<int>& outcomes) {
  Lemma2Report report;
  report.trials = outcomes.size();
  for (int o : outcomes) {
    if (o >= 0) ++report.finite;
    if (o == 1) ++report.events;
  }
  report.frequency =
      static_cast<double>(report.events) / static_cast<double>(report.trials);
  report.bound = config.dist.density_bound() *
                 graph.scale().to_real(config.epsilon);
  double p = std::clamp(report.bound, 0.0, 1.0);
  report.margin =
      config.z * std::sqrt(p * (1.0 - p) / static_cast<double>(report.trials));
  return report;
}

}  // namespace

Lemma2Report check_lemma2(const ColouredEdgeGraph& graph,
                          const Lemma2Config& config, int jobs) {
  check_lemma2_config(graph, config);
  // Validate preconditions once before fanning out.
  DeltaAnalyzer probe(graph, config.source, config.target, config.focus);
  std::vector<int> outcomes(config.trials);
  FirstError errors;
  const auto trials = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(static)
  for (std::int64_t t = 0; t < trials; ++t) {
    errors.run([&] {
      outcomes[static_cast<std::size_t>(t)] =
          lemma2_trial(graph, config, static_cast<std::uint64_t>(t));
    });
  }
  errors.rethrow();
  return summarize_lemma2(graph, config, outcomes);
}

Lemma2Report check_lemma2_serial(const ColouredEdgeGraph& graph,
                                 const Lemma2Config& config) {
  check_lemma2_config(graph, config);
  DeltaAnalyzer probe(graph, config.source, config.target, config.focus);
  std::vector<int> outcomes(config.trials);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    outcomes[t] = lemma2_trial(graph, config, t);
  }
  return summarize_lemma2(graph, config, outcomes);
}

namespace {

void check_experiment_config(const ExperimentConfig& config) {
  if (config.n < 2) throw DomainError("experiment needs n >= 2");
  if (config.trials == 0) throw DomainError("experiment needs trials >= 1");
  if (config.focus > 1) throw DomainError("focus colour must be 0 or 1");
}

TrialResult experiment_trial(const ExperimentConfig& config, std::uint64_t trial) {
  constexpr std::uint32_t k = 2;
  Rng rng = trial_rng(config.seed, trial);
  ColouredEdgeGraph graph = gen_random(config.n, k, 1.0, config.dist, rng, config.scale);
  const VertexId source = 0;
  const VertexId target = config.n - 1;

  TrialResult result;
  result.trial = trial;
  result.distinct_minimal =
      enumerate_search(graph, source, target, FrontierMode::frontier)
          .distinct_weights();
  result.r_tot = *colour_distances(graph, config.focus, source).at(target);
  std::size_t focus_edges = 0;
  for (const Edge& e : graph.edges()) focus_edges += e.colour == config.focus;
  result.sum_phi = static_cast<double>(focus_edges) * config.dist.density_bound();
  result.bound = result.sum_phi * config.scale.to_real(result.r_tot) + 1.0;
  return result;
}

ExperimentReport summarize_experiment(const ExperimentConfig& config,
                                      std::vector<TrialResult> trials) {
  ExperimentReport report;
  report.config = config;
  report.hard_cap = compute_bounds(config.n, 2).incomparable_max;
  const double count = static_cast<double>(trials.size());
  double sum_count = 0.0;
  double sum_bound = 0.0;
  double sum_phi = 0.0;
  for (const TrialResult& t : trials) {
    sum_count += static_cast<double>(t.distinct_minimal);
    sum_bound += t.bound;
    sum_phi += t.sum_phi;
    report.max_count = std::max(report.max_count, t.distinct_minimal);
    if (t.distinct_minimal > report.hard_cap) ++report.cap_violations;
  }
  report.mean_count = sum_count / count;
  report.mean_bound = sum_bound / count;
  const double mean_diff = report.mean_count - report.mean_bound;
  double square_sum = 0.0;
  for (const TrialResult& t : trials) {
    double d = static_cast<double>(t.distinct_minimal) - t.bound - mean_diff;
    square_sum += d * d;
  }
  const double sd = trials.size() > 1 ? std::sqrt(square_sum / (count - 1.0)) : 0.0;
  report.margin = config.z * sd / std::sqrt(count);
  report.mean_within_bound = mean_diff <= report.margin;
  report.alternative_bound = (sum_phi / count) * config.dist.support_max() + 1.0;
  report.mean_within_alternative = report.mean_count <= report.alternative_bound;
  report.trials = std::move(trials);
  return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, int jobs) {
  check_experiment_config(config);
  std::vector<TrialResult> trials(config.trials);
  FirstError errors;
  const auto count = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(dynamic, 8)
  for (std::int64_t t = 0; t < count; ++t) {
    errors.run([&] {
      trials[static_cast<std::size_t>(t)] =
          experiment_trial(config, static_cast<std::uint64_t>(t));
    });
  }
  errors.rethrow();
  return summarize_experiment(config, std::move(trials));
}

ExperimentReport run_experiment_serial(const ExperimentConfig& config) {
  check_experiment_config(config);
  std::vector<TrialResult> trials;
  trials.reserve(config.trials);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    trials.push_back(experiment_trial(config, t));
  }
  return summarize_experiment(config, std::move(trials));
}

}  // namespace minpaths
