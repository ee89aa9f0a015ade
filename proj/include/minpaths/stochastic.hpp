#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minpaths/bounds.hpp"
#include "minpaths/distribution.hpp"
#include "minpaths/enumeration.hpp"
#include "minpaths/graph.hpp"

namespace minpaths {

/// One-sided 99% standard normal quantile.
inline constexpr double kOneSided99 = 2.3263478740408408;

/// Gap functions of a bicoloured graph for a fixed (source, target) and a
/// focus colour, computed from an exhaustive table of the simple paths.
///
/// With F the focus colour and G the other colour:
///   delta_e(e, r): among paths avoiding e whose F-weight is <= r take the
///     least G-weight g_r; return the least F-weight of a path through e
///     whose G-weight is < g_r, or nullopt (infinity) if there is none.
///   delta(r): least F-weight > r on the Pareto frontier, 0 <= r < r_tot.
class DeltaAnalyzer {
 public:
  /// Requires k = 2 and a pure other-colour path source -> target
  /// (PreconditionError otherwise).
  DeltaAnalyzer(const ColouredEdgeGraph& graph, VertexId source, VertexId target,
                ColourId focus = 0, std::uint64_t path_limit = kDefaultPathLimit);

  ColourId focus() const noexcept { return focus_; }
  ColourId other() const noexcept { return 1 - focus_; }

  /// Least focus-colour weight of a pure focus-colour path, if any.
  std::optional<Wide> r_tot() const noexcept { return r_tot_; }

  /// Edge must have the focus colour and r >= 0 (DomainError).
  std::optional<Wide> delta_e(EdgeId edge, Wide r) const;
  /// Requires a pure focus path (PreconditionError) and 0 <= r < r_tot
  /// (DomainError).
  Wide delta(Wide r) const;

  /// Focus-colour edge ids in increasing order.
  const std::vector<EdgeId>& focus_edges() const noexcept { return focus_edges_; }
  /// Distinct minimal (focus, other) weights, by increasing focus weight.
  const std::vector<std::pair<Wide, Wide>>& frontier() const noexcept { return frontier_; }

 private:
  struct Row {
    Wide focus;
    Wide other;
    std::vector<EdgeId> edges;  // sorted
  };

  const ColouredEdgeGraph* graph_;
  ColourId focus_;
  std::vector<Row> rows_;
  std::vector<EdgeId> focus_edges_;
  std::vector<std::pair<Wide, Wide>> frontier_;
  std::optional<Wide> r_tot_;
};

struct DeltaQuery {
  const ColouredEdgeGraph& graph;
  VertexId source = 0;
  VertexId target = 0;
  ColourId focus = 0;
  Wide r = 0;
  std::optional<EdgeId> edge;
};

/// nullopt stands for infinity. Requires `query.edge`.
std::optional<Wide> delta_e(const DeltaQuery& query);
Wide delta(const DeltaQuery& query);

/// r_tot * i / points for i = 0 .. points-1 (integer units).
std::vector<Wide> uniform_grid(Wide r_tot, std::size_t points);

struct Lemma3Point {
  Wide r = 0;
  Wide delta = 0;
  /// Smallest focus edge id with delta_e(r) == delta(r).
  std::optional<EdgeId> witness;
  /// Minimum of delta_e(r) over focus edges (nullopt: all infinite).
  std::optional<Wide> min_delta_e;
};

struct Lemma3Report {
  std::vector<Lemma3Point> points;

  std::size_t counterexamples() const;
  bool holds() const { return counterexamples() == 0; }
};

Lemma3Report check_lemma3(const ColouredEdgeGraph& graph, VertexId source,
                          VertexId target, ColourId focus,
                          std::span<const Wide> grid);

struct Lemma2Config {
  VertexId source = 0;
  VertexId target = 1;
  ColourId focus = 0;
  /// Focus-colour edge whose weight is redrawn every trial.
  EdgeId edge = 0;
  Wide r = 0;
  Wide epsilon = 0;
  WeightDistribution dist = WeightDistribution::uniform(0.0, 1.0);
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  /// Width of the one-sided confidence margin in standard deviations.
  double z = kOneSided99;
};

struct Lemma2Report {
  std::uint64_t trials = 0;
  /// Trials with delta_e(r) finite.
  std::uint64_t finite = 0;
  /// Trials with r < delta_e(r) <= r + epsilon (finite only).
  std::uint64_t events = 0;
  /// events / trials.
  double frequency = 0.0;
  /// phi_e * epsilon.
  double bound = 0.0;
  double margin = 0.0;

  bool holds() const { return frequency <= bound + margin; }
  friend bool operator==(const Lemma2Report&, const Lemma2Report&) = default;
};

/// Trials run in parallel; `jobs` <= 0 uses the runtime default.
Lemma2Report check_lemma2(const ColouredEdgeGraph& graph,
                          const Lemma2Config& config, int jobs = 0);
/// Serial reference for check_lemma2.
Lemma2Report check_lemma2_serial(const ColouredEdgeGraph& graph,
                                 const Lemma2Config& config);

struct ExperimentConfig {
  std::uint32_t n = 4;
  WeightDistribution dist = WeightDistribution::uniform(0.0, 1.0);
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  ColourId focus = 0;
  double z = kOneSided99;
  FixedScale scale;
};

struct TrialResult {
  std::uint64_t trial = 0;
  std::uint64_t distinct_minimal = 0;
  Wide r_tot = 0;
  double sum_phi = 0.0;
  /// sum_phi * r_tot + 1
  double bound = 0.0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialResult> trials;

  double mean_count = 0.0;
  double mean_bound = 0.0;
  std::uint64_t max_count = 0;
  /// k^(n-1) with k = 2.
  BoundInt hard_cap;
  std::uint64_t cap_violations = 0;
  /// z * sd(count - bound) / sqrt(trials)
  double margin = 0.0;
  /// mean_count - mean_bound <= margin
  bool mean_within_bound = false;
  /// Bound with r_tot replaced by its largest possible value (the support
  /// maximum of one direct edge); reported, never asserted.
  double alternative_bound = 0.0;
  bool mean_within_alternative = false;

  bool passed() const { return mean_within_bound && cap_violations == 0; }
};

/// Full bicoloured graphs on n vertices, distinct minimal weights from
/// vertex 0 to vertex n-1. Trials run in parallel, each on its own stream
/// derived from (seed, trial); the result does not depend on `jobs`.
ExperimentReport run_experiment(const ExperimentConfig& config, int jobs = 0);
/// Serial reference for run_experiment.
ExperimentReport run_experiment_serial(const ExperimentConfig& config);

}  // namespace minpaths
