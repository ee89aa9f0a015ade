#include "minpaths/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace minpaths {

namespace {

std::string fixed(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(9) << value;
  return out.str();
}

}  // namespace

void write_frontier_csv(std::ostream& out, const ColouredEdgeGraph& graph,
                        const ParetoFrontier& frontier) {
  out << kSchemaLine << '\n';
  for (ColourId c = 0; c < graph.colour_count(); ++c) out << 'w' << c << ',';
  out << "witnesses\n";
  for (const FrontierEntry& entry : frontier.entries) {
    for (Wide component : entry.weight.components()) {
      out << graph.scale().format(component) << ',';
    }
    out << entry.witnesses.size() << '\n';
  }
}

void write_witnesses_jsonl(std::ostream& out, const ColouredEdgeGraph& graph,
                           const ParetoFrontier& frontier) {
  for (const FrontierEntry& entry : frontier.entries) {
    nlohmann::json weight = nlohmann::json::array();
    for (Wide component : entry.weight.components()) {
      weight.push_back(graph.scale().format(component));
    }
    for (const Path& path : entry.witnesses) {
      nlohmann::json line{{"source", path.source},
                          {"target", path.target},
                          {"weight", weight},
                          {"edges", path.edges}};
      out << line.dump() << '\n';
    }
  }
}

void write_bounds_text(std::ostream& out, const BoundSet& b) {
  auto row = [&](const char* name, const std::string& value) {
    out << std::left << std::setw(20) << name << value << '\n';
  };
  row("n", std::to_string(b.n));
  row("k", std::to_string(b.k));
  row("simple_path_max", to_string(b.simple_path_max));
  row("incomparable_max", to_string(b.incomparable_max));
  row("total_minimal_max", to_string(b.total_minimal_max));
  row("edge_max", to_string(b.edge_max));
  if (b.red_edge_max) row("red_edge_max", to_string(*b.red_edge_max));
}

void write_bounds_csv(std::ostream& out, const BoundSet& b) {
  out << kSchemaLine << '\n'
      << "n,k,simple_path_max,incomparable_max,total_minimal_max,edge_max,"
         "red_edge_max\n"
      << b.n << ',' << b.k << ',' << to_string(b.simple_path_max) << ','
      << to_string(b.incomparable_max) << ',' << to_string(b.total_minimal_max)
      << ',' << to_string(b.edge_max) << ','
      << (b.red_edge_max ? to_string(*b.red_edge_max) : std::string()) << '\n';
}

void write_compliance_text(std::ostream& out, const ComplianceReport& r) {
  auto status = [](bool ok, bool tight) {
    return std::string(ok ? (tight ? "ok (tight)" : "ok") : "VIOLATED");
  };
  out << "source " << r.source << " target " << r.target << '\n';
  out << "distinct_minimal_weights " << r.observed.distinct_weights
      << " <= incomparable_max " << to_string(r.bounds.incomparable_max) << "  "
      << status(r.incomparable_ok(), r.incomparable_tight()) << '\n';
  out << "total_minimal_paths " << r.observed.total_minimal_paths
      << " <= total_minimal_max " << to_string(r.bounds.total_minimal_max) << "  ";
  if (r.single_edge_per_colour) {
    out << status(r.total_ok(), r.total_tight()) << '\n';
  } else {
    out << (r.total_ok() ? "ok" : "exceeded")
        << " (not asserted: parallel same-colour edges)\n";
  }
}

void write_experiment_csv(std::ostream& out, const ExperimentReport& report) {
  const FixedScale& scale = report.config.scale;
  out << kSchemaLine << '\n' << "trial,count,r_tot,bound_value\n";
  for (const TrialResult& t : report.trials) {
    out << t.trial << ',' << t.distinct_minimal << ',' << scale.format(t.r_tot)
        << ',' << fixed(t.bound) << '\n';
  }
}

nlohmann::json experiment_summary(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  return nlohmann::json{
      {"n", c.n},
      {"k", 2},
      {"focus", c.focus},
      {"distribution", c.dist.describe()},
      {"density_bound", c.dist.density_bound()},
      {"trials", c.trials},
      {"seed", c.seed},
      {"mean_count", report.mean_count},
      {"mean_bound", report.mean_bound},
      {"max_count", report.max_count},
      {"hard_cap", to_string(report.hard_cap)},
      {"cap_violations", report.cap_violations},
      {"margin", report.margin},
      {"mean_within_bound", report.mean_within_bound},
      {"alternative_bound", report.alternative_bound},
      {"mean_within_alternative", report.mean_within_alternative},
      {"passed", report.passed()},
  };
}

void write_delta_csv(std::ostream& out, const ColouredEdgeGraph& graph,
                     const DeltaAnalyzer& analyzer, std::span<const Wide> grid) {
  const FixedScale& scale = graph.scale();
  auto value = [&](const std::optional<Wide>& v) {
    return v ? scale.format(*v) : std::string("inf");
  };
  out << kSchemaLine << '\n' << "r,delta,witness,min_delta_e";
  for (EdgeId e : analyzer.focus_edges()) out << ",e" << e;
  out << '\n';
  for (Wide r : grid) {
    Wide d = analyzer.delta(r);
    std::optional<EdgeId> witness;
    std::optional<Wide> lowest;
    std::ostringstream cells;
    for (EdgeId e : analyzer.focus_edges()) {
      std::optional<Wide> de = analyzer.delta_e(e, r);
      if (de && (!lowest || *de < *lowest)) lowest = de;
      if (de && *de == d && !witness) witness = e;
      cells << ',' << value(de);
    }
    out << scale.format(r) << ',' << scale.format(d) << ','
        << (witness ? std::to_string(*witness) : std::string("none")) << ','
        << value(lowest) << cells.str() << '\n';
  }
}

}  // namespace minpaths
