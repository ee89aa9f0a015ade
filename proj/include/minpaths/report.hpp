#pragma once

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "minpaths/bounds.hpp"
#include "minpaths/canonical.hpp"
#include "minpaths/enumeration.hpp"
#include "minpaths/stochastic.hpp"

namespace minpaths {

/// All CSV outputs start with this line.
inline constexpr const char* kSchemaLine = "# schema=1";

/// One row per frontier entry: weight components (w0..w{k-1}, decimals at
/// the graph's scale) and the witness count.
void write_frontier_csv(std::ostream& out, const ColouredEdgeGraph& graph,
                        const ParetoFrontier& frontier);

/// One JSON object per witness path: {"weight": [...], "edges": [...]}.
void write_witnesses_jsonl(std::ostream& out, const ColouredEdgeGraph& graph,
                           const ParetoFrontier& frontier);

void write_bounds_text(std::ostream& out, const BoundSet& bounds);
void write_bounds_csv(std::ostream& out, const BoundSet& bounds);

void write_compliance_text(std::ostream& out, const ComplianceReport& report);

/// trial,count,r_tot,bound_value
void write_experiment_csv(std::ostream& out, const ExperimentReport& report);
nlohmann::json experiment_summary(const ExperimentReport& report);

/// r,delta,witness,min_delta_e,e<id>... ("inf" for infinite values).
void write_delta_csv(std::ostream& out, const ColouredEdgeGraph& graph,
                     const DeltaAnalyzer& analyzer, std::span<const Wide> grid);

}  // namespace minpaths
