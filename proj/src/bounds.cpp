#include "minpaths/bounds.hpp"

#include <stdexcept>

#include "minpaths/error.hpp"

namespace minpaths {

namespace {

void require_domain(std::uint32_t n, std::uint32_t k) {
  if (n < 2) throw DomainError("bounds need n >= 2, got " + std::to_string(n));
  if (k < 1) throw DomainError("bounds need k >= 1, got " + std::to_string(k));
}

template <typename F>
auto checked(F&& f) {
  try {
    return f();
  } catch (const std::overflow_error&) {
    throw OverflowError("bound exceeds the 1024-bit integer domain");
  } catch (const std::range_error&) {
    throw OverflowError("bound exceeds the 1024-bit integer domain");
  }
}

BoundInt power(std::uint32_t base, std::uint32_t exponent) {
  BoundInt result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

BoundInt simple_paths(std::uint32_t n, std::uint32_t k) {
  // Paths with l edges choose l-1 ordered intermediates from n-2 vertices
  // and one colour per edge.
  BoundInt total = 0;
  BoundInt colourings = 1;
  BoundInt arrangements = 1;
  for (std::uint32_t l = 1; l <= n - 1; ++l) {
    colourings *= k;
    if (l >= 2) arrangements *= (n - l);
    total += colourings * arrangements;
  }
  return total;
}

}  // namespace

BoundInt simple_path_bound(std::uint32_t n, std::uint32_t k) {
  require_domain(n, k);
  return checked([&] { return simple_paths(n, k); });
}

BoundSet compute_bounds(std::uint32_t n, std::uint32_t k) {
  require_domain(n, k);
  return checked([&] {
    BoundSet b;
    b.n = n;
    b.k = k;
    b.simple_path_max = simple_paths(n, k);
    b.incomparable_max = power(k, n - 1);
    b.total_minimal_max = BoundInt(k) * power(k + 1, n - 2);
    b.edge_max = BoundInt(k) * n * (n - 1);
    if (k == 2) b.red_edge_max = BoundInt(n) * n + 3 - BoundInt(3) * n;
    return b;
  });
}

ComplianceReport check_instance(const ColouredEdgeGraph& graph, VertexId source,
                                VertexId target) {
  ComplianceReport report;
  report.source = source;
  report.target = target;
  report.bounds = compute_bounds(graph.vertex_count(), graph.colour_count());
  report.observed = count_minimal(graph, source, target);
  report.single_edge_per_colour =
      !validate(graph).has(ViolationKind::duplicate_edge);
  return report;
}

std::string to_string(const BoundInt& value) { return value.str(); }

}  // namespace minpaths
