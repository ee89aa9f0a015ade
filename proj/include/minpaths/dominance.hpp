#pragma once

#include <span>
#include <string_view>

#include "minpaths/graph.hpp"

namespace minpaths {

enum class Dominance {
  first_dominates,
  second_dominates,
  equal,
  incomparable,
};

/// Product partial order on k-tuples. Throws DomainError on arity mismatch.
Dominance compare(std::span<const Wide> a, std::span<const Wide> b);
Dominance compare(const PathWeight& a, const PathWeight& b);

/// a <= b componentwise.
bool weakly_dominates(const PathWeight& a, const PathWeight& b);
/// a <= b componentwise and a != b.
bool strictly_dominates(const PathWeight& a, const PathWeight& b);

std::string_view to_string(Dominance relation);

}  // namespace minpaths
