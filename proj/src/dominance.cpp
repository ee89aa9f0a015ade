#include "minpaths/dominance.hpp"

#include "minpaths/error.hpp"

namespace minpaths {

Dominance compare(std::span<const Wide> a, std::span<const Wide> b) {
  if (a.size() != b.size()) {
    throw DomainError("cannot compare weights of arity " +
                      std::to_string(a.size()) + " and " +
                      std::to_string(b.size()));
  }
  bool a_less = false;
  bool b_less = false;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] < b[c]) a_less = true;
    else if (b[c] < a[c]) b_less = true;
  }
  if (a_less && b_less) return Dominance::incomparable;
  if (a_less) return Dominance::first_dominates;
  if (b_less) return Dominance::second_dominates;
  return Dominance::equal;
}

Dominance compare(const PathWeight& a, const PathWeight& b) {
  return compare(a.components(), b.components());
}

bool weakly_dominates(const PathWeight& a, const PathWeight& b) {
  Dominance d = compare(a, b);
  return d == Dominance::first_dominates || d == Dominance::equal;
}

bool strictly_dominates(const PathWeight& a, const PathWeight& b) {
  return compare(a, b) == Dominance::first_dominates;
}

std::string_view to_string(Dominance relation) {
  switch (relation) {
    case Dominance::first_dominates: return "first-dominates";
    case Dominance::second_dominates: return "second-dominates";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
  }
  return "unknown";
}

}  // namespace minpaths
