#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace minpaths {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw. Independent of
/// the standard library's distribution implementations, so streams are
/// reproducible across toolchains.
double uniform_unit(Rng& rng);

/// Bounded-density random weight model on (0, inf).
class WeightDistribution {
 public:
  enum class Kind { uniform, truncated_exponential };

  /// Uniform on (lo, hi]; requires 0 <= lo < hi.
  static WeightDistribution uniform(double lo, double hi);
  /// Exponential with `rate`, truncated to (0, cap]; requires rate, cap > 0.
  static WeightDistribution truncated_exponential(double rate, double cap);

  Kind kind() const noexcept { return kind_; }
  /// Upper bound on the density.
  double density_bound() const noexcept;
  /// Largest value in the support.
  double support_max() const noexcept;
  double sample(Rng& rng) const;
  std::string describe() const;

  double lo() const noexcept { return a_; }
  double hi() const noexcept { return b_; }
  double rate() const noexcept { return a_; }
  double cap() const noexcept { return b_; }

 private:
  WeightDistribution(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  double a_;
  double b_;
};

/// Independent stream for one trial of a seeded experiment.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace minpaths
