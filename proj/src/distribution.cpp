#include "minpaths/distribution.hpp"

#include <cmath>
#include <sstream>

#include "minpaths/error.hpp"

namespace minpaths {

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

WeightDistribution WeightDistribution::uniform(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw DomainError("uniform(lo, hi] needs 0 <= lo < hi");
  }
  return WeightDistribution(Kind::uniform, lo, hi);
}

WeightDistribution WeightDistribution::truncated_exponential(double rate,
                                                             double cap) {
  if (!(rate > 0.0) || !(cap > 0.0) || !std::isfinite(rate) || !std::isfinite(cap)) {
    throw DomainError("truncated exponential needs rate > 0 and cap > 0");
  }
  return WeightDistribution(Kind::truncated_exponential, rate, cap);
}

double WeightDistribution::density_bound() const noexcept {
  switch (kind_) {
    case Kind::uniform: return 1.0 / (b_ - a_);
    case Kind::truncated_exponential: return a_ / (-std::expm1(-a_ * b_));
  }
  return 0.0;
}

double WeightDistribution::support_max() const noexcept { return b_; }

double WeightDistribution::sample(Rng& rng) const {
  double u = uniform_unit(rng);
  switch (kind_) {
    case Kind::uniform:
      return a_ + (b_ - a_) * (1.0 - u);
    case Kind::truncated_exponential: {
      // Inverse CDF of the exponential restricted to (0, cap].
      double mass = -std::expm1(-a_ * b_);
      return -std::log1p(-(1.0 - u) * mass) / a_;
    }
  }
  return 0.0;
}

std::string WeightDistribution::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (kind_ == Kind::uniform) {
    out << "uniform(" << a_ << "," << b_ << "]";
  } else {
    out << "truncated-exponential(rate=" << a_ << ",cap=" << b_ << ")";
  }
  return out.str();
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32), 0x6d696e70u};
  return Rng(seq);
}

}  // namespace minpaths
