#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace minpaths {

/// Accumulator type for sums of edge weights. Edge weights are 64-bit, so a
/// sum over any simple path fits comfortably.
using Wide = __int128;

/// Edge weight in fixed-point units. The number of units per 1.0 is given by
/// a FixedScale; the weight itself is scale-agnostic.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::int64_t units) : units_(units) {}

  constexpr std::int64_t units() const noexcept { return units_; }
  constexpr bool positive() const noexcept { return units_ > 0; }

  friend constexpr auto operator<=>(Weight, Weight) = default;

 private:
  std::int64_t units_ = 0;
};

inline constexpr int kDefaultScaleDigits = 9;
inline constexpr int kMaxScaleDigits = 9;

/// Decimal fixed-point grid with `digits` fractional digits.
class FixedScale {
 public:
  constexpr FixedScale() = default;
  explicit FixedScale(int digits);

  /// Scale from the MINPATHS_SCALE_DIGITS environment variable, or the
  /// default 9 digits when unset.
  static FixedScale from_environment();

  int digits() const noexcept { return digits_; }
  std::int64_t units_per_one() const noexcept { return unit_; }

  /// Parses a non-negative decimal such as "3", "0.25" or "12.000000001".
  /// Throws std::invalid_argument on malformed text, too many fractional
  /// digits, or a value that does not fit in 64-bit units.
  Wide parse(std::string_view text) const;

  /// Exact decimal rendering with trailing fractional zeros trimmed.
  std::string format(Wide units) const;

  /// Nearest grid point to a real value.
  Wide quantize(double value) const;

  double to_real(Wide units) const noexcept {
    return static_cast<double>(units) / static_cast<double>(unit_);
  }

  Weight whole(std::int64_t value) const;

  friend bool operator==(FixedScale, FixedScale) = default;

 private:
  int digits_ = kDefaultScaleDigits;
  std::int64_t unit_ = 1'000'000'000;
};

std::string to_string(Wide value);

}  // namespace minpaths
