#include "minpaths/fixed_point.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "minpaths/error.hpp"

namespace minpaths {

namespace {

constexpr Wide kUnitsLimit = std::numeric_limits<std::int64_t>::max();

}  // namespace

FixedScale::FixedScale(int digits) : digits_(digits), unit_(1) {
  if (digits < 0 || digits > kMaxScaleDigits) {
    throw DomainError("fixed-point scale must have 0.." +
                      std::to_string(kMaxScaleDigits) + " digits, got " +
                      std::to_string(digits));
  }
  for (int i = 0; i < digits; ++i) unit_ *= 10;
}

FixedScale FixedScale::from_environment() {
  const char* raw = std::getenv("MINPATHS_SCALE_DIGITS");
  if (raw == nullptr || *raw == '\0') return FixedScale{};
  char* end = nullptr;
  long digits = std::strtol(raw, &end, 10);
  if (*end != '\0') {
    throw DomainError(std::string("MINPATHS_SCALE_DIGITS is not an integer: ") +
                      raw);
  }
  return FixedScale(static_cast<int>(digits));
}

Wide FixedScale::parse(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("empty number");
  Wide whole = 0;
  std::size_t i = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid number '" + std::string(text) + "'");
    }
    whole = whole * 10 + (c - '0');
    any_digit = true;
    if (whole > kUnitsLimit) {
      throw std::invalid_argument("number out of range '" + std::string(text) +
                                  "'");
    }
  }
  Wide fraction = 0;
  int fraction_digits = 0;
  if (i < text.size()) {
    ++i;  // '.'
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') {
        throw std::invalid_argument("invalid number '" + std::string(text) +
                                    "'");
      }
      any_digit = true;
      if (fraction_digits == digits_) {
        if (c != '0') {
          throw std::invalid_argument(
              "more than " + std::to_string(digits_) +
              " significant fractional digits in '" + std::string(text) + "'");
        }
        continue;
      }
      fraction = fraction * 10 + (c - '0');
      ++fraction_digits;
    }
  }
  if (!any_digit) {
    throw std::invalid_argument("invalid number '" + std::string(text) + "'");
  }
  for (; fraction_digits < digits_; ++fraction_digits) fraction *= 10;
  Wide units = whole * unit_ + fraction;
  if (units > kUnitsLimit) {
    throw std::invalid_argument("number out of range '" + std::string(text) +
                                "'");
  }
  return units;
}

std::string FixedScale::format(Wide units) const {
  bool negative = units < 0;
  if (negative) units = -units;
  std::string out = to_string(units / unit_);
  Wide fraction = units % unit_;
  if (fraction != 0) {
    std::string digits = to_string(fraction);
    digits.insert(0, static_cast<std::size_t>(digits_) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return negative ? "-" + out : out;
}

Wide FixedScale::quantize(double value) const {
  double scaled = std::nearbyint(value * static_cast<double>(unit_));
  if (!std::isfinite(scaled) || std::fabs(scaled) > 9.2e18) {
    throw OverflowError("value does not fit the fixed-point grid");
  }
  return static_cast<Wide>(static_cast<std::int64_t>(scaled));
}

Weight FixedScale::whole(std::int64_t value) const {
  if (value > std::numeric_limits<std::int64_t>::max() / unit_ ||
      value < std::numeric_limits<std::int64_t>::min() / unit_) {
    throw OverflowError("weight " + std::to_string(value) +
                        " does not fit at scale 10^-" +
                        std::to_string(digits_));
  }
  return Weight(value * unit_);
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Negating the minimum never happens here: sums of int64 weights stay far
  // inside the 128-bit range.
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-value)
               : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace minpaths
