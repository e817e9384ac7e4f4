#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sdn {

/// Arbitrary-precision nonnegative integer, little-endian 64-bit limbs with no
/// trailing zero limbs. Only what the codec and the CLI need.
class Natural {
public:
  Natural() = default;
  Natural(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) {
      limbs_.push_back(v);
    }
  }

  /// Parses decimal digits; throws InvalidInput on anything else.
  static Natural from_decimal(std::string_view digits);
  static Natural power_of_two(std::uint64_t exponent);
  static Natural from_limbs(std::vector<std::uint64_t> limbs);

  std::string to_decimal() const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::uint64_t bit_width() const noexcept;
  bool bit(std::uint64_t i) const noexcept;
  bool fits_u64() const noexcept { return limbs_.size() <= 1; }
  std::uint64_t to_u64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }
  const std::vector<std::uint64_t>& limbs() const noexcept { return limbs_; }

  Natural& operator+=(const Natural& rhs);
  Natural& mul_small(std::uint32_t factor);
  /// Divides in place by a small divisor and returns the remainder.
  std::uint32_t div_small(std::uint32_t divisor);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept;

private:
  void trim() noexcept;

  std::vector<std::uint64_t> limbs_;
};

} // namespace sdn
