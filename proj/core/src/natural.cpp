#include "sdn/natural.hpp"

#include "sdn/errors.hpp"

#include <algorithm>
#include <bit>

namespace sdn {

namespace {
__extension__ typedef unsigned __int128 u128;
} // namespace

Natural Natural::from_decimal(std::string_view digits) {
  if (digits.empty()) {
    throw InvalidInput("empty decimal literal");
  }
  Natural out;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidInput(std::string("invalid decimal digit '") + c + "'");
    }
    out.mul_small(10);
    out += Natural(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

Natural Natural::power_of_two(std::uint64_t exponent) {
  std::vector<std::uint64_t> limbs(exponent / 64 + 1, 0);
  limbs.back() = std::uint64_t{1} << (exponent % 64);
  return from_limbs(std::move(limbs));
}

Natural Natural::from_limbs(std::vector<std::uint64_t> limbs) {
  Natural n;
  n.limbs_ = std::move(limbs);
  n.trim();
  return n;
}

std::string Natural::to_decimal() const {
  if (is_zero()) {
    return "0";
  }
  Natural tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t chunk = tmp.div_small(1000000000u);
    for (int i = 0; i < 9; ++i) {
      out.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (out.size() > 1 && out.back() == '0') {
    out.pop_back();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t Natural::bit_width() const noexcept {
  if (limbs_.empty()) {
    return 0;
  }
  return (limbs_.size() - 1) * 64 + static_cast<std::uint64_t>(std::bit_width(limbs_.back()));
}

bool Natural::bit(std::uint64_t i) const noexcept {
  const std::uint64_t limb = i / 64;
  return limb < limbs_.size() && ((limbs_[limb] >> (i % 64)) & 1u);
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) {
    limbs_.resize(rhs.limbs_.size(), 0);
  }
  u128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const u128 s = static_cast<u128>(limbs_[i]) +
                                (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + carry;
    limbs_[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  if (carry != 0) {
    limbs_.push_back(static_cast<std::uint64_t>(carry));
  }
  return *this;
}

Natural& Natural::mul_small(std::uint32_t factor) {
  u128 carry = 0;
  for (auto& limb : limbs_) {
    const u128 p = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<std::uint64_t>(p);
    carry = p >> 64;
  }
  if (carry != 0) {
    limbs_.push_back(static_cast<std::uint64_t>(carry));
  }
  trim();
  return *this;
}

std::uint32_t Natural::div_small(std::uint32_t divisor) {
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) {
      return a.limbs_[i] <=> b.limbs_[i];
    }
  }
  return std::strong_ordering::equal;
}

void Natural::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) {
    limbs_.pop_back();
  }
}

} // namespace sdn
