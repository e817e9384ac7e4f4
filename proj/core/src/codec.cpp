#include "sdn/codec.hpp"

#include "sdn/errors.hpp"

#include <string>

namespace sdn {

std::uint64_t encoded_length(const Natural& x) noexcept {
  return codeword_length_for_width(x.bit_width());
}

BitSequence encode(std::uint64_t x) {
  BitSequence out(encoded_length(x));
  write_codeword(out, 0, x);
  return out;
}

BitSequence encode(const Natural& x) {
  BitSequence out(encoded_length(x));
  write_codeword(out, 0, x);
  return out;
}

std::uint64_t write_codeword(BitSequence& bits, std::uint64_t pos, const Natural& x) {
  if (x.fits_u64()) {
    return write_codeword(bits, pos, x.to_u64());
  }
  const std::uint64_t ell = x.bit_width();
  bits.fill(pos, ell, true);
  bits.set(pos + ell, false);
  std::uint64_t p = pos + ell + 1;
  const auto& limbs = x.limbs();
  const auto top = static_cast<unsigned>(ell - 64 * (limbs.size() - 1));
  bits.write(p, top, limbs.back());
  p += top;
  for (std::size_t i = limbs.size() - 1; i-- > 0;) {
    bits.write(p, 64, limbs[i]);
    p += 64;
  }
  return p;
}

void throw_corrupt(std::uint64_t position, const char* what) {
  throw CorruptSequence("corrupt sequence at bit " + std::to_string(position) + ": " + what);
}

Natural codeword_value(const BitSequence& bits, const Codeword& cw) {
  if (cw.payload_bits <= 64) {
    return Natural(codeword_value_u64(bits, cw));
  }
  const std::uint64_t ell = cw.payload_bits;
  std::vector<std::uint64_t> limbs((ell + 63) / 64);
  // Least significant limb is the last 64 payload bits.
  std::uint64_t end = cw.payload_position() + ell;
  for (auto& limb : limbs) {
    const std::uint64_t take = std::min<std::uint64_t>(64, end - cw.payload_position());
    limb = bits.read(end - take, static_cast<unsigned>(take));
    end -= take;
  }
  return Natural::from_limbs(std::move(limbs));
}

SdnSequence SdnSequence::from_values(std::span<const std::uint64_t> values) {
  std::uint64_t n = 0;
  for (auto v : values) {
    n += encoded_length(v);
  }
  SdnSequence s(n);
  for (auto v : values) {
    s.append(v);
  }
  return s;
}

SdnSequence SdnSequence::from_naturals(std::span<const Natural> values) {
  std::uint64_t n = 0;
  for (const auto& v : values) {
    n += encoded_length(v);
  }
  SdnSequence s(n);
  for (const auto& v : values) {
    s.append(v);
  }
  return s;
}

SdnSequence SdnSequence::from_bits(BitSequence bits) {
  const std::uint64_t n = bits.size();
  std::uint64_t count = 0;
  for (std::uint64_t p = 0; p < n; ++count) {
    p = scan_codeword(bits, p, n).end();
  }
  return adopt(std::move(bits), count, n);
}

SdnSequence SdnSequence::adopt(BitSequence bits, std::uint64_t count, std::uint64_t n_bits) {
  SdnSequence s;
  s.bits_ = std::move(bits);
  s.count_ = count;
  s.cursor_ = n_bits;
  return s;
}

std::uint64_t SdnSequence::append(const Natural& x) {
  const std::uint64_t len = encoded_length(x);
  if (len > remaining_bits()) {
    throw_full(len);
  }
  const std::uint64_t p = cursor_;
  cursor_ = write_codeword(bits_, p, x);
  ++count_;
  return p;
}

std::uint64_t SdnSequence::append_codeword(const BitSequence& src, const Codeword& cw) {
  const std::uint64_t len = cw.length();
  if (len > remaining_bits()) {
    throw_full(len);
  }
  const std::uint64_t p = cursor_;
  copy_bits(src, cw.position, bits_, p, len);
  cursor_ += len;
  ++count_;
  return p;
}

Decoded SdnSequence::decode_at(std::uint64_t p) const {
  const Codeword cw = codeword_at(p);
  return {codeword_value(bits_, cw), cw.end()};
}

std::vector<Natural> SdnSequence::values() const {
  std::vector<Natural> out;
  out.reserve(count_);
  for (const auto& cw : *this) {
    out.push_back(codeword_value(bits_, cw));
  }
  return out;
}

std::vector<std::uint64_t> SdnSequence::values_u64() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (const auto& cw : *this) {
    if (cw.payload_bits > 64) {
      throw PreconditionViolation("value at bit " + std::to_string(cw.position) +
                                  " does not fit 64 bits");
    }
    out.push_back(codeword_value_u64(bits_, cw));
  }
  return out;
}

bool operator==(const SdnSequence& a, const SdnSequence& b) noexcept {
  return a.count_ == b.count_ && a.cursor_ == b.cursor_ &&
         equal_bits(a.bits_, 0, b.bits_, 0, a.cursor_);
}

void SdnSequence::throw_full(std::uint64_t needed) const {
  throw ContainerFull("sequence full: need " + std::to_string(needed) + " bits, " +
                      std::to_string(remaining_bits()) + " remaining");
}

} // namespace sdn
