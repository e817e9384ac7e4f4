#include "sdn/container.hpp"

#include "sdn/errors.hpp"

#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>

namespace sdn {

namespace {

constexpr char kMagic[4] = {'S', 'D', 'N', '1'};

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

std::uint64_t get_le(const std::vector<std::uint8_t>& in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= static_cast<std::uint64_t>(in[at + i]) << (8 * i);
  }
  return v;
}

} // namespace

std::vector<std::uint8_t> to_container_bytes(const SdnSequence& s) {
  const std::uint64_t n = s.size_bits();
  std::vector<std::uint8_t> out;
  out.reserve(kContainerHeaderBytes + (n + 7) / 8);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_le(out, kContainerVersion, 4);
  put_le(out, n, 8);
  put_le(out, s.count(), 8);
  const BitSequence& bits = s.bits();
  for (std::uint64_t p = 0; p < n; p += 8) {
    const auto len = static_cast<unsigned>(std::min<std::uint64_t>(8, n - p));
    out.push_back(static_cast<std::uint8_t>(bits.read(p, len) << (8 - len)));
  }
  return out;
}

SdnSequence from_container_bytes(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kContainerHeaderBytes || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw CorruptSequence("not an SDN1 container (bad magic)");
  }
  const auto version = static_cast<std::uint32_t>(get_le(bytes, 4, 4));
  if (version != kContainerVersion) {
    throw CorruptSequence("unsupported SDN1 container version " + std::to_string(version));
  }
  const std::uint64_t n = get_le(bytes, 8, 8);
  const std::uint64_t k = get_le(bytes, 16, 8);
  const std::uint64_t payload = bytes.size() - kContainerHeaderBytes;
  if (n > payload * 8 || payload != (n + 7) / 8) {
    throw CorruptSequence("SDN1 payload size does not match header bit count");
  }
  BitSequence bits(n);
  for (std::uint64_t p = 0; p < n; p += 8) {
    const auto len = static_cast<unsigned>(std::min<std::uint64_t>(8, n - p));
    bits.write(p, len, bytes[kContainerHeaderBytes + p / 8] >> (8 - len));
  }
  SdnSequence s = SdnSequence::from_bits(std::move(bits));
  if (s.count() != k) {
    throw CorruptSequence("SDN1 header count " + std::to_string(k) + " but payload holds " +
                          std::to_string(s.count()) + " codewords");
  }
  return s;
}

void write_container(std::ostream& out, const SdnSequence& s) {
  const auto bytes = to_container_bytes(s);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("failed to write SDN1 container");
  }
}

SdnSequence read_container(std::istream& in) {
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_container_bytes(bytes);
}

void write_container_file(const std::string& path, const SdnSequence& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  write_container(out, s);
}

SdnSequence read_container_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return read_container(in);
}

} // namespace sdn
