#pragma once

// SDN1 file container: magic "SDN1", version (u32), N (u64, payload bits),
// k (u64, codeword count), then ceil(N / 8) payload bytes. Integers are
// little-endian; payload bit 0 is the most significant bit of byte 0.

#include "sdn/codec.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdn {

inline constexpr std::uint32_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderBytes = 24;

std::vector<std::uint8_t> to_container_bytes(const SdnSequence& s);
/// Throws CorruptSequence on a bad magic, version, size, or payload.
SdnSequence from_container_bytes(const std::vector<std::uint8_t>& bytes);

void write_container(std::ostream& out, const SdnSequence& s);
SdnSequence read_container(std::istream& in);

void write_container_file(const std::string& path, const SdnSequence& s);
SdnSequence read_container_file(const std::string& path);

} // namespace sdn
