#include "mcp/bitstream.hpp"

#include <bit>

namespace mcp {

void BitWriter::put_bits(std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) bits_.push_back((value >> i) & 1U);
}

bool BitReader::get() {
  if (pos_ >= bits_.size()) throw TruncatedStream();
  return bits_[pos_++];
}

std::uint64_t BitReader::get_bits(int width) {
  if (remaining() < static_cast<std::size_t>(width)) throw TruncatedStream();
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(bits_[pos_++]);
  return v;
}

std::vector<std::uint8_t> pack_bits(const Bits& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8 + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  out.back() = static_cast<std::uint8_t>((8 - bits.size() % 8) % 8);
  return out;
}

Bits unpack_bits(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw DecodeError("stream file is missing its pad trailer");
  const unsigned pad = bytes.back();
  const std::size_t body = bytes.size() - 1;
  if (pad > 7 || (body == 0 && pad != 0)) throw DecodeError("invalid pad trailer");
  const std::size_t nbits = body * 8 - pad;
  Bits bits(nbits);
  for (std::size_t i = 0; i < nbits; ++i) bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1U;
  for (std::size_t i = nbits; i < body * 8; ++i) {
    if ((bytes[i / 8] >> (7 - i % 8)) & 1U) throw DecodeError("nonzero padding bits");
  }
  return bits;
}

std::string to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_string(const std::string& s) {
  Bits bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw DecodeError("bit string may only contain 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

int ceil_log2(std::uint64_t n) noexcept {
  return n <= 1 ? 0 : 64 - std::countl_zero(n - 1);
}

int floor_log2(std::uint64_t n) noexcept { return 63 - std::countl_zero(n); }

}  // namespace mcp
