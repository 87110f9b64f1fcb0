#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcp {

// Bit sequence, most-significant bit first. std::vector<bool> ordering is
// lexicographic, which is the tie-break order used by the enumerator.
using Bits = std::vector<bool>;

// Malformed or unexpectedly short codec input.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The stream ended before the decoder finished. Kept distinct so exhaustive
// codeword enumeration can tell "needs more bits" from "invalid".
class TruncatedStream : public DecodeError {
 public:
  TruncatedStream() : DecodeError("truncated bit stream") {}
};

class BitWriter {
 public:
  void put(bool bit) { bits_.push_back(bit); }
  // Low `width` bits of value, MSB first.
  void put_bits(std::uint64_t value, int width);
  void append(const Bits& other) { bits_.insert(bits_.end(), other.begin(), other.end()); }

  std::size_t size() const noexcept { return bits_.size(); }
  const Bits& bits() const noexcept { return bits_; }
  Bits take() { return std::move(bits_); }

 private:
  Bits bits_;
};

class BitReader {
 public:
  explicit BitReader(const Bits& bits) : bits_(bits) {}

  bool get();
  std::uint64_t get_bits(int width);

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_.size() - pos_; }
  bool exhausted() const noexcept { return pos_ == bits_.size(); }

 private:
  const Bits& bits_;
  std::size_t pos_ = 0;
};

// File form: bits packed MSB-first into bytes, final byte zero padded, then
// one trailer byte holding the pad length (0..7).
std::vector<std::uint8_t> pack_bits(const Bits& bits);
Bits unpack_bits(std::span<const std::uint8_t> bytes);

std::string to_string(const Bits& bits);
Bits bits_from_string(const std::string& s);

// ceil(log2(n)) for n >= 1; 0 for n = 1.
int ceil_log2(std::uint64_t n) noexcept;
// floor(log2(n)) for n >= 1.
int floor_log2(std::uint64_t n) noexcept;

}  // namespace mcp
