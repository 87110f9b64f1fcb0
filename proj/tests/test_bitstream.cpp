#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "mcp/bitstream.hpp"
#include "mcp/rng.hpp"

namespace {

using mcp::Bits;

TEST(BitWriter, MsbFirst) {
  mcp::BitWriter w;
  w.put_bits(0b1011, 4);
  w.put(false);
  EXPECT_EQ(mcp::to_string(w.bits()), "10110");
}

TEST(BitReader, ThrowsTruncatedAtEnd) {
  const Bits bits = mcp::bits_from_string("101");
  mcp::BitReader r(bits);
  EXPECT_EQ(r.get_bits(2), 0b10U);
  EXPECT_THROW(r.get_bits(2), mcp::TruncatedStream);
  EXPECT_TRUE(r.get());
  EXPECT_TRUE(r.exhausted());
  EXPECT_THROW(r.get(), mcp::TruncatedStream);
}

TEST(PackBits, RoundTripAllLengths) {
  mcp::Rng rng(3);
  for (std::size_t len = 0; len < 70; ++len) {
    Bits bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[i] = rng.below(2) == 1;
    const auto bytes = mcp::pack_bits(bits);
    ASSERT_EQ(bytes.size(), (len + 7) / 8 + 1);
    ASSERT_EQ(bytes.back(), (8 - len % 8) % 8);
    ASSERT_EQ(mcp::unpack_bits(bytes), bits);
  }
}

TEST(PackBits, RejectsBadTrailer) {
  EXPECT_THROW(mcp::unpack_bits(std::vector<std::uint8_t>{}), mcp::DecodeError);
  EXPECT_THROW(mcp::unpack_bits(std::vector<std::uint8_t>{0xF0, 8}), mcp::DecodeError);
  EXPECT_THROW(mcp::unpack_bits(std::vector<std::uint8_t>{3}), mcp::DecodeError);
  // Pad of 4 but a one bit in the padding.
  EXPECT_THROW(mcp::unpack_bits(std::vector<std::uint8_t>{0xF1, 4}), mcp::DecodeError);
  EXPECT_EQ(mcp::unpack_bits(std::vector<std::uint8_t>{0xF0, 4}), mcp::bits_from_string("1111"));
}

TEST(BitString, RejectsOtherCharacters) {
  EXPECT_THROW(mcp::bits_from_string("10a"), mcp::DecodeError);
}

TEST(Log2, Values) {
  EXPECT_EQ(mcp::ceil_log2(1), 0);
  EXPECT_EQ(mcp::ceil_log2(2), 1);
  EXPECT_EQ(mcp::ceil_log2(3), 2);
  EXPECT_EQ(mcp::ceil_log2(256), 8);
  EXPECT_EQ(mcp::ceil_log2(257), 9);
  EXPECT_EQ(mcp::floor_log2(1), 0);
  EXPECT_EQ(mcp::floor_log2(255), 7);
  EXPECT_EQ(mcp::floor_log2(256), 8);
}

}  // namespace
