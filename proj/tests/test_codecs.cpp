#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "mcp/codecs.hpp"
#include "mcp/rng.hpp"
#include "mcp/signals.hpp"

namespace {

using mcp::Bits;
using mcp::CodecId;
using mcp::QuantizedVector;

QuantizedVector random_sparse(std::size_t n, std::size_t k, int m, mcp::Rng& rng) {
  std::vector<std::uint64_t> nums(n, 0);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::swap(idx[j], idx[j + rng.below(n - j)]);
    nums[idx[j]] = 1 + rng.below((std::uint64_t{1} << m) - 1);
  }
  return QuantizedVector(std::move(nums), m);
}

QuantizedVector random_dense(std::size_t n, int m, mcp::Rng& rng) {
  std::vector<std::uint64_t> nums(n);
  for (auto& v : nums) v = rng.below(std::uint64_t{1} << m);
  return QuantizedVector(std::move(nums), m);
}

TEST(LogStar, FrozenValues) {
  EXPECT_DOUBLE_EQ(mcp::log_star(1), 0.0);
  EXPECT_DOUBLE_EQ(mcp::log_star(2), 1.0);
  EXPECT_NEAR(mcp::log_star(8), 6.1699250014, 1e-10);
  EXPECT_EQ(mcp::ceil_log_star(8), 7);
  EXPECT_EQ(mcp::ceil_log_star(256), 14);
  EXPECT_THROW(mcp::log_star(0), std::domain_error);
}

TEST(LogStar, CeilMatchesReal) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    ASSERT_EQ(mcp::ceil_log_star(n), static_cast<int>(std::ceil(mcp::log_star(n) - 1e-12)));
  }
}

TEST(UintCode, LengthAndRoundTripToOneMillion) {
  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    const Bits code = mcp::encode_uint(n);
    ASSERT_LE(code.size(), static_cast<std::size_t>(mcp::ceil_log_star(n) + mcp::kUintCodeOverhead));
    ASSERT_EQ(code.size(), mcp::uint_code_length(n));
    mcp::BitReader in(code);
    ASSERT_EQ(mcp::decode_uint(in), n);
    ASSERT_TRUE(in.exhausted());
  }
  EXPECT_LE(mcp::encode_uint(1).size(), 4U);
  EXPECT_LE(mcp::encode_uint(8).size(), 11U);
}

TEST(UintCode, LargeValues) {
  for (std::uint64_t n : {std::uint64_t{1} << 40, ~std::uint64_t{0}, std::uint64_t{123456789012}}) {
    const Bits code = mcp::encode_uint(n);
    mcp::BitReader in(code);
    EXPECT_EQ(mcp::decode_uint(in), n);
  }
  EXPECT_THROW(mcp::encode_uint(0), std::domain_error);
}

TEST(UintCode, ConcatenationIsSelfDelimiting) {
  mcp::BitWriter w;
  const std::vector<std::uint64_t> values{1, 2, 3, 1000, 7, 65536};
  for (auto v : values) mcp::encode_uint(v, w);
  mcp::BitReader in(w.bits());
  for (auto v : values) EXPECT_EQ(mcp::decode_uint(in), v);
  EXPECT_TRUE(in.exhausted());
}

TEST(Sparse, ZeroVectorIsHeaderOnly) {
  const QuantizedVector x(3, 2);
  const auto c = mcp::encode_sparse(x);
  EXPECT_EQ(c.dl_bits(), mcp::sparse_code_length(0, 3, 2));
  EXPECT_EQ(mcp::decode_sparse(c, 3, 2), x);
  EXPECT_LE(static_cast<double>(c.dl_bits()), mcp::sparse_dl_bound(0, 3, 2));
}

TEST(Sparse, SingleEntryLayout) {
  const QuantizedVector x({0, 3, 0}, 2);
  const auto c = mcp::encode_sparse(x);
  mcp::BitReader in(c.payload);
  EXPECT_EQ(in.get_bits(2), 0U);
  EXPECT_EQ(mcp::decode_uint(in), 3U);
  EXPECT_EQ(mcp::decode_uint(in), 2U);  // k + 1
  EXPECT_EQ(in.get_bits(2), 1U);        // position index 1
  EXPECT_EQ(in.get_bits(2), 0b11U);
  EXPECT_TRUE(in.exhausted());
  EXPECT_EQ(mcp::decode_sparse(c, 3, 2), x);
}

TEST(Sparse, FrozenLengths) {
  EXPECT_EQ(mcp::sparse_code_length(2, 256, 8), 53U);
  EXPECT_DOUBLE_EQ(mcp::sparse_dl_bound(2, 256, 8), 78.0);
}

TEST(Sparse, RoundTripAndBound) {
  mcp::Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    const std::size_t k = rng.below(std::min<std::size_t>(n, 6) + 1);
    const int m = 1 + static_cast<int>(rng.below(16));
    const auto x = random_sparse(n, k, m, rng);
    const auto c = mcp::encode_sparse(x);
    ASSERT_EQ(mcp::decode_sparse(c, n, m), x);
    ASSERT_EQ(c.dl_bits(), mcp::sparse_code_length(k, n, m));
    ASSERT_LE(static_cast<double>(c.dl_bits()), mcp::sparse_dl_bound(k, n, m));
  }
}

TEST(Sparse, BoundPerBitTendsToK) {
  for (int m : {8, 64, 1024, 1 << 20}) {
    const double ratio = mcp::sparse_dl_bound(3, 256, m) / m;
    EXPECT_LT(ratio - 3.0, 80.0 / m + 1e-12);
  }
}

TEST(Sparse, RejectsMalformed) {
  const QuantizedVector x({0, 3, 1, 0}, 2);
  const auto c = mcp::encode_sparse(x);
  Bits trailing = c.payload;
  trailing.push_back(false);
  EXPECT_THROW(mcp::decode({trailing}, 4, 2), mcp::DecodeError);
  Bits shortened(c.payload.begin(), c.payload.end() - 1);
  EXPECT_THROW(mcp::decode(shortened, 4, 2), mcp::TruncatedStream);
  EXPECT_THROW(mcp::decode_sparse(c, 5, 2), mcp::DecodeError);
  mcp::CodedSignal wrong{CodecId::literal, c.payload};
  EXPECT_THROW(mcp::decode_sparse(wrong, 4, 2), mcp::DecodeError);
}

TEST(PiecewisePoly, ConstantPiece) {
  mcp::PiecewisePoly spec{{}, {{0.5}}};
  const auto c = mcp::encode_piecewise_poly(spec, 16, 4);
  const auto x = mcp::decode(c.payload, 16, 4);
  EXPECT_EQ(x, QuantizedVector(std::vector<std::uint64_t>(16, 8), 4));
  EXPECT_EQ(mcp::pp_coefficient_bits(4, 0), 4);
}

TEST(PiecewisePoly, TwoAffinePiecesLayout) {
  mcp::PiecewisePoly spec{{0.5}, {{0.25, 0.5}, {0.125, 0.25}}};
  const auto c = mcp::encode_piecewise_poly(spec, 16, 4);
  EXPECT_EQ(mcp::pp_coefficient_bits(4, 1), 5);
  EXPECT_EQ(c.dl_bits(), mcp::pp_code_length(2, 1, 16, 4));
  const auto code = mcp::decode_piecewise_poly_code(c, 16, 4);
  EXPECT_EQ(code.breakpoints, std::vector<std::uint64_t>{8});
  EXPECT_EQ(code.coefficients[0], (std::vector<std::uint64_t>{8, 16}));
  EXPECT_EQ(code.coefficients[1], (std::vector<std::uint64_t>{4, 8}));
  // 4 coefficients at 5 bits plus headers and one 4-bit breakpoint.
  EXPECT_EQ(c.dl_bits(), 2 + mcp::uint_code_length(16) + mcp::uint_code_length(2) +
                             mcp::uint_code_length(2) + 4 + 20);
  EXPECT_LE(static_cast<double>(c.dl_bits()), mcp::pp_dl_bound(1, 1, 16, 4));

  const auto x = mcp::decode_piecewise_poly(c, 16, 4);
  for (std::size_t i = 0; i < 16; ++i) {
    const double t = i / 16.0;
    const double f = i < 8 ? 0.25 + 0.5 * t : 0.125 + 0.25 * t;
    EXPECT_EQ(x[i], mcp::truncate_bits(f, 4).numerator) << i;
  }
}

TEST(PiecewisePoly, FrozenBound) {
  EXPECT_DOUBLE_EQ(mcp::pp_dl_bound(1, 1, 16, 4), 62.0);
  const double ratio = mcp::pp_dl_bound(2, 3, 64, 1 << 20) / (1 << 20);
  EXPECT_NEAR(ratio, 12.0, 1e-3);
}

TEST(PiecewisePoly, EncodeErrors) {
  EXPECT_THROW(mcp::encode_piecewise_poly(mcp::PiecewisePoly{{0.3}, {{0.1}, {0.1}}}, 16, 4),
               std::domain_error);
  EXPECT_THROW(mcp::encode_piecewise_poly(mcp::PiecewisePoly{{}, {{0.6, 0.5}}}, 16, 4),
               std::domain_error);
  EXPECT_THROW(mcp::encode_piecewise_poly(mcp::PiecewisePoly{{}, {{-0.1}}}, 16, 4),
               std::domain_error);
  EXPECT_THROW(mcp::encode_piecewise_poly(mcp::PiecewisePoly{{0.5}, {{0.1}}}, 16, 4),
               std::domain_error);
}

TEST(PiecewisePoly, DyadicDrawsAreExact) {
  mcp::Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = std::size_t{16} << rng.below(3);
    const int m = 2 + static_cast<int>(rng.below(8));
    const int N = static_cast<int>(rng.below(4));
    const std::size_t Q = rng.below(4);
    const auto draw = mcp::gen_piecewise_poly(n, Q, N, rng, mcp::pp_coefficient_bits(m, N));
    const auto c = mcp::encode_piecewise_poly(draw.spec, n, m);
    ASSERT_EQ(mcp::decode(c.payload, n, m), mcp::quantize_vector(draw.samples, m));
    ASSERT_LE(static_cast<double>(c.dl_bits()), mcp::pp_dl_bound(Q, N, n, m));
  }
}

TEST(PiecewisePoly, QuantizerErrorBelowGrid) {
  // Arbitrary real coefficients: samples of the coded polynomial stay within
  // 2^-m of the true samples.
  mcp::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 64;
    const int m = 3 + static_cast<int>(rng.below(8));
    const int N = static_cast<int>(rng.below(4));
    const auto draw = mcp::gen_piecewise_poly(n, 2, N, rng);
    const auto x = mcp::decode(mcp::encode_piecewise_poly(draw.spec, n, m).payload, n, m);
    const Eigen::VectorXd err = draw.samples - x.to_real();
    ASSERT_GE(err.minCoeff(), -1e-12);
    ASSERT_LT(err.maxCoeff(), std::ldexp(1.0, -m) * 2);
  }
}

TEST(PiecewisePoly, FitRecoversDraws) {
  mcp::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 4;
    const int N = static_cast<int>(rng.below(2));
    const auto draw = mcp::gen_piecewise_poly(16, rng.below(3), N, rng, mcp::pp_coefficient_bits(m, N));
    const auto x = mcp::quantize_vector(draw.samples, m);
    const auto code = mcp::fit_piecewise_poly_code(x, 1);
    ASSERT_TRUE(code.has_value());
    ASSERT_EQ(mcp::render_piecewise_poly(*code, 16, m), x);
    ASSERT_LE(mcp::pp_code_length(code->coefficients.size(), code->degree, 16, m),
              mcp::encode_piecewise_poly(draw.spec, 16, m).dl_bits());
  }
}

TEST(Literal, RoundTripAndLength) {
  mcp::Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(100);
    const int m = 1 + static_cast<int>(rng.below(20));
    const auto x = random_dense(n, m, rng);
    const auto c = mcp::encode_literal(x);
    ASSERT_EQ(c.dl_bits(), mcp::literal_code_length(n, m));
    ASSERT_EQ(c.dl_bits(), 2 + mcp::uint_code_length(n) + n * m);
    ASSERT_EQ(mcp::decode_literal(c, n, m), x);
  }
}

TEST(Compressor, RoundTrip) {
  mcp::Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(200);
    const int m = 1 + static_cast<int>(rng.below(16));
    const auto x = trial % 2 ? random_dense(n, m, rng) : random_sparse(n, std::min<std::size_t>(n, 3), m, rng);
    const auto c = mcp::encode_compressor(x);
    ASSERT_EQ(mcp::peek_codec(c.payload), CodecId::compressor);
    ASSERT_EQ(mcp::peek_length(c.payload), n);
    ASSERT_EQ(mcp::decode_compressor(c, n, m), x);
    ASSERT_EQ(mcp::decode(c.payload, n, m), x);
  }
}

TEST(Surrogate, ZeroVectorPicksSparseHeader) {
  const QuantizedVector x(64, 8);
  const auto s = mcp::dl_surrogate(x);
  EXPECT_EQ(s.codec, CodecId::sparse);
  EXPECT_EQ(s.bits, mcp::sparse_code_length(0, 64, 8));
}

TEST(Surrogate, UniformNoiseNearLiteral) {
  mcp::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_dense(64, 16, rng);
    const auto s = mcp::dl_surrogate(x);
    ASSERT_LE(s.bits, mcp::literal_code_length(64, 16));
    ASSERT_GE(s.bits + 2 + mcp::uint_code_length(64), 1024U);
  }
}

TEST(Surrogate, SparseWinsOnTwoSparse) {
  mcp::Rng rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_sparse(256, 2, 8, rng);
    const auto s = mcp::dl_surrogate(x);
    ASSERT_EQ(s.codec, CodecId::sparse);
    ASSERT_LE(static_cast<double>(s.bits), mcp::sparse_dl_bound(2, 256, 8));
    const auto best = mcp::best_encoding(x);
    ASSERT_EQ(best.dl_bits(), s.bits);
    ASSERT_EQ(mcp::decode(best.payload, 256, 8), x);
  }
}

TEST(Surrogate, NeverAboveLiteral) {
  mcp::Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(40);
    const int m = 1 + static_cast<int>(rng.below(10));
    const auto x = random_dense(n, m, rng);
    ASSERT_LE(mcp::dl_surrogate(x).bits, mcp::literal_code_length(n, m));
  }
}

// dl(x - y mod 2^m) <= dl(x) + dl(y) + C_pair on sparse-codebook pairs.
TEST(Surrogate, PairOverheadHolds) {
  mcp::Rng rng(20);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng.below(64);
    const int m = 1 + static_cast<int>(rng.below(10));
    const auto x = random_sparse(n, rng.below(std::min<std::size_t>(n, 4) + 1), m, rng);
    const auto y = random_sparse(n, rng.below(std::min<std::size_t>(n, 4) + 1), m, rng);
    const auto d = mcp::dl_surrogate(mcp::subtract_mod(x, y)).bits;
    ASSERT_LE(d, mcp::dl_surrogate(x).bits + mcp::dl_surrogate(y).bits + mcp::kPairOverheadBits);
  }
}

TEST(Decode, DispatchAndPeek) {
  const QuantizedVector x({0, 1, 2, 3}, 2);
  for (const auto& c : {mcp::encode_sparse(x), mcp::encode_literal(x), mcp::encode_compressor(x)}) {
    EXPECT_EQ(mcp::peek_codec(c.payload), c.codec);
    EXPECT_EQ(mcp::peek_length(c.payload), 4U);
    EXPECT_EQ(mcp::decode(c.payload, 4, 2), x);
  }
  EXPECT_THROW(mcp::decode(Bits{true}, 4, 2), mcp::TruncatedStream);
}

TEST(CodecNames, RoundTrip) {
  for (auto id : {CodecId::sparse, CodecId::piecewise_poly, CodecId::literal, CodecId::compressor}) {
    EXPECT_EQ(mcp::codec_from_name(mcp::codec_name(id)), id);
  }
  EXPECT_FALSE(mcp::codec_from_name("zip").has_value());
}

}  // namespace
