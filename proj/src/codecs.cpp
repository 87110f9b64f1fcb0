#include "mcp/codecs.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mcp {
namespace {

using u128 = unsigned __int128;

// Exact evaluation needs m' + N*ceil(log2 n) bits of headroom in u128.
constexpr int kPpHeadroomBits = 120;

void write_header(CodecId id, BitWriter& out) {
  out.put_bits(static_cast<std::uint64_t>(id), kCodecHeaderBits);
}

CodecId read_header(BitReader& in) {
  return static_cast<CodecId>(in.get_bits(kCodecHeaderBits));
}

void expect_header(const CodedSignal& c, CodecId id, BitReader& in) {
  if (c.codec != id) throw DecodeError("codec id does not match decoder");
  if (read_header(in) != id) throw DecodeError("stream header does not match codec id");
}

void read_length(BitReader& in, std::size_t n) {
  if (decode_uint(in) != n) throw DecodeError("stream length field does not match n");
}

void expect_consumed(const BitReader& in) {
  if (!in.exhausted()) throw DecodeError("trailing bits after codeword");
}

// --- body decoders: run after the header, on a shared reader ---------------

QuantizedVector read_sparse(BitReader& in, std::size_t n, int m) {
  read_length(in, n);
  const std::uint64_t k = decode_uint(in) - 1;
  if (k > n) throw DecodeError("support size exceeds n");
  const int width = ceil_log2(n);
  std::vector<std::uint64_t> positions(k);
  for (std::uint64_t j = 0; j < k; ++j) {
    positions[j] = in.get_bits(width);
    if (positions[j] >= n) throw DecodeError("position out of range");
    if (j > 0 && positions[j] <= positions[j - 1]) {
      throw DecodeError("positions must be strictly increasing");
    }
  }
  std::vector<std::uint64_t> nums(n, 0);
  for (std::uint64_t j = 0; j < k; ++j) {
    const std::uint64_t v = in.get_bits(m);
    if (v == 0) throw DecodeError("sparse payload value must be nonzero");
    nums[positions[j]] = v;
  }
  return QuantizedVector(std::move(nums), m);
}

PiecewisePolyCode read_pp(BitReader& in, std::size_t n, int m) {
  read_length(in, n);
  const std::uint64_t degree_plus = decode_uint(in);
  if (degree_plus > 64) throw DecodeError("polynomial degree out of range");
  const int degree = static_cast<int>(degree_plus - 1);
  const int mp = pp_coefficient_bits(m, degree);
  if (mp > kMaxResolutionBits || mp + degree * ceil_log2(n) > kPpHeadroomBits) {
    throw DecodeError("polynomial degree too large for exact evaluation");
  }
  const std::uint64_t pieces = decode_uint(in);
  if (pieces > n) throw DecodeError("more pieces than samples");
  const int width = ceil_log2(n);
  PiecewisePolyCode code;
  code.degree = degree;
  code.breakpoints.resize(pieces - 1);
  for (std::uint64_t j = 0; j + 1 < pieces; ++j) {
    const std::uint64_t b = in.get_bits(width);
    if (b == 0 || b >= n) throw DecodeError("breakpoint out of range");
    if (j > 0 && b <= code.breakpoints[j - 1]) {
      throw DecodeError("breakpoints must be strictly increasing");
    }
    code.breakpoints[j] = b;
  }
  const std::uint64_t limit = std::uint64_t{1} << mp;
  code.coefficients.assign(pieces, std::vector<std::uint64_t>(degree + 1));
  for (auto& piece : code.coefficients) {
    u128 sum = 0;
    for (auto& c : piece) {
      c = in.get_bits(mp);
      sum += c;
    }
    if (sum >= limit) throw DecodeError("piece coefficient sum must be below one");
  }
  return code;
}

QuantizedVector read_literal(BitReader& in, std::size_t n, int m) {
  read_length(in, n);
  std::vector<std::uint64_t> nums(n);
  for (auto& v : nums) v = in.get_bits(m);
  return QuantizedVector(std::move(nums), m);
}

std::vector<std::uint8_t> pack_numerators(const QuantizedVector& x) {
  BitWriter w;
  for (std::size_t i = 0; i < x.size(); ++i) w.put_bits(x[i], x.bits());
  auto bytes = pack_bits(w.bits());
  bytes.pop_back();  // no trailer; length is implied by n and m
  return bytes;
}

QuantizedVector read_compressor(BitReader& in, std::size_t n, int m) {
  read_length(in, n);
  const std::uint64_t nbytes = decode_uint(in);
  if (nbytes > in.remaining() / 8) throw TruncatedStream();
  std::vector<std::uint8_t> packed(nbytes);
  for (auto& b : packed) b = static_cast<std::uint8_t>(in.get_bits(8));

  const std::size_t expected = (n * static_cast<std::size_t>(m) + 7) / 8;
  std::vector<std::uint8_t> raw(expected + 1);
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw std::runtime_error("inflateInit2 failed");
  zs.next_in = packed.data();
  zs.avail_in = static_cast<uInt>(packed.size());
  zs.next_out = raw.data();
  zs.avail_out = static_cast<uInt>(raw.size());
  const int rc = inflate(&zs, Z_FINISH);
  const std::size_t produced = raw.size() - zs.avail_out;
  const bool consumed = zs.avail_in == 0;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || !consumed || produced != expected) {
    throw DecodeError("compressor payload is not a valid deflate stream for n, m");
  }
  raw.resize(expected);
  raw.push_back(static_cast<std::uint8_t>((8 - (n * m) % 8) % 8));
  const Bits bits = unpack_bits(raw);
  BitReader body(bits);
  std::vector<std::uint64_t> nums(n);
  for (auto& v : nums) v = body.get_bits(m);
  return QuantizedVector(std::move(nums), m);
}

// Powers i^j * n^(N-j) for the exact sample evaluation.
std::vector<u128> sample_weights(std::size_t n, int degree) {
  std::vector<u128> w(n * (degree + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j <= degree; ++j) {
      u128 v = 1;
      for (int a = 0; a < j; ++a) v *= i;
      for (int a = j; a < degree; ++a) v *= n;
      w[i * (degree + 1) + j] = v;
    }
  }
  return w;
}

u128 pow_u128(std::uint64_t base, int e) {
  u128 v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

// Greedy longest-segment cover for one degree. The feasible set of each
// segment only shrinks as samples are added, so greedy minimizes the
// number of pieces.
std::optional<PiecewisePolyCode> fit_degree(const QuantizedVector& x, int degree,
                                            std::uint64_t search_cap) {
  const std::size_t n = x.size();
  const int m = x.bits();
  const int mp = pp_coefficient_bits(m, degree);
  if (mp > kMaxResolutionBits || mp + degree * ceil_log2(n) > kPpHeadroomBits) {
    return std::nullopt;
  }
  const int tail_bits = mp * degree;
  if (tail_bits >= 63 || (std::uint64_t{1} << tail_bits) > search_cap) return std::nullopt;
  const std::uint64_t tuples = std::uint64_t{1} << tail_bits;
  const std::uint64_t mask = (std::uint64_t{1} << mp) - 1;
  const std::int64_t coeff_limit = std::int64_t{1} << mp;

  const auto w = sample_weights(n, degree);
  const u128 n_pow = pow_u128(n, degree);
  const u128 denom = n_pow << (mp - m);

  struct Alive {
    std::uint64_t tuple;
    std::int64_t lo, hi;  // feasible c0 range
  };
  std::vector<Alive> alive, next;

  auto reset = [&] {
    alive.clear();
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::int64_t tail_sum = 0;
      for (int j = 1; j <= degree; ++j) {
        tail_sum += static_cast<std::int64_t>((t >> (mp * (j - 1))) & mask);
      }
      if (tail_sum < coeff_limit) alive.push_back({t, 0, coeff_limit - 1 - tail_sum});
    }
  };

  auto admit = [&](std::size_t i) {
    next.clear();
    const u128 lo_target = static_cast<u128>(x[i]) * denom;
    const u128 hi_target = lo_target + denom - 1;
    const u128* wi = &w[i * (degree + 1)];
    for (const Alive& a : alive) {
      u128 tail = 0;
      for (int j = 1; j <= degree; ++j) {
        tail += static_cast<u128>((a.tuple >> (mp * (j - 1))) & mask) * wi[j];
      }
      if (tail > hi_target) continue;
      const u128 lo_c = lo_target <= tail ? 0 : (lo_target - tail + n_pow - 1) / n_pow;
      const u128 hi_c = (hi_target - tail) / n_pow;
      const std::int64_t lo = std::max<std::int64_t>(a.lo, static_cast<std::int64_t>(std::min<u128>(lo_c, coeff_limit)));
      const std::int64_t hi = std::min<std::int64_t>(a.hi, static_cast<std::int64_t>(std::min<u128>(hi_c, coeff_limit)));
      if (lo <= hi) next.push_back({a.tuple, lo, hi});
    }
  };

  PiecewisePolyCode code;
  code.degree = degree;
  auto close_piece = [&] {
    const Alive& a = alive.front();
    std::vector<std::uint64_t> coeffs(degree + 1);
    coeffs[0] = static_cast<std::uint64_t>(a.lo);
    for (int j = 1; j <= degree; ++j) coeffs[j] = (a.tuple >> (mp * (j - 1))) & mask;
    code.coefficients.push_back(std::move(coeffs));
  };

  reset();
  for (std::size_t i = 0; i < n; ++i) {
    admit(i);
    if (next.empty()) {
      close_piece();
      code.breakpoints.push_back(i);
      reset();
      admit(i);
      if (next.empty()) return std::nullopt;  // unreachable: one sample always fits
    }
    alive.swap(next);
  }
  if (n > 0) close_piece();
  return code;
}

void check_grid(std::size_t n, int m) {
  if (n == 0) throw std::domain_error("signal length must be positive");
  if (m < 1 || m > kMaxResolutionBits) throw std::domain_error("resolution out of range");
}

}  // namespace

std::string_view codec_name(CodecId id) noexcept {
  switch (id) {
    case CodecId::sparse: return "sparse";
    case CodecId::piecewise_poly: return "piecewise_poly";
    case CodecId::literal: return "literal";
    case CodecId::compressor: return "compressor";
  }
  return "unknown";
}

std::optional<CodecId> codec_from_name(std::string_view name) noexcept {
  for (auto id : {CodecId::sparse, CodecId::piecewise_poly, CodecId::literal,
                  CodecId::compressor}) {
    if (codec_name(id) == name) return id;
  }
  return std::nullopt;
}

double log_star(std::uint64_t n) {
  if (n == 0) throw std::domain_error("log_star: n must be positive");
  const int L = ceil_log2(n);
  return L + 2.0 * std::log2(static_cast<double>(std::max(L, 1)));
}

int ceil_log_star(std::uint64_t n) {
  if (n == 0) throw std::domain_error("log_star: n must be positive");
  const std::uint64_t L = static_cast<std::uint64_t>(ceil_log2(n));
  // ceil(2 log2 L) = ceil(log2 L^2)
  return static_cast<int>(L) + ceil_log2(std::max<std::uint64_t>(L, 1) * std::max<std::uint64_t>(L, 1));
}

void encode_uint(std::uint64_t n, BitWriter& out) {
  if (n == 0) throw std::domain_error("encode_uint: n must be positive");
  const int nbits = floor_log2(n) + 1;
  const int len_bits = floor_log2(static_cast<std::uint64_t>(nbits)) + 1;
  for (int i = 1; i < len_bits; ++i) out.put(false);
  out.put_bits(static_cast<std::uint64_t>(nbits), len_bits);
  out.put_bits(n, nbits - 1);
}

Bits encode_uint(std::uint64_t n) {
  BitWriter w;
  encode_uint(n, w);
  return w.take();
}

std::uint64_t decode_uint(BitReader& in) {
  int zeros = 0;
  while (!in.get()) {
    if (++zeros > 6) throw DecodeError("integer code length prefix too long");
  }
  const std::uint64_t nbits = (std::uint64_t{1} << zeros) | in.get_bits(zeros);
  if (nbits > 64) throw DecodeError("integer code exceeds 64 bits");
  const std::uint64_t low = in.get_bits(static_cast<int>(nbits) - 1);
  return nbits == 64 ? (std::uint64_t{1} << 63) | low : (std::uint64_t{1} << (nbits - 1)) | low;
}

std::size_t uint_code_length(std::uint64_t n) {
  if (n == 0) throw std::domain_error("encode_uint: n must be positive");
  const int nbits = floor_log2(n) + 1;
  return static_cast<std::size_t>(nbits - 1 + 2 * floor_log2(static_cast<std::uint64_t>(nbits)) + 1);
}

// --- sparse -----------------------------------------------------------------

CodedSignal encode_sparse(const QuantizedVector& x) {
  check_grid(x.size(), x.bits());
  BitWriter w;
  write_header(CodecId::sparse, w);
  encode_uint(x.size(), w);
  const std::size_t k = x.support_size();
  encode_uint(k + 1, w);
  const int width = ceil_log2(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) w.put_bits(i, width);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) w.put_bits(x[i], x.bits());
  }
  return {CodecId::sparse, w.take()};
}

QuantizedVector decode_sparse(const CodedSignal& c, std::size_t n, int m) {
  check_grid(n, m);
  BitReader in(c.payload);
  expect_header(c, CodecId::sparse, in);
  auto x = read_sparse(in, n, m);
  expect_consumed(in);
  return x;
}

std::size_t sparse_code_length(std::size_t k, std::size_t n, int m) {
  return kCodecHeaderBits + uint_code_length(n) + uint_code_length(k + 1) +
         k * (static_cast<std::size_t>(ceil_log2(n)) + static_cast<std::size_t>(m));
}

double sparse_dl_bound(std::size_t k, std::size_t n, int m) {
  const double c = kUintCodeOverhead;
  return static_cast<double>(m) * static_cast<double>(k) +
         static_cast<double>(k + 1) * (ceil_log_star(n) + c) + ceil_log_star(k + 1) + c;
}

// --- piecewise polynomial ---------------------------------------------------

int pp_coefficient_bits(int m, int degree) noexcept {
  return m + ceil_log2(static_cast<std::uint64_t>(degree) + 1);
}

CodedSignal encode_piecewise_poly(const PiecewisePoly& spec, std::size_t n, int m) {
  check_grid(n, m);
  if (spec.coefficients.size() != spec.breakpoints.size() + 1) {
    throw std::domain_error("piecewise polynomial needs one coefficient list per piece");
  }
  PiecewisePolyCode code;
  for (const auto& piece : spec.coefficients) {
    if (piece.empty()) throw std::domain_error("polynomial piece has no coefficients");
    code.degree = std::max(code.degree, static_cast<int>(piece.size()) - 1);
  }
  const double scale = static_cast<double>(n);
  for (double b : spec.breakpoints) {
    const double pos = b * scale;
    const double idx = std::round(pos);
    if (!(b > 0.0 && b < 1.0) || std::abs(pos - idx) > 1e-9 * scale) {
      throw std::domain_error("breakpoint is not on the sample grid i/n");
    }
    const auto i = static_cast<std::uint64_t>(idx);
    if (!code.breakpoints.empty() && i <= code.breakpoints.back()) {
      throw std::domain_error("breakpoints must be strictly increasing on the grid");
    }
    code.breakpoints.push_back(i);
  }
  const int mp = pp_coefficient_bits(m, code.degree);
  for (const auto& piece : spec.coefficients) {
    double sum = 0.0;
    std::vector<std::uint64_t> nums(code.degree + 1, 0);
    for (std::size_t j = 0; j < piece.size(); ++j) {
      if (!(piece[j] >= 0.0 && piece[j] <= 1.0)) {
        throw std::domain_error("polynomial coefficients must lie in [0, 1]");
      }
      sum += piece[j];
      nums[j] = truncate_bits(piece[j], mp).numerator;
    }
    if (!(sum < 1.0)) throw std::domain_error("per-piece coefficient sum must be below 1");
    code.coefficients.push_back(std::move(nums));
  }
  return encode_piecewise_poly(code, n, m);
}

CodedSignal encode_piecewise_poly(const PiecewisePolyCode& code, std::size_t n, int m) {
  check_grid(n, m);
  const int mp = pp_coefficient_bits(m, code.degree);
  if (code.degree < 0 || mp > kMaxResolutionBits ||
      mp + code.degree * ceil_log2(n) > kPpHeadroomBits) {
    throw std::domain_error("polynomial degree out of range");
  }
  if (code.coefficients.size() != code.breakpoints.size() + 1 || code.coefficients.size() > n) {
    throw std::domain_error("piece count inconsistent with breakpoints or n");
  }
  BitWriter w;
  write_header(CodecId::piecewise_poly, w);
  encode_uint(n, w);
  encode_uint(static_cast<std::uint64_t>(code.degree) + 1, w);
  encode_uint(code.coefficients.size(), w);
  const int width = ceil_log2(n);
  for (std::size_t j = 0; j < code.breakpoints.size(); ++j) {
    const auto b = code.breakpoints[j];
    if (b == 0 || b >= n || (j > 0 && b <= code.breakpoints[j - 1])) {
      throw std::domain_error("breakpoints must be strictly increasing in [1, n-1]");
    }
    w.put_bits(b, width);
  }
  const u128 limit = u128{1} << mp;
  for (const auto& piece : code.coefficients) {
    if (piece.size() != static_cast<std::size_t>(code.degree) + 1) {
      throw std::domain_error("each piece needs degree + 1 coefficients");
    }
    u128 sum = 0;
    for (auto c : piece) {
      if (c >= limit) throw std::domain_error("coefficient exceeds m' bits");
      sum += c;
      w.put_bits(c, mp);
    }
    if (sum >= limit) throw std::domain_error("per-piece coefficient sum must be below 1");
  }
  return {CodecId::piecewise_poly, w.take()};
}

PiecewisePolyCode decode_piecewise_poly_code(const CodedSignal& c, std::size_t n, int m) {
  check_grid(n, m);
  BitReader in(c.payload);
  expect_header(c, CodecId::piecewise_poly, in);
  auto code = read_pp(in, n, m);
  expect_consumed(in);
  return code;
}

QuantizedVector decode_piecewise_poly(const CodedSignal& c, std::size_t n, int m) {
  return render_piecewise_poly(decode_piecewise_poly_code(c, n, m), n, m);
}

QuantizedVector render_piecewise_poly(const PiecewisePolyCode& code, std::size_t n, int m) {
  check_grid(n, m);
  const int mp = pp_coefficient_bits(m, code.degree);
  const auto w = sample_weights(n, code.degree);
  const u128 denom = pow_u128(n, code.degree) << (mp - m);
  std::vector<std::uint64_t> nums(n);
  std::size_t piece = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (piece < code.breakpoints.size() && i >= code.breakpoints[piece]) ++piece;
    const auto& coeffs = code.coefficients.at(piece);
    u128 acc = 0;
    for (int j = 0; j <= code.degree; ++j) acc += static_cast<u128>(coeffs[j]) * w[i * (code.degree + 1) + j];
    nums[i] = static_cast<std::uint64_t>(acc / denom);
  }
  return QuantizedVector(std::move(nums), m);
}

std::size_t pp_code_length(std::size_t pieces, int degree, std::size_t n, int m) {
  return kCodecHeaderBits + uint_code_length(n) +
         uint_code_length(static_cast<std::uint64_t>(degree) + 1) + uint_code_length(pieces) +
         (pieces - 1) * static_cast<std::size_t>(ceil_log2(n)) +
         pieces * static_cast<std::size_t>(degree + 1) *
             static_cast<std::size_t>(pp_coefficient_bits(m, degree));
}

double pp_dl_bound(std::size_t Q, int N, std::size_t n, int m) {
  const double pieces = static_cast<double>(Q + 1);
  const double coeffs = pieces * (N + 1);
  const double ln = ceil_log_star(n);
  return coeffs * (m + ceil_log2(static_cast<std::uint64_t>(N) + 1)) +
         pieces * (ln + kUintCodeOverhead) + ln +
         ceil_log_star(static_cast<std::uint64_t>(N) + 1) + ceil_log_star(Q + 1) +
         kPpModelOverhead + kPpBreakpointOverhead;
}

std::optional<PiecewisePolyCode> fit_piecewise_poly_code(const QuantizedVector& x,
                                                         int max_degree,
                                                         std::uint64_t search_cap) {
  std::optional<PiecewisePolyCode> best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (int degree = 0; degree <= max_degree; ++degree) {
    auto code = fit_degree(x, degree, search_cap);
    if (!code) continue;
    const std::size_t len = pp_code_length(code->coefficients.size(), degree, x.size(), x.bits());
    if (len < best_len) {
      best_len = len;
      best = std::move(code);
    }
  }
  return best;
}

// --- literal ----------------------------------------------------------------

CodedSignal encode_literal(const QuantizedVector& x) {
  check_grid(x.size(), x.bits());
  BitWriter w;
  write_header(CodecId::literal, w);
  encode_uint(x.size(), w);
  for (std::size_t i = 0; i < x.size(); ++i) w.put_bits(x[i], x.bits());
  return {CodecId::literal, w.take()};
}

QuantizedVector decode_literal(const CodedSignal& c, std::size_t n, int m) {
  check_grid(n, m);
  BitReader in(c.payload);
  expect_header(c, CodecId::literal, in);
  auto x = read_literal(in, n, m);
  expect_consumed(in);
  return x;
}

std::size_t literal_code_length(std::size_t n, int m) {
  return kCodecHeaderBits + uint_code_length(n) + n * static_cast<std::size_t>(m);
}

// --- compressor proxy -------------------------------------------------------

CodedSignal encode_compressor(const QuantizedVector& x) {
  check_grid(x.size(), x.bits());
  auto raw = pack_numerators(x);
  z_stream zs{};
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, -MAX_WBITS, 9, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw std::runtime_error("deflateInit2 failed");
  }
  std::vector<std::uint8_t> out(deflateBound(&zs, static_cast<uLong>(raw.size())) + 16);
  zs.next_in = raw.data();
  zs.avail_in = static_cast<uInt>(raw.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  out.resize(out.size() - zs.avail_out);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("deflate did not finish");

  BitWriter w;
  write_header(CodecId::compressor, w);
  encode_uint(x.size(), w);
  encode_uint(out.size(), w);
  for (auto b : out) w.put_bits(b, 8);
  return {CodecId::compressor, w.take()};
}

QuantizedVector decode_compressor(const CodedSignal& c, std::size_t n, int m) {
  check_grid(n, m);
  BitReader in(c.payload);
  expect_header(c, CodecId::compressor, in);
  auto x = read_compressor(in, n, m);
  expect_consumed(in);
  return x;
}

// --- dispatch ---------------------------------------------------------------

CodecId peek_codec(const Bits& stream) {
  BitReader in(stream);
  return read_header(in);
}

std::size_t peek_length(const Bits& stream) {
  BitReader in(stream);
  read_header(in);
  return decode_uint(in);
}

QuantizedVector decode(const Bits& stream, std::size_t n, int m) {
  check_grid(n, m);
  BitReader in(stream);
  QuantizedVector x;
  switch (read_header(in)) {
    case CodecId::sparse: x = read_sparse(in, n, m); break;
    case CodecId::piecewise_poly: x = render_piecewise_poly(read_pp(in, n, m), n, m); break;
    case CodecId::literal: x = read_literal(in, n, m); break;
    case CodecId::compressor: x = read_compressor(in, n, m); break;
  }
  expect_consumed(in);
  return x;
}

Surrogate dl_surrogate(const QuantizedVector& x) {
  Surrogate best{sparse_code_length(x.support_size(), x.size(), x.bits()), CodecId::sparse};
  auto consider = [&](std::size_t bits, CodecId id) {
    if (bits < best.bits) best = {bits, id};
  };
  if (auto pp = fit_piecewise_poly_code(x, 3)) {
    consider(pp_code_length(pp->coefficients.size(), pp->degree, x.size(), x.bits()),
             CodecId::piecewise_poly);
  }
  consider(literal_code_length(x.size(), x.bits()), CodecId::literal);
  consider(encode_compressor(x).dl_bits(), CodecId::compressor);
  return best;
}

CodedSignal best_encoding(const QuantizedVector& x) {
  switch (dl_surrogate(x).codec) {
    case CodecId::sparse: return encode_sparse(x);
    case CodecId::piecewise_poly:
      return encode_piecewise_poly(*fit_piecewise_poly_code(x, 3), x.size(), x.bits());
    case CodecId::literal: return encode_literal(x);
    case CodecId::compressor: return encode_compressor(x);
  }
  return encode_literal(x);
}

}  // namespace mcp
