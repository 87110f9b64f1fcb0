#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mcp/bitstream.hpp"
#include "mcp/quantize.hpp"

namespace mcp {

// Codec identifier, written as a fixed 2-bit header at the front of every
// stream. Fixed width keeps the union of all codecs prefix-free.
enum class CodecId : std::uint8_t {
  sparse = 0,
  piecewise_poly = 1,
  literal = 2,
  compressor = 3,
};
inline constexpr int kCodecHeaderBits = 2;

std::string_view codec_name(CodecId id) noexcept;
std::optional<CodecId> codec_from_name(std::string_view name) noexcept;

// Measured codec overheads standing in for the symbolic constants of the
// complexity bounds. kUintCodeOverhead is the c in |encode_uint(n)| <=
// ceil(log*(n)) + c; the piecewise-polynomial model header and breakpoint
// constants are c1 and c2. kPairOverheadBits is the measured C_pair in
// dl(x - y mod 2^m) <= dl(x) + dl(y) + C_pair on sparse-codebook pairs.
inline constexpr int kUintCodeOverhead = 4;
inline constexpr int kPpModelOverhead = 4;
inline constexpr int kPpBreakpointOverhead = 4;
inline constexpr int kPairOverheadBits = 0;

// A complexity budget in bits.
struct DlBudget {
  std::size_t bits = 0;
};

struct CodedSignal {
  CodecId codec = CodecId::literal;
  Bits payload;  // includes the codec header

  std::size_t dl_bits() const noexcept { return payload.size(); }
};

// log* n = ceil(log2 n) + 2 log2 max(ceil(log2 n), 1). Throws
// std::domain_error for n = 0.
double log_star(std::uint64_t n);
// ceil(log* n), computed in integers.
int ceil_log_star(std::uint64_t n);

// Elias-delta code for n >= 1; length <= ceil(log* n) + kUintCodeOverhead.
void encode_uint(std::uint64_t n, BitWriter& out);
Bits encode_uint(std::uint64_t n);
std::uint64_t decode_uint(BitReader& in);
std::size_t uint_code_length(std::uint64_t n);

// --- sparse codec -----------------------------------------------------------
// [header][encode_uint(n)][encode_uint(k+1)][k positions, ceil(log2 n) bits
// each, strictly increasing][k nonzero m-bit values].
CodedSignal encode_sparse(const QuantizedVector& x);
QuantizedVector decode_sparse(const CodedSignal& c, std::size_t n, int m);
std::size_t sparse_code_length(std::size_t k, std::size_t n, int m);
double sparse_dl_bound(std::size_t k, std::size_t n, int m);

// --- piecewise-polynomial codec ---------------------------------------------
// Real-valued model: breakpoints are positions in (0, 1) on the sample grid
// i/n; piece l covers samples from its breakpoint up to the next one and
// evaluates sum_j a_j t^j at t = i/n. Coefficients lie in [0, 1] with
// per-piece sum below 1.
struct PiecewisePoly {
  std::vector<double> breakpoints;
  std::vector<std::vector<double>> coefficients;
};

// Integer form carried by the stream. Coefficients are numerators at
// coeff_bits = m + ceil(log2(degree + 1)) bits.
struct PiecewisePolyCode {
  int degree = 0;
  std::vector<std::uint64_t> breakpoints;  // sample indices in [1, n-1]
  std::vector<std::vector<std::uint64_t>> coefficients;

  friend bool operator==(const PiecewisePolyCode&, const PiecewisePolyCode&) = default;
};

int pp_coefficient_bits(int m, int degree) noexcept;

// [header][encode_uint(n)][encode_uint(N+1)][encode_uint(Q+1)][Q breakpoints,
// ceil(log2 n) bits each][(Q+1)(N+1) coefficients at m' bits, piece-major].
CodedSignal encode_piecewise_poly(const PiecewisePoly& spec, std::size_t n, int m);
CodedSignal encode_piecewise_poly(const PiecewisePolyCode& code, std::size_t n, int m);
PiecewisePolyCode decode_piecewise_poly_code(const CodedSignal& c, std::size_t n, int m);
QuantizedVector decode_piecewise_poly(const CodedSignal& c, std::size_t n, int m);
// m-bit truncation of the coded polynomial's samples, computed exactly.
QuantizedVector render_piecewise_poly(const PiecewisePolyCode& code, std::size_t n, int m);
std::size_t pp_code_length(std::size_t pieces, int degree, std::size_t n, int m);
double pp_dl_bound(std::size_t Q, int N, std::size_t n, int m);

// Smallest-piece-count exact representation of x with degree <= max_degree.
// Degrees whose coefficient search would exceed `search_cap` tuples are
// skipped. Returns the shortest code found, if any.
std::optional<PiecewisePolyCode> fit_piecewise_poly_code(const QuantizedVector& x,
                                                         int max_degree,
                                                         std::uint64_t search_cap = 1U << 16);

// --- literal codec ----------------------------------------------------------
// [header][encode_uint(n)][n*m bits].
CodedSignal encode_literal(const QuantizedVector& x);
QuantizedVector decode_literal(const CodedSignal& c, std::size_t n, int m);
std::size_t literal_code_length(std::size_t n, int m);

// --- general-purpose compressor proxy ---------------------------------------
// [header][encode_uint(n)][encode_uint(bytes)][raw deflate of the packed
// m-bit numerators]. Advisory only; the solver never enumerates it.
CodedSignal encode_compressor(const QuantizedVector& x);
QuantizedVector decode_compressor(const CodedSignal& c, std::size_t n, int m);

// Decode any stream by its header. The whole stream must be consumed.
QuantizedVector decode(const Bits& stream, std::size_t n, int m);
CodecId peek_codec(const Bits& stream);
// Reads encode_uint(n) right after the header, which every codec carries.
std::size_t peek_length(const Bits& stream);

struct Surrogate {
  std::size_t bits = 0;
  CodecId codec = CodecId::literal;
};

// Description-length surrogate: the shortest stream over all registered
// codecs. Ties resolve to the lower codec id.
Surrogate dl_surrogate(const QuantizedVector& x);
// The stream achieving dl_surrogate.
CodedSignal best_encoding(const QuantizedVector& x);

}  // namespace mcp
