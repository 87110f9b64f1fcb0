#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace mcp {

// Largest supported resolution. Numerators are held in 64-bit words and the
// piecewise-polynomial codec needs headroom above m.
inline constexpr int kMaxResolutionBits = 62;

// numerator / 2^bits, stored exactly.
struct DyadicValue {
  std::uint64_t numerator = 0;
  int bits = 1;

  double value() const noexcept;

  friend bool operator==(const DyadicValue&, const DyadicValue&) = default;
};

// An n-vector of m-bit dyadic values sharing one resolution. This is the
// object every codec encodes and every complexity budget is measured on.
class QuantizedVector {
 public:
  QuantizedVector() = default;
  // All-zero vector.
  QuantizedVector(std::size_t n, int bits);
  QuantizedVector(std::vector<std::uint64_t> numerators, int bits);

  std::size_t size() const noexcept { return numerators_.size(); }
  int bits() const noexcept { return bits_; }
  std::uint64_t operator[](std::size_t i) const { return numerators_[i]; }
  std::span<const std::uint64_t> numerators() const noexcept { return numerators_; }

  DyadicValue entry(std::size_t i) const { return {numerators_[i], bits_}; }
  std::size_t support_size() const noexcept;
  bool is_zero() const noexcept { return support_size() == 0; }

  // Dequantized values numerator * 2^-m.
  Eigen::VectorXd to_real() const;

  friend bool operator==(const QuantizedVector&, const QuantizedVector&) = default;
  friend auto operator<=>(const QuantizedVector&, const QuantizedVector&) = default;

 private:
  std::vector<std::uint64_t> numerators_;
  int bits_ = 1;
};

// [x]_m: keep the first m bits of the binary expansion of x in [0, 1].
// x = 1 maps to 1 - 2^-m. Throws std::domain_error for x outside [0, 1],
// NaN, or m outside [1, kMaxResolutionBits].
DyadicValue truncate_bits(double x, int m);

QuantizedVector quantize_vector(std::span<const double> x, int m);
QuantizedVector quantize_vector(const Eigen::VectorXd& x, int m);

// sqrt(n * 2^(-2m+1)): bound on ||e1 - e2||_2 for two quantization-error
// vectors of length n at resolution m.
double quantization_gap_bound(std::size_t n, int m);

// Entrywise (a - b) mod 2^m on numerators. Keeps differences of codebook
// members inside the codec domain.
QuantizedVector subtract_mod(const QuantizedVector& a, const QuantizedVector& b);

// Signed real difference a - b of the dequantized vectors.
Eigen::VectorXd real_difference(const QuantizedVector& a, const QuantizedVector& b);

}  // namespace mcp
