#include "mcp/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcp {
namespace {

void check_bits(int m) {
  if (m < 1 || m > kMaxResolutionBits) {
    throw std::domain_error("resolution must be in [1, " +
                            std::to_string(kMaxResolutionBits) + "], got " +
                            std::to_string(m));
  }
}

std::uint64_t top_numerator(int m) { return (std::uint64_t{1} << m) - 1; }

}  // namespace

double DyadicValue::value() const noexcept {
  return std::ldexp(static_cast<double>(numerator), -bits);
}

QuantizedVector::QuantizedVector(std::size_t n, int bits)
    : numerators_(n, 0), bits_(bits) {
  check_bits(bits);
}

QuantizedVector::QuantizedVector(std::vector<std::uint64_t> numerators, int bits)
    : numerators_(std::move(numerators)), bits_(bits) {
  check_bits(bits);
  const std::uint64_t top = top_numerator(bits);
  for (auto v : numerators_) {
    if (v > top) throw std::domain_error("numerator exceeds 2^m - 1");
  }
}

std::size_t QuantizedVector::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(numerators_.begin(), numerators_.end(),
                    [](std::uint64_t v) { return v != 0; }));
}

Eigen::VectorXd QuantizedVector::to_real() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(numerators_.size()));
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) =
        std::ldexp(static_cast<double>(numerators_[i]), -bits_);
  }
  return out;
}

DyadicValue truncate_bits(double x, int m) {
  check_bits(m);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("truncate_bits: x must lie in [0, 1]");
  }
  if (x == 1.0) return {top_numerator(m), m};
  // Scaling by 2^m is exact for doubles, so floor sees the true binary
  // expansion of x.
  const double scaled = std::floor(std::ldexp(x, m));
  return {static_cast<std::uint64_t>(scaled), m};
}

QuantizedVector quantize_vector(std::span<const double> x, int m) {
  std::vector<std::uint64_t> nums;
  nums.reserve(x.size());
  for (double v : x) nums.push_back(truncate_bits(v, m).numerator);
  return QuantizedVector(std::move(nums), m);
}

QuantizedVector quantize_vector(const Eigen::VectorXd& x, int m) {
  return quantize_vector(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())), m);
}

double quantization_gap_bound(std::size_t n, int m) {
  return std::sqrt(std::ldexp(static_cast<double>(n), -2 * m + 1));
}

QuantizedVector subtract_mod(const QuantizedVector& a, const QuantizedVector& b) {
  if (a.size() != b.size() || a.bits() != b.bits()) {
    throw std::domain_error("subtract_mod: shape or resolution mismatch");
  }
  const std::uint64_t mask = top_numerator(a.bits());
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] - b[i]) & mask;
  return QuantizedVector(std::move(out), a.bits());
}

Eigen::VectorXd real_difference(const QuantizedVector& a, const QuantizedVector& b) {
  if (a.size() != b.size() || a.bits() != b.bits()) {
    throw std::domain_error("real_difference: shape or resolution mismatch");
  }
  return a.to_real() - b.to_real();
}

}  // namespace mcp
