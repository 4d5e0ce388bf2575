#include "artmarket/rng.hpp"

#include <cmath>
#include <numbers>

namespace artmarket {

std::uint64_t RngStreams::bits(Stream stream, std::uint64_t index) const noexcept {
  const std::uint64_t key = mix64(seed_ ^ mix64(static_cast<std::uint64_t>(stream)));
  return mix64(key + mix64(index));
}

double RngStreams::uniform(Stream stream, std::uint64_t index) const noexcept {
  // 53 random bits, shifted by half an ulp so that 0 and 1 are unreachable.
  const auto top = static_cast<double>(bits(stream, index) >> 11);
  return (top + 0.5) * 0x1.0p-53;
}

double RngStreams::standard_normal(Stream stream, std::uint64_t index) const noexcept {
  const double u1 = uniform(stream, 2 * index);
  const double u2 = uniform(stream, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace artmarket
