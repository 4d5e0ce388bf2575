#pragma once

#include <cstdint>

namespace artmarket {

/// Counter-based random streams keyed by (seed, stream, index).
///
/// A draw depends only on the seed and its index, never on how many other
/// draws happened before it. Runs that share a seed therefore see the same
/// agent parameters, noise and order-price draws no matter which strategy
/// agents are present.
class RngStreams {
 public:
  enum class Stream : std::uint64_t {
    kAgentParams = 1,
    kNoise = 2,
    kOrderPrice = 3,
  };

  explicit RngStreams(std::uint64_t seed) noexcept : seed_(seed) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on the open interval (0, 1).
  [[nodiscard]] double uniform(Stream stream, std::uint64_t index) const noexcept;

  /// Standard normal via Box-Muller on two uniforms of the stream.
  [[nodiscard]] double standard_normal(Stream stream, std::uint64_t index) const noexcept;

  [[nodiscard]] double agent_param_uniform(std::uint64_t agent, std::uint64_t slot) const noexcept {
    return uniform(Stream::kAgentParams, agent * 4 + slot);
  }
  /// Unscaled noise for tick t; multiply by the noise scale.
  [[nodiscard]] double tick_noise(std::int64_t tick) const noexcept {
    return standard_normal(Stream::kNoise, static_cast<std::uint64_t>(tick));
  }
  [[nodiscard]] double tick_order_uniform(std::int64_t tick) const noexcept {
    return uniform(Stream::kOrderPrice, static_cast<std::uint64_t>(tick));
  }

 private:
  [[nodiscard]] std::uint64_t bits(Stream stream, std::uint64_t index) const noexcept;

  std::uint64_t seed_;
};

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace artmarket
