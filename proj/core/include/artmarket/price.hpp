#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

namespace artmarket {

enum class Side : std::uint8_t { kBuy, kSell };

[[nodiscard]] constexpr Side opposite(Side side) noexcept {
  return side == Side::kBuy ? Side::kSell : Side::kBuy;
}

[[nodiscard]] constexpr std::string_view to_string(Side side) noexcept {
  return side == Side::kBuy ? "buy" : "sell";
}

using Tick = std::int64_t;
using AgentId = std::uint32_t;
using OrderId = std::uint64_t;

/// Price expressed as an integer count of the minimum increment.
struct PriceTick {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(PriceTick, PriceTick) = default;
};

/// Converts between currency and integer grid ticks for a fixed increment.
class PriceGrid {
 public:
  explicit PriceGrid(double increment);

  [[nodiscard]] double increment() const noexcept { return increment_; }

  [[nodiscard]] double to_currency(PriceTick tick) const noexcept {
    return static_cast<double>(tick.value) * increment_;
  }

  /// Buy prices round down to the grid, sell prices round up. Values that sit
  /// on a grid point up to floating-point noise snap to that point.
  /// Throws std::invalid_argument for a nonpositive or non-finite price.
  [[nodiscard]] PriceTick round_order_price(double raw_price, Side side) const;

 private:
  double increment_;
};

}  // namespace artmarket
