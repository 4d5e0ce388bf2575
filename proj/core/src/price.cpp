#include "artmarket/price.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace artmarket {

PriceGrid::PriceGrid(double increment) : increment_(increment) {
  if (!(increment > 0.0) || !std::isfinite(increment)) {
    throw std::invalid_argument("price increment must be positive and finite");
  }
}

PriceTick PriceGrid::round_order_price(double raw_price, Side side) const {
  if (!(raw_price > 0.0) || !std::isfinite(raw_price)) {
    throw std::invalid_argument("order price must be positive and finite");
  }
  const double scaled = raw_price / increment_;
  const double nearest = std::nearbyint(scaled);
  // 10000.00 / 0.01 is not exactly 1e6 in binary; treat it as on-grid.
  if (std::abs(scaled - nearest) <= 1e-9 * std::max(1.0, std::abs(scaled))) {
    return PriceTick{static_cast<std::int64_t>(nearest)};
  }
  const double rounded = side == Side::kBuy ? std::floor(scaled) : std::ceil(scaled);
  return PriceTick{static_cast<std::int64_t>(rounded)};
}

}  // namespace artmarket
