#pragma once

// Reference matcher for tests: a flat list scanned linearly on every call.
// Shares nothing with OrderBook beyond the value types.

#include <algorithm>
#include <optional>
#include <vector>

#include "artmarket/order_book.hpp"

namespace artmarket::testing {

class BruteForceBook {
 public:
  SubmitResult submit_limit(Side side, PriceTick price, AgentId agent, Tick tick) {
    SubmitResult result;
    result.id = next_id_++;
    const auto best = best_index(opposite(side));
    if (best) {
      const Order& quote = orders_[*best];
      const bool crosses = side == Side::kBuy ? price.value >= quote.price.value
                                              : price.value <= quote.price.value;
      if (crosses) {
        result.trade = fill(*best, side, agent, tick);
        return result;
      }
    }
    orders_.push_back(Order{result.id, side, price, agent, tick});
    return result;
  }

  std::optional<Trade> submit_market(Side side, AgentId agent, Tick tick) {
    const auto best = best_index(opposite(side));
    if (!best) return std::nullopt;
    return fill(*best, side, agent, tick);
  }

  std::size_t expire_orders(Tick now, Tick lifetime) {
    const auto before = orders_.size();
    std::erase_if(orders_, [&](const Order& o) { return o.placed_tick <= now - lifetime; });
    return before - orders_.size();
  }

  bool cancel(OrderId id) {
    return std::erase_if(orders_, [&](const Order& o) { return o.id == id; }) > 0;
  }

  // Priority order: best price first, then insertion order.
  std::vector<Order> snapshot(Side side) const {
    std::vector<Order> out;
    for (const Order& o : orders_) {
      if (o.side == side) out.push_back(o);
    }
    std::stable_sort(out.begin(), out.end(), [side](const Order& a, const Order& b) {
      return side == Side::kBuy ? a.price.value > b.price.value : a.price.value < b.price.value;
    });
    return out;
  }

 private:
  std::optional<std::size_t> best_index(Side book_side) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i].side != book_side) continue;
      if (!best) {
        best = i;
        continue;
      }
      const auto p = orders_[i].price.value;
      const auto q = orders_[*best].price.value;
      // Strict comparison keeps the earliest order among equal prices.
      if (book_side == Side::kBuy ? p > q : p < q) best = i;
    }
    return best;
  }

  Trade fill(std::size_t index, Side aggressor, AgentId agent, Tick tick) {
    const Order passive = orders_[index];
    orders_.erase(orders_.begin() + static_cast<std::ptrdiff_t>(index));
    Trade t;
    t.tick = tick;
    t.price = passive.price;
    t.aggressor = aggressor;
    t.resting_order = passive.id;
    t.buy_agent = aggressor == Side::kBuy ? agent : passive.agent;
    t.sell_agent = aggressor == Side::kBuy ? passive.agent : agent;
    return t;
  }

  std::vector<Order> orders_;
  OrderId next_id_ = 1;
};

}  // namespace artmarket::testing
