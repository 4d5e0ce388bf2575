#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "artmarket/price.hpp"

namespace artmarket {

/// A resting limit order. Every order is for exactly one share.
struct Order {
  OrderId id = 0;
  Side side = Side::kBuy;
  PriceTick price;
  AgentId agent = 0;
  Tick placed_tick = 0;

  friend bool operator==(const Order&, const Order&) = default;
};

/// An executed one-share fill. The price is always the resting order's price.
struct Trade {
  Tick tick = 0;
  PriceTick price;
  AgentId buy_agent = 0;
  AgentId sell_agent = 0;
  Side aggressor = Side::kBuy;
  OrderId resting_order = 0;

  friend bool operator==(const Trade&, const Trade&) = default;
};

struct SubmitResult {
  OrderId id = 0;
  /// Set when the order crossed and executed; otherwise the order rests.
  std::optional<Trade> trade;
};

/// Continuous double auction over a fixed price grid.
///
/// Bids and asks are kept as price levels, each a FIFO queue, so matching is
/// strictly price-time priority. Order ids are assigned by the book in
/// placement order and placement ticks must be nondecreasing, which lets the
/// expiry index be a plain queue.
///
/// Since every order is for one share, a crossing order is filled entirely
/// by the best opposite order and never walks the book.
class OrderBook {
 public:
  OrderBook();

  /// Places a limit order. A buy at or above the best ask (sell at or below
  /// the best bid) trades immediately against the oldest order at that best
  /// level; otherwise it joins the back of its level.
  /// Throws std::invalid_argument for a nonpositive price or a placement tick
  /// earlier than a previous one.
  SubmitResult submit_limit(Side side, PriceTick price, AgentId agent, Tick placed_tick);

  /// Executes against the best opposite quote. Returns nullopt when that
  /// side of the book is empty; the order is then discarded.
  std::optional<Trade> submit_market(Side side, AgentId agent, Tick tick);

  /// Removes every order with placed_tick <= now - lifetime. Returns how many.
  std::size_t expire_orders(Tick now, Tick lifetime);

  /// Removes a resting order. Returns false if it is not resting.
  bool cancel(OrderId id);

  [[nodiscard]] std::optional<PriceTick> best_bid() const;
  [[nodiscard]] std::optional<PriceTick> best_ask() const;

  /// The order a market order of `aggressor` side would hit, without touching it.
  [[nodiscard]] const Order* peek_best(Side aggressor) const;

  /// (best_bid + best_ask) / 2 in ticks, unrounded. Nullopt if a side is empty.
  [[nodiscard]] std::optional<double> mid_ticks() const;

  [[nodiscard]] std::size_t size() const noexcept { return live_orders_; }
  [[nodiscard]] std::size_t depth(Side side) const noexcept {
    return side == Side::kBuy ? bid_count_ : ask_count_;
  }
  [[nodiscard]] bool empty() const noexcept { return live_orders_ == 0; }

  /// Resting orders of one side in matching priority order.
  [[nodiscard]] std::vector<Order> snapshot(Side side) const;

 private:
  static constexpr std::uint32_t kNil = UINT32_MAX;

  struct Node {
    Order order;
    std::uint32_t prev = kNil;
    std::uint32_t next = kNil;
    bool live = false;
  };

  struct Level {
    std::uint32_t head = kNil;
    std::uint32_t tail = kNil;
  };

  struct ExpiryEntry {
    OrderId id;
    Tick placed_tick;
    std::uint32_t node;
  };

  using BidLevels = std::map<std::int64_t, Level, std::greater<>>;
  using AskLevels = std::map<std::int64_t, Level, std::less<>>;

  std::uint32_t allocate(const Order& order);
  void enqueue(std::uint32_t node);
  void remove(std::uint32_t node);
  std::optional<std::uint32_t> best_node(Side book_side) const;
  Trade execute_against(std::uint32_t resting, Side aggressor, AgentId agent, Tick tick);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
  BidLevels bids_;
  AskLevels asks_;
  std::deque<ExpiryEntry> expiry_;
  OrderId next_id_ = 1;
  Tick last_placed_ = 0;
  std::size_t live_orders_ = 0;
  std::size_t bid_count_ = 0;
  std::size_t ask_count_ = 0;
};

/// Mid-price in currency, or `fallback` when either side is empty.
[[nodiscard]] double mid_price(const OrderBook& book, const PriceGrid& grid, double fallback);

}  // namespace artmarket
