#include "artmarket/order_book.hpp"

#include <algorithm>
#include <stdexcept>

namespace artmarket {

OrderBook::OrderBook() { nodes_.reserve(1U << 14); }

std::uint32_t OrderBook::allocate(const Order& order) {
  std::uint32_t index;
  if (!free_.empty()) {
    index = free_.back();
    free_.pop_back();
  } else {
    index = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
  }
  Node& node = nodes_[index];
  node.order = order;
  node.prev = kNil;
  node.next = kNil;
  node.live = true;
  return index;
}

void OrderBook::enqueue(std::uint32_t index) {
  Node& node = nodes_[index];
  Level* level;
  if (node.order.side == Side::kBuy) {
    level = &bids_[node.order.price.value];
    ++bid_count_;
  } else {
    level = &asks_[node.order.price.value];
    ++ask_count_;
  }
  if (level->tail == kNil) {
    level->head = index;
  } else {
    nodes_[level->tail].next = index;
    node.prev = level->tail;
  }
  level->tail = index;
  ++live_orders_;
}

void OrderBook::remove(std::uint32_t index) {
  Node& node = nodes_[index];
  const std::int64_t price = node.order.price.value;
  auto unlink = [&](auto& levels) {
    auto it = levels.find(price);
    Level& level = it->second;
    if (node.prev != kNil) {
      nodes_[node.prev].next = node.next;
    } else {
      level.head = node.next;
    }
    if (node.next != kNil) {
      nodes_[node.next].prev = node.prev;
    } else {
      level.tail = node.prev;
    }
    if (level.head == kNil) levels.erase(it);
  };
  if (node.order.side == Side::kBuy) {
    unlink(bids_);
    --bid_count_;
  } else {
    unlink(asks_);
    --ask_count_;
  }
  node.live = false;
  node.prev = kNil;
  node.next = kNil;
  free_.push_back(index);
  --live_orders_;
}

std::optional<std::uint32_t> OrderBook::best_node(Side book_side) const {
  if (book_side == Side::kBuy) {
    if (bids_.empty()) return std::nullopt;
    return bids_.begin()->second.head;
  }
  if (asks_.empty()) return std::nullopt;
  return asks_.begin()->second.head;
}

Trade OrderBook::execute_against(std::uint32_t resting, Side aggressor, AgentId agent,
                                 Tick tick) {
  const Order& passive = nodes_[resting].order;
  Trade trade;
  trade.tick = tick;
  trade.price = passive.price;
  trade.aggressor = aggressor;
  trade.resting_order = passive.id;
  if (aggressor == Side::kBuy) {
    trade.buy_agent = agent;
    trade.sell_agent = passive.agent;
  } else {
    trade.buy_agent = passive.agent;
    trade.sell_agent = agent;
  }
  remove(resting);
  return trade;
}

SubmitResult OrderBook::submit_limit(Side side, PriceTick price, AgentId agent,
                                     Tick placed_tick) {
  if (price.value <= 0) {
    throw std::invalid_argument("limit price must be a positive grid tick");
  }
  if (placed_tick < last_placed_) {
    throw std::invalid_argument("orders must be placed in nondecreasing tick order");
  }
  last_placed_ = placed_tick;

  SubmitResult result;
  result.id = next_id_++;

  if (const auto best = best_node(opposite(side))) {
    const PriceTick quote = nodes_[*best].order.price;
    const bool crosses = side == Side::kBuy ? price >= quote : price <= quote;
    if (crosses) {
      result.trade = execute_against(*best, side, agent, placed_tick);
      return result;
    }
  }

  const std::uint32_t index = allocate(Order{result.id, side, price, agent, placed_tick});
  enqueue(index);
  expiry_.push_back(ExpiryEntry{result.id, placed_tick, index});
  return result;
}

std::optional<Trade> OrderBook::submit_market(Side side, AgentId agent, Tick tick) {
  const auto best = best_node(opposite(side));
  if (!best) return std::nullopt;
  return execute_against(*best, side, agent, tick);
}

std::size_t OrderBook::expire_orders(Tick now, Tick lifetime) {
  std::size_t removed = 0;
  const Tick cutoff = now - lifetime;
  while (!expiry_.empty() && expiry_.front().placed_tick <= cutoff) {
    const ExpiryEntry entry = expiry_.front();
    expiry_.pop_front();
    const Node& node = nodes_[entry.node];
    if (node.live && node.order.id == entry.id) {
      remove(entry.node);
      ++removed;
    }
  }
  return removed;
}

bool OrderBook::cancel(OrderId id) {
  const auto it = std::lower_bound(expiry_.begin(), expiry_.end(), id,
                                   [](const ExpiryEntry& e, OrderId key) { return e.id < key; });
  if (it == expiry_.end() || it->id != id) return false;
  const Node& node = nodes_[it->node];
  if (!node.live || node.order.id != id) return false;
  remove(it->node);
  return true;
}

std::optional<PriceTick> OrderBook::best_bid() const {
  if (bids_.empty()) return std::nullopt;
  return PriceTick{bids_.begin()->first};
}

std::optional<PriceTick> OrderBook::best_ask() const {
  if (asks_.empty()) return std::nullopt;
  return PriceTick{asks_.begin()->first};
}

const Order* OrderBook::peek_best(Side aggressor) const {
  const auto best = best_node(opposite(aggressor));
  if (!best) return nullptr;
  return &nodes_[*best].order;
}

std::optional<double> OrderBook::mid_ticks() const {
  if (bids_.empty() || asks_.empty()) return std::nullopt;
  return 0.5 * static_cast<double>(bids_.begin()->first + asks_.begin()->first);
}

std::vector<Order> OrderBook::snapshot(Side side) const {
  std::vector<Order> out;
  out.reserve(depth(side));
  auto walk = [&](const auto& levels) {
    for (const auto& [price, level] : levels) {
      for (std::uint32_t i = level.head; i != kNil; i = nodes_[i].next) {
        out.push_back(nodes_[i].order);
      }
    }
  };
  if (side == Side::kBuy) {
    walk(bids_);
  } else {
    walk(asks_);
  }
  return out;
}

double mid_price(const OrderBook& book, const PriceGrid& grid, double fallback) {
  const auto mid = book.mid_ticks();
  if (!mid) return fallback;
  return *mid * grid.increment();
}

}  // namespace artmarket
