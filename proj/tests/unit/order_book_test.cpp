#include <gtest/gtest.h>

#include <map>
#include <random>

#include "artmarket/order_book.hpp"
#include "scenario.hpp"

namespace artmarket {
namespace {

TEST(OrderBook, EmptyBookLimitRests) {
  OrderBook book;
  const auto r = book.submit_limit(Side::kBuy, PriceTick{9999}, 1, 0);
  EXPECT_FALSE(r.trade);
  EXPECT_EQ(book.size(), 1U);
  EXPECT_EQ(book.best_bid(), PriceTick{9999});
  EXPECT_FALSE(book.best_ask());
}

TEST(OrderBook, CrossingBuyHitsOldestAtRestingPrice) {
  OrderBook book;
  const auto first = book.submit_limit(Side::kSell, PriceTick{10001}, 5, 5);
  book.submit_limit(Side::kSell, PriceTick{10001}, 7, 7);
  const auto r = book.submit_limit(Side::kBuy, PriceTick{10002}, 9, 8);
  ASSERT_TRUE(r.trade);
  EXPECT_EQ(r.trade->price, PriceTick{10001});
  EXPECT_EQ(r.trade->resting_order, first.id);
  EXPECT_EQ(r.trade->sell_agent, 5U);
  EXPECT_EQ(r.trade->buy_agent, 9U);
  EXPECT_EQ(r.trade->aggressor, Side::kBuy);
  EXPECT_EQ(book.depth(Side::kSell), 1U);
  EXPECT_EQ(book.snapshot(Side::kSell).front().agent, 7U);
}

TEST(OrderBook, CrossingAtEqualityExecutes) {
  OrderBook book;
  book.submit_limit(Side::kBuy, PriceTick{9999}, 1, 0);
  const auto r = book.submit_limit(Side::kSell, PriceTick{9999}, 2, 1);
  ASSERT_TRUE(r.trade);
  EXPECT_EQ(r.trade->price, PriceTick{9999});
  EXPECT_TRUE(book.empty());
}

TEST(OrderBook, MarketOrders) {
  OrderBook book;
  book.submit_limit(Side::kSell, PriceTick{10001}, 1, 0);
  const auto t = book.submit_market(Side::kBuy, 2, 1);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->price, PriceTick{10001});

  EXPECT_FALSE(book.submit_market(Side::kBuy, 2, 2));
  EXPECT_TRUE(book.empty());

  book.submit_limit(Side::kSell, PriceTick{10003}, 1, 3);
  book.submit_limit(Side::kSell, PriceTick{10001}, 1, 3);
  EXPECT_EQ(book.submit_market(Side::kBuy, 2, 4)->price, PriceTick{10001});
  EXPECT_EQ(book.submit_market(Side::kBuy, 2, 4)->price, PriceTick{10003});
}

TEST(OrderBook, ExpiryBoundary) {
  OrderBook book;
  book.submit_limit(Side::kBuy, PriceTick{100}, 1, 0);
  book.submit_limit(Side::kBuy, PriceTick{101}, 1, 1);
  EXPECT_EQ(book.expire_orders(10000, 10000), 1U);
  ASSERT_EQ(book.size(), 1U);
  EXPECT_EQ(book.snapshot(Side::kBuy).front().placed_tick, 1);
}

TEST(OrderBook, ExpiryCountsOnlyStaleOrders) {
  OrderBook book;
  for (Tick t : {0, 1, 2}) book.submit_limit(Side::kSell, PriceTick{200 + t}, 1, t);
  for (Tick t : {5, 6}) book.submit_limit(Side::kBuy, PriceTick{100 + t}, 1, t);
  EXPECT_EQ(book.expire_orders(7, 5), 3U);
  EXPECT_EQ(book.size(), 2U);
  for (const auto side : {Side::kBuy, Side::kSell}) {
    for (const Order& o : book.snapshot(side)) EXPECT_LT(7 - o.placed_tick, 5);
  }
}

TEST(OrderBook, ExpirySkipsOrdersAlreadyFilledOrCancelled) {
  OrderBook book;
  const auto a = book.submit_limit(Side::kSell, PriceTick{10}, 1, 0);
  book.submit_limit(Side::kSell, PriceTick{11}, 1, 0);
  book.submit_limit(Side::kSell, PriceTick{12}, 1, 0);
  EXPECT_TRUE(book.submit_market(Side::kBuy, 2, 1));
  EXPECT_FALSE(book.cancel(a.id));
  EXPECT_TRUE(book.cancel(a.id + 1));
  EXPECT_EQ(book.expire_orders(5, 5), 1U);
  EXPECT_TRUE(book.empty());
}

TEST(OrderBook, RejectsBadInput) {
  OrderBook book;
  EXPECT_THROW(book.submit_limit(Side::kBuy, PriceTick{0}, 1, 0), std::invalid_argument);
  book.submit_limit(Side::kBuy, PriceTick{5}, 1, 10);
  EXPECT_THROW(book.submit_limit(Side::kBuy, PriceTick{5}, 1, 9), std::invalid_argument);
}

TEST(OrderBook, MidPrice) {
  const PriceGrid grid(0.01);
  OrderBook book;
  EXPECT_DOUBLE_EQ(mid_price(book, grid, 10000.0), 10000.0);
  book.submit_limit(Side::kBuy, PriceTick{999900}, 1, 0);
  EXPECT_DOUBLE_EQ(mid_price(book, grid, 10000.0), 10000.0);
  book.submit_limit(Side::kSell, PriceTick{1000100}, 1, 0);
  EXPECT_DOUBLE_EQ(mid_price(book, grid, 0.0), 10000.0);

  OrderBook odd;
  odd.submit_limit(Side::kBuy, PriceTick{999998}, 1, 0);
  odd.submit_limit(Side::kSell, PriceTick{1000001}, 1, 0);
  EXPECT_NEAR(mid_price(odd, grid, 0.0), 9999.995, 1e-9);
  EXPECT_DOUBLE_EQ(*odd.mid_ticks(), 999999.5);
}

TEST(OrderBook, PeekDoesNotMutate) {
  OrderBook book;
  EXPECT_EQ(book.peek_best(Side::kBuy), nullptr);
  book.submit_limit(Side::kSell, PriceTick{10001}, 3, 0);
  const Order* o = book.peek_best(Side::kBuy);
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->price, PriceTick{10001});
  EXPECT_EQ(book.size(), 1U);
  EXPECT_EQ(book.peek_best(Side::kSell), nullptr);
}

TEST(OrderBook, AgreesWithBruteForceMatcher) {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const auto outcome = testing::run_matching_scenario(seed);
    ASSERT_TRUE(outcome.agree) << outcome.mismatch;
  }
}

TEST(OrderBook, PositionsNetToZero) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<std::int64_t> price(90, 110);
  OrderBook book;
  std::map<AgentId, long> position;
  long buys = 0;
  long sells = 0;
  for (Tick t = 0; t < 20000; ++t) {
    book.expire_orders(t, 50);
    const AgentId agent = static_cast<AgentId>(t % 17);
    const Side side = gen() & 1 ? Side::kBuy : Side::kSell;
    std::optional<Trade> trade;
    if (t % 13 == 0) {
      trade = book.submit_market(side, agent, t);
    } else {
      trade = book.submit_limit(side, PriceTick{price(gen)}, agent, t).trade;
    }
    if (trade) {
      ++position[trade->buy_agent];
      --position[trade->sell_agent];
      ++buys;
      ++sells;
    }
    const auto bid = book.best_bid();
    const auto ask = book.best_ask();
    if (bid && ask) ASSERT_LT(*bid, *ask);
  }
  long net = 0;
  for (const auto& [agent, pos] : position) net += pos;
  EXPECT_EQ(net, 0);
  EXPECT_EQ(buys, sells);
  EXPECT_GT(buys, 0);
}

}  // namespace
}  // namespace artmarket
