#include <benchmark/benchmark.h>

#include <random>

#include "artmarket/order_book.hpp"

namespace {

using artmarket::OrderBook;
using artmarket::PriceTick;
using artmarket::Side;

// Resting depth around a mid of 1'000'000 ticks, roughly what the market model builds.
void fill_book(OrderBook& book, std::mt19937_64& gen, int orders) {
  std::uniform_int_distribution<std::int64_t> offset(1, 100000);
  for (int i = 0; i < orders; ++i) {
    const bool buy = i % 2 == 0;
    const std::int64_t px = 1000000 + (buy ? -offset(gen) : offset(gen));
    (void)book.submit_limit(buy ? Side::kBuy : Side::kSell, PriceTick{px}, 0, 0);
  }
}

void BM_SubmitLimitResting(benchmark::State& state) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<std::int64_t> offset(1, 100000);
  for (auto _ : state) {
    state.PauseTiming();
    OrderBook book;
    state.ResumeTiming();
    for (int i = 0; i < state.range(0); ++i) {
      const bool buy = i % 2 == 0;
      const std::int64_t px = 1000000 + (buy ? -offset(gen) : offset(gen));
      benchmark::DoNotOptimize(book.submit_limit(buy ? Side::kBuy : Side::kSell, PriceTick{px}, 0, i));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SubmitLimitResting)->Arg(1000)->Arg(10000);

void BM_MarketOrderAgainstDepth(benchmark::State& state) {
  std::mt19937_64 gen(2);
  OrderBook book;
  fill_book(book, gen, static_cast<int>(state.range(0)));
  std::int64_t i = 0;
  for (auto _ : state) {
    const Side side = (i++ % 2 == 0) ? Side::kBuy : Side::kSell;
    const auto trade = book.submit_market(side, 1, 0);
    // Put the liquidity back on the same side so depth stays constant.
    if (trade) (void)book.submit_limit(artmarket::opposite(side), trade->price, 0, 0);
    benchmark::DoNotOptimize(trade);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MarketOrderAgainstDepth)->Arg(1000)->Arg(10000);

void BM_ExpireSteadyState(benchmark::State& state) {
  const std::int64_t lifetime = state.range(0);
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::int64_t> offset(1, 100000);
  OrderBook book;
  std::int64_t t = 0;
  for (auto _ : state) {
    ++t;
    (void)book.expire_orders(t, lifetime);
    const bool buy = t % 2 == 0;
    const std::int64_t px = 1000000 + (buy ? -offset(gen) : offset(gen));
    benchmark::DoNotOptimize(book.submit_limit(buy ? Side::kBuy : Side::kSell, PriceTick{px}, 0, t));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExpireSteadyState)->Arg(10000);

}  // namespace
