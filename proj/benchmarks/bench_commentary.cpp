#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "cricket/commentary.hpp"
#include "cricket/rng.hpp"

using namespace cricket;

namespace {

ShotLexicon default_shots() {
  ShotLexicon lex;
  lex.middled_phrases = {"defended", "swayed", "drives firmly and straight",
                         "controlled"};
  lex.left_alone_phrases = {"ducked", "stepped away", "no shot offered",
                            "shoulders arm"};
  return lex;
}

std::vector<DeliveryEvent> innings(std::size_t n) {
  const char* texts[] = {
      "defended solidly off the back foot into the covers",
      "beaten outside off by one that holds its line",
      "shoulders arms to a ball angled across the left hander",
      "driven hard but straight to the fielder at mid off",
      "ducked under a sharp bouncer without taking his eye off it",
      "worked off the pads through square leg for a single",
  };
  std::vector<DeliveryEvent> events;
  SplitMix64 rng(777);
  for (std::size_t i = 0; i < n; ++i) {
    DeliveryEvent e;
    e.over = static_cast<int>(i / 6);
    e.ball = static_cast<int>(i % 6) + 1;
    e.text = texts[rng.bounded(6)];
    events.push_back(e);
  }
  return events;
}

}  // namespace

static void BM_ParseDelivery(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        parse_delivery("18.1", "4", "drilled through the covers for four"));
  }
}
BENCHMARK(BM_ParseDelivery);

static void BM_ClassifyShot(benchmark::State& state) {
  auto lex = default_shots();
  DeliveryEvent e;
  e.text = "length ball outside off, he shoulders arms without fuss";
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_shot(e, lex));
  }
}
BENCHMARK(BM_ClassifyShot);

static void BM_TallyInnings(benchmark::State& state) {
  auto lex = default_shots();
  auto events = innings(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tally_innings(events, lex));
  }
}
BENCHMARK(BM_TallyInnings)->Arg(100)->Arg(300);

BENCHMARK_MAIN();
