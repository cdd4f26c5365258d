#include <benchmark/benchmark.h>

#include <vector>

#include "cricket/decision_tree.hpp"
#include "cricket/linear_model.hpp"
#include "cricket/polynomial.hpp"
#include "cricket/random_forest.hpp"
#include "cricket/rng.hpp"
#include "cricket/svr.hpp"

using namespace cricket;
using linalg::Matrix;

namespace {

struct Problem {
  Matrix x;
  std::vector<double> y;
};

Problem make_problem(std::size_t n, std::size_t p) {
  SplitMix64 rng(12345);
  Problem prob{Matrix(n, p), std::vector<double>(n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      prob.x(r, c) = rng.uniform01() * 4.0 - 2.0;
    }
    prob.y[r] = prob.x(r, 0) * 3.0 - prob.x(r, p - 1) + rng.normal() * 0.1;
  }
  return prob;
}

}  // namespace

static void BM_FitLinear(benchmark::State& state) {
  auto prob = make_problem(static_cast<std::size_t>(state.range(0)), 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::fit_linear(prob.x, prob.y));
  }
}
BENCHMARK(BM_FitLinear)->Arg(100)->Arg(400);

static void BM_FitPolyDegree4(benchmark::State& state) {
  auto prob = make_problem(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::fit_poly(prob.x, prob.y, 4));
  }
}
BENCHMARK(BM_FitPolyDegree4)->Arg(100)->Arg(300);

static void BM_ExpandPolynomial(benchmark::State& state) {
  auto prob = make_problem(200, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::expand_polynomial(prob.x, 4));
  }
}
BENCHMARK(BM_ExpandPolynomial)->Arg(6)->Arg(12)->Arg(18);

static void BM_FitTree(benchmark::State& state) {
  auto prob = make_problem(static_cast<std::size_t>(state.range(0)), 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::fit_tree(prob.x, prob.y));
  }
}
BENCHMARK(BM_FitTree)->Arg(200)->Arg(450);

static void BM_FitForest10(benchmark::State& state) {
  auto prob = make_problem(static_cast<std::size_t>(state.range(0)), 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::fit_forest(prob.x, prob.y));
  }
}
BENCHMARK(BM_FitForest10)->Arg(200)->Arg(450);

static void BM_FitSvr(benchmark::State& state) {
  auto prob = make_problem(static_cast<std::size_t>(state.range(0)), 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::fit_svr(prob.x, prob.y));
  }
}
BENCHMARK(BM_FitSvr)->Arg(100)->Arg(450);

BENCHMARK_MAIN();
