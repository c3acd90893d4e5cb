#include <benchmark/benchmark.h>

#include <random>

#include "virgame/games.hpp"
#include "virgame/report.hpp"
#include "virgame/scoring.hpp"
#include "virgame/simnet.hpp"

using namespace virgame;

static void BM_ScoreAll(benchmark::State& state) {
  TraitProfile p{20, 25, 25, 100, 80, 90, 25, 60, 15};
  for (auto _ : state) {
    benchmark::DoNotOptimize(score_all(p));
    p.b = p.b < 99 ? p.b + 1 : 0;
  }
}
BENCHMARK(BM_ScoreAll);

static void BM_Sweep(benchmark::State& state) {
  report::SweepSpec spec;
  spec.fixed = Variable::A;
  spec.fixed_value = 20;
  for (auto _ : state) benchmark::DoNotOptimize(report::sweep(spec));
}
BENCHMARK(BM_Sweep);

static void BM_PureNash(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<std::vector<PayoffPair>> cells(n, std::vector<PayoffPair>(n));
  for (auto& row : cells)
    for (auto& c : row) c = {u(rng), u(rng)};
  const BimatrixGame g(labels, labels, cells);
  for (auto _ : state) benchmark::DoNotOptimize(pure_nash(g));
}
BENCHMARK(BM_PureNash)->Arg(2)->Arg(4)->Arg(16)->Arg(64);

static simnet::Network ring(std::size_t n) {
  std::vector<simnet::Host> hosts;
  std::vector<simnet::CloudStore> clouds;
  std::vector<simnet::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    hosts.push_back({i, i == 0 ? simnet::HostState::Infected : simnet::HostState::Susceptible, 30, 20});
    clouds.push_back({i, false});
    edges.push_back({i, i, 0.6});
    edges.push_back({i, (i + 1) % n, 0.6});
  }
  return simnet::Network(hosts, clouds, edges);
}

static void BM_MonteCarlo(benchmark::State& state) {
  const auto net = ring(static_cast<std::size_t>(state.range(0)));
  simnet::SimConfig cfg;
  cfg.ticks = 100;
  cfg.base_infection_prob = 0.4;
  cfg.clean_prob_per_tick = 0.1;
  cfg.reinfection_allowed = true;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simnet::monte_carlo_f(net, cfg, 100));
}
BENCHMARK(BM_MonteCarlo)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
