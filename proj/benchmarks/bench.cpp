#include <benchmark/benchmark.h>

#include <random>

#include "thompson/thompson.hpp"

using namespace thompson;

namespace {

Element random_element(std::mt19937_64& rng, std::size_t length) {
  Element out;
  for (std::size_t i = 0; i < length; ++i) {
    const auto& gens = standard_generators();
    const Element& g = gens[rng() % gens.size()];
    out = multiply(out, rng() % 2 ? g : invert(g));
  }
  return out;
}

void multiply_words(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const Element f = random_element(rng, static_cast<std::size_t>(state.range(0)));
  const Element g = random_element(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(multiply_words)->Arg(4)->Arg(16)->Arg(64);

void enumerate(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_tree(static_cast<std::size_t>(state.range(0)), [&](const Tree&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(enumerate)->Arg(8)->Arg(10)->Arg(12);

void boundary_fast(benchmark::State& state) {
  std::vector<Tree> trees;
  for_each_tree(static_cast<std::size_t>(state.range(0)), [&](const Tree& T) { trees.push_back(T); });
  for (auto _ : state) {
    for (const auto& T : trees) benchmark::DoNotOptimize(boundary_tree(T));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(trees.size()));
}
BENCHMARK(boundary_fast)->Arg(8)->Arg(10);

void boundary_oracle(benchmark::State& state) {
  std::vector<Tree> trees;
  for_each_tree(static_cast<std::size_t>(state.range(0)), [&](const Tree& T) { trees.push_back(T); });
  for (auto _ : state) {
    for (const auto& T : trees) benchmark::DoNotOptimize(boundary_tree(T, BoundaryMode::Oracle));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(trees.size()));
}
BENCHMARK(boundary_oracle)->Arg(8)->Arg(10);

void act_on_trees(benchmark::State& state) {
  std::vector<Tree> trees;
  for_each_tree(10, [&](const Tree& T) { trees.push_back(T); });
  const Element a = named_element('a');
  for (auto _ : state) {
    for (const auto& T : trees) benchmark::DoNotOptimize(act_tree(T, a));
  }
}
BENCHMARK(act_on_trees);

void marginal_sweep(benchmark::State& state) {
  const auto E = tree_certificates().at("E");
  for (auto _ : state) {
    for (const auto& part : E->parts) {
      benchmark::DoNotOptimize(marginalizes_off(part.marginalizer, part.marginalizer_name, part.subset,
                                                part.off->as_predicate(part.off),
                                                static_cast<std::size_t>(state.range(0)), 3));
    }
  }
}
BENCHMARK(marginal_sweep)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void folner_ball(benchmark::State& state) {
  const auto mu = indicator<Element>(ball(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(folner_constant(mu, element_system()));
}
BENCHMARK(folner_ball)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void pipeline_ball(benchmark::State& state) {
  const auto A = ball(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tower_pipeline(A, 3, "bench"));
}
BENCHMARK(pipeline_ball)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
