#include <benchmark/benchmark.h>

#include <vector>

#include "maxcover/combinations.hpp"
#include "maxcover/instance_gen.hpp"
#include "maxcover/solvers.hpp"

namespace {

using namespace maxcover;

Instance benchmark_instance() {
  GenSpec spec;
  spec.universe_size = 1000;
  spec.num_sets = 150;
  spec.avg_set_size = 40;
  spec.k = 10;
  spec.num_problems = 1;
  spec.seed = 7;
  return generate_instance(spec, 0);
}

void BM_JointGain(benchmark::State& state) {
  const Instance inst = benchmark_instance();
  const BitVec uncovered = inst.union_of_all();
  const std::vector<std::uint32_t> tuple = {3, 58, 97, 142};
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::joint_gain(uncovered, inst, tuple));
  }
}
BENCHMARK(BM_JointGain);

void BM_CombinationCursor(benchmark::State& state) {
  std::vector<std::uint32_t> candidates(150);
  for (std::uint32_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  std::vector<std::uint32_t> tuple(2);
  for (auto _ : state) {
    CombinationCursor cursor(candidates, 2);
    std::uint64_t emitted = 0;
    while (cursor.next(tuple)) ++emitted;
    benchmark::DoNotOptimize(emitted);
  }
}
BENCHMARK(BM_CombinationCursor);

void BM_GreedySolve(benchmark::State& state) {
  const Instance inst = benchmark_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_solve(inst, 10).covered);
  }
}
BENCHMARK(BM_GreedySolve);

void BM_BigStepSolve(benchmark::State& state) {
  const Instance inst = benchmark_instance();
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(big_step_solve(inst, 10, p).covered);
  }
}
BENCHMARK(BM_BigStepSolve)->Arg(1)->Arg(2);

void BM_GenerateInstance(benchmark::State& state) {
  GenSpec spec;
  spec.universe_size = 1000;
  spec.num_sets = 150;
  spec.avg_set_size = 40;
  spec.k = 10;
  spec.num_problems = 1u << 30;
  spec.seed = 11;
  std::uint32_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_instance(spec, index++).set_count());
  }
}
BENCHMARK(BM_GenerateInstance);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
