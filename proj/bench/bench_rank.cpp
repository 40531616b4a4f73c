#include <benchmark/benchmark.h>

#include <string>

#include "lincert/condition_matrix.hpp"
#include "lincert/literal.hpp"
#include "lincert/oracle.hpp"
#include "lincert/rank.hpp"

namespace {

using namespace lincert;

const char* const kSystems[] = {"12(4^8,2^4)", "18(6^8,3^4)", "24(8^8,4^4)"};

ConditionMatrix matrix_for(const char* literal) {
  const LinearSystem system = parse_system(literal);
  const u64 p = trial_prime(0, 0);
  const auto points = sample_points(system.size(), p, 0, 0);
  return build_matrix(system, points, PrimeField(p));
}

void BM_RankParallel(benchmark::State& state) {
  const ConditionMatrix m = matrix_for(kSystems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetLabel(std::string(kSystems[state.range(0)]) + " " + std::to_string(m.rows) + "x" +
                 std::to_string(m.cols));
}

void BM_RankReference(benchmark::State& state) {
  const ConditionMatrix m = matrix_for(kSystems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(rank_reference(m));
  state.SetLabel(std::string(kSystems[state.range(0)]) + " " + std::to_string(m.rows) + "x" +
                 std::to_string(m.cols));
}

}  // namespace

BENCHMARK(BM_RankParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankReference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
