#include "hqa/path.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hqa;

/// a^k + b^k + (ab)^(k/2) style operand built from the two arrows at the identity.
PathVector operand(const QuiverPtr& q, std::size_t k) {
  const auto arrows = q->out_arrows(q->group().identity());
  const PathVector a = PathVector::arrow(q, arrows[0]);
  const PathVector b = PathVector::arrow(q, arrows[1]);
  PathVector x = PathVector::vertex(q, q->group().identity());
  for (std::size_t i = 0; i < k; ++i)
    x = x * (i % 2 == 0 ? b : a + b);
  return x;
}

template <PathVector (*Product)(const PathVector&, const PathVector&)>
void bench_product(benchmark::State& state) {
  const auto q = make_jordan_quiver(Field(5), 5);
  const auto k = std::size_t(state.range(0));
  const PathVector x = operand(q, k);
  const PathVector y = operand(q, k);
  for (auto _ : state)
    benchmark::DoNotOptimize(Product(x, y));
  state.counters["terms"] = double(x.size() * y.size());
}

void BM_Multiply(benchmark::State& state) { bench_product<&multiply>(state); }
void BM_MultiplyReference(benchmark::State& state) { bench_product<&multiply_reference>(state); }

BENCHMARK(BM_Multiply)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MultiplyReference)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
