#include <benchmark/benchmark.h>

#include "mixedop/determinant.hpp"
#include "mixedop/oracle.hpp"
#include "mixedop/random_ops.hpp"

using namespace mixedop;

namespace {

MixedOperator dense_fixture(int N, int M, int p) {
    Rng rng(1234);
    return random_operator(rng, N, M, p);
}

MixedOperator invertible_fixture(int N, int M, int p) {
    Rng rng(1234);
    return random_near_identity(rng, N, M, p, 0.2, 0.4);
}

void BM_compose(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    const MixedOperator a = dense_fixture(N, 2, p);
    const MixedOperator b = dense_fixture(N, 2, p);
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_compose)->Args({2, 4})->Args({2, 8})->Args({3, 2})->Args({3, 4});

void BM_apply(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    const MixedOperator a = dense_fixture(N, 2, p);
    Rng rng(99);
    const StaircaseFunction u = random_function(rng, N, 2, p);
    for (auto _ : state) benchmark::DoNotOptimize(apply(a, u));
}
BENCHMARK(BM_apply)->Args({2, 8})->Args({3, 4});

void BM_factorize(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    const MixedOperator a = invertible_fixture(N, 2, p);
    for (auto _ : state) benchmark::DoNotOptimize(factorize(a));
}
BENCHMARK(BM_factorize)->Args({2, 4})->Args({2, 8})->Args({3, 2});

void BM_determinant(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    const MixedOperator a = invertible_fixture(N, 2, p);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_determinant)->Args({2, 4})->Args({2, 8});

void BM_inverse(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int p = static_cast<int>(state.range(1));
    const MixedOperator a = invertible_fixture(N, 2, p);
    for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_inverse)->Args({2, 4})->Args({2, 8});

void BM_oracle_eigenvalues(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const MixedOperator a = dense_fixture(2, 2, p); // D = 2 p^2
    for (auto _ : state) benchmark::DoNotOptimize(oracle_eigenvalues(a));
}
BENCHMARK(BM_oracle_eigenvalues)->Arg(2)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
