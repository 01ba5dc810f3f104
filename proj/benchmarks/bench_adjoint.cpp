#include <benchmark/benchmark.h>

#include "kadj/adjoint_reverse.hpp"
#include "kadj/division_free.hpp"
#include "kadj/random.hpp"

namespace {

using namespace kadj;

const PrimeFieldRing kField(10007);

Matrix<PrimeField> sample(std::size_t n) {
    Rng rng(n);
    return random_matrix(kField, n, n, rng);
}

void BM_Determinant(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(determinant(kField, a, 1));
}

void BM_Adjoint(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(adjoint(kField, a, 1));
}

void BM_PowerForward(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = sample(n);
    const auto r = baby_giant_params(n).r;
    for (auto _ : state) benchmark::DoNotOptimize(power_with_tape(a, r));
}

void BM_PowerReverse(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = sample(n);
    const auto pw = power_with_tape(a, baby_giant_params(n).r);
    Rng rng(n + 1);
    const auto seed = random_matrix(kField, n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(diff_step2(kField, pw.tape, seed));
}

void BM_AdjointDivisionFreeInt(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(n);
    const auto a = random_int_matrix(n, n, -9, 9, rng);
    const IntegerRing z;
    for (auto _ : state) benchmark::DoNotOptimize(adjoint_division_free(z, a));
}

}  // namespace

BENCHMARK(BM_Determinant)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Adjoint)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_PowerForward)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_PowerReverse)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_AdjointDivisionFreeInt)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
