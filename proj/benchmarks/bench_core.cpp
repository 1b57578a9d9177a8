#include <benchmark/benchmark.h>
#include <random>

#include "riglab/constructions.hpp"
#include "riglab/exact_matrix.hpp"
#include "riglab/real_matrix.hpp"
#include "riglab/rigidity.hpp"
#include "riglab/sign_matrix.hpp"
#include "riglab/submatrix_scan.hpp"

namespace {

void BM_sylvester(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(riglab::SignMatrix::sylvester(k));
}
BENCHMARK(BM_sylvester)->Arg(4)->Arg(6)->Arg(8);

void BM_rank_exact_hadamard(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto m = riglab::to_exact(riglab::SignMatrix::sylvester(k));
    for (auto _ : state) benchmark::DoNotOptimize(riglab::rank_exact(m));
}
BENCHMARK(BM_rank_exact_hadamard)->Arg(3)->Arg(4)->Arg(5);

void BM_rank_exact_shifted(benchmark::State& state) {
    // elimination over Q(sqrt 2) rather than plain rationals
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto shifted = riglab::diagonal_shift(riglab::SignMatrix::sylvester(k)).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(riglab::rank_exact(shifted));
}
BENCHMARK(BM_rank_exact_shifted)->Arg(3)->Arg(5);

void BM_numerical_rank(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto m = riglab::to_real(riglab::SignMatrix::sylvester(k));
    for (auto _ : state) benchmark::DoNotOptimize(riglab::numerical_rank(m));
}
BENCHMARK(BM_numerical_rank)->Arg(4)->Arg(6);

void BM_rank1_oracle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    riglab::SignMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, (rng() & 1) ? 1 : -1);
    for (auto _ : state) benchmark::DoNotOptimize(riglab::rank1_rigidity_exact(m));
}
BENCHMARK(BM_rank1_oracle)->Arg(8)->Arg(12)->Arg(16);

void BM_sampled_scan(benchmark::State& state) {
    const auto samples = static_cast<std::size_t>(state.range(0));
    const auto h8 = riglab::SignMatrix::sylvester(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            riglab::scan_all_submatrices(h8, riglab::ScanMode::Sampled, samples, 1));
}
BENCHMARK(BM_sampled_scan)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
