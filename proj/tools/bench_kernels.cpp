// Parallel kernels against their serial references on random exact matrices.
#include <random>

#include <benchmark/benchmark.h>

#include "icat/kernels.hpp"

using icat::Matrix;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = icat::Scalar(mpq_class(num(gen), den(gen)));
    return m;
}

void BM_multiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, n, 1);
    const Matrix b = random_matrix(n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(icat::kernels::multiply(a, b));
}

void BM_multiply_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, n, 1);
    const Matrix b = random_matrix(n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(icat::kernels::multiply_serial(a, b));
}

// I_8 (x) f (x) I_8 on n columns, f of size 4x4.
void BM_apply_block(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix v = random_matrix(8 * 4 * 8, n, 3);
    const Matrix f = random_matrix(4, 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(icat::kernels::apply_block(v, 8, f, 8));
}

void BM_apply_block_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix v = random_matrix(8 * 4 * 8, n, 3);
    const Matrix f = random_matrix(4, 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(icat::kernels::apply_block_serial(v, 8, f, 8));
}

}  // namespace

BENCHMARK(BM_multiply)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_multiply_serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_apply_block)->Arg(16)->Arg(64);
BENCHMARK(BM_apply_block_serial)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
