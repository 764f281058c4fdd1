#include <benchmark/benchmark.h>

#include <random>

#include "canonform/determinant.hpp"
#include "canonform/hermite.hpp"
#include "canonform/similarity.hpp"
#include "canonform/smith.hpp"

using namespace canonform;

namespace {

Elem random_entry(std::mt19937_64& rng, Ring ring) {
    std::uniform_int_distribution<long> small(-9, 9);
    if (ring != Ring::QX) return Elem::from_int(ring, small(rng));
    std::uniform_int_distribution<long> coeff(-3, 3);
    return Elem(Polynomial(std::vector<Rational>{coeff(rng), coeff(rng), coeff(rng)}));
}

Matrix random_matrix(Ring ring, std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    Matrix a(ring, n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) a(i, j) = random_entry(rng, ring);
    return a;
}

template <Ring R>
void BM_Det(benchmark::State& state) {
    const Matrix a = random_matrix(R, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(det(a));
}

template <Ring R>
void BM_Hermite(benchmark::State& state) {
    const Matrix a = random_matrix(R, static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hermite_canonical(a));
}

template <Ring R>
void BM_Smith(benchmark::State& state) {
    const Matrix a = random_matrix(R, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(smith(a));
}

void BM_Rcf(benchmark::State& state) {
    // Lower triangular, so every elementary divisor is linear.
    Matrix a = random_matrix(Ring::Q, static_cast<std::size_t>(state.range(0)), 4);
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = i + 1; j <= a.cols(); ++j) a(i, j) = Elem::zero(Ring::Q);
    for (auto _ : state) benchmark::DoNotOptimize(rcf(a));
}

}  // namespace

BENCHMARK(BM_Det<Ring::Z>)->DenseRange(4, 16, 4);
BENCHMARK(BM_Det<Ring::QX>)->DenseRange(2, 6, 2);
BENCHMARK(BM_Hermite<Ring::Z>)->DenseRange(4, 16, 4);
BENCHMARK(BM_Hermite<Ring::Q>)->DenseRange(4, 16, 4);
BENCHMARK(BM_Smith<Ring::Z>)->DenseRange(4, 12, 4);
BENCHMARK(BM_Smith<Ring::QX>)->DenseRange(2, 6, 2);
BENCHMARK(BM_Rcf)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
