#include <benchmark/benchmark.h>

#include <random>

#include "realog/assembly.hpp"
#include "realog/catalog.hpp"
#include "realog/mod2.hpp"
#include "realog/smith.hpp"

using realog::ExecPolicy;
using realog::IntegerMatrix;
using realog::Mod2Matrix;

namespace {

IntegerMatrix random_square(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

Mod2Matrix random_bits(std::size_t n, std::uint32_t seed) {
    std::mt19937_64 rng(seed);
    Mod2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1);
    return m;
}

void bench_snf(benchmark::State& state, ExecPolicy policy) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix m = random_square(n, 0xbeef + static_cast<std::uint32_t>(n));
    for (auto _ : state) {
        auto sf = realog::smith_normal_form(m, false, policy);
        benchmark::DoNotOptimize(sf.rank);
    }
}

void bench_mod2_rank(benchmark::State& state, ExecPolicy policy) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Mod2Matrix m = random_bits(n, 0xcafe + static_cast<std::uint32_t>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(realog::mod2_rank(m, policy));
    }
}

void bench_verdict(benchmark::State& state) {
    auto sdd = realog::catalog_sdd("harnack-d4");
    for (auto _ : state) {
        auto report = realog::verdict(sdd);
        benchmark::DoNotOptimize(report.betti_total);
    }
}

}  // namespace

BENCHMARK_CAPTURE(bench_snf, serial, ExecPolicy::Serial)->Arg(16)->Arg(32)->Arg(48);
BENCHMARK_CAPTURE(bench_snf, parallel, ExecPolicy::Parallel)->Arg(16)->Arg(32)->Arg(48);
BENCHMARK_CAPTURE(bench_mod2_rank, serial, ExecPolicy::Serial)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK_CAPTURE(bench_mod2_rank, parallel, ExecPolicy::Parallel)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bench_verdict);

BENCHMARK_MAIN();
