// Serial reference kernels against their OpenMP twins.

#include "pmscheme/kernels.hpp"
#include "pmscheme/linalg.hpp"
#include "pmscheme/quotient.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pmscheme;
using namespace pmscheme::kernels;

namespace {

ClassCodeIndex codes_for(int k)
{
    std::vector<std::uint64_t> codes;
    for (auto& shape : even_partitions(2 * k)) {
        std::vector<int> halves;
        for (int p : shape.parts()) halves.push_back(p / 2);
        codes.push_back(partition_code(halves));
    }
    return ClassCodeIndex(codes);
}

template <bool Parallel>
void BM_pair_class_matrix(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto all = enumerate_matchings(k);
    const auto idx = codes_for(k);
    for (auto _ : state) {
        auto m = Parallel ? parallel::pair_class_matrix(all, idx) : serial::pair_class_matrix(all, idx);
        benchmark::DoNotOptimize(m.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size() * all.size()));
}

template <bool Parallel>
void BM_shape_histogram(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto all = enumerate_matchings(k);
    const auto idx = codes_for(k);
    for (auto _ : state) {
        auto h = Parallel ? parallel::shape_histogram(all[0], all, idx) : serial::shape_histogram(all[0], all, idx);
        benchmark::DoNotOptimize(h.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}

template <bool Parallel>
void BM_orbit_counts(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const OrbitPartition orbits(k, two_row(2 * k - 4, 4));
    std::vector<OrbitCountTask> tasks;
    for (std::size_t o = 0; o < orbits.orbit_count(); ++o)
        tasks.push_back({orbits.representative(o), IntegerPartition{2 * k - 4, 2, 2}});
    const OrbitOf orbit_of = [&orbits](const PerfectMatching& q) { return orbits.orbit_of(q); };
    for (auto _ : state) {
        auto c = Parallel ? parallel::orbit_counts(tasks, orbit_of, orbits.orbit_count())
                          : serial::orbit_counts(tasks, orbit_of, orbits.orbit_count());
        benchmark::DoNotOptimize(c.data());
    }
}

std::vector<std::uint64_t> random_matrix(std::size_t n, std::uint64_t p)
{
    std::mt19937_64 rng(7);
    std::vector<std::uint64_t> a(n * n);
    for (auto& x : a) x = rng() % p;
    return a;
}

template <bool Parallel>
void BM_rank_mod_p(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::uint64_t p = large_primes(1)[0];
    const auto a = random_matrix(n, p);
    for (auto _ : state) {
        auto r = Parallel ? parallel::rank_mod_p(a, n, n, p) : serial::rank_mod_p(a, n, n, p);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_gram(benchmark::State& state)
{
    const auto cols = static_cast<std::size_t>(state.range(0));
    SparseColumns m;
    m.rows = 4 * cols;
    std::mt19937_64 rng(11);
    m.columns.resize(cols);
    for (auto& c : m.columns) {
        for (std::uint32_t r = 0; r < m.rows; ++r)
            if (rng() % 16 == 0) c.push_back(r);
    }
    for (auto _ : state) {
        auto g = Parallel ? parallel::gram(m) : serial::gram(m);
        benchmark::DoNotOptimize(g.data());
    }
}

} // namespace

BENCHMARK(BM_pair_class_matrix<false>)->Name("pair_class_matrix/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_class_matrix<true>)->Name("pair_class_matrix/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shape_histogram<false>)->Name("shape_histogram/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shape_histogram<true>)->Name("shape_histogram/parallel")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit_counts<false>)->Name("orbit_counts/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit_counts<true>)->Name("orbit_counts/parallel")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_mod_p<false>)->Name("rank_mod_p/serial")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_mod_p<true>)->Name("rank_mod_p/parallel")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram<false>)->Name("gram/serial")->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram<true>)->Name("gram/parallel")->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
