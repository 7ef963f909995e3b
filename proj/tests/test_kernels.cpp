#include "doctest.h"

#include "pmscheme/kernels.hpp"
#include "pmscheme/linalg.hpp"
#include "pmscheme/scheme.hpp"

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

} // namespace

TEST_CASE("class code index")
{
    ClassCodeIndex idx({9, 3, 5});
    CHECK(idx.find(9) == 0);
    CHECK(idx.find(3) == 1);
    CHECK(idx.find(5) == 2);
    CHECK(idx.find(4) == -1);
}

TEST_CASE("pair class matrix and histogram: serial equals parallel")
{
    auto all = enumerate_matchings(4);
    auto idx = codes_for(4);
    CHECK(serial::pair_class_matrix(all, idx) == parallel::pair_class_matrix(all, idx));
    for (std::size_t i = 0; i < all.size(); i += 11) {
        auto h = serial::shape_histogram(all[i], all, idx);
        CHECK(h == parallel::shape_histogram(all[i], all, idx));
        CHECK(h == std::vector<std::uint64_t>{48, 32, 12, 12, 1});
    }
}

TEST_CASE("orbit counts: serial equals parallel")
{
    auto all = enumerate_matchings(4);
    std::vector<OrbitCountTask> tasks;
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (auto& shape : even_partitions(8)) tasks.push_back({all[i], shape});
    // orbit = whether vertices 1 and 2 are matched
    OrbitOf orbit = [](const PerfectMatching& q) { return q.partner(0) == 1 ? 0 : 1; };
    auto s = serial::orbit_counts(tasks, orbit, 2);
    CHECK(s == parallel::orbit_counts(tasks, orbit, 2));
}

TEST_CASE("rank mod p: serial equals parallel")
{
    std::mt19937_64 rng(99);
    const auto primes = large_primes(3);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t rows = 30 + trial * 7, cols = 25 + trial * 5;
        std::vector<std::uint64_t> a(rows * cols);
        for (auto& x : a) x = rng() % 3 == 0 ? 1 : 0;
        // force a dependency: last row = sum of first two
        for (std::size_t j = 0; j < cols; ++j) a[(rows - 1) * cols + j] = a[j] + a[cols + j];
        for (auto p : primes) CHECK(serial::rank_mod_p(a, rows, cols, p) == parallel::rank_mod_p(a, rows, cols, p));
    }
    // J - I of order 4 has determinant -3
    std::vector<std::uint64_t> m(16, 1);
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(5 * i)] = 0;
    CHECK(serial::rank_mod_p(m, 4, 4, 3) == 3);
    CHECK(serial::rank_mod_p(m, 4, 4, large_primes(1)[0]) == 4);
}

TEST_CASE("gram: serial equals parallel")
{
    SparseColumns n;
    n.rows = 50;
    std::mt19937_64 rng(5);
    for (int c = 0; c < 40; ++c) {
        std::vector<std::uint32_t> col;
        for (std::uint32_t r = 0; r < n.rows; ++r)
            if (rng() % 4 == 0) col.push_back(r);
        n.columns.push_back(col);
    }
    auto g = serial::gram(n);
    CHECK(g == parallel::gram(n));
    CHECK(g[0] == static_cast<std::int64_t>(n.columns[0].size()));
}
