#include "pmscheme/kernels.hpp"

#include "internal/modular.hpp"
#include "pmscheme/scheme.hpp"

#include <algorithm>
#include <cstddef>

namespace pmscheme::kernels::parallel {

std::vector<std::uint8_t> pair_class_matrix(const std::vector<PerfectMatching>& matchings,
                                            const ClassCodeIndex& classes)
{
    const auto n = static_cast<std::ptrdiff_t>(matchings.size());
    std::vector<std::uint8_t> out(matchings.size() * matchings.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i * n + j)] =
                static_cast<std::uint8_t>(classes.find(union_shape_code(matchings[static_cast<std::size_t>(i)],
                                                                        matchings[static_cast<std::size_t>(j)])));
    return out;
}

std::vector<std::uint64_t> shape_histogram(const PerfectMatching& p,
                                           const std::vector<PerfectMatching>& matchings,
                                           const ClassCodeIndex& classes)
{
    const std::size_t r = classes.size();
    std::vector<std::uint64_t> counts(r, 0);
    const auto n = static_cast<std::ptrdiff_t>(matchings.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(r, 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i)
            ++local[static_cast<std::size_t>(classes.find(union_shape_code(p, matchings[static_cast<std::size_t>(i)])))];
#pragma omp critical
        for (std::size_t c = 0; c < r; ++c) counts[c] += local[c];
    }
    return counts;
}

std::vector<std::vector<std::uint64_t>> orbit_counts(const std::vector<OrbitCountTask>& tasks,
                                                     const OrbitOf& orbit_of, std::size_t orbit_count)
{
    std::vector<std::vector<std::uint64_t>> out(tasks.size(), std::vector<std::uint64_t>(orbit_count, 0));
    const auto n = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        auto& row = out[static_cast<std::size_t>(t)];
        const auto& task = tasks[static_cast<std::size_t>(t)];
        for_each_neighbor(task.source, task.shape, [&](const PerfectMatching& q) {
            ++row[static_cast<std::size_t>(orbit_of(q))];
            return true;
        });
    }
    return out;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p)
{
    const detail::Montgomery mont(p);
    const auto total = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < total; ++i) a[static_cast<std::size_t>(i)] = mont.to(a[static_cast<std::size_t>(i)]);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
        std::uint64_t* prow = &a[rank * cols];
        const std::uint64_t inv = mont.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j) prow[j] = mont.mul(prow[j], inv);
        const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(rank) + 1; i < last; ++i) {
            std::uint64_t* row = &a[static_cast<std::size_t>(i) * cols];
            const std::uint64_t f = row[c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j]) row[j] = mont.sub(row[j], mont.mul(f, prow[j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::int64_t> gram(const SparseColumns& n)
{
    const std::size_t c = n.columns.size();
    std::vector<std::int64_t> g(c * c, 0);
    const auto cc = static_cast<std::ptrdiff_t>(c);
#pragma omp parallel
    {
        std::vector<std::uint8_t> mark(n.rows, 0);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < cc; ++i) {
            const auto& a = n.columns[static_cast<std::size_t>(i)];
            for (auto r : a) mark[r] = 1;
            for (std::ptrdiff_t j = i; j < cc; ++j) {
                std::int64_t shared = 0;
                for (auto r : n.columns[static_cast<std::size_t>(j)]) shared += mark[r];
                g[static_cast<std::size_t>(i * cc + j)] = g[static_cast<std::size_t>(j * cc + i)] = shared;
            }
            for (auto r : a) mark[r] = 0;
        }
    }
    return g;
}

} // namespace pmscheme::kernels::parallel
