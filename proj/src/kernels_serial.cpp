#include "pmscheme/kernels.hpp"

#include "internal/modular.hpp"
#include "pmscheme/scheme.hpp"

#include <algorithm>
#include <numeric>

namespace pmscheme::kernels {

ClassCodeIndex::ClassCodeIndex(std::vector<std::uint64_t> codes)
{
    std::vector<int> order(codes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return codes[a] < codes[b]; });
    for (int i : order) {
        codes_.push_back(codes[static_cast<std::size_t>(i)]);
        index_.push_back(i);
    }
}

int ClassCodeIndex::find(std::uint64_t code) const noexcept
{
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return -1;
    return index_[static_cast<std::size_t>(it - codes_.begin())];
}

namespace serial {

std::vector<std::uint8_t> pair_class_matrix(const std::vector<PerfectMatching>& matchings,
                                            const ClassCodeIndex& classes)
{
    const std::size_t n = matchings.size();
    std::vector<std::uint8_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = static_cast<std::uint8_t>(classes.find(union_shape_code(matchings[i], matchings[j])));
    return out;
}

std::vector<std::uint64_t> shape_histogram(const PerfectMatching& p,
                                           const std::vector<PerfectMatching>& matchings,
                                           const ClassCodeIndex& classes)
{
    std::vector<std::uint64_t> counts(classes.size(), 0);
    for (const auto& q : matchings) ++counts[static_cast<std::size_t>(classes.find(union_shape_code(p, q)))];
    return counts;
}

std::vector<std::vector<std::uint64_t>> orbit_counts(const std::vector<OrbitCountTask>& tasks,
                                                     const OrbitOf& orbit_of, std::size_t orbit_count)
{
    std::vector<std::vector<std::uint64_t>> out(tasks.size(), std::vector<std::uint64_t>(orbit_count, 0));
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        auto& row = out[t];
        for_each_neighbor(tasks[t].source, tasks[t].shape, [&](const PerfectMatching& q) {
            ++row[static_cast<std::size_t>(orbit_of(q))];
            return true;
        });
    }
    return out;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p)
{
    const detail::Montgomery mont(p);
    for (auto& x : a) x = mont.to(x);
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
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t* row = &a[i * cols];
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
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i; j < c; ++j) {
            const auto& a = n.columns[i];
            const auto& b = n.columns[j];
            std::int64_t shared = 0;
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] < b[y]) ++x;
                else if (b[y] < a[x]) ++y;
                else {
                    ++shared;
                    ++x;
                    ++y;
                }
            }
            g[i * c + j] = g[j * c + i] = shared;
        }
    return g;
}

} // namespace serial
} // namespace pmscheme::kernels
