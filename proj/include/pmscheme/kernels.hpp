#pragma once

// Data-parallel hot loops. Every kernel has a serial reference twin with the
// same signature; tests require identical output and bench/ times the pair.

#include "pmscheme/matching.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace pmscheme::kernels {

/// Maps union_shape_code values to class indices.
class ClassCodeIndex {
public:
    ClassCodeIndex() = default;
    explicit ClassCodeIndex(std::vector<std::uint64_t> codes);

    /// Index of `code`, or -1.
    int find(std::uint64_t code) const noexcept;
    std::size_t size() const noexcept { return codes_.size(); }

private:
    std::vector<std::uint64_t> codes_;   // sorted
    std::vector<int> index_;             // index_[i] is the class of codes_[i]
};

/// Column-sparse 0/1 matrix: column j lists the rows holding a 1, ascending.
struct SparseColumns {
    std::size_t rows = 0;
    std::vector<std::vector<std::uint32_t>> columns;
};

/// Task for quotient counting: count neighbours of `source` in class `shape`
/// by orbit id.
struct OrbitCountTask {
    PerfectMatching source;
    IntegerPartition shape;
};

using OrbitOf = std::function<int(const PerfectMatching&)>;

namespace serial {

std::vector<std::uint8_t> pair_class_matrix(const std::vector<PerfectMatching>& matchings,
                                            const ClassCodeIndex& classes);

std::vector<std::uint64_t> shape_histogram(const PerfectMatching& p,
                                           const std::vector<PerfectMatching>& matchings,
                                           const ClassCodeIndex& classes);

std::vector<std::vector<std::uint64_t>> orbit_counts(const std::vector<OrbitCountTask>& tasks,
                                                     const OrbitOf& orbit_of, std::size_t orbit_count);

/// Rank of a dense row-major matrix over GF(p), p < 2^62. Consumes `a`.
std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p);

/// N^T N for a 0/1 matrix given by columns, row-major cols x cols.
std::vector<std::int64_t> gram(const SparseColumns& n);

} // namespace serial

namespace parallel {

std::vector<std::uint8_t> pair_class_matrix(const std::vector<PerfectMatching>& matchings,
                                            const ClassCodeIndex& classes);

std::vector<std::uint64_t> shape_histogram(const PerfectMatching& p,
                                           const std::vector<PerfectMatching>& matchings,
                                           const ClassCodeIndex& classes);

std::vector<std::vector<std::uint64_t>> orbit_counts(const std::vector<OrbitCountTask>& tasks,
                                                     const OrbitOf& orbit_of, std::size_t orbit_count);

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p);

std::vector<std::int64_t> gram(const SparseColumns& n);

} // namespace parallel

} // namespace pmscheme::kernels
