#pragma once

#include "pmscheme/combinat.hpp"
#include "pmscheme/exact.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pmscheme {

/// Largest number of vertices a PerfectMatching can hold.
inline constexpr int kMaxVertices = 32;
/// Largest k accepted by full enumeration (19!! = 654,729,075 matchings).
inline constexpr int kEnumerationCap = 10;

/// A perfect matching of K_{2k} on vertices 0..2k-1 (printed 1-based).
///
/// Stored as a partner array so partner lookup is O(1); the canonical edge
/// list (a < b, sorted by a) is derived from it.
class PerfectMatching {
public:
    using Edge = std::pair<int, int>;

    PerfectMatching() = default;
    /// Builds from 0-based edges. Throws domain_error unless the edges cover
    /// 0..2k-1 exactly once.
    PerfectMatching(int k, const std::vector<Edge>& edges);

    static PerfectMatching from_partners(int k, const std::array<std::uint8_t, kMaxVertices>& partner);
    /// Parses "1-2,3-4,5-6" (1-based).
    static PerfectMatching parse(const std::string& text);

    int k() const noexcept { return k_; }
    int vertices() const noexcept { return 2 * k_; }
    int partner(int v) const noexcept { return partner_[static_cast<std::size_t>(v)]; }
    const std::array<std::uint8_t, kMaxVertices>& partners() const noexcept { return partner_; }

    std::vector<Edge> edges() const;
    bool has_edge(int a, int b) const noexcept { return partner(a) == b; }

    /// "1-2,3-4,..." with 1-based labels.
    std::string to_string() const;

    bool operator==(const PerfectMatching& other) const noexcept;
    bool operator<(const PerfectMatching& other) const noexcept;

private:
    int k_ = 0;
    std::array<std::uint8_t, kMaxVertices> partner_{};
};

/// Calls `visit` for every perfect matching of K_{2k} in the fixed order: the
/// smallest uncovered vertex is paired with each larger uncovered vertex in
/// increasing order, recursively. Returning false from `visit` stops early.
void for_each_matching(int k, const std::function<bool(const PerfectMatching&)>& visit);

/// Materialized enumeration; throws capacity_error above kEnumerationCap.
std::vector<PerfectMatching> enumerate_matchings(int k);

/// (2k-1)!! without enumerating.
Integer matching_count(int k);

/// Position of P in the enumeration order, and its inverse. k <= 16.
std::uint64_t matching_rank(const PerfectMatching& p);
PerfectMatching matching_unrank(int k, std::uint64_t index);

/// Cycle type of P u Q as an even partition of 2k (parts of size 2 are
/// shared edges). Throws domain_error on mismatched k.
IntegerPartition union_shape(const PerfectMatching& p, const PerfectMatching& q);

/// Same information as union_shape, encoded with partition_code over the
/// half-lengths (a partition of k). Used in hot loops; no allocation.
std::uint64_t union_shape_code(const PerfectMatching& p, const PerfectMatching& q) noexcept;

/// Number of common edges.
int intersection_size(const PerfectMatching& p, const PerfectMatching& q);

/// Applies a vertex permutation (perm[v] = image of v).
PerfectMatching permute(const PerfectMatching& p, const std::vector<int>& perm);

} // namespace pmscheme
