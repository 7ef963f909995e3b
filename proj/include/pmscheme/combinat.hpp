#pragma once

#include "pmscheme/exact.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pmscheme {

/// Weakly decreasing list of positive parts. Constructors sort their input,
/// so [2,6] and [6,2] are the same value.
class IntegerPartition {
public:
    IntegerPartition() = default;
    IntegerPartition(std::initializer_list<int> parts);
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    bool is_even() const noexcept;
    /// Number of parts equal to `value`.
    int count(int value) const noexcept;

    /// [1,2,3] style, matching the JSON array form.
    std::string to_string() const;

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Parses "6,2", "[6,2]" or "6 2".
IntegerPartition parse_partition(const std::string& text);

/// m!! with (-1)!! = 0!! = 1.
Integer double_factorial(long m);

/// All partitions of n in decreasing lexicographic order.
std::vector<IntegerPartition> partitions(int n);

/// Partitions of even n with every part even, decreasing lexicographic order.
std::vector<IntegerPartition> even_partitions(int n);

/// Standard dominance: every prefix sum of mu is at least that of lambda.
bool dominance_ge(const IntegerPartition& mu, const IntegerPartition& lambda);

/// Conjugate partition (transpose of the Young diagram).
IntegerPartition dual_partition(const IntegerPartition& lambda);

/// Dimension of the irreducible Sym(n)-module of shape lambda, n! / prod(hooks).
Integer hook_dimension(const IntegerPartition& lambda);

/// 2 * 3^k, the usable lower bound on dimensions of primary modules with a
/// short first row.
Integer f_lower_bound(int k);

/// [2k-2j, 2j] style helpers; the parts are re-sorted.
IntegerPartition two_row(int first, int second);

/// Exact encoding of a partition of m (m <= 31) as a 64-bit word: for each
/// part (decreasing) write `part` one-bits then a zero-bit.
std::uint64_t partition_code(const std::vector<int>& sorted_desc_parts);
IntegerPartition partition_from_code(std::uint64_t code);

} // namespace pmscheme
