#pragma once

#include "pmscheme/combinat.hpp"
#include "pmscheme/exact.hpp"
#include "pmscheme/matching.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pmscheme {

/// Dense realizations are only built up to this k (945 vertices).
inline constexpr int kDenseCap = 5;

struct SchemeClass {
    IntegerPartition shape;  ///< even partition of 2k
    Integer degree;          ///< row sum of A_shape
};

/// The identity class [2,2,...,2].
IntegerPartition identity_shape(int k);

/// Throws domain_error unless `shape` is an even partition of 2k.
void require_class_shape(int k, const IntegerPartition& shape);

/// Neighbour count of a fixed matching in class `shape`, by enumerating the
/// neighbours (k <= 8); larger k falls back to the exact count.
Integer class_degree(int k, const IntegerPartition& shape);

/// Exact count k! 2^(k - l) / (prod parts/2 * prod multiplicities!) with
/// parts/2 the half cycle lengths and l their number.
Integer class_degree_formula(int k, const IntegerPartition& shape);

/// All classes of the scheme on K_{2k}, in even_partitions order.
std::vector<SchemeClass> scheme_classes(int k);

/// Streams every Q with union_shape(P, Q) == shape by overlaying cycles on P:
/// partition P's edges into groups of the half cycle lengths and close each
/// group into one alternating cycle. Returning false stops the stream.
void for_each_neighbor(const PerfectMatching& p, const IntegerPartition& shape,
                       const std::function<bool(const PerfectMatching&)>& visit);

std::vector<PerfectMatching> neighbors(const PerfectMatching& p, const IntegerPartition& shape);

/// Reference implementation: filter all matchings by union_shape.
std::vector<PerfectMatching> neighbors_by_filter(const PerfectMatching& p, const IntegerPartition& shape);

/// Union of classes with at most t-1 parts equal to 2.
struct DerangementGraph {
    int k = 0;
    int t = 0;
    std::vector<IntegerPartition> classes;
    Integer degree;
};

DerangementGraph mt_adjacency(int k, int t);

/// Pair-class matrix for k <= kDenseCap: entry (i, j) is the index (into
/// scheme_classes(k)) of the class containing (P_i, P_j), vertices in
/// enumeration order.
class DenseScheme {
public:
    explicit DenseScheme(int k);

    int k() const noexcept { return k_; }
    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<SchemeClass>& classes() const noexcept { return classes_; }
    const std::vector<PerfectMatching>& matchings() const noexcept { return matchings_; }
    std::size_t class_index(const IntegerPartition& shape) const;

    std::uint8_t operator()(std::size_t i, std::size_t j) const noexcept { return pair_class_[i * n_ + j]; }
    const std::vector<std::uint8_t>& pair_classes() const noexcept { return pair_class_; }

    /// 0/1 matrix of one class, row-major.
    std::vector<std::uint8_t> class_matrix(std::size_t c) const;

private:
    int k_;
    std::size_t n_;
    std::vector<SchemeClass> classes_;
    std::vector<PerfectMatching> matchings_;
    std::vector<std::uint8_t> pair_class_;
};

struct BoseMesnerFailure {
    std::string identity;
    std::string first;
    std::string second;
};

struct BoseMesnerReport {
    int k = 0;
    bool passed = true;
    std::vector<std::string> checks;
    std::vector<BoseMesnerFailure> failures;
};

/// Schur orthogonality, sum = J, symmetry, constant row sums and pairwise
/// commutation on dense class matrices. k <= 4.
BoseMesnerReport bose_mesner_checks(int k);

} // namespace pmscheme
