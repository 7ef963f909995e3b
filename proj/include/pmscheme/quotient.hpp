#pragma once

#include "pmscheme/combinat.hpp"
#include "pmscheme/exact.hpp"
#include "pmscheme/linalg.hpp"
#include "pmscheme/matching.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmscheme {

/// Quotient matrices are built for k up to this bound.
inline constexpr int kQuotientCap = kEnumerationCap;

/// Symmetric block-count matrix of a matching relative to the blocks of a
/// Young subgroup: entry (i, j) counts edges between block i and block j,
/// entry (i, i) edges inside block i. Complete orbit invariant.
using OrbitKey = std::vector<int>;  // row-major, r x r

/// Orbits of the Young subgroup Sym(lambda) on the matchings of K_{2k}.
/// Block i holds the consecutive vertices starting at lambda_1 + ... + lambda_{i-1}.
///
/// Orbits are ordered by decreasing key, comparing first the diagonal counts of
/// blocks 2..r, then the counts between pairs of blocks among 2..r, then the
/// remaining (determined) entries.
class OrbitPartition {
public:
    OrbitPartition(int k, IntegerPartition lambda);

    int k() const noexcept { return k_; }
    const IntegerPartition& subgroup() const noexcept { return lambda_; }
    std::size_t orbit_count() const noexcept { return keys_.size(); }

    OrbitKey key_of(const PerfectMatching& p) const;
    /// Orbit index of p; throws verification_error for an unknown key.
    int orbit_of(const PerfectMatching& p) const;

    const OrbitKey& key(std::size_t orbit) const { return keys_[orbit]; }
    const PerfectMatching& representative(std::size_t orbit) const { return representatives_[orbit]; }
    /// Another element of the same orbit, or nullopt for singleton orbits.
    const std::optional<PerfectMatching>& second_representative(std::size_t orbit) const { return seconds_[orbit]; }
    const Integer& orbit_size(std::size_t orbit) const { return sizes_[orbit]; }

    /// Block index of each vertex.
    const std::vector<int>& block_of() const noexcept { return block_of_; }

private:
    int k_;
    IntegerPartition lambda_;
    std::vector<int> block_of_;
    std::vector<OrbitKey> keys_;
    std::map<OrbitKey, int> index_;
    std::vector<PerfectMatching> representatives_;
    std::vector<std::optional<PerfectMatching>> seconds_;
    std::vector<Integer> sizes_;
};

OrbitPartition orbit_partition(int k, const IntegerPartition& lambda);

struct QuotientMatrix {
    IntegerPartition class_shape;
    IntegerPartition subgroup;
    RationalMatrix entries;
};

/// entry[o1][o2] = neighbours in orbit o2 (class `class_shape`) of the
/// representative of o1; every row is recounted from a second representative
/// and a mismatch throws verification_error.
QuotientMatrix quotient_matrix(int k, const IntegerPartition& class_shape, const IntegerPartition& lambda,
                               bool use_parallel = true);
QuotientMatrix quotient_matrix(const OrbitPartition& orbits, const IntegerPartition& class_shape,
                               bool use_parallel = true);

/// Quotient of sum_c weight_c * A_c; rows of the class quotients combined.
RationalMatrix combined_quotient(const OrbitPartition& orbits,
                                 const std::vector<std::pair<IntegerPartition, Rational>>& weighted_classes);

/// Even mu with mu dominating lambda, sorted decreasing in dominance
/// (decreasing lexicographic order is a linear extension).
std::vector<IntegerPartition> admissible_modules(const IntegerPartition& lambda);

/// The descending chain [2k], [2k-2,2], [2k-4,4], [2k-6,6] (as far as the
/// parts stay sorted) followed by [2k-4,2,2].
std::vector<IntegerPartition> standard_chain(int k);

/// Module -> eigenvalue of A_class, extracted from the quotient spectra along
/// `chain`: at each subgroup lambda the values of already-known dominating
/// modules are removed from the spectrum and the remainder, which must be a
/// single repeated value, belongs to module lambda.
std::map<IntegerPartition, Rational> extract_eigenvalues(int k, const IntegerPartition& class_shape,
                                                        const std::vector<IntegerPartition>& chain);

/// (module, class) -> eigenvalue, with per-module multiplicities.
class CharacterTable {
public:
    CharacterTable() = default;
    CharacterTable(int k, std::vector<IntegerPartition> modules, std::vector<IntegerPartition> classes);

    int k() const noexcept { return k_; }
    const std::vector<IntegerPartition>& modules() const noexcept { return modules_; }
    const std::vector<IntegerPartition>& classes() const noexcept { return classes_; }

    void set(const IntegerPartition& module, const IntegerPartition& cls, Rational value);
    std::optional<Rational> get(const IntegerPartition& module, const IntegerPartition& cls) const;
    const Rational& at(const IntegerPartition& module, const IntegerPartition& cls) const;

    void set_multiplicity(const IntegerPartition& module, Integer m);
    const Integer& multiplicity(const IntegerPartition& module) const;

    bool complete() const;
    const std::map<std::pair<IntegerPartition, IntegerPartition>, Rational>& entries() const noexcept { return entries_; }
    const std::map<IntegerPartition, Integer>& multiplicities() const noexcept { return multiplicities_; }

    bool operator==(const CharacterTable&) const = default;

private:
    int k_ = 0;
    std::vector<IntegerPartition> modules_;
    std::vector<IntegerPartition> classes_;
    std::map<std::pair<IntegerPartition, IntegerPartition>, Rational> entries_;
    std::map<IntegerPartition, Integer> multiplicities_;
};

/// Checks the row of [2k] equals the degrees, sum_mu m_mu * theta = trace and
/// sum_mu m_mu * theta^2 = (2k-1)!! * degree for each class; complete tables
/// only. Returns human-readable failures (empty on success).
std::vector<std::string> table_consistency_failures(const CharacterTable& table);

struct PartialTableCell {
    IntegerPartition module;
    IntegerPartition cls;
    Rational computed;
    std::optional<Rational> closed_form;
    bool matches = false;
};

struct PartialTableResult {
    CharacterTable table;
    std::vector<PartialTableCell> cells;
    bool all_match = true;
};

/// Modules [2k],[2k-2,2],[2k-4,4],[2k-4,2,2],[2k-6,6] on classes
/// [2k],[2k-2,2],[2k-4,4],[2k-6,6] (plus the degree of [2k-4,2,2]); each cell
/// compared with its closed form. k >= 6.
PartialTableResult partial_char_table(int k);

struct FullTableDiagnostics {
    std::size_t clusters = 0;
    double max_cluster_spread = 0.0;
    double min_cluster_gap = 0.0;
    std::vector<std::string> assignment_notes;
};

/// Complete table for k <= kDenseCap: floating eigensolve of a generic
/// integer combination, rational reconstruction, then exact verification
/// (trace identities, annihilating products on the first row, quotient
/// containment for the module labels).
CharacterTable full_char_table_small(int k, FullTableDiagnostics* diagnostics = nullptr);

/// Exact verification of an arbitrary complete table against the dense
/// scheme (k <= kDenseCap). Returns failures.
std::vector<std::string> verify_table_dense(const CharacterTable& table);

struct SpanningSetReport {
    int k = 0;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::size_t rank = 0;
    Integer expected_rank;                 ///< 1 + m([2k-2,2]) + m([2k-4,4])
    Integer diagonal;                      ///< observed N^T N diagonal
    Integer meet_two;                      ///< |S cap T| = 2 entry
    Integer disjoint;                      ///< |S cap T| = 0 entry
    bool odd_meets_vanish = true;          ///< |S cap T| in {1,3} entries all zero
    bool constant_by_meet = true;          ///< entries depend only on |S cap T|
    Integer printed_diagonal;              ///< (2k-5)!! as printed
    Integer direct_diagonal;               ///< 3 (2k-5)!!
    Integer printed_nullity;               ///< 2k-1 + C(2k,4) - C(2k,3) as printed
    Integer observed_nullity;
    bool passed = false;
};

/// Rank and Gram structure of the vectors w_S over 4-subsets S. k in {4,5}.
SpanningSetReport spanning_set_rank_4sets(int k);

struct ConjectureRow {
    IntegerPartition module;
    std::vector<Rational> row;
    IntegerPartition argmax_class;
    Rational max_value;
    bool max_at_own_class = false;
    bool dominating_negative = true;
    std::vector<IntegerPartition> dominating_classes;
    std::string observation;
};

struct ConjectureReport {
    int k = 0;
    std::vector<ConjectureRow> rows;
};

/// Row-maximum and sign observations for two-row modules [2k-2l, 2l].
ConjectureReport conjecture_check(const CharacterTable& table);

} // namespace pmscheme
