#pragma once

#include "pmscheme/combinat.hpp"
#include "pmscheme/exact.hpp"
#include "pmscheme/matching.hpp"
#include "pmscheme/quotient.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pmscheme {

/// sum_shape coeff(shape) * A_shape.
struct WeightedSchemeMatrix {
    int k = 0;
    std::map<IntegerPartition, Rational> coefficients;

    Rational coefficient(const IntegerPartition& shape) const;
    /// Row sum from the exact class degrees.
    Rational row_sum() const;
    /// Eigenvalue on `module` from a table; nullopt if a needed cell is missing.
    std::optional<Rational> eigenvalue(const CharacterTable& table, const IntegerPartition& module) const;
    /// True if supported only on classes with at most one part equal to 2
    /// (identity excluded), i.e. a weighted adjacency matrix of M_2(2k).
    bool supported_on_m2() const;
};

struct BoundCertificate {
    Integer v;
    Rational d;
    Rational tau;
    Rational bound;
    std::optional<Integer> achieved;
    std::vector<IntegerPartition> modules_at_tau;
    bool valid = true;
    bool externally_certified_remainder = false;
    std::vector<std::string> notes;
};

/// v / (1 - d / tau).
Rational ratio_bound(const Integer& v, const Rational& d, const Rational& tau);

/// The two fixed edges are given 0-based. All matchings containing every edge
/// of `fixed`; throws domain_error if the edges are not disjoint.
std::vector<PerfectMatching> canonical_coclique(int k, const std::vector<PerfectMatching::Edge>& fixed);

struct CliqueProjection {
    WeightedSchemeMatrix m_hat;   ///< includes the identity coefficient |C|/v
    WeightedSchemeMatrix m;       ///< m_hat - (|C|/v) I
    Rational row_sum;             ///< of m
    std::map<IntegerPartition, Rational> m_hat_eigenvalues;  ///< when a table is available
    std::map<IntegerPartition, Rational> m_eigenvalues;
    std::optional<Rational> least_eigenvalue;
    std::optional<Rational> bound;
    bool psd = false;
};

/// Projection of chi_C chi_C^T onto the scheme algebra. Throws domain_error
/// if C is not a clique of M_2(2k) (a nonzero coefficient on a class with two
/// or more shared edges). Eigenvalues are filled for k <= kDenseCap.
CliqueProjection clique_projection(int k, const std::vector<PerfectMatching>& clique);

struct WeightCoefficients {
    int k = 0;
    Rational a1, a2, a3;
    Rational determinant;
    bool matches_closed_form = false;
};

/// Solves the 3x3 system pinning the eigenvalues of modules [2k-2,2],
/// [2k-4,4], [2k-4,2,2] to -1. Throws verification_error if singular or if
/// the solution is not (1/(4(2k-6)!!), 1/(2k-6)!!, 1/(2k-6)!!).
WeightCoefficients solve_weight_coefficients(int k);

/// Determinant of the coefficient system at k (no solving).
Rational weight_system_determinant(int k);

/// The explicit small-k matrices: k=3,4,5 fully, plus the stored coefficient
/// sets for k=7,8,9 (row sums only). The k=8 set is the second matrix printed
/// under the name M8.
WeightedSchemeMatrix explicit_small_matrix(int k);
std::vector<int> explicit_small_matrix_ks();

/// M = a1 A_[2k] + a2 A_[2k-2,2] + a3 A_[2k-4,4].
WeightedSchemeMatrix generic_weighted_matrix(int k);

struct WeightedMatrixReport {
    int k = 0;
    WeightedSchemeMatrix matrix;
    BoundCertificate certificate;
    std::map<IntegerPartition, Rational> module_eigenvalues;
    std::optional<Rational> module_2k6_6_eigenvalue;
    std::optional<Rational> module_2k6_6_closed_form;
    bool dense_verified = false;
};

/// Row sum (2k-1)(2k-3)-1 and eigenvalue -1 checks; see README for which
/// parts are dense, quotient-based, or externally certified at each k.
WeightedMatrixReport verify_weighted_matrix(int k);

struct TraceBoundRow {
    int k = 0;
    Rational diag_m2;           ///< M^2[i,i] from the coefficients
    Rational diag_m2_closed;    ///< (13k^2-23k+2) / (4 (2k-6)!!)
    Rational rhs;               ///< right side of the multiplicity inequality
    Rational rhs_printed_poly;  ///< printed quartic subtracted
    Rational rhs_direct_poly;   ///< d_M^2 + m1 + m2 + m3
    Integer m1, m2, m3;
    bool m_formulas_match_hooks = false;
    Integer m_2k6_4_2, m_2k6_2_2_2, m_2k8_8;
    bool holds_2k6_4_2 = false, holds_2k6_2_2_2 = false, holds_2k8_8 = false;
    bool holds_primary_bound = false;   ///< 2*3^k > rhs
};

struct TraceBoundReport {
    std::vector<TraceBoundRow> rows;
    /// Smallest k in the scanned range from which the inequality holds for
    /// every scanned k, per module (nullopt if it never stabilizes).
    std::optional<int> threshold_2k6_4_2, threshold_2k6_2_2_2, threshold_2k8_8, threshold_primary;
};

/// Row for a single k (any k >= 6; the argument is meaningful for k >= 15).
TraceBoundRow trace_bound_row(int k);
TraceBoundReport trace_bound_report(int k_min, int k_max);

struct SpanDimensionReport {
    int k = 0;
    std::size_t vectors = 0;
    std::size_t rank = 0;
    Integer expected;   ///< D_W(2k)
    bool asserted = true;
    bool passed = false;
};

/// Rank of the span of nu_{e1,e2} over pairs of disjoint edges vs D_W(2k).
/// k = 3 is reported without asserting.
SpanDimensionReport span_dimension_check(int k);

struct MaxCocliqueResult {
    int k = 0;
    std::size_t alpha = 0;
    std::size_t maximum_cocliques = 0;
    bool all_canonical = true;
    bool inconclusive = false;
    std::uint64_t nodes = 0;
};

/// Exact maximum coclique of M_2(2k) by branch and bound with a greedy
/// colouring bound; enumerates every maximum coclique. Node guard 10^8.
MaxCocliqueResult max_coclique(int k, std::uint64_t node_limit = 100'000'000);

/// k in {3,4}: exhaustive search; k = 5: ratio-bound certificate from M10.
BoundCertificate verify_main_theorem(int k);

} // namespace pmscheme
