#pragma once

#include "pmscheme/matching.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pmscheme {

/// Field sizes above this are rejected.
inline constexpr std::uint32_t kFieldCap = 1u << 20;

/// GF(p^m) in the polynomial basis over the smallest monic irreducible of
/// degree m (lexicographic coefficient order, constant term least
/// significant). Elements are integers 0..q-1 whose base-p digits are the
/// coefficients. Multiplication goes through log/antilog tables of the
/// smallest primitive element.
class FiniteField {
public:
    FiniteField(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return q_; }
    /// Coefficients of the modulus, constant term first, leading 1 included.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::uint32_t primitive() const noexcept { return alpha_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    /// alpha^i.
    std::uint32_t exp(std::uint64_t i) const { return antilog_[i % (q_ - 1)]; }
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(std::uint32_t a) const;

    /// Polynomial-basis product without the tables; used to build them and in tests.
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

private:
    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t alpha_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;
};

/// Cyclic (v, |D|, lambda) difference set in Z_v.
struct DifferenceSet {
    std::uint32_t n = 0;        ///< order (prime power)
    std::uint32_t d = 0;
    std::uint32_t v = 0;
    std::uint32_t lambda = 0;
    std::vector<std::uint32_t> elements;  ///< ascending residues
};

/// Smallest prime p and exponent e with n = p^e, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t n);

/// D = { i in Z_v : Tr(alpha^i) = 0 } with Tr(x) = sum_{i=0}^{d} x^{n^i}.
/// The difference property is checked exhaustively before returning.
DifferenceSet singer_difference_set(std::uint32_t n, std::uint32_t d);

/// Number of ordered pairs (a, b) of elements with a - b = g, for each g.
std::vector<std::uint32_t> difference_counts(const DifferenceSet& ds);

/// Lines D + x of the plane developed from a (v, n+1, 1) difference set.
struct ProjectivePlane {
    std::uint32_t order = 0;
    std::uint32_t v = 0;
    std::vector<std::vector<std::uint32_t>> lines;  ///< lines[x] = sorted D + x
    std::vector<std::vector<std::uint32_t>> lines_through;  ///< point -> line ids
    bool exhaustive = true;  ///< false when axioms were sampled (v > 100)
};

/// Develops and checks (P1), (P2) (exhaustive for v <= 100, 10^4 sampled
/// pairs otherwise) and (P3).
ProjectivePlane develop_plane(const DifferenceSet& ds);

bool on_line(const ProjectivePlane& plane, std::uint32_t line, std::uint32_t point);

/// -D mod v, ascending.
std::vector<std::uint32_t> negated(const DifferenceSet& ds);

struct OvalCheck {
    bool is_oval = true;
    std::optional<std::uint32_t> offending_line;
    std::uint32_t max_meet = 0;
};

OvalCheck verify_oval(const ProjectivePlane& plane, const std::vector<std::uint32_t>& oval);

struct LinesWithZeroReport {
    bool clause_a = true;  ///< lines through 0 are exactly D - d, d in D
    bool clause_b = true;  ///< each s outside O u {0} shares exactly one line with 0
    bool clause_c = true;  ///< each line through 0 meets O exactly once
    std::size_t lines_through_zero = 0;
    std::size_t clause_b_points = 0;
    std::vector<std::string> counterexamples;
    bool passed() const noexcept { return clause_a && clause_b && clause_c; }
};

LinesWithZeroReport lemma_lines_with_zero(const ProjectivePlane& plane, const DifferenceSet& ds);

struct CliqueConstruction {
    std::uint32_t a = 0;
    int k = 0;
    DifferenceSet ds;
    std::vector<std::uint32_t> oval;          ///< ascending; label i+1 <-> oval[i]
    std::vector<std::uint32_t> sources;       ///< s values in emission order
    std::vector<PerfectMatching> matchings;
    std::size_t size_excluding_zero = 0;      ///< |Z_v \ (O u {0})|
    std::size_t size_including_zero = 0;      ///< |Z_v \ O|
    std::string index_set_note;
};

/// Clique of M_2(2k) for 2k = 2^a + 2. Vertex labels: the oval sorted as
/// residues maps to 1..2k-1 and the residue 0 maps to 2k. Pairwise
/// intersection <= 1 is checked exhaustively; failure throws
/// construction_error naming the pair.
CliqueConstruction build_clique(std::uint32_t a);

} // namespace pmscheme
